#include "stmetric/completion.hpp"

#include <algorithm>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

std::string marker_name(std::size_t j) { return "marker " + std::to_string(j + 1); }

int max_degree(const TaylorSeries2& s) {
    int d = 0;
    for (const auto& [k, v] : s.coeffs) d = std::max(d, k.first + k.second);
    return d;
}

// -1, 0, 1 as a compares below, equal to, above b in graded-lex coefficient order.
int compare_series(const TaylorSeries2& a, const TaylorSeries2& b) {
    int top = std::max(max_degree(a), max_degree(b));
    for (int n = 1; n <= top; ++n) {
        for (int i = n; i >= 0; --i) {
            double x = a.coeff(i, n - i);
            double y = b.coeff(i, n - i);
            if (x < y) return -1;
            if (x > y) return 1;
        }
    }
    return 0;
}

std::optional<Rational> slice_length(const ConvexPolygonalSet& p, const Lambda& lambda) {
    if (p.is_empty() || !lambda || !has_everywhere_finite_height(p)) return std::nullopt;
    auto s = slice_interval(p, *lambda);
    if (!s) return std::nullopt;
    return Rational(s->second - s->first);
}

}  // namespace

GeneralizedIngredients to_generalized(const SemitoricIngredients& m) {
    GeneralizedIngredients g{m.polygon, m.markers};
    for (auto& mk : g.markers) {
        auto len = slice_length(m.polygon, mk.lambda);
        if (!len || *len == 0) throw Error(ErrorKind::DegenerateInput, "marker has no slice to normalize h against");
        mk.h /= to_double(*len);
    }
    return g;
}

bool marker_less(const Marker& a, const Marker& b) {
    if (a.lambda != b.lambda) {
        if (!a.lambda) return false;
        if (!b.lambda) return true;
        return *a.lambda < *b.lambda;
    }
    if (a.h != b.h) return a.h < b.h;
    return compare_series(a.taylor, b.taylor) < 0;
}

GeneralizedIngredients canonical_order(const GeneralizedIngredients& g) {
    GeneralizedIngredients out = g;
    std::stable_sort(out.markers.begin(), out.markers.end(), marker_less);
    return out;
}

ValidationReport validate_generalized(const GeneralizedIngredients& g) {
    ValidationReport r;
    r.check("epsilon = +1 representative");
    for (std::size_t j = 0; j < g.markers.size(); ++j) {
        if (g.markers[j].epsilon != 1) {
            r.fail("epsilon_not_canonical", marker_name(j) + " has epsilon = " + std::to_string(g.markers[j].epsilon));
        }
    }

    r.check("markers in canonical order");
    for (std::size_t j = 1; j < g.markers.size(); ++j) {
        if (marker_less(g.markers[j], g.markers[j - 1])) {
            r.fail("marker_order", marker_name(j) + " sorts before " + marker_name(j - 1));
        }
    }

    r.check("0 <= h <= 1");
    for (std::size_t j = 0; j < g.markers.size(); ++j) {
        double h = g.markers[j].h;
        if (!(h >= 0.0 && h <= 1.0)) r.fail("h_range", marker_name(j) + ": h = " + std::to_string(h) + " outside [0, 1]");
    }

    r.check("Taylor series normalized");
    for (std::size_t j = 0; j < g.markers.size(); ++j) {
        for (const auto& v : validate_series(g.markers[j].taylor).violations) {
            r.fail(v.code, marker_name(j) + ": " + v.message);
        }
    }

    if (g.polygon.is_empty()) {
        r.check("empty element has every lambda at 0");
        for (std::size_t j = 0; j < g.markers.size(); ++j) {
            if (g.markers[j].lambda != Lambda(Rational(0))) {
                r.fail("empty_lambda", marker_name(j) + " of the empty element must sit at lambda = 0");
            }
        }
        return r;
    }

    r.check("finite measure (everywhere finite height)");
    if (!has_everywhere_finite_height(g.polygon)) {
        r.fail("infinite_height", "some vertical line meets the polygon in an unbounded set");
        return r;
    }
    r.check("finite lambdas in the closed x-support");
    const XInterval& support = g.polygon.x_support();
    for (std::size_t j = 0; j < g.markers.size(); ++j) {
        const Lambda& l = g.markers[j].lambda;
        if (l && !support.contains(*l)) {
            r.fail("lambda_outside_support", marker_name(j) + " at x = " + to_string(*l) + " is outside [" +
                                                 bound_to_string(support.lo, false) + ", " +
                                                 bound_to_string(support.hi, true) + "]");
        }
    }

    r.check("every orbit member convex");
    if (g.markers.size() > max_markers) {
        r.fail("too_many_markers", std::to_string(g.markers.size()) + " markers exceeds the limit of " +
                                       std::to_string(max_markers));
        return r;
    }
    std::vector<Lambda> lambdas;
    for (const auto& mk : g.markers) lambdas.push_back(mk.lambda);
    std::vector<VerticalRegion> orbit = orbit_regions(to_vertical_region(g.polygon), lambdas);
    for (std::size_t mask = 0; mask < orbit.size(); ++mask) {
        if (!orbit[mask].is_convex()) {
            std::string u;
            for (std::size_t j = 0; j < lambdas.size(); ++j) u += (mask >> j) & 1 ? '1' : '0';
            r.fail("orbit_not_convex", "t_u is not convex for u = " + u);
        }
    }
    return r;
}

MetricConfig completion_config() {
    MetricConfig cfg;
    cfg.h_mode = HMode::Normalized;
    return cfg;
}

MetricOperand make_operand(const GeneralizedIngredients& g, HMode mode) {
    MetricOperand op{g.polygon.is_empty() ? VerticalRegion::empty() : to_vertical_region(g.polygon), {}, {}, {}, {}};
    for (const auto& mk : g.markers) {
        op.lambdas.push_back(mk.lambda);
        op.ks.push_back(mk.k);
        double h = mk.h;
        if (mode == HMode::Raw) {
            if (auto len = slice_length(g.polygon, mk.lambda)) h *= to_double(*len);
        }
        op.hs.push_back(h);
        op.taylors.push_back(mk.taylor);
    }
    return op;
}

double distance_completion(const GeneralizedIngredients& a, const GeneralizedIngredients& b,
                           const MetricConfig& cfg) {
    return distance_full(make_operand(a, cfg.h_mode), make_operand(b, cfg.h_mode), cfg);
}

SequenceReport cauchy_report(std::span<const GeneralizedIngredients> seq, double eps, const MetricConfig& cfg,
                             std::size_t max_lag) {
    if (seq.size() < 2) throw Error(ErrorKind::InvalidSequence, "a sequence needs at least two elements");
    if (!(eps > 0.0)) throw Error(ErrorKind::InvalidSequence, "eps must be positive");
    if (max_lag == 0) throw Error(ErrorKind::InvalidSequence, "max lag must be at least 1");

    std::vector<MetricOperand> ops;
    for (const auto& g : seq) ops.push_back(make_operand(g, cfg.h_mode));

    SequenceReport report;
    report.eps = eps;
    report.max_lag = max_lag;
    std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && j - i <= max_lag; ++j) {
            PairDistance pd{i, j, cfg.incomparable_value, std::nullopt};
            if (comparable(ops[i], ops[j])) {
                AlignmentResult r = distance_component(ops[i], ops[j], cfg);
                pd.distance = r.total;
                pd.perm = r.perm;
            }
            if (j == i + 1) report.successive.push_back(pd.distance);
            report.pairs.push_back(std::move(pd));
        }
    }

    // Walk back from the end while every pair starting at N stays below eps.
    std::optional<std::size_t> from;
    for (std::size_t N = n - 1; N-- > 0;) {
        bool ok = std::all_of(report.pairs.begin(), report.pairs.end(),
                              [&](const PairDistance& p) { return p.i != N || p.distance < eps; });
        if (!ok) break;
        from = N;
    }
    report.cauchy_from = from;
    if (from) report.limit_candidate = n - 1;
    return report;
}

}  // namespace stmetric
