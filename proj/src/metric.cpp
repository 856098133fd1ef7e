#include "stmetric/metric.hpp"

#include <algorithm>
#include <map>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

void check_appropriate(const MetricOperand& a, const MetricOperand& b, const Permutation& p) {
    std::size_t n = a.mf();
    if (b.mf() != n || p.p.size() != n) throw Error(ErrorKind::Alignment, "permutation size does not match mf");
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        int i = p.p[j];
        if (i < 0 || static_cast<std::size_t>(i) >= n || seen[static_cast<std::size_t>(i)]) {
            throw Error(ErrorKind::Alignment, "not a permutation");
        }
        seen[static_cast<std::size_t>(i)] = true;
        if (a.ks[j] - b.ks[static_cast<std::size_t>(i)] != p.c) {
            throw Error(ErrorKind::Alignment, "k_" + std::to_string(j + 1) + " - k'_" + std::to_string(i + 1) +
                                                  " != " + std::to_string(p.c));
        }
    }
}

std::size_t permuted_mask(std::size_t mask, const std::vector<int>& p) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if ((mask >> j) & 1) out |= std::size_t{1} << p[j];
    }
    return out;
}

double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
}

// Orbits of both operands, the second already moved by T^c, with a cache of
// symmetric-difference measures shared across permutations.
class Engine {
public:
    Engine(const MetricOperand& a, const MetricOperand& b, long c, const MetricConfig& cfg)
        : a_(a), b_(b), cfg_(cfg),
          orbit_a_(orbit_regions(a.region, a.lambdas)),
          orbit_b_(orbit_regions(b.region.transformed(Integer(c)), b.lambdas)) {}

    MeasureValue polygon_term(const Permutation& p) {
        MeasureValue total = MeasureValue::exact(0);
        for (std::size_t mask = 0; mask < orbit_a_.size(); ++mask) {
            std::size_t w = permuted_mask(mask, p.p);
            auto key = std::make_pair(mask, w);
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                it = cache_.emplace(key, symmetric_difference_measure(cfg_.nu, orbit_a_[mask], orbit_b_[w])).first;
            }
            total += it->second;
        }
        return total;
    }

    AlignmentResult evaluate(const Permutation& p) {
        AlignmentResult r{p, polygon_term(p), {}, {}, 0.0};
        for (std::size_t j = 0; j < a_.mf(); ++j) {
            auto i = static_cast<std::size_t>(p.p[j]);
            r.taylor_terms.push_back(taylor_distance_semitoric(a_.taylors[j], b_.taylors[i], cfg_.bn, cfg_.max_degree));
            r.h_terms.push_back(std::abs(a_.hs[j] - b_.hs[i]));
        }
        std::vector<double> floats = r.taylor_terms;
        floats.insert(floats.end(), r.h_terms.begin(), r.h_terms.end());
        r.total = r.polygon.value() + sorted_sum(std::move(floats));
        return r;
    }

private:
    const MetricOperand& a_;
    const MetricOperand& b_;
    const MetricConfig& cfg_;
    std::vector<VerticalRegion> orbit_a_;
    std::vector<VerticalRegion> orbit_b_;
    std::map<std::pair<std::size_t, std::size_t>, MeasureValue> cache_;
};

}  // namespace

const char* h_mode_name(HMode mode) { return mode == HMode::Raw ? "raw" : "normalized"; }

MetricOperand make_operand(const SemitoricIngredients& m, HMode mode) {
    MetricOperand op{to_vertical_region(m.polygon), m.lambdas(), m.ks(), {}, {}};
    for (const auto& mk : m.markers) {
        double h = mk.h;
        if (mode == HMode::Normalized) {
            if (!mk.lambda) throw Error(ErrorKind::DegenerateInput, "normalized h needs a finite lambda");
            auto slice = slice_interval(m.polygon, *mk.lambda);
            if (!slice) throw Error(ErrorKind::DegenerateInput, "lambda outside the polygon");
            h /= to_double(Rational(slice->second - slice->first));
        }
        op.hs.push_back(h);
        op.taylors.push_back(mk.taylor);
    }
    return op;
}

MeasureValue polygon_distance_aligned(const MetricOperand& a, const MetricOperand& b, const Permutation& p,
                                      const AdmissibleMeasure& nu) {
    check_appropriate(a, b, p);
    MetricConfig cfg;
    cfg.nu = nu;
    return Engine(a, b, p.c, cfg).polygon_term(p);
}

MeasureValue polygon_distance_aligned(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                      const Permutation& p, const AdmissibleMeasure& nu) {
    return polygon_distance_aligned(make_operand(a, HMode::Raw), make_operand(b, HMode::Raw), p, nu);
}

AlignmentResult comparison_with_alignment(const MetricOperand& a, const MetricOperand& b, const Permutation& p,
                                          const MetricConfig& cfg) {
    check_appropriate(a, b, p);
    return Engine(a, b, p.c, cfg).evaluate(p);
}

AlignmentResult comparison_with_alignment(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                          const Permutation& p, const MetricConfig& cfg) {
    return comparison_with_alignment(make_operand(a, cfg.h_mode), make_operand(b, cfg.h_mode), p, cfg);
}

bool comparable(const MetricOperand& a, const MetricOperand& b) {
    return a.mf() == b.mf() && twisting_equivalent(a.ks, b.ks).has_value();
}

AlignmentResult distance_component(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg) {
    if (a.mf() != b.mf()) {
        throw Error(ErrorKind::Incomparable,
                    "mf = " + std::to_string(a.mf()) + " vs mf = " + std::to_string(b.mf()));
    }
    std::vector<Permutation> perms = appropriate_permutations(a.ks, b.ks);
    if (perms.empty()) throw Error(ErrorKind::Incomparable, "twisting indices are not equivalent");
    Engine engine(a, b, perms.front().c, cfg);
    std::optional<AlignmentResult> best;
    for (const auto& p : perms) {
        AlignmentResult r = engine.evaluate(p);
        if (!best || r.total < best->total) best = std::move(r);
    }
    return *best;
}

AlignmentResult distance_component(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                   const MetricConfig& cfg) {
    return distance_component(make_operand(a, cfg.h_mode), make_operand(b, cfg.h_mode), cfg);
}

double distance_full(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg) {
    if (!comparable(a, b)) return cfg.incomparable_value;
    return distance_component(a, b, cfg).total;
}

double distance_full(const SemitoricIngredients& a, const SemitoricIngredients& b, const MetricConfig& cfg) {
    return distance_full(make_operand(a, cfg.h_mode), make_operand(b, cfg.h_mode), cfg);
}

double distance_id(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg) {
    if (a.mf() != b.mf()) return cfg.incomparable_value;
    Permutation id;
    for (std::size_t j = 0; j < a.mf(); ++j) {
        id.p.push_back(static_cast<int>(j));
        if (a.ks[j] - b.ks[j] != a.ks[0] - b.ks[0]) return cfg.incomparable_value;
    }
    id.c = a.mf() == 0 ? 0 : a.ks[0] - b.ks[0];
    return comparison_with_alignment(a, b, id, cfg).total;
}

double distance_id(const SemitoricIngredients& a, const SemitoricIngredients& b, const MetricConfig& cfg) {
    return distance_id(make_operand(a, cfg.h_mode), make_operand(b, cfg.h_mode), cfg);
}

}  // namespace stmetric
