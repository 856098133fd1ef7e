#include "stmetric/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stmetric {

namespace {

constexpr double panel = 240.0;
constexpr double margin = 16.0;
constexpr int columns = 4;

struct Window {
    double x0, x1, y0, y1;
};

std::vector<double> features(const VerticalRegion& r, std::span<const Lambda> lambdas) {
    std::vector<double> xs;
    for (const auto& b : r.breakpoints()) xs.push_back(to_double(b));
    if (r.domain().lo) xs.push_back(to_double(*r.domain().lo));
    if (r.domain().hi) xs.push_back(to_double(*r.domain().hi));
    for (const auto& l : lambdas) {
        if (l) xs.push_back(to_double(*l));
    }
    if (xs.empty()) xs.push_back(0.0);
    return xs;
}

// x-samples for drawing: window ends plus every breakpoint in between.
std::vector<Rational> samples(const VerticalRegion& r, double x0, double x1) {
    const XInterval& d = r.domain();
    std::vector<Rational> xs{d.lo ? *d.lo : from_double(x0)};
    for (const auto& b : r.breakpoints()) {
        double v = to_double(b);
        if (v > x0 && v < x1) xs.push_back(b);
    }
    xs.push_back(d.hi ? *d.hi : from_double(x1));
    return xs;
}

}  // namespace

std::string orbit_svg(std::span<const VerticalRegion> regions, std::span<const Lambda> lambdas) {
    double x0 = HUGE_VAL;
    double x1 = -HUGE_VAL;
    for (const auto& r : regions) {
        if (r.is_empty()) continue;
        for (double x : features(r, lambdas)) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
        }
    }
    if (x0 > x1) {
        x0 = -1;
        x1 = 1;
    }
    double pad = std::max(1.0, 0.25 * (x1 - x0));
    x0 -= pad;
    x1 += pad;

    double y0 = HUGE_VAL;
    double y1 = -HUGE_VAL;
    for (const auto& r : regions) {
        if (r.is_empty()) continue;
        for (const auto& x : samples(r, x0, x1)) {
            y0 = std::min(y0, to_double(r.bottom()(x)));
            y1 = std::max(y1, to_double(r.top()(x)));
        }
    }
    if (y0 > y1) {
        y0 = -1;
        y1 = 1;
    }
    Window w{x0, x1, y0 - 0.5, y1 + 0.5};
    double scale = (panel - 2 * margin) / std::max(w.x1 - w.x0, w.y1 - w.y0);

    std::size_t n = regions.size();
    std::size_t rows = (n + columns - 1) / columns;
    std::size_t cols = std::min<std::size_t>(n, columns);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * panel << "\" height=\"" << rows * panel
       << "\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        double ox = static_cast<double>(i % columns) * panel;
        double oy = static_cast<double>(i / columns) * panel;
        auto px = [&](double x) { return ox + margin + (x - w.x0) * scale; };
        auto py = [&](double y) { return oy + panel - margin - (y - w.y0) * scale; };

        os << "<g>\n<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << panel << "\" height=\"" << panel
           << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
        std::string u;
        for (std::size_t j = 0; j < lambdas.size(); ++j) u += (i >> j) & 1 ? '1' : '0';
        os << "<text x=\"" << ox + 4 << "\" y=\"" << oy + 12 << "\" font-size=\"10\">u=" << (u.empty() ? "()" : u)
           << "</text>\n";
        const VerticalRegion& r = regions[i];
        if (!r.is_empty()) {
            std::vector<Rational> xs = samples(r, w.x0, w.x1);
            os << "<polygon fill=\"#9cc3e6\" stroke=\"#1f4e79\" points=\"";
            for (const auto& x : xs) os << px(to_double(x)) << ',' << py(to_double(r.top()(x))) << ' ';
            for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
                os << px(to_double(*it)) << ',' << py(to_double(r.bottom()(*it))) << ' ';
            }
            os << "\"/>\n";
        }
        for (const auto& l : lambdas) {
            if (!l) continue;
            double x = px(to_double(*l));
            os << "<line x1=\"" << x << "\" y1=\"" << oy + margin << "\" x2=\"" << x << "\" y2=\""
               << oy + panel - margin << "\" stroke=\"#c00\" stroke-dasharray=\"4 3\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace stmetric
