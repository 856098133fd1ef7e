#include "stmetric/io.hpp"

#include <fstream>
#include <set>

#include "stmetric/errors.hpp"

namespace stmetric::io {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw SchemaError(message);
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    require(j.is_object(), where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        require(allowed.count(key) > 0, where + ": unexpected key '" + key + "'");
    }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
    require(j.contains(key), where + ": missing '" + key + "'");
    return j.at(key);
}

double real_from_json(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    return to_double(rational_from_json(j, where));
}

long integer_from_json(const json& j, const std::string& where) {
    require(j.is_number_integer(), where + " must be an integer");
    return j.get<long>();
}

}  // namespace

GeneralizedIngredients IngredientsDocument::general() const {
    if (generalized) return {polygon, markers};
    return to_generalized(strict());
}

MetricOperand IngredientsDocument::operand(HMode mode) const {
    if (generalized) return make_operand(GeneralizedIngredients{polygon, markers}, mode);
    return make_operand(strict(), mode);
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    require(j.is_string(), where + " must be a \"p/q\" string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

json rational_to_json(const Rational& q) { return to_string(q); }

ConvexPolygonalSet polygon_from_json(const json& j) {
    only_keys(j, {"halfplanes", "vertices", "empty"}, "polygon");
    require(j.size() == 1, "polygon needs exactly one of 'halfplanes', 'vertices', 'empty'");
    try {
        if (j.contains("empty")) {
            require(j.at("empty") == true, "polygon: 'empty' must be true");
            return ConvexPolygonalSet::empty_set();
        }
        if (j.contains("halfplanes")) {
            const json& hs = j.at("halfplanes");
            require(hs.is_array() && !hs.empty(), "polygon.halfplanes must be a nonempty array");
            std::vector<HalfPlane> out;
            for (std::size_t i = 0; i < hs.size(); ++i) {
                std::string where = "polygon.halfplanes[" + std::to_string(i) + "]";
                require(hs[i].is_array() && hs[i].size() == 3, where + " must be [a, b, c]");
                out.emplace_back(rational_from_json(hs[i][0], where), rational_from_json(hs[i][1], where),
                                 rational_from_json(hs[i][2], where));
            }
            return polygon_from_halfplanes(out);
        }
        const json& vs = j.at("vertices");
        require(vs.is_array(), "polygon.vertices must be an array");
        std::vector<Point> pts;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::string where = "polygon.vertices[" + std::to_string(i) + "]";
            require(vs[i].is_array() && vs[i].size() == 2, where + " must be [x, y]");
            pts.push_back({rational_from_json(vs[i][0], where), rational_from_json(vs[i][1], where)});
        }
        return polygon_from_vertices(pts);
    } catch (const Error& e) {
        throw SchemaError(std::string("polygon: ") + e.what());
    }
}

json polygon_to_json(const ConvexPolygonalSet& p) {
    if (p.is_empty()) return {{"empty", true}};
    json hs = json::array();
    for (const auto& h : p.halfplanes()) {
        hs.push_back({rational_to_json(Rational(h.a())), rational_to_json(Rational(h.b())), rational_to_json(h.c())});
    }
    return {{"halfplanes", hs}};
}

TaylorSeries2 taylor_from_json(const json& j) {
    only_keys(j, {"sigma01", "terms"}, "taylor");
    TaylorSeries2 s;
    if (j.contains("sigma01")) s.set(0, 1, real_from_json(j.at("sigma01"), "taylor.sigma01"));
    if (j.contains("terms")) {
        const json& ts = j.at("terms");
        require(ts.is_array(), "taylor.terms must be an array");
        for (std::size_t n = 0; n < ts.size(); ++n) {
            std::string where = "taylor.terms[" + std::to_string(n) + "]";
            require(ts[n].is_array() && ts[n].size() == 3, where + " must be [i, j, value]");
            long i = integer_from_json(ts[n][0], where + "[0]");
            long k = integer_from_json(ts[n][1], where + "[1]");
            require(i >= 0 && k >= 0 && i + k <= 100000, where + ": indices out of range");
            require(!(i == 0 && k == 1), where + ": sigma01 belongs in 'sigma01'");
            require(s.coeffs.count({static_cast<int>(i), static_cast<int>(k)}) == 0, where + ": duplicate term");
            double v = real_from_json(ts[n][2], where + "[2]");
            s.set(static_cast<int>(i), static_cast<int>(k), v);
        }
    }
    return s;
}

json taylor_to_json(const TaylorSeries2& s) {
    json terms = json::array();
    for (const auto& [key, v] : s.coeffs) {
        if (key == std::make_pair(0, 1)) continue;
        terms.push_back({key.first, key.second, v});
    }
    return {{"sigma01", s.coeff(0, 1)}, {"terms", terms}};
}

Marker marker_from_json(const json& j, bool generalized) {
    only_keys(j, {"lambda", "epsilon", "k", "h", "taylor"}, "marker");
    Marker m;
    const json& l = field(j, "lambda", "marker");
    if (l.is_string() && l.get<std::string>() == "inf") {
        require(generalized, "marker: lambda = inf is only allowed in generalized files");
        m.lambda = std::nullopt;
    } else {
        m.lambda = rational_from_json(l, "marker.lambda");
    }
    if (j.contains("epsilon")) {
        long e = integer_from_json(j.at("epsilon"), "marker.epsilon");
        require(e == 1 || e == -1, "marker.epsilon must be 1 or -1");
        m.epsilon = static_cast<int>(e);
    }
    m.k = integer_from_json(field(j, "k", "marker"), "marker.k");
    m.h = real_from_json(field(j, "h", "marker"), "marker.h");
    if (j.contains("taylor")) m.taylor = taylor_from_json(j.at("taylor"));
    return m;
}

json marker_to_json(const Marker& m) {
    json j = {{"lambda", m.lambda ? rational_to_json(*m.lambda) : json("inf")},
              {"k", m.k},
              {"h", m.h},
              {"taylor", taylor_to_json(m.taylor)}};
    if (m.epsilon != 1) j["epsilon"] = m.epsilon;
    return j;
}

IngredientsDocument document_from_json(const json& j) {
    only_keys(j, {"mf", "polygon", "markers", "generalized"}, "ingredients");
    IngredientsDocument doc;
    if (j.contains("generalized")) {
        require(j.at("generalized").is_boolean(), "'generalized' must be a boolean");
        doc.generalized = j.at("generalized").get<bool>();
    }
    long mf = integer_from_json(field(j, "mf", "ingredients"), "mf");
    require(mf >= 0, "mf must be nonnegative");
    doc.polygon = polygon_from_json(field(j, "polygon", "ingredients"));
    const json& ms = field(j, "markers", "ingredients");
    require(ms.is_array(), "markers must be an array");
    require(static_cast<long>(ms.size()) == mf,
            "mf = " + std::to_string(mf) + " but " + std::to_string(ms.size()) + " markers given");
    for (const auto& m : ms) doc.markers.push_back(marker_from_json(m, doc.generalized));
    return doc;
}

json document_to_json(const IngredientsDocument& doc) {
    json markers = json::array();
    for (const auto& m : doc.markers) markers.push_back(marker_to_json(m));
    return {{"mf", doc.markers.size()},
            {"polygon", polygon_to_json(doc.polygon)},
            {"markers", markers},
            {"generalized", doc.generalized}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), "cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

IngredientsDocument read_document(const std::filesystem::path& path) {
    json j = read_json_file(path);
    try {
        return document_from_json(j);
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    } catch (const json::exception& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

MeasureSpec measure_spec_from_json(const json& j) {
    only_keys(j, {"type", "s"}, "measure");
    const json& t = field(j, "type", "measure");
    require(t.is_string(), "measure.type must be a string");
    MeasureSpec spec{t.get<std::string>(), std::nullopt};
    if (j.contains("s")) spec.s = rational_from_json(j.at("s"), "measure.s");
    return spec;
}

json measure_spec_to_json(const MeasureSpec& spec) {
    json j = {{"type", spec.type}};
    if (spec.s) j["s"] = rational_to_json(*spec.s);
    return j;
}

LinearSummableSeq bn_from_json(const json& j) {
    only_keys(j, {"type", "ratio", "exponent"}, "bn");
    const json& t = field(j, "type", "bn");
    require(t.is_string(), "bn.type must be a string");
    try {
        if (t == "geometric") return LinearSummableSeq::geometric(rational_from_json(field(j, "ratio", "bn"), "bn.ratio"));
        if (t == "power") return LinearSummableSeq::power(rational_from_json(field(j, "exponent", "bn"), "bn.exponent"));
    } catch (const Error& e) {
        throw SchemaError(std::string("bn: ") + e.what());
    }
    throw SchemaError("bn: unknown type " + t.dump());
}

json bn_to_json(const LinearSummableSeq& bn) {
    if (bn.family() == LinearSummableSeq::Family::Geometric) {
        return {{"type", "geometric"}, {"ratio", rational_to_json(bn.parameter())}};
    }
    const Rational& e = bn.parameter();
    json exponent = is_integer(e) ? json(e.get_num().get_si()) : rational_to_json(e);
    return {{"type", "power"}, {"exponent", exponent}};
}

json report_to_json(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"code", v.code}, {"message", v.message}});
    return {{"valid", r.ok()}, {"checked", r.checked}, {"violations", violations}};
}

json piecewise_to_json(const PiecewiseLinearFn& f) {
    json breaks = json::array();
    for (const auto& b : f.breakpoints()) breaks.push_back(rational_to_json(b));
    json pieces = json::array();
    for (const auto& p : f.pieces()) {
        pieces.push_back({{"slope", rational_to_json(p.slope)}, {"intercept", rational_to_json(p.intercept)}});
    }
    return {{"breakpoints", breaks}, {"pieces", pieces}};
}

json region_to_json(const VerticalRegion& r) {
    if (r.is_empty()) return {{"empty", true}};
    const XInterval& d = r.domain();
    return {{"domain", {bound_to_string(d.lo, false), bound_to_string(d.hi, true)}},
            {"bottom", piecewise_to_json(r.bottom())},
            {"top", piecewise_to_json(r.top())}};
}

json measure_value_to_json(const MeasureValue& v) {
    switch (v.kind()) {
        case MeasureValue::Kind::Exact:
            return {{"exact", rational_to_json(v.rational())}, {"value", v.value()}};
        case MeasureValue::Kind::Infinite:
            return {{"exact", nullptr}, {"value", "inf"}};
        case MeasureValue::Kind::Approx:
            return {{"exact", nullptr}, {"value", v.value()}, {"error", v.error()}};
    }
    return nullptr;
}

}  // namespace stmetric::io
