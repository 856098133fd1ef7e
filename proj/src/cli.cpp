#include "stmetric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "stmetric/errors.hpp"
#include "stmetric/io.hpp"
#include "stmetric/plot.hpp"

namespace stmetric {

namespace {

using io::json;
using io::SchemaError;

struct Options {
    std::string measure = "nu0";
    std::string bn = "geometric:1/2";
    int truncation = 12;
    std::string alignment = "min";
    std::string h_mode = "raw";
    double incomparable = 1.0;
};

struct Settings {
    MetricConfig cfg;
    bool identity_alignment = false;
};

AdmissibleMeasure parse_measure(const std::string& text) {
    MeasureSpec spec;
    if (!text.empty() && text.front() == '{') {
        try {
            spec = io::measure_spec_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw SchemaError(std::string("--measure: ") + e.what());
        }
    } else if (auto colon = text.find(':'); colon != std::string::npos) {
        spec.type = text.substr(0, colon);
        spec.s = io::rational_from_json(text.substr(colon + 1), "--measure");
    } else {
        spec.type = text;
    }
    ValidationReport r = validate_admissible(spec);
    if (!r.ok()) throw SchemaError("--measure: " + r.violations.front().message);
    return AdmissibleMeasure::from_spec(spec);
}

LinearSummableSeq parse_bn(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        try {
            return io::bn_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw SchemaError(std::string("--bn: ") + e.what());
        }
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw SchemaError("--bn: expected geometric:R or power:E, got '" + text + "'");
    std::string type = text.substr(0, colon);
    json j = {{"type", type}};
    if (type == "geometric") j["ratio"] = text.substr(colon + 1);
    else j["exponent"] = text.substr(colon + 1);
    return io::bn_from_json(j);
}

Settings settings_from(const Options& o) {
    Settings s;
    s.cfg.nu = parse_measure(o.measure);
    s.cfg.bn = parse_bn(o.bn);
    if (o.truncation < 0) throw SchemaError("--truncation must be >= 0");
    s.cfg.max_degree = o.truncation;
    s.cfg.h_mode = o.h_mode == "normalized" ? HMode::Normalized : HMode::Raw;
    s.cfg.incomparable_value = o.incomparable;
    s.identity_alignment = o.alignment == "id";
    return s;
}

json config_json(const Settings& s) {
    return {{"measure", io::measure_spec_to_json(s.cfg.nu.spec())},
            {"bn", io::bn_to_json(s.cfg.bn)},
            {"truncation", s.cfg.max_degree ? json(*s.cfg.max_degree) : json(nullptr)},
            {"alignment", s.identity_alignment ? "id" : "min"},
            {"h_mode", h_mode_name(s.cfg.h_mode)},
            {"incomparable_value", s.cfg.incomparable_value}};
}

void add_config_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--measure", o.measure, "nu0 | power_tail:S | rational_decay | JSON spec")->capture_default_str();
    cmd->add_option("--bn", o.bn, "geometric:R | power:E | JSON spec")->capture_default_str();
    cmd->add_option("--truncation", o.truncation, "drop Taylor terms of total degree above D")->capture_default_str();
    cmd->add_option("--alignment", o.alignment, "min over appropriate permutations, or the identity only")
        ->check(CLI::IsMember({"min", "id"}))
        ->capture_default_str();
    cmd->add_option("--h-mode", o.h_mode, "compare raw heights or heights over slice length")
        ->check(CLI::IsMember({"raw", "normalized"}))
        ->capture_default_str();
    cmd->add_option("--incomparable-value", o.incomparable, "distance reported for incomparable pairs")
        ->capture_default_str();
}

ValidationReport validate_document(const io::IngredientsDocument& doc) {
    if (doc.generalized) return validate_generalized({doc.polygon, doc.markers});
    return validate_ingredients(doc.strict());
}

int cmd_validate(const std::string& file, const Settings& s, std::ostream& out) {
    io::IngredientsDocument doc = io::read_document(file);
    ValidationReport r = validate_document(doc);
    json j = io::report_to_json(r);
    j["config"] = config_json(s);
    j["generalized"] = doc.generalized;
    out << j.dump(2) << '\n';
    return r.ok() ? exit_ok : exit_invalid;
}

int cmd_dist(const std::string& a_file, const std::string& b_file, const Settings& s, std::ostream& out) {
    io::IngredientsDocument a = io::read_document(a_file);
    io::IngredientsDocument b = io::read_document(b_file);
    json j = {{"config", config_json(s)}};
    for (const auto* doc : {&a, &b}) {
        ValidationReport r = validate_document(*doc);
        if (!r.ok()) {
            j["valid"] = false;
            j["file"] = doc == &a ? a_file : b_file;
            j["violations"] = io::report_to_json(r)["violations"];
            out << j.dump(2) << '\n';
            return exit_invalid;
        }
    }
    MetricOperand oa = a.operand(s.cfg.h_mode);
    MetricOperand ob = b.operand(s.cfg.h_mode);

    std::optional<AlignmentResult> result;
    if (s.identity_alignment) {
        if (oa.mf() == ob.mf()) {
            Permutation id;
            bool ok = true;
            for (std::size_t k = 0; k < oa.mf(); ++k) {
                id.p.push_back(static_cast<int>(k));
                ok = ok && oa.ks[k] - ob.ks[k] == oa.ks[0] - ob.ks[0];
            }
            id.c = oa.mf() == 0 ? 0 : oa.ks[0] - ob.ks[0];
            if (ok) result = comparison_with_alignment(oa, ob, id, s.cfg);
        }
    } else if (comparable(oa, ob)) {
        result = distance_component(oa, ob, s.cfg);
    }

    long D = *s.cfg.max_degree;
    double tail = s.cfg.bn.tail_bound(D);
    j["comparable"] = result.has_value();
    j["distance"] = result ? result->total : s.cfg.incomparable_value;
    if (result) {
        j["polygon_part_exact"] = result->polygon.is_exact() ? json(to_string(result->polygon.rational())) : json(nullptr);
        j["polygon_part"] = result->polygon.value();
        j["permutation"] = result->perm.p;
        j["c"] = result->perm.c;
        j["taylor_terms"] = result->taylor_terms;
        j["h_terms"] = result->h_terms;
    } else {
        for (const char* key : {"polygon_part_exact", "polygon_part", "permutation", "c"}) j[key] = nullptr;
    }
    j["tail_bound"] = tail;
    j["tail_bound_total"] = tail * static_cast<double>(oa.mf());
    j["weight_total"] = s.cfg.bn.weighted_total();
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_orbit(const std::string& file, const std::string& plot, const Settings& s, std::ostream& out) {
    io::IngredientsDocument doc = io::read_document(file);
    if (!doc.polygon.is_empty() && !has_everywhere_finite_height(doc.polygon)) {
        throw Error(ErrorKind::InfiniteHeight, "polygon has unbounded vertical slices");
    }
    VerticalRegion base = doc.polygon.is_empty() ? VerticalRegion::empty() : to_vertical_region(doc.polygon);
    std::vector<Lambda> lambdas;
    for (const auto& m : doc.markers) lambdas.push_back(m.lambda);
    std::vector<VerticalRegion> orbit = orbit_regions(base, lambdas);

    json regions = json::array();
    for (std::size_t mask = 0; mask < orbit.size(); ++mask) {
        std::string u;
        for (std::size_t k = 0; k < lambdas.size(); ++k) u += (mask >> k) & 1 ? '1' : '0';
        regions.push_back({{"u", u},
                           {"region", io::region_to_json(orbit[mask])},
                           {"measure", io::measure_value_to_json(measure_region(s.cfg.nu, orbit[mask]))}});
    }
    json j = {{"config", config_json(s)}, {"mf", doc.markers.size()}, {"regions", regions}};
    if (!plot.empty()) {
        std::ofstream svg(plot);
        if (!svg) throw SchemaError("cannot write " + plot);
        svg << orbit_svg(orbit, lambdas);
        j["plot"] = plot;
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

json vec_json(const IntVec2& v) { return {v.x.get_si(), v.y.get_si()}; }

int cmd_corners(const std::string& file, const Settings& s, std::ostream& out) {
    io::IngredientsDocument doc = io::read_document(file);
    json corners = json::array();
    for (const auto& c : classify_corners(doc.polygon)) {
        corners.push_back({{"vertex", {to_string(c.vertex.point.x), to_string(c.vertex.point.y)}},
                           {"u", vec_json(c.vertex.u)},
                           {"v", vec_json(c.vertex.v)},
                           {"det", det(c.vertex.u, c.vertex.v).get_str()},
                           {"on_top_boundary", c.on_top_boundary},
                           {"type", corner_type_name(c.type)}});
    }
    json marked = json::array();
    if (!doc.polygon.is_empty() && has_everywhere_finite_height(doc.polygon)) {
        VerticalRegion region = to_vertical_region(doc.polygon);
        for (const auto& m : doc.markers) {
            if (!m.lambda || !doc.polygon.x_support().contains_interior(*m.lambda)) continue;
            auto [u, v] = top_boundary_directions(region, *m.lambda);
            Integer d = det(u, IntVec2{v.x, v.x + v.y});
            const char* type = d == 0 ? "fake" : d == 1 ? "hidden Delzant" : "neither";
            marked.push_back({{"lambda", to_string(*m.lambda)},
                              {"point", {to_string(*m.lambda), to_string(region.top()(*m.lambda))}},
                              {"u", vec_json(u)},
                              {"v", vec_json(v)},
                              {"det_u_Tv", d.get_str()},
                              {"type", type}});
        }
    }
    out << json{{"config", config_json(s)}, {"corners", corners}, {"marked_points", marked}}.dump(2) << '\n';
    return exit_ok;
}

int cmd_taylordist(const std::string& a_file, const std::string& b_file, bool general, const Settings& s,
                   std::ostream& out) {
    TaylorSeries2 a = io::taylor_from_json(io::read_json_file(a_file));
    TaylorSeries2 b = io::taylor_from_json(io::read_json_file(b_file));
    double d = general ? taylor_distance_general(a, b, s.cfg.bn, s.cfg.max_degree)
                       : taylor_distance_semitoric(a, b, s.cfg.bn, s.cfg.max_degree);
    out << json{{"config", config_json(s)},
                {"kind", general ? "general" : "semitoric"},
                {"distance", d},
                {"tail_bound", s.cfg.bn.tail_bound(*s.cfg.max_degree)}}
               .dump(2)
        << '\n';
    return exit_ok;
}

std::vector<GeneralizedIngredients> read_sequence(const std::vector<std::string>& files,
                                                  std::vector<io::IngredientsDocument>& docs) {
    std::vector<GeneralizedIngredients> seq;
    for (const auto& f : files) {
        docs.push_back(io::read_document(f));
        seq.push_back(docs.back().general());
    }
    return seq;
}

json sequence_json(const SequenceReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"distance", p.distance},
                         {"permutation", p.perm ? json(p.perm->p) : json(nullptr)},
                         {"c", p.perm ? json(p.perm->c) : json(nullptr)}});
    }
    std::string verdict = std::string(r.consistent_with_cauchy() ? "consistent" : "not consistent") +
                          " with Cauchy at eps";
    return {{"eps", r.eps},
            {"max_lag", r.max_lag},
            {"successive", r.successive},
            {"pairs", pairs},
            {"verdict", verdict},
            {"consistent_with_cauchy", r.consistent_with_cauchy()},
            {"cauchy_from", r.cauchy_from ? json(*r.cauchy_from) : json(nullptr)},
            {"limit_candidate", r.limit_candidate ? json(*r.limit_candidate) : json(nullptr)}};
}

int cmd_cauchy(const std::vector<std::string>& files, double eps, std::size_t lag, bool want_limit,
               const Settings& s, std::ostream& out) {
    std::vector<io::IngredientsDocument> docs;
    std::vector<GeneralizedIngredients> seq = read_sequence(files, docs);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        ValidationReport v = validate_document(docs[i]);
        if (!v.ok()) {
            out << json{{"config", config_json(s)}, {"valid", false}, {"file", files[i]},
                        {"violations", io::report_to_json(v)["violations"]}}
                       .dump(2)
                << '\n';
            return exit_invalid;
        }
    }
    SequenceReport r = cauchy_report(seq, eps, s.cfg, lag);
    json j = sequence_json(r);
    j["config"] = config_json(s);
    if (want_limit) {
        if (r.limit_candidate) {
            io::IngredientsDocument lim{true, seq[*r.limit_candidate].polygon, seq[*r.limit_candidate].markers};
            j["limit"] = io::document_to_json(lim);
        } else {
            j["limit"] = nullptr;
        }
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distances between semitoric ingredient lists", "stmetric"};
    app.require_subcommand(1);
    Options o;

    std::string file;
    std::string file_b;
    std::string plot;
    std::vector<std::string> files;
    double eps = 0.0;
    std::size_t lag = 3;
    bool general = false;

    auto* validate = app.add_subcommand("validate", "validate an ingredients file");
    validate->add_option("file", file)->required();

    auto* dist = app.add_subcommand("dist", "distance between two ingredients files");
    dist->add_option("a", file)->required();
    dist->add_option("b", file_b)->required();
    add_config_options(dist, o);

    auto* orbit = app.add_subcommand("orbit", "the 2^mf sheared regions and their measures");
    orbit->add_option("file", file)->required();
    orbit->add_option("--plot", plot, "write an SVG rendering to this path");
    add_config_options(orbit, o);

    auto* corners = app.add_subcommand("corners", "classify the polygon's vertices and marked points");
    corners->add_option("file", file)->required();

    auto* taylordist = app.add_subcommand("taylordist", "distance between two Taylor series files");
    taylordist->add_option("a", file)->required();
    taylordist->add_option("b", file_b)->required();
    taylordist->add_flag("--general", general, "no wrap-around on sigma01");
    add_config_options(taylordist, o);

    auto* cauchy = app.add_subcommand("cauchy", "Cauchy diagnostics for a sequence of files");
    auto* limit = app.add_subcommand("limit", "limit candidate of a sequence, when it looks Cauchy");
    for (auto* cmd : {cauchy, limit}) {
        cmd->add_option("files", files)->required()->expected(2, -1);
        cmd->add_option("--eps", eps, "tolerance")->required();
        cmd->add_option("--lag", lag, "largest index gap compared")->capture_default_str();
        add_config_options(cmd, o);
    }

    std::vector<std::string> argv_store{"stmetric"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_malformed;
    }

    // sequences live in the completion, which compares normalized heights by default
    for (auto* cmd : {cauchy, limit}) {
        if (cmd->parsed() && cmd->count("--h-mode") == 0) o.h_mode = "normalized";
    }

    try {
        Settings s = settings_from(o);
        if (validate->parsed()) return cmd_validate(file, s, out);
        if (dist->parsed()) return cmd_dist(file, file_b, s, out);
        if (orbit->parsed()) return cmd_orbit(file, plot, s, out);
        if (corners->parsed()) return cmd_corners(file, s, out);
        if (taylordist->parsed()) return cmd_taylordist(file, file_b, general, s, out);
        if (cauchy->parsed()) return cmd_cauchy(files, eps, lag, false, s, out);
        if (limit->parsed()) return cmd_cauchy(files, eps, lag, true, s, out);
    } catch (const SchemaError& e) {
        err << "malformed input: " << e.what() << '\n';
        return exit_malformed;
    } catch (const json::exception& e) {
        err << "malformed input: " << e.what() << '\n';
        return exit_malformed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        bool bad_input = e.kind() == ErrorKind::InvalidSequence || e.kind() == ErrorKind::InvalidMeasure;
        return bad_input ? exit_malformed : exit_invalid;
    }
    return exit_malformed;
}

}  // namespace stmetric
