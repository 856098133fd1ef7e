#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stmetric/completion.hpp"
#include "stmetric/invariants.hpp"
#include "stmetric/measures.hpp"
#include "stmetric/metric.hpp"
#include "stmetric/taylor.hpp"

namespace stmetric::io {

using nlohmann::json;

/// Input that does not match the expected file layout.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of an ingredients file. Marker h values are raw heights unless
/// `generalized` is set, in which case they are normalized to [0, 1].
struct IngredientsDocument {
    bool generalized = false;
    ConvexPolygonalSet polygon = ConvexPolygonalSet::empty_set();
    std::vector<Marker> markers;

    SemitoricIngredients strict() const { return {polygon, markers}; }
    GeneralizedIngredients general() const;
    MetricOperand operand(HMode mode) const;
};

Rational rational_from_json(const json& j, const std::string& where);
json rational_to_json(const Rational& q);

ConvexPolygonalSet polygon_from_json(const json& j);
json polygon_to_json(const ConvexPolygonalSet& p);

TaylorSeries2 taylor_from_json(const json& j);
json taylor_to_json(const TaylorSeries2& s);

Marker marker_from_json(const json& j, bool generalized);
json marker_to_json(const Marker& m);

IngredientsDocument document_from_json(const json& j);
json document_to_json(const IngredientsDocument& doc);

/// Reads and parses a JSON file; throws SchemaError when it cannot be read or parsed.
json read_json_file(const std::filesystem::path& path);
IngredientsDocument read_document(const std::filesystem::path& path);

MeasureSpec measure_spec_from_json(const json& j);
json measure_spec_to_json(const MeasureSpec& spec);
LinearSummableSeq bn_from_json(const json& j);
json bn_to_json(const LinearSummableSeq& bn);

json report_to_json(const ValidationReport& r);
json piecewise_to_json(const PiecewiseLinearFn& f);
json region_to_json(const VerticalRegion& r);
json measure_value_to_json(const MeasureValue& v);

}  // namespace stmetric::io
