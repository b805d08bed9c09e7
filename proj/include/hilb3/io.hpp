#pragma once

#include "hilb3/chow.hpp"
#include "hilb3/cone.hpp"
#include "hilb3/exceptional.hpp"
#include "hilb3/report.hpp"
#include "hilb3/taut.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Markdown, Csv };

Format parse_format(std::string_view s);  // "json", "md"/"markdown", "csv"

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "O(d)", "exc:p/2^q+t" (twist optional, may be negative) or "chern:r,c1,c2".
BundleData parse_bundle_spec(std::string_view spec);

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);
std::string csv_row(const std::vector<std::string>& fields);

Json class_to_json(const GradedClass& x);
// Accepts class_to_json output; unknown basis names and wrong codims throw.
GradedClass class_from_json(const Json& j);

std::string render_class(const GradedClass& x, Format f);
std::string render_family(const ClassFamily& x, Format f);

std::string render_reports(const std::vector<Report>& reports, Format f, bool timing);

// which: pairing1, pairing2, pairing3, schur, prop34.
std::string render_table(std::string_view which, Format f, const SchurTable& table);

std::string render_cone(const std::string& name, const Cone& c, Format f);
std::string render_slopes(const std::vector<ExcSlope>& v, Format f);
std::string render_gaeta(const BundleData& b, const GaetaResolution& g, const AmpleVerdict& v, Format f);

// {"schema": 1, "schur": {"3,1": {"U": "<poly in d>", ...}, ...}}; rows not
// mentioned keep their builtin values, coordinates not mentioned become 0.
SchurTable schur_table_with_overrides(const SchurTable& base, const Json& fixtures);

}  // namespace hilb3
