#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lcalc/cgroup.hpp"
#include "lcalc/params.hpp"
#include "lcalc/twists.hpp"

namespace lcalc::cli {

using json = nlohmann::json;

/// {"N": 4, "q": 5}; "cyclotomic_order" is accepted for "N".
FieldPtr field_from_json(const json& j);
json to_json(const FieldPtr& field);

/// "N,q" as given on the command line.
FieldPtr field_from_flag(const std::string& text);

/// {"type":"GL","n":3}, {"type":"Torus","r":2}, "GL(3)", or an explicit datum
/// {"rank":..,"roots":..,"coroots":..,"simple":..} of G.
LGroupSpec lgroup_from_json(const json& j);
json to_json(const LGroupSpec& lgroup);
/// Datum of G for a descriptor string, JSON text or the JSON forms above.
BasedRootDatum group_datum_from_json(const json& j);

/// Scalars are strings in the scalar grammar; JSON integers are accepted.
Scalar scalar_from_json(const json& j, const FieldPtr& field, const std::string& where);
Matrix matrix_from_json(const json& j, const FieldPtr& field, const std::string& where);
json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const WeilElement& w);
json to_json(const CGroupElement& a);
json to_json(const ValidationReport& report);

enum class ParamFormat { WD, LAdic, SL2 };
ParamFormat format_from_string(const std::string& text);
std::string to_string(ParamFormat f);

struct ParamFile {
  ParamFormat format = ParamFormat::WD;
  std::optional<ParamData> wd;   // set for wd and ladic
  std::optional<SL2Param> sl2;   // set for sl2
};

/// `field_override` replaces the file's field before any scalar is parsed.
ParamFile param_from_json(const json& j, const FieldPtr& field_override = nullptr);
json to_json(const ParamData& p, ParamFormat format = ParamFormat::WD);
json to_json(const SL2Param& p);
json to_json(const ParamFile& p);

json to_json(const TannakianValue& v);

/// Reads and parses a JSON file; syntax errors become ParseError with the byte offset.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

}  // namespace lcalc::cli
