#include "lcalc_cli/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lcalc/error.hpp"

namespace lcalc::cli {
namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

long integer_member(const json& j, const char* key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_number_integer()) schema_error(where + "/" + key, "expected an integer");
  return v.get<long>();
}

IntVec int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of integers");
  IntVec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema_error(where, "expected an array of integers");
    out.push_back(x.get<long>());
  }
  return out;
}

std::vector<IntVec> int_vectors(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of integer vectors");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_vector(j[i], where + "/" + std::to_string(i)));
  return out;
}

GroupDescriptor descriptor_from_json(const json& j) {
  if (j.is_string()) return parse_group_descriptor(j.get<std::string>());
  const json& type = member(j, "type", "/group");
  if (!type.is_string()) schema_error("/group/type", "expected a string");
  const std::string t = type.get<std::string>();
  const long n = integer_member(j, t == "Torus" || t == "T" ? "r" : "n", "/group");
  if (n < 0) schema_error("/group", "negative size");
  return parse_group_descriptor(t + "(" + std::to_string(n) + ")");
}

bool is_explicit_datum(const json& j) { return j.is_object() && j.contains("roots"); }

BasedRootDatum explicit_datum(const json& j) {
  const long rank = integer_member(j, "rank", "/group");
  const json& simple = member(j, "simple", "/group");
  std::vector<std::size_t> indices;
  for (long i : int_vector(simple, "/group/simple")) {
    if (i < 0) schema_error("/group/simple", "negative index");
    indices.push_back(static_cast<std::size_t>(i));
  }
  return BasedRootDatum(static_cast<std::size_t>(rank), int_vectors(member(j, "roots", "/group"), "/group/roots"),
                        int_vectors(member(j, "coroots", "/group"), "/group/coroots"), indices,
                        j.value("name", std::string{}));
}

std::vector<Matrix> matrix_list(const json& j, const FieldPtr& f, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(matrix_from_json(j[i], f, where + "/" + std::to_string(i)));
  return out;
}

json matrix_list_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

FieldPtr field_from_json(const json& j) {
  if (!j.is_object()) schema_error("/field", "expected an object");
  const char* order_key = j.contains("N") ? "N" : "cyclotomic_order";
  const long order = integer_member(j, order_key, "/field");
  const long q = integer_member(j, "q", "/field");
  if (order < 1) schema_error("/field/N", "must be positive");
  return Field::make(static_cast<unsigned>(order), q);
}

json to_json(const FieldPtr& field) {
  return {{"N", field->spec().cyclotomic_order}, {"q", field->spec().q}};
}

FieldPtr field_from_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--field expects N,q", 0);
  long order = 0;
  long q = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto r1 = std::from_chars(begin, begin + comma, order);
  if (r1.ec != std::errc() || r1.ptr != begin + comma) throw ParseError("--field: bad cyclotomic order", 0);
  auto r2 = std::from_chars(begin + comma + 1, end, q);
  if (r2.ec != std::errc() || r2.ptr != end) throw ParseError("--field: bad q", comma + 1);
  if (order < 1) throw ParseError("--field: cyclotomic order must be positive", 0);
  return Field::make(static_cast<unsigned>(order), q);
}

LGroupSpec lgroup_from_json(const json& j) {
  if (is_explicit_datum(j)) {
    const BasedRootDatum g = explicit_datum(j);
    if (j.contains("galois_order")) {
      const long order = integer_member(j, "galois_order", "/group");
      return LGroupSpec(g.dual(), static_cast<unsigned>(order),
                        int_vectors(member(j, "galois_action", "/group"), "/group/galois_action"));
    }
    return LGroupSpec(g.dual());
  }
  return LGroupSpec::split(descriptor_from_json(j));
}

json to_json(const LGroupSpec& lgroup) {
  if (lgroup.group()) {
    const GroupDescriptor& d = *lgroup.group();
    switch (d.kind) {
      case GroupDescriptor::Kind::GL: return {{"type", "GL"}, {"n", d.n}};
      case GroupDescriptor::Kind::SL: return {{"type", "SL"}, {"n", d.n}};
      case GroupDescriptor::Kind::PGL: return {{"type", "PGL"}, {"n", d.n}};
      case GroupDescriptor::Kind::Torus: return {{"type", "Torus"}, {"r", d.n}};
    }
  }
  const BasedRootDatum g = lgroup.group_datum();
  json out{{"rank", g.rank()}, {"roots", g.roots()}, {"coroots", g.coroots()}, {"simple", g.simple_indices()}};
  if (!lgroup.is_split()) {
    out["galois_order"] = lgroup.galois_order();
    out["galois_action"] = lgroup.galois_action();
  }
  return out;
}

BasedRootDatum group_datum_from_json(const json& j) {
  if (is_explicit_datum(j)) return explicit_datum(j);
  return BasedRootDatum::build(descriptor_from_json(j));
}

Scalar scalar_from_json(const json& j, const FieldPtr& field, const std::string& where) {
  if (j.is_number_integer()) return Scalar::rational(field, j.get<long>());
  if (!j.is_string()) schema_error(where, "expected a scalar string");
  try {
    return parse_scalar(j.get<std::string>(), field);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.position());
  }
}

Matrix matrix_from_json(const json& j, const FieldPtr& field, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_error(where, "expected a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j[0].size()) schema_error(where, "rows of unequal length");
    std::vector<Scalar> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      row.push_back(scalar_from_json(j[i][k], field, where + "/" + std::to_string(i) + "/" + std::to_string(k)));
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(field, rows);
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const WeilElement& w) {
  json inertia = json::array();
  for (const auto& letter : w.letters()) {
    if (letter.kind == WeilLetter::Kind::Inertia) inertia.push_back({letter.index, letter.exponent});
  }
  return {{"frob", w.d_F()}, {"inertia", inertia}, {"word", w.to_string()}};
}

json to_json(const CGroupElement& a) {
  const CGroupElement c = a.canonical();
  return {{"g", to_json(c.g())}, {"z", to_json(c.z())}, {"w", to_json(c.w())}, {"t_Gm", to_json(c.t_Gm())}};
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"valid", report.ok()}, {"checks", checks}};
}

ParamFormat format_from_string(const std::string& text) {
  if (text == "wd") return ParamFormat::WD;
  if (text == "ladic") return ParamFormat::LAdic;
  if (text == "sl2") return ParamFormat::SL2;
  throw ParseError("unknown format '" + text + "' (expected wd, ladic or sl2)", 0);
}

std::string to_string(ParamFormat f) {
  switch (f) {
    case ParamFormat::WD: return "wd";
    case ParamFormat::LAdic: return "ladic";
    case ParamFormat::SL2: return "sl2";
  }
  return "wd";
}

ParamFile param_from_json(const json& j, const FieldPtr& field_override) {
  const FieldPtr field = field_override ? field_override : field_from_json(member(j, "field", ""));
  const LGroupSpec lgroup = lgroup_from_json(member(j, "group", ""));
  const json& fmt = member(j, "format", "");
  if (!fmt.is_string()) schema_error("/format", "expected a string");
  ParamFile out;
  out.format = format_from_string(fmt.get<std::string>());
  unsigned degree = 1;
  if (j.contains("degree")) {
    const long d = integer_member(j, "degree", "");
    if (d < 1) schema_error("/degree", "must be positive");
    degree = static_cast<unsigned>(d);
  }
  const std::vector<Matrix> inertia = j.contains("inertia") ? matrix_list(j["inertia"], field, "/inertia")
                                                            : std::vector<Matrix>{};
  if (out.format == ParamFormat::SL2) {
    out.sl2.emplace(lgroup, matrix_from_json(member(j, "E", ""), field, "/E"),
                    matrix_from_json(member(j, "H", ""), field, "/H"), matrix_from_json(member(j, "F", ""), field, "/F"),
                    matrix_from_json(member(j, "frob0", ""), field, "/frob0"), inertia, degree);
  } else {
    out.wd.emplace(lgroup, matrix_from_json(member(j, "frobenius", ""), field, "/frobenius"), inertia,
                   matrix_from_json(member(j, "monodromy", ""), field, "/monodromy"), degree);
  }
  return out;
}

json to_json(const ParamData& p, ParamFormat format) {
  json out{{"field", to_json(p.field())},
           {"group", to_json(p.lgroup)},
           {"format", to_string(format == ParamFormat::SL2 ? ParamFormat::WD : format)},
           {"frobenius", to_json(p.frobenius)},
           {"inertia", matrix_list_json(p.inertia)},
           {"monodromy", to_json(p.monodromy)}};
  if (p.degree != 1) out["degree"] = p.degree;
  return out;
}

json to_json(const SL2Param& p) {
  json out{{"field", to_json(p.field())}, {"group", to_json(p.lgroup)}, {"format", "sl2"},
           {"E", to_json(p.e)},           {"H", to_json(p.h)},           {"F", to_json(p.f)},
           {"frob0", to_json(p.frob0)},   {"inertia", matrix_list_json(p.inertia)}};
  if (p.degree != 1) out["degree"] = p.degree;
  return out;
}

json to_json(const ParamFile& p) { return p.sl2 ? to_json(*p.sl2) : to_json(*p.wd, p.format); }

json to_json(const TannakianValue& v) {
  return {{"rep", v.rep.to_string()},
          {"frobenius", to_json(v.at_frobenius)},
          {"inertia", matrix_list_json(v.at_inertia)},
          {"tame", to_json(v.at_tame)}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace lcalc::cli
