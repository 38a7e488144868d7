#include "lcalc_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcalc/corpus.hpp"
#include "lcalc/error.hpp"

namespace lcalc::cli {
namespace {

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("expected a comma-separated list of integers", pos);
    }
    pos += item.size() + 1;
  }
  return out;
}

std::string sign_description(const Matrix& m) {
  if (m.is_identity()) return "Identity";
  if ((-m).is_identity()) return "-Identity";
  std::string out = "diag(";
  for (std::size_t i = 0; i < m.rows(); ++i) out += (i ? "," : "") + m(i, i).to_string();
  return out + ")";
}

std::string sign_description(const std::vector<int>& signs) {
  const bool plus = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
  const bool minus = std::all_of(signs.begin(), signs.end(), [](int s) { return s == -1; });
  if (plus) return "Identity";
  if (minus && !signs.empty()) return "-Identity";
  std::string out = "signs(";
  for (std::size_t i = 0; i < signs.size(); ++i) out += (i ? "," : "") + std::to_string(signs[i]);
  return out + ")";
}

json load_descriptor(const std::string& text) {
  if (!text.empty() && text.front() == '{') return parse_json_text(text);
  if (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0) return read_json_file(text);
  return text;
}

Scalar chosen_c(const FieldPtr& f, unsigned degree, const ParamOptions& opt) {
  if (opt.c) return parse_scalar(*opt.c, f);
  return Scalar::sqrt_q(f).pow(degree);
}

ParamData as_wd(const ParamFile& file, const ParamOptions& opt) {
  if (file.wd) return *file.wd;
  return sl2_to_wd(*file.sl2, chosen_c(file.sl2->field(), file.sl2->degree, opt));
}

EquivVerdict verdict_of(const EquivResult& r) { return r.verdict; }

Report equiv_report(const EquivResult& r) {
  json body{{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
  body["conjugator"] = r.conjugator ? to_json(*r.conjugator) : json(nullptr);
  const EquivVerdict v = verdict_of(r);
  const bool undecided = v == EquivVerdict::Inconclusive || v == EquivVerdict::GlEquivalentOnly;
  return {body, undecided ? kInconclusive : kOk};
}

json pieces_json(const RepExpr& r, const ParamData& p) {
  const DualRealization real = p.realization();
  json out = json::array();
  for (const auto& piece : isotypic_decomposition(r, real, p.field())) {
    out.push_back({{"highest_weight", piece.highest_weight},
                   {"dimension", piece.basis.size()},
                   {"multiplicity", piece.multiplicity},
                   {"irreducible_dimension", piece.irreducible_dimension},
                   {"d_G", piece_dG(piece, real)}});
  }
  return out;
}

Report tannakian_report(const ParamData& p, const ParamOptions& opt) {
  if (!opt.rep) throw PreconditionError("--rep is required");
  const RepExpr r = parse_rep(*opt.rep);
  const Scalar c = chosen_c(p.field(), p.degree, opt);
  const TannakianValue v = tannakian_twist(p, r, c);
  json checks{{"weil_relations", check_weil_relations(v, p.residue_cardinality()).ok()},
              {"wtrF", check_wtrF(p, r, c)}};
  if (p.field()->c_rational()) {
    checks["minus_c"] = "unavailable: c is rational";
  } else {
    checks["minus_c"] = check_minus_c(p, r, c);
  }
  json body{{"rep", r.to_string()}, {"c", c.to_string()}, {"pieces", pieces_json(r, p)}, {"value", to_json(v)},
            {"checks", checks}};
  return {body, kOk};
}

json cparam_json(const CParam& a) {
  json gens = json::array();
  for (const auto& g : a.generator_images()) gens.push_back(to_json(g));
  return {{"base", to_json(a.base(), ParamFormat::LAdic)},
          {"z_frobenius", a.z_frobenius().to_string()},
          {"generators", gens},
          {"c_condition", a.satisfies_c_condition()}};
}

// Demos.

Report demo_pgl2(std::uint64_t seed) {
  json verdicts = json::array();
  bool all = true;
  std::string conclusion;
  for (const auto& f : {Field::make(4, 5), Field::make(1, 3)}) {
    for (const auto& item : sl2_corpus(f, 5, seed)) {
      const ObstructionReport r = pgl2_obstruction_demo(item.param, Scalar::sqrt_q(f));
      all = all && r.matches;
      conclusion = r.conclusion;
      verdicts.push_back({{"field", to_json(f)},
                          {"param", item.label},
                          {"det_twisted_frobenius", r.det_twisted_frobenius.to_string()},
                          {"q_inverse", r.q_inverse.to_string()},
                          {"matches", r.matches}});
    }
  }
  json narrative = json::array();
  narrative.push_back("each parameter has determinant one, i.e. it comes from PGL(2) through SL(2) in GL(2)");
  narrative.push_back("twisting by |w|^{1/2} multiplies Frobenius by c^{-1}, so its determinant becomes q^{-1}");
  narrative.push_back(conclusion);
  return {{{"demo", "pgl2-obstruction"}, {"seed", seed}, {"narrative", narrative}, {"verdicts", verdicts},
           {"all_passed", all}},
          all ? kOk : kPreconditionFailure};
}

Report demo_iota(std::uint64_t seed) {
  json verdicts = json::array();
  bool all = true;
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    for (const auto& item : gl_corpus(f, 3, 2, seed)) {
      for (const auto& r : rep_corpus()) {
        const bool minus = check_minus_c(item.param, r, c);
        const TannakianValue t = tannakian_twist(item.param, r, c);
        TannakianValue conj{r, t.at_frobenius.map([](const Scalar& s) { return s.conjugate_c(); }), {},
                            t.at_tame.map([](const Scalar& s) { return s.conjugate_c(); })};
        for (const auto& g : t.at_inertia) conj.at_inertia.push_back(g.map([](const Scalar& s) { return s.conjugate_c(); }));
        const bool iota = conj == tannakian_twist(omega_zG_twist(conjugate_c(item.param)), r, c);
        all = all && minus && iota;
        verdicts.push_back({{"field", to_json(f)}, {"param", item.label}, {"rep", r.to_string()},
                            {"minus_c", minus}, {"iota_change", iota}});
      }
    }
  }
  json narrative = json::array();
  narrative.push_back("minus_c compares F_{phi,-c}(r) with F_{omega(phi),c}(r), omega multiplying Frobenius by z_G");
  narrative.push_back("iota_change applies c -> -c to F_{phi,c}(r) and compares with F_{omega(phi'),c}(r), phi' the conjugate parameter");
  narrative.push_back("z_GL(3) is the identity, so on GL(3) the twist by -c agrees with the twist by c");
  return {{{"demo", "iota-independence"}, {"seed", seed}, {"narrative", narrative}, {"verdicts", verdicts},
           {"all_passed", all}},
          all ? kOk : kPreconditionFailure};
}

Report demo_gln(std::uint64_t seed) {
  json verdicts = json::array();
  json narrative = json::array();
  bool all = true;
  const RepExpr std_rep = RepExpr::standard();
  for (const auto& f : {Field::make(4, 5), Field::make(1, 3)}) {
    const Scalar c = Scalar::sqrt_q(f);
    for (unsigned n = 1; n <= 4; ++n) {
      const ParamData p = gl_corpus(f, n, 1, seed + n).front().param;
      const CParam a = to_cparam(p, c);
      for (const char* which : {"same", "flipped"}) {
        const CParam b = std::string(which) == "same" ? a : flip_at_frobenius(a);
        const ChiReport r = chi_recovery(a, b, std_rep);
        json chi = json::array();
        for (const auto& x : r.chi) chi.push_back(x.to_string());
        const bool ok = r.chi_squared_trivial && r.equal_as_classes;
        all = all && ok;
        verdicts.push_back({{"field", to_json(f)}, {"n", n}, {"case", which}, {"chi", chi},
                            {"chi_squared_trivial", r.chi_squared_trivial}, {"equal", r.equal_as_classes}});
        if (n == 2 && std::string(which) == "flipped" && narrative.empty()) narrative.push_back(r.narrative);
      }
      ParamData twisted = p;
      twisted.frobenius = p.frobenius * Scalar::rational(f, 2);
      bool rejected = false;
      try {
        chi_recovery(a, to_cparam(twisted, c), std_rep);
      } catch (const PreconditionError&) {
        rejected = true;
      }
      all = all && rejected;
      verdicts.push_back({{"field", to_json(f)}, {"n", n}, {"case", "unramified twist by 2"},
                          {"precondition_rejected", rejected}});
    }
  }
  narrative.push_back("a genuine unramified twist changes r~ at sigma, so the precondition is reported as failed");
  return {{{"demo", "gln-corollary"}, {"seed", seed}, {"narrative", narrative}, {"verdicts", verdicts},
           {"all_passed", all}},
          all ? kOk : kPreconditionFailure};
}

void emit(const Report& r, const std::string& out_path, std::ostream& out) {
  const std::string text = r.body.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw PreconditionError("cannot write '" + out_path + "'");
  file << text;
}

json error_json(const char* kind, const std::string& message) { return {{"error", kind}, {"message", message}}; }

}  // namespace

Report group_info(const std::string& descriptor, const std::vector<std::string>& cocharacters) {
  const json j = load_descriptor(descriptor);
  const BasedRootDatum g = group_datum_from_json(j);
  const DeltaZ dz = delta_and_zG(g);
  json z{{"signs", dz.z_signs}, {"description", sign_description(dz.z_signs)}};
  try {
    const DualRealization real = DualRealization::for_lgroup(lgroup_from_json(j));
    const FieldPtr f = Field::make(1, 2);
    const Matrix m = real.z_G(f);
    z["matrix"] = to_json(m);
    z["description"] = sign_description(m);
  } catch (const UnsupportedError&) {
    // No faithful matrix realization of the dual group: signs only.
  }
  std::vector<IntVec> mus;
  for (const auto& text : cocharacters) mus.push_back(parse_int_list(text));
  if (mus.empty()) {
    mus.push_back(IntVec(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) {
      IntVec e(g.rank(), 0);
      e[i] = 1;
      mus.push_back(e);
    }
  }
  json table = json::array();
  for (const auto& mu : mus) {
    if (mu.size() != g.rank()) throw PreconditionError("cocharacter of length " + std::to_string(mu.size()) +
                                                       " for a datum of rank " + std::to_string(g.rank()));
    const long d = d_G(g, mu);
    const int value = evaluate_at_signs(mu, dz.z_signs);
    table.push_back({{"mu", mu},
                     {"dominant", g.dominant_cocharacter(mu)},
                     {"d_G", d},
                     {"mu_at_z_G", value},
                     {"parity_holds", value == (d % 2 == 0 ? 1 : -1)}});
  }
  json body{{"group", g.name()},
            {"rank", g.rank()},
            {"roots", g.roots().size()},
            {"two_rho", two_rho(g)},
            {"delta", dz.delta},
            {"z_G", z},
            {"weyl_group_order", weyl_group_order(g)},
            {"d_G", table}};
  return {body, kOk};
}

Report param_validate(const json& file, const ParamOptions& opt) {
  const ParamFile p = param_from_json(file, opt.field_override);
  const ValidationReport report = p.sl2 ? validate(*p.sl2) : validate(*p.wd);
  json body = to_json(report);
  body["format"] = to_string(p.format);
  return {body, report.ok() ? kOk : kPreconditionFailure};
}

Report param_convert(const json& file, const std::string& to, const std::optional<std::string>& from,
                     const ParamOptions& opt) {
  const ParamFile p = param_from_json(file, opt.field_override);
  if (from && format_from_string(*from) != p.format) {
    throw PreconditionError("--from " + *from + " but the file has format " + to_string(p.format));
  }
  const ParamFormat target = format_from_string(to);
  const FieldPtr f = p.sl2 ? p.sl2->field() : p.wd->field();
  const unsigned degree = p.sl2 ? p.sl2->degree : p.wd->degree;
  const Scalar c = chosen_c(f, degree, opt);
  json converted;
  if (target == ParamFormat::SL2) {
    if (p.sl2) {
      require_valid(*p.sl2);
      converted = to_json(*p.sl2);
    } else {
      converted = to_json(wd_to_sl2(*p.wd, c));
    }
  } else {
    const ParamData wd = p.sl2 ? sl2_to_wd(*p.sl2, c) : *p.wd;
    require_valid(wd);
    converted = to_json(wd, target);
  }
  return {{{"from", to_string(p.format)}, {"to", to}, {"c", c.to_string()}, {"param", converted}}, kOk};
}

Report param_equiv(const json& a, const json& b, const ParamOptions& opt) {
  const ParamFile pa = param_from_json(a, opt.field_override);
  const ParamFile pb = param_from_json(b, opt.field_override);
  if (pa.sl2 && pb.sl2) return equiv_report(equiv(*pa.sl2, *pb.sl2));
  return equiv_report(equiv(as_wd(pa, opt), as_wd(pb, opt)));
}

Report param_twist(const json& file, const std::string& twist, const ParamOptions& opt) {
  const ParamData p = as_wd(param_from_json(file, opt.field_override), opt);
  require_valid(p);
  const Scalar c = chosen_c(p.field(), p.degree, opt);
  if (twist == "bh") return {{{"twist", twist}, {"c", c.to_string()}, {"param", to_json(bh_twist(p, c))}}, kOk};
  if (twist == "omega-zg") return {{{"twist", twist}, {"param", to_json(omega_zG_twist(p))}}, kOk};
  if (twist == "c-embed") return {{{"twist", twist}, {"c", c.to_string()}, {"cparam", cparam_json(to_cparam(p, c))}}, kOk};
  if (twist == "tannakian") {
    Report r = tannakian_report(p, opt);
    r.body["twist"] = twist;
    return r;
  }
  throw ParseError("unknown twist '" + twist + "' (expected bh, c-embed, omega-zg or tannakian)", 0);
}

Report param_tannakian(const json& file, const ParamOptions& opt) {
  return tannakian_report(as_wd(param_from_json(file, opt.field_override), opt), opt);
}

Report param_centralizer(const json& file, const ParamOptions& opt) {
  const ParamData p = as_wd(param_from_json(file, opt.field_override), opt);
  require_valid(p);
  json basis = json::array();
  const auto b = centralizer_basis(p);
  for (const auto& m : b) basis.push_back(to_json(m));
  return {{{"dimension", b.size()}, {"basis", basis}}, kOk};
}

Report param_restrict(const json& file, unsigned degree, const ParamOptions& opt) {
  const ParamData p = as_wd(param_from_json(file, opt.field_override), opt);
  require_valid(p);
  const ParamData r = restrict_unramified(p, degree);
  return {{{"degree", degree}, {"valid", validate(r).ok()}, {"param", to_json(r)}}, kOk};
}

Report demo(const std::string& name, std::uint64_t seed) {
  if (name == "pgl2-obstruction") return demo_pgl2(seed);
  if (name == "iota-independence") return demo_iota(seed);
  if (name == "gln-corollary") return demo_gln(seed);
  throw ParseError("unknown demo '" + name + "'", 0);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with local Langlands parameters, L-groups and C-groups", "lcalc"};
  app.require_subcommand(1);

  std::string out_path;
  std::string field_flag;
  std::string c_text;
  std::string rep;
  app.add_option("--out", out_path, "Write the JSON report to this path");

  auto add_param_flags = [&](CLI::App* sub) {
    sub->add_option("--field", field_flag, "Field override N,q");
    sub->add_option("--c", c_text, "Square root of q to use (scalar grammar)");
    sub->add_option("--out", out_path, "Write the JSON report to this path");
  };

  auto* group = app.add_subcommand("group", "Root datum invariants");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "2rho, delta_G, z_G, Weyl order and d_G");
  std::string descriptor;
  std::vector<std::string> mus;
  info->add_option("descriptor", descriptor, "GL(n), SL(n), PGL(n), Torus(r), JSON text or a .json file")->required();
  info->add_option("--mu", mus, "Cocharacter as a comma-separated list (repeatable)");
  info->add_option("--out", out_path, "Write the JSON report to this path");

  auto* param = app.add_subcommand("param", "Operations on parameter files");
  param->require_subcommand(1);
  std::vector<std::string> files;
  std::string to;
  std::string from;
  std::string twist;
  unsigned degree = 1;

  auto* validate_cmd = param->add_subcommand("validate", "Check the defining conditions");
  validate_cmd->add_option("file", files)->required()->expected(1);
  auto* convert_cmd = param->add_subcommand("convert", "Convert between wd, ladic and sl2 formats");
  convert_cmd->add_option("file", files)->required()->expected(1);
  convert_cmd->add_option("--to", to)->required();
  convert_cmd->add_option("--from", from);
  auto* equiv_cmd = param->add_subcommand("equiv", "Dual-group conjugacy of two parameters");
  equiv_cmd->add_option("files", files)->required()->expected(2);
  auto* twist_cmd = param->add_subcommand("twist", "Apply bh, c-embed, omega-zg or tannakian");
  twist_cmd->add_option("file", files)->required()->expected(1);
  twist_cmd->add_option("--twist", twist)->required();
  twist_cmd->add_option("--rep", rep);
  auto* tannakian_cmd = param->add_subcommand("tannakian", "F_{phi,c}(r) with identity checks");
  tannakian_cmd->add_option("file", files)->required()->expected(1);
  tannakian_cmd->add_option("--rep", rep)->required();
  auto* centralizer_cmd = param->add_subcommand("centralizer", "Basis of the centralizer algebra");
  centralizer_cmd->add_option("file", files)->required()->expected(1);
  auto* restrict_cmd = param->add_subcommand("restrict", "Restriction to the unramified extension of degree f");
  restrict_cmd->add_option("file", files)->required()->expected(1);
  restrict_cmd->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
  for (auto* sub : {validate_cmd, convert_cmd, equiv_cmd, twist_cmd, tannakian_cmd, centralizer_cmd, restrict_cmd}) {
    add_param_flags(sub);
  }

  auto* demo_cmd = app.add_subcommand("demo", "pgl2-obstruction, iota-independence or gln-corollary");
  std::string demo_name;
  std::uint64_t seed = kDefaultSeed;
  demo_cmd->add_option("name", demo_name)->required();
  demo_cmd->add_option("--seed", seed, "Seed for the generated corpus (recorded in the report)");
  demo_cmd->add_option("--out", out_path, "Write the JSON report to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump(2) << "\n";
    return kParseFailure;
  }

  try {
    ParamOptions opt;
    if (!field_flag.empty()) opt.field_override = field_from_flag(field_flag);
    if (!rep.empty()) opt.rep = rep;
    if (!c_text.empty()) opt.c = c_text;
    Report report;
    if (*info) {
      report = group_info(descriptor, mus);
    } else if (*validate_cmd) {
      report = param_validate(read_json_file(files[0]), opt);
    } else if (*convert_cmd) {
      report = param_convert(read_json_file(files[0]), to, from.empty() ? std::nullopt : std::optional(from), opt);
    } else if (*equiv_cmd) {
      report = param_equiv(read_json_file(files[0]), read_json_file(files[1]), opt);
    } else if (*twist_cmd) {
      report = param_twist(read_json_file(files[0]), twist, opt);
    } else if (*tannakian_cmd) {
      report = param_tannakian(read_json_file(files[0]), opt);
    } else if (*centralizer_cmd) {
      report = param_centralizer(read_json_file(files[0]), opt);
    } else if (*restrict_cmd) {
      report = param_restrict(read_json_file(files[0]), degree, opt);
    } else {
      report = demo(demo_name, seed);
    }
    emit(report, out_path, out);
    return report.exit_code;
  } catch (const ParseError& e) {
    json j = error_json("parse", e.what());
    j["position"] = e.position();
    err << j.dump(2) << "\n";
    return kParseFailure;
  } catch (const PreconditionError& e) {
    err << error_json("precondition", e.what()).dump(2) << "\n";
  } catch (const UnsupportedError& e) {
    err << error_json("unsupported", e.what()).dump(2) << "\n";
  } catch (const VerificationError& e) {
    err << error_json("verification", e.what()).dump(2) << "\n";
  } catch (const Error& e) {
    err << error_json("error", e.what()).dump(2) << "\n";
  }
  return kPreconditionFailure;
}

}  // namespace lcalc::cli
