#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcalc_cli/json_io.hpp"

namespace lcalc::cli {

enum ExitCode : int { kOk = 0, kParseFailure = 1, kPreconditionFailure = 2, kInconclusive = 3 };

struct Report {
  json body;
  int exit_code = kOk;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ParamOptions {
  FieldPtr field_override;
  std::optional<std::string> rep;
  std::optional<std::string> c;  // scalar text for c; the field's c by default
};

Report group_info(const std::string& descriptor, const std::vector<std::string>& cocharacters);

Report param_validate(const json& file, const ParamOptions& opt);
Report param_convert(const json& file, const std::string& to, const std::optional<std::string>& from,
                     const ParamOptions& opt);
Report param_equiv(const json& a, const json& b, const ParamOptions& opt);
Report param_twist(const json& file, const std::string& twist, const ParamOptions& opt);
Report param_tannakian(const json& file, const ParamOptions& opt);
Report param_centralizer(const json& file, const ParamOptions& opt);
Report param_restrict(const json& file, unsigned degree, const ParamOptions& opt);

Report demo(const std::string& name, std::uint64_t seed);

/// Full command line (argv[0] excluded). Errors are reported on `err` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcalc::cli
