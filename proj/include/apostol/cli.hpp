#ifndef APOSTOL_CLI_HPP
#define APOSTOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apostol/report.hpp"

namespace apostol {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json to_json(const Residual& r);
nlohmann::ordered_json to_json(const IdentityReport& r);
nlohmann::ordered_json to_json(const Poly& p);

/// Inverse of to_json(const Poly&).
Poly poly_from_json(const nlohmann::ordered_json& j);

}  // namespace apostol

#endif
