#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abca/abc_theorems.hpp"
#include "abca/system.hpp"
#include "abca/verifiers.hpp"

namespace abca::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitInconsistent = 4;

enum class Format { kJson, kCsv };

struct Options {
  std::optional<double> tol;
  std::optional<int> boundary_nodes;
  std::optional<double> alpha;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> eps;
  std::vector<double> radii;
  Format format = Format::kJson;
};

struct Result {
  int exit_code = kExitOk;
  std::string output;  // report text in the requested format
  std::string error;   // message for stderr, empty on success
};

// Thrown for anything wrong with the problem file; maps to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MasonProblem {
  std::vector<Polynomial> polynomials;  // a, b for Mason; p_0..p_n otherwise
  bool mason = true;
};

struct VerifyProblem {
  Domain domain;
  std::vector<AnalyticFunction> functions;
  std::optional<std::string> theorem;
  std::optional<double> alpha;
  QuadratureSpec quadrature;
};

// Schema validation; throws InputError naming the offending field.
MasonProblem parse_mason_problem(const nlohmann::ordered_json& j);
VerifyProblem parse_verify_problem(const nlohmann::ordered_json& j);
nlohmann::ordered_json parse_json(const std::string& text);

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const LimitTable& t);
nlohmann::ordered_json to_json(const Divisibility& d);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_csv(const LimitTable& t);

Result cmd_mason(const std::string& text, const Options& opts);
// theorem in {1, 2, prop3a, prop3b, 4}; empty means the file decides.
Result cmd_verify(const std::string& text, const std::string& theorem, const Options& opts);
// which in {example1, example2, limit, lemmas}.
Result cmd_demo(const std::string& which, const Options& opts);

// Full command line; writes the report to `out` (or --out) and messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abca::cli
