#pragma once

// Command-line front end: `table`, `verify` and `identities`.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 capacity exceeded. Rationals are always rendered as "p/q" strings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radnorm/constants.hpp"
#include "radnorm/sample_point.hpp"

namespace radnorm::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kCapacity = 3 };

enum class Format { json, csv, plain };
Format parse_format(const std::string& name);

struct IntRange {
  int lo = 0;
  int hi = 0;
  /// "a..b" or a single integer "a".
  static IntRange parse(const std::string& text);
  int size() const { return hi - lo + 1; }
};

inline constexpr int kMaxTableDimension = 10000;
inline constexpr int kMaxTableOrder = 200;
inline constexpr long kMaxTableRows = 100000;

struct TableRequest {
  enum class Norm { gamma, ell };
  Norm norm = Norm::gamma;
  IntRange dimensions{1, 1};
  IntRange orders{0, 0};
  std::vector<Rational> s_values;
  std::vector<Method> methods{Method::closed};
  Format format = Format::plain;
  bool decimal = false;
  bool force_oracle = false;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for malformed requests and CapacityError
  /// when the grid or a requested method exceeds its cap.
  void validate() const;
};

struct TableCell {
  Method method;
  std::optional<Rational> value;  // nullopt: not applicable or skipped
  bool skipped = false;
};

struct TableRow {
  int dimension = 0;
  int order = 0;
  std::optional<Rational> s;
  std::vector<TableCell> cells;  // in fixed order closed, recursive, special, oracle
  bool consistent = true;        // all present values agree
};

std::vector<TableRow> compute_table(const TableRequest& request);

struct VerifyRequest {
  int dimension = 1;
  int order = 1;
  NormKind kind = NormKind::logarithm();
  std::vector<SamplePoint> points;  // empty: deterministic defaults plus random ones
  int random_points = 2;
  std::uint64_t seed = 0;
  Format format = Format::plain;
  bool weighted = true;
  bool timing = false;
};

struct IdentitiesRequest {
  int max_m = 10;
  int max_dimension = 3;
  int max_order = 4;
  int trials = 20;
  std::uint64_t seed = 0;
  Format format = Format::plain;
};

struct IdentityResult {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  long cases = 0;
  long failures = 0;
  std::string detail;
};

std::vector<IdentityResult> run_identities(const IdentitiesRequest& request);

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

CommandResult cmd_table(const TableRequest& request);
CommandResult cmd_verify(const VerifyRequest& request);
CommandResult cmd_identities(const IdentitiesRequest& request);

/// Parses argv-style arguments (without the program name) and runs the verb.
/// Output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radnorm::cli
