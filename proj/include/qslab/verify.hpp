#pragma once

// Verification suites: seeded property checks over every module, collected
// into records that serialize to a stable JSON report.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qslab/bergman.hpp"
#include "qslab/errors.hpp"

namespace qslab {

/// Invalid suite configuration (maps to exit code 2 on the command line).
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::size_t kMaxSuiteDimension = 32;

struct SuiteConfig {
  std::string suite = "all";
  std::size_t n = 8;
  std::size_t N = 24;
  std::vector<double> alphas{0.0, 0.5, 1.0, 2.0};
  std::vector<double> ps{1.0, 2.0, 3.0};
  std::uint64_t seed = 7;
  double tol_scale = 1.0;  // multiplies every bound
  QuadratureResolution quad;
  std::string out;  // empty: stdout
};

/// quat, qmatrix, spectrum, trace, schatten, slice, bergman, all
const std::vector<std::string>& suite_names();

/// Throws ConfigError naming the offending field.
void validate(const SuiteConfig& c);

struct CheckRecord {
  std::string id;
  std::string anchor;  // statement being instantiated
  std::string inputs;  // human-readable parameters
  std::string inputs_digest;
  std::size_t samples = 0;
  double measured = 0.0;  // worst case over the samples
  double bound = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> extra;
  std::string error;  // set when the check threw
  double wall_ms = 0.0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> records;  // sorted by id
  double total_ms = 0.0;

  bool passed() const;
  std::vector<const CheckRecord*> failures() const;
};

/// Runs the checks of c.suite. Deterministic given the config; check
/// failures are recorded, not thrown. Throws ConfigError for a bad config.
SuiteReport run_suite(const SuiteConfig& c);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// JSON text with keys in a fixed order. Wall times go to a trailing
/// "timing" object, left out when include_timing is false; the digest in
/// meta covers config and records only.
std::string report_json(const SuiteReport& r, bool include_timing = true);

/// "RxA" with R, A >= 1. Throws ConfigError.
QuadratureResolution parse_quad(const std::string& s);
/// Comma-separated reals; "inf" allowed when allow_inf. Throws ConfigError.
std::vector<double> parse_real_list(const std::string& s, bool allow_inf);

}  // namespace qslab
