#pragma once

// Batch certification: runs named checks over a range of n (and p) and
// collects pass/fail records with failure witnesses.

#include "oddquad/exact_matrix.hpp"
#include "oddquad/ring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oddquad {

inline constexpr const char* kToolName = "oddquad";
inline constexpr const char* kToolVersion = "1.0.0";

/// Witness payloads longer than this are cut and suffixed with kTruncationMarker.
inline constexpr std::size_t kWitnessCap = 64 * 1024;
inline constexpr const char* kTruncationMarker = "...[truncated]";

/// Serialized A(tau_1) for n = 2 in the row format of serialize_matrix.
inline constexpr const char* kGoldenA1N2 =
    R"([["0","0","1","0"],["1","0","0","1"],["0","2","0","0"],["0","0","1","0"]])";

enum class CheckStatus { pass, fail };

struct CheckResult {
  std::string check_id;
  int n = 0;
  /// -1 for checks that run once per n.
  int p = -1;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  /// Serialized JSON payload; present iff status == fail.
  std::optional<std::string> witness;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CheckCounts {
  int pass = 0;
  int fail = 0;

  friend bool operator==(const CheckCounts&, const CheckCounts&) = default;
};

struct VerificationReport {
  std::string tool_version;
  int n_min = 0;
  int n_max = 0;
  /// Sorted by (check_id, n, p).
  std::vector<CheckResult> results;
  std::map<std::string, CheckCounts> summary;

  bool all_pass() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SuiteOptions {
  /// Worker threads; 0 means one.
  unsigned jobs = 1;
  /// Only changed by mutation tests.
  ChevalleyConvention convention = ChevalleyConvention::corrected;
};

/// Check ids in the order they are documented.
const std::vector<std::string>& known_check_ids();

/// Largest n for which charpoly_oracle runs (the cofactor expansion is capped at dimension 10).
inline constexpr int kOracleMaxN = 5;

/// Runs every requested check for every admissible (n, p) in [n_min, n_max].
/// Throws std::invalid_argument on an unknown check id or an invalid range.
/// An empty `checks` set means all checks.
VerificationReport run_suite(int n_min, int n_max, const std::set<std::string>& checks,
                             const SuiteOptions& options = {});

/// A(tau_p) rebuilt from the ring axioms alone: solve tau_p = sum_k c_k tau_1^k * tau_0
/// in the cyclic basis {A(tau_1)^k e_0} and return sum_k c_k A(tau_1)^k.
/// Throws std::domain_error if e_0 is not a cyclic vector.
ExactMatrix operator_from_unit_column(const QuadricContext& ctx, SchubertIndex p,
                                      ChevalleyConvention convention = ChevalleyConvention::corrected);

struct SimplicityRow {
  int n = 0;
  int p = 0;
  int gcd = 0;
  /// From the exact characteristic polynomial.
  bool simple = false;
  /// gcd(p, 2n-1) == 1 for p <= 2n-2, false for p = 2n-1.
  bool predicted = false;

  bool agrees() const { return simple == predicted; }
};

std::vector<SimplicityRow> simplicity_table(int n_min, int n_max);

/// JSON array of rows of ExactScalar strings.
std::string serialize_matrix(const ExactMatrix& m);

/// Truncates to kWitnessCap bytes including the marker.
std::string cap_witness(std::string payload);

}  // namespace oddquad
