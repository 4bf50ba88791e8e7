#pragma once

// Oracle-equivalence sweep: for every n = l^t p^s up to a bound and every
// lambda, the closed-form factorization must re-multiply to X^n - lambda and
// agree with the generic factorizer.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace constaclass::cli {

struct SelftestFieldResult {
  std::string field;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  double seconds = 0;
};

struct SelftestReport {
  std::vector<SelftestFieldResult> fields;
  /// Human-readable description of each mismatch.
  std::vector<std::string> failures;

  std::uint64_t cases() const;
  std::uint64_t mismatches() const;
};

/// GF(4), GF(8), GF(9), GF(16), GF(25), GF(27), GF(49), GF(81) as (p, m).
const std::vector<std::pair<std::uint64_t, unsigned>>& default_selftest_fields();

SelftestReport run_selftest(const std::vector<std::pair<std::uint64_t, unsigned>>& fields,
                            std::uint64_t max_n, std::uint64_t seed);

}  // namespace constaclass::cli
