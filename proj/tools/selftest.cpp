#include "selftest.hpp"

#include <chrono>

#include "constaclass/constafactor.hpp"
#include "constaclass/ntheory.hpp"

namespace constaclass::cli {

std::uint64_t SelftestReport::cases() const {
  std::uint64_t out = 0;
  for (const auto& f : fields) out += f.cases;
  return out;
}

std::uint64_t SelftestReport::mismatches() const {
  std::uint64_t out = 0;
  for (const auto& f : fields) out += f.mismatches;
  return out;
}

const std::vector<std::pair<std::uint64_t, unsigned>>& default_selftest_fields() {
  static const std::vector<std::pair<std::uint64_t, unsigned>> fields{
      {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4},
  };
  return fields;
}

SelftestReport run_selftest(const std::vector<std::pair<std::uint64_t, unsigned>>& fields,
                            std::uint64_t max_n, std::uint64_t seed) {
  SelftestReport report;
  for (const auto& [p, m] : fields) {
    const auto start = std::chrono::steady_clock::now();
    const FieldPtr F = make_field(p, m);
    SelftestFieldResult result;
    result.field = F->name();
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      if (!nt::ell_power_shape(n, F->p())) continue;
      for (std::uint64_t x = 0; x < F->group_order(); ++x) {
        const FieldElement lambda = F->xi_pow(static_cast<std::int64_t>(x));
        const Poly target = Poly::binomial(F, n, lambda);
        const Factorization closed = factor_binomial(F, n, lambda, seed);
        const Factorization oracle = factorize(target, seed);
        ++result.cases;
        if (!(closed.expand() == target) || !same_factorization(closed, oracle)) {
          ++result.mismatches;
          report.failures.push_back(F->name() + " n=" + std::to_string(n) + " lambda=" + format_element(lambda));
        }
      }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.fields.push_back(std::move(result));
  }
  return report;
}

}  // namespace constaclass::cli
