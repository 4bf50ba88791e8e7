#include <gtest/gtest.h>

#include <set>

#include "constaclass/cyclotomic.hpp"
#include "constaclass/ntheory.hpp"
#include "support/oracles.hpp"

using namespace constaclass;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

std::vector<std::vector<std::uint64_t>> members(const std::vector<CyclotomicCoset>& cs) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& c : cs) out.push_back(c.members);
  return out;
}

}  // namespace

TEST(Cyclotomic, CosetExamples) {
  auto F = make_field(2, 4);
  auto G = make_field(5, 2);
  using V = std::vector<std::vector<std::uint64_t>>;
  EXPECT_EQ(members(cosets(*F, 3)), (V{{0}, {1}, {2}}));
  EXPECT_EQ(members(cosets(*G, 1)), (V{{0}}));
  EXPECT_EQ(members(cosets(*G, 7)), (V{{0}, {1, 2, 4}, {3, 5, 6}}));
  try {
    cosets(*G, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCoprimeToCharacteristic);
  }
}

TEST(Cyclotomic, CosetsPartitionResidues) {
  for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}}) {
    auto F = make_field(p, m);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      if (n % F->p() == 0) continue;
      std::vector<int> hits(n, 0);
      std::uint64_t total = 0;
      std::uint64_t last_rep = 0;
      bool first = true;
      for (const auto& c : cosets(*F, n)) {
        EXPECT_EQ(c.representative, c.members.front());
        if (!first) EXPECT_GT(c.representative, last_rep);
        first = false;
        last_rep = c.representative;
        const std::set<std::uint64_t> set(c.members.begin(), c.members.end());
        for (auto r : c.members) {
          ++hits[r];
          EXPECT_TRUE(set.count(r * F->q() % n));
        }
        total += c.members.size();
      }
      EXPECT_EQ(total, n);
      for (int h : hits) EXPECT_EQ(h, 1);
    }
  }
}

TEST(Cyclotomic, MinimalPolynomials) {
  auto F = make_field(2, 4);
  const auto E = cached_extension(F, 1);
  const auto eta = E->root_of_unity(3);
  const auto cs = cosets(*F, 3);
  EXPECT_EQ(minimal_polynomial(*E, eta, cs[0]), P(F, "X-1"));
  EXPECT_EQ(minimal_polynomial(*E, eta, cs[1]), P(F, "X-xi^5"));

  auto G = make_field(5, 2);
  const auto E3 = cached_extension(G, 3);
  const auto eta7 = E3->root_of_unity(7);
  const auto cs7 = cosets(*G, 7);
  const Poly g = P(G, "X^3+xi*X^2+xi^17*X-1");
  const Poly h = P(G, "X^3+xi^5*X^2+xi^13*X-1");
  const Poly m1 = minimal_polynomial(*E3, eta7, cs7[1]);
  const Poly m3 = minimal_polynomial(*E3, eta7, cs7[2]);
  EXPECT_TRUE((m1 == g && m3 == h) || (m1 == h && m3 == g));
  EXPECT_TRUE(is_irreducible(m1));

  // Not a 7th root of unity: the product leaves the base field.
  try {
    minimal_polynomial(*E3, E3->generator(), cs7[1]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoefficientNotInBaseField);
  }
}

TEST(Cyclotomic, FactorExamples) {
  auto F = make_field(2, 4);
  const auto f6 = factor_xn_minus_one(F, 6);
  ASSERT_EQ(f6.factors.size(), 3U);
  EXPECT_EQ(f6.factors[0].factor, P(F, "X-1"));
  EXPECT_EQ(f6.factors[1].factor, P(F, "X-xi^5"));
  EXPECT_EQ(f6.factors[2].factor, P(F, "X-xi^10"));
  for (const auto& fp : f6.factors) EXPECT_EQ(fp.multiplicity, 2U);
  EXPECT_EQ(f6.provenance, Provenance::kCyclotomicCaseI);

  const auto f1 = factor_xn_minus_one(F, 1);
  ASSERT_EQ(f1.factors.size(), 1U);
  EXPECT_EQ(f1.factors[0].factor, P(F, "X-1"));

  auto G = make_field(5, 2);
  const auto f175 = factor_xn_minus_one(G, 175);
  ASSERT_EQ(f175.factors.size(), 3U);
  EXPECT_EQ(f175.factors[0].factor, P(G, "X-1"));
  EXPECT_EQ(f175.factors[1].factor, P(G, "X^3+xi*X^2+xi^17*X-1"));
  EXPECT_EQ(f175.factors[2].factor, P(G, "X^3+xi^5*X^2+xi^13*X-1"));
  for (const auto& fp : f175.factors) EXPECT_EQ(fp.multiplicity, 25U);
  EXPECT_EQ(f175.expand(), Poly::binomial(G, 175, G->one()));
}

TEST(Cyclotomic, AgreesWithOracle) {
  for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}}) {
    auto F = make_field(p, m);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      const auto f = factor_xn_minus_one(F, n);
      const Poly target = Poly::binomial(F, n, F->one());
      ASSERT_EQ(f.expand(), target) << F->name() << " n=" << n;
      ASSERT_TRUE(same_factorization(f, factorize(target))) << F->name() << " n=" << n;
      const auto dec = nt::decompose_length(n, F->p());
      const auto cs = cosets(*F, dec.n_prime);
      ASSERT_EQ(f.factors.size(), cs.size());
      std::multiset<std::size_t> degrees, sizes;
      for (const auto& fp : f.factors) {
        degrees.insert(static_cast<std::size_t>(fp.factor.degree()));
        ASSERT_TRUE(is_irreducible(fp.factor));
      }
      for (const auto& c : cs) sizes.insert(c.members.size());
      ASSERT_EQ(degrees, sizes);
      ASSERT_EQ(f.degree(), n);
    }
  }
}
