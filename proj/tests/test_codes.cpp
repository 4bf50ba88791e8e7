#include <gtest/gtest.h>

#include <random>
#include <set>

#include "constaclass/codes.hpp"
#include "constaclass/constafactor.hpp"
#include "support/oracles.hpp"

using namespace constaclass;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

std::vector<ConstacyclicCode> all_codes(const FieldPtr& F, std::uint64_t n, const FieldElement& lambda) {
  return enumerate_codes(factor_binomial(F, n, lambda), n, lambda);
}

}  // namespace

TEST(Codes, CountsAndSizes) {
  auto F = make_field(2, 4);
  const auto codes = all_codes(F, 6, F->xi());
  ASSERT_EQ(codes.size(), 3U);
  EXPECT_EQ(codes[0].exponents, std::vector<std::uint64_t>{0});
  EXPECT_TRUE(codes[0].generator.is_one());
  EXPECT_EQ(codes[0].size(), BigInt(16777216));
  EXPECT_EQ(codes[1].generator, P(F, "X^3 + xi^8"));
  EXPECT_EQ(codes[1].dimension, 3U);
  EXPECT_EQ(codes[1].size(), BigInt(4096));
  EXPECT_EQ(codes[2].dimension, 0U);
  EXPECT_EQ(codes[2].size(), BigInt(1));

  EXPECT_EQ(code_count(factor_binomial(F, 6, F->one())), 27U);
  EXPECT_EQ(all_codes(F, 6, F->one()).size(), 27U);

  auto G = make_field(5, 2);
  const auto f175 = factor_binomial(G, 175, G->xi());
  EXPECT_EQ(code_count(f175), 17576U);
  const auto c175 = enumerate_codes(f175, 175, G->xi());
  ASSERT_EQ(c175.size(), 17576U);
  for (const auto& c : c175) {
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      deg += c.exponents[i] * static_cast<std::uint64_t>(f175.factors[i].factor.degree());
    }
    ASSERT_EQ(c.dimension, 175 - deg);
  }
}

TEST(Codes, EnumerationOrderAndDistinctness) {
  auto F = make_field(3, 2);
  const auto lambda = F->xi_pow(2);
  const auto fact = factor_binomial(F, 12, lambda);
  const auto codes = enumerate_codes(fact, 12, lambda);
  ASSERT_EQ(codes.size(), code_count(fact));
  std::set<std::vector<Rep>> gens;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) ASSERT_LT(codes[i - 1].exponents, codes[i].exponents);
    ASSERT_TRUE(codes[i].generator.is_monic());
    ASSERT_TRUE(divides(codes[i].generator, Poly::binomial(F, 12, lambda)));
    gens.insert(codes[i].generator.reps());
  }
  EXPECT_EQ(gens.size(), codes.size());
}

TEST(Codes, ContainmentLattice) {
  auto F = make_field(2, 2);
  const auto lambda = F->one();
  const auto codes = all_codes(F, 12, lambda);
  for (const auto& a : codes) {
    for (const auto& b : codes) {
      bool below = true;
      for (std::size_t i = 0; i < a.exponents.size(); ++i) below = below && a.exponents[i] >= b.exponents[i];
      // <g_a> is inside <g_b> exactly when g_b divides g_a.
      ASSERT_EQ(divides(b.generator, a.generator), below);
    }
  }
}

TEST(Codes, FromGenerator) {
  auto F = make_field(2, 4);
  const auto c = code_from_generator(6, F->xi(), P(F, "X^3 + xi^8"));
  EXPECT_EQ(c.dimension, 3U);
  EXPECT_TRUE(c.exponents.empty());
  EXPECT_THROW(code_from_generator(6, F->xi(), P(F, "X^3 + xi^7")), Error);
  EXPECT_THROW(code_from_generator(6, F->xi(), P(F, "xi*X^3 + xi^9")), Error);
}

TEST(WeightEnumerator, ZeroAndFullCodes) {
  auto F = make_field(3, 1);
  const auto codes = all_codes(F, 4, F->from_int(2));
  const auto full = weight_enumerator(codes.front());
  EXPECT_EQ(full.counts, (std::vector<std::uint64_t>{1, 8, 24, 32, 16}));
  EXPECT_EQ(full.minimum_distance(), 1U);
  const auto zero = weight_enumerator(codes.back());
  EXPECT_EQ(zero.counts, (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
  EXPECT_FALSE(zero.minimum_distance().has_value());
  EXPECT_EQ(zero.total(), 1U);
}

TEST(WeightEnumerator, MatchesExplicitExpansion) {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 2}, {3, 1}, {5, 1}, {2, 3}, {3, 2}, {7, 1}}) {
    auto F = make_field(p, m);
    for (std::uint64_t n = 2; n <= 9; ++n) {
      const auto lambda = oracle::random_nonzero(*F, rng);
      for (const auto& code : all_codes(F, n, lambda)) {
        if (code.size() > 20000) continue;
        const auto enumerator = weight_enumerator(code);
        ASSERT_EQ(enumerator.counts, oracle::weight_counts(code)) << F->name() << " n=" << n;
        ASSERT_EQ(BigInt(enumerator.total()), code.size());
      }
    }
  }
}

TEST(WeightEnumerator, ExampleCode) {
  auto F = make_field(2, 4);
  const auto c = code_from_generator(6, F->xi(), P(F, "X^3 + xi^8"));
  const auto e = weight_enumerator(c);
  // Words m(X)(X^3 + xi^8) with deg m < 3 pair each coefficient with a scaled copy.
  EXPECT_EQ(e.counts, (std::vector<std::uint64_t>{1, 0, 45, 0, 675, 0, 3375}));
  EXPECT_EQ(e.minimum_distance(), 2U);
}

TEST(WeightEnumerator, SizeCap) {
  auto F = make_field(2, 4);
  const auto codes = all_codes(F, 6, F->xi());
  try {
    weight_enumerator(codes.front(), 1U << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCodeTooLarge);
  }
  EXPECT_NO_THROW(weight_enumerator(codes[1], 4096));
  EXPECT_THROW(weight_enumerator(codes[1], 4095), Error);
}

TEST(Codes, TooManyCodes) {
  auto G = make_field(5, 2);
  const auto f = factor_binomial(G, 175, G->xi());
  try {
    enumerate_codes(f, 175, G->xi(), 17575);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyCodes);
  }
  EXPECT_THROW(enumerate_codes(f, 174, G->xi()), Error);
}

TEST(ImageCode, PreservesWeightEnumerator) {
  for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}}) {
    auto F = make_field(p, m);
    for (std::uint64_t n = 2; n <= 8; ++n) {
      for (const auto& cls : classes(F, n)) {
        const auto fact = factor_binomial(F, n, cls.representative);
        const auto source = enumerate_codes(fact, n, cls.representative);
        for (const auto& lambda : cls.members) {
          const auto w = witness(*F, n, lambda, cls.representative);
          if (w.k != 1) continue;
          for (const auto& code : source) {
            if (code.size() > 5000) continue;
            const auto image = image_code(w, code);
            ASSERT_TRUE(divides(image.generator, Poly::binomial(F, n, lambda)));
            ASSERT_EQ(weight_enumerator(image).counts, weight_enumerator(code).counts);
          }
        }
      }
    }
  }
}

TEST(ImageCode, HandlesWitnessExponent) {
  auto F = make_field(2, 4);
  const auto w = witness(*F, 6, F->xi(), F->xi_pow(5));
  ASSERT_EQ(w.k, 5U);
  const auto muk = F->xi_pow(25);
  for (const auto& code : all_codes(F, 6, muk)) {
    const auto image = image_code(w, code);
    EXPECT_TRUE(divides(image.generator, Poly::binomial(F, 6, F->xi())));
    if (code.size() <= 4096) EXPECT_EQ(weight_enumerator(image).counts, weight_enumerator(code).counts);
  }
  const auto wrong = all_codes(F, 6, F->xi_pow(5));
  try {
    image_code(w, wrong[1]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWitnessMismatch);
  }
  IsometryWitness other = w;
  other.n = 5;
  EXPECT_THROW(image_code(other, all_codes(F, 6, muk)[1]), Error);
}
