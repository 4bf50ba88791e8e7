#include <gtest/gtest.h>

#include "constaclass/extension.hpp"
#include "constaclass/ntheory.hpp"
#include "support/oracles.hpp"

using namespace constaclass;

TEST(Extension, IdentityAndSubfieldCriterion) {
  auto F = make_field(2, 4);
  const auto E1 = extend_field(F, 1);
  EXPECT_EQ(E1.order(), 16);
  for (const auto& x : oracle::elements(*F)) {
    const auto z = E1.embed(x);
    EXPECT_TRUE(E1.in_base(z));
    EXPECT_EQ(E1.restrict(z), x);
  }

  const auto E2 = extend_field(F, 2);
  EXPECT_EQ(E2.order(), 256);
  std::size_t fixed = 0;
  for (int i = 0; i < 256; ++i) {
    const auto z = E2.element_at(i);
    const bool in_image = E2.in_base(z);
    EXPECT_EQ(E2.fixed_by_frobenius(z), in_image) << i;
    fixed += in_image ? 1 : 0;
  }
  EXPECT_EQ(fixed, 16U);
}

TEST(Extension, EmbedIsHomomorphism) {
  auto F = make_field(5, 2);
  const auto E = extend_field(F, 3);
  EXPECT_EQ(E.order(), 15625);
  const auto all = oracle::elements(*F);
  for (const auto& x : all) {
    EXPECT_EQ(E.pow(E.embed(x), 25), E.embed(x));
    for (std::size_t j = 0; j < all.size(); j += 3) {
      const auto& y = all[j];
      EXPECT_EQ(E.add(E.embed(x), E.embed(y)), E.embed(x + y));
      EXPECT_EQ(E.mul(E.embed(x), E.embed(y)), E.embed(x * y));
    }
  }
  EXPECT_EQ(E.embed(F->one()), E.one());
  ASSERT_TRUE(E.primitive_element());
  const auto g = *E.primitive_element();
  EXPECT_TRUE(E.has_order(g, BigInt(15624), nt::prime_divisors(15624)));
  EXPECT_THROW(E.restrict(E.generator()), Error);
}

TEST(Extension, RootsOfUnityWithoutPrimitiveElement) {
  // GF(27)^(52): order far beyond 64 bits, so no primitive element is stored.
  auto F = make_field(3, 3);
  const auto E = extend_field(F, 52);
  EXPECT_FALSE(E.primitive_element());
  const auto eta = E.root_of_unity(53);
  EXPECT_TRUE(E.has_order(eta, BigInt(53), {53}));
  EXPECT_THROW(extend_field(F, 400), Error);
}
