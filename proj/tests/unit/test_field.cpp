#include <gtest/gtest.h>

#include <cmath>

#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/number_theory.hpp"

using namespace centra;

namespace {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
      std::uint32_t q = p;
      for (std::uint32_t m = 1; q <= 256; ++m, q *= p) {
        out.emplace_back(p, m);
      }
    }
    return out;
  }
}  // namespace

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(gf(4, 1), UsageError);
  EXPECT_THROW(gf(2, 0), UsageError);
  EXPECT_THROW(gf(2, 13), UsageError);
}

TEST(Field, BundledModuliAreIrreducible) {
  for (auto [p, m] : small_fields()) {
    auto const F = gf(p, m);
    ASSERT_EQ(F.irreducible().size(), m + 1);
    EXPECT_TRUE(is_irreducible(F.irreducible(), p)) << p << "^" << m;
  }
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2 + 1 = (x + 1)^2
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
}

TEST(FieldProperty, AxiomsExhaustive) {
  for (auto [p, m] : small_fields()) {
    auto const  F = gf(p, m);
    auto const  q = F.size();
    ASSERT_EQ(q, static_cast<std::uint32_t>(std::pow(p, m) + 0.5));
    for (std::uint32_t a = 0; a < q; ++a) {
      ASSERT_EQ(F.add(a, 0), a);
      ASSERT_EQ(F.mul(a, 1), a);
      ASSERT_EQ(F.add(a, F.neg(a)), 0U);
      if (a != 0) {
        ASSERT_EQ(F.mul(a, F.inv(a)), 1U);
        ASSERT_EQ(F.pow(a, q - 1), 1U);
      }
      for (std::uint32_t b = 0; b < q; b += 1 + q / 40) {
        ASSERT_EQ(F.mul(a, b), F.mul_poly(a, b)) << p << "^" << m;
        ASSERT_EQ(F.add(a, b), F.add(b, a));
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 1 + q / 8) {
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        }
      }
    }
  }
}

TEST(Field, PrimitiveElementGeneratesUnits) {
  for (auto [p, m] : small_fields()) {
    auto const F = gf(p, m);
    auto const g = F.primitive_element();
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    do {
      x = F.mul(x, g);
      ++k;
    } while (x != 1);
    EXPECT_EQ(k, F.size() - 1);
  }
}

TEST(Field, PrimeFieldMatchesModularArithmetic) {
  auto const F = gf(13);
  for (std::uint32_t a = 0; a < 13; ++a) {
    for (std::uint32_t b = 0; b < 13; ++b) {
      ASSERT_EQ(F.mul(a, b), a * b % 13);
      ASSERT_EQ(F.add(a, b), (a + b) % 13);
    }
  }
  EXPECT_EQ(F.from_int(-1), 12U);
  EXPECT_EQ(F.pow(2, -1), 7U);
  EXPECT_EQ(least_primitive_root(13), 2U);
  EXPECT_EQ(least_primitive_root(7), 3U);
}

TEST(Field, DivisionByZeroThrows) {
  EXPECT_THROW(gf(5).inv(0), UsageError);
}
