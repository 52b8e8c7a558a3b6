#include <gtest/gtest.h>

#include "tcore/identities.hpp"
#include "tcore/theta.hpp"

using namespace tcore;

TEST(Identities, RegistryHoldsAt48) {
  for (const auto& id : identity_ids()) {
    auto r = check_identity(id, 48);
    EXPECT_TRUE(r.holds) << id << " fails at q^" << r.first_discrepancy.value_or(-1) << " " << r.detail;
  }
}

TEST(Identities, FrozenExamples) {
  EXPECT_TRUE(check_identity("4.13", 60).holds);
  EXPECT_TRUE(check_identity("4.19", 48).holds);
  EXPECT_TRUE(check_identity("4.14", 60).holds);
  EXPECT_TRUE(check_identity("4.20", 40).holds);
  EXPECT_TRUE(check_identity("4.25", 36).holds);
  EXPECT_TRUE(functional_equation_check(2, 3, 40).holds);
  EXPECT_TRUE(evaluation_check("4.27", 36).holds);
  EXPECT_THROW(check_identity("9.99", 10), DomainError);
  EXPECT_THROW(check_identity("4.13", 1), DomainError);
  EXPECT_THROW(evaluation_check("4.13", 10), DomainError);
}

TEST(Identities, FunctionalPairs) {
  EXPECT_EQ(functional_pairs(1).size(), 12u);
  EXPECT_EQ(functional_pairs(2).size(), 6u);
  EXPECT_EQ(functional_pairs(3).size(), 8u);
  for (int f = 1; f <= 3; ++f) {
    for (auto [i, j] : functional_pairs(f)) EXPECT_TRUE(functional_equation_check(i, j, 36).holds) << i << "," << j;
  }
  // A pair off the list fails.
  EXPECT_FALSE(functional_equation_check(2, 4, 36).holds);
  EXPECT_THROW(functional_pairs(4), DomainError);
}

TEST(Identities, CheckerDetectsPerturbation) {
  auto lhs = eta_quotient({{{4, 4}, {1, -1}}, 0}, 30);
  auto rhs = lhs;
  rhs.add_to(17, 1);
  EXPECT_EQ(first_discrepancy(lhs, rhs, 30), 17);
}

// The tail value at z = -q^{6(1 - 2a)}: the exponent is 6a - 4. The form with
// q^{4 + 6a} differs already in the leading term.
TEST(Identities, TailClosedForm) {
  EXPECT_TRUE(check_identity("4.39v", 60).holds);
  const auto eee = eta_quotient({{{9, 2}, {12, 1}, {36, 1}}, 0}, 60);
  for (int a : {0, 1}) {
    const int sign = a == 0 ? -1 : 1;
    auto value = s_j_at(23 + 4 * a, -1, 6 * (1 - 2 * a), 40);
    EXPECT_EQ(value.valuation(), 6 * a - 4);
    EXPECT_FALSE(first_discrepancy(value, eee.scaled(sign).shift(6 * a - 4).truncated(40), 40));
    EXPECT_TRUE(first_discrepancy(value, eee.scaled(sign).shift(4 + 6 * a).truncated(40), 40).has_value());
  }
}

TEST(Identities, HigherOrders) {
  for (const auto& id : {"4.13", "4.22", "4.33", "4.39", "4.29", "4.36", "4.39e"}) {
    EXPECT_TRUE(check_identity(id, 120).holds) << id;
  }
}
