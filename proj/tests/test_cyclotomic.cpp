#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tcore/cyclotomic.hpp"

using namespace tcore;

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CycInt w(int s, int k) { return CycInt::root_power(s, k); }
CycInt n(int s, std::int64_t v) { return CycInt::integer(s, v); }

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(7), (IntPoly{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (IntPoly{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
}

TEST(Cyclotomic, DivisorProductIsXsMinusOne) {
  for (int s = 1; s <= 64; ++s) {
    IntPoly prod{1};
    for (int d = 1; d <= s; ++d) {
      if (s % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    IntPoly expected(static_cast<std::size_t>(s) + 1, 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(s)] = 1;
    ASSERT_EQ(prod, expected) << "s=" << s;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(s).size()) - 1, euler_phi(s));
  }
}

TEST(Cyclotomic, RootIsAZeroOfPhi) {
  for (int s = 1; s <= 64; ++s) {
    CycInt acc(s);
    const auto& phi = cyclotomic_polynomial(s);
    for (std::size_t k = 0; k < phi.size(); ++k) acc += n(s, phi[k]) * w(s, static_cast<int>(k));
    ASSERT_TRUE(acc.is_zero()) << "s=" << s;
  }
}

TEST(Cyclotomic, RingExamples) {
  EXPECT_TRUE((n(3, 1) + w(3, 1) + w(3, 2)).is_zero());
  EXPECT_EQ(w(4, 2), n(4, -1));
  EXPECT_EQ((n(3, 1) - w(3, 1)) * (n(3, 1) - w(3, 2)), n(3, 3));
  EXPECT_EQ(w(5, -1), w(5, 4));
  for (int k = -7; k <= 7; ++k) {
    for (int m = -7; m <= 7; ++m) EXPECT_EQ(w(6, k) * w(6, m), w(6, k + m));
  }
  EXPECT_THROW(w(3, 1) + w(4, 1), DomainError);
}

TEST(Cyclotomic, MatchesComplexEvaluation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int s = 2; s <= 12; ++s) {
    for (int trial = 0; trial < 20; ++trial) {
      IntPoly a(static_cast<std::size_t>(s)), b(static_cast<std::size_t>(s));
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      auto x = CycInt::from_poly(s, a), y = CycInt::from_poly(s, b);
      auto expect = oracle::to_complex(x) * oracle::to_complex(y);
      EXPECT_LT(std::abs(oracle::to_complex(x * y) - expect), 1e-9);
      EXPECT_LT(std::abs(oracle::to_complex(x.conj()) - std::conj(oracle::to_complex(x))), 1e-9);
      if (!y.is_zero()) {
        EXPECT_EQ(exact_divide(x * y, y), x);
      }
    }
  }
}

TEST(Cyclotomic, ExactDivideRejectsNonIntegralQuotient) {
  EXPECT_THROW(exact_divide(n(3, 1), n(3, 2)), DomainError);
  EXPECT_THROW(exact_divide(n(3, 1), CycInt(3)), DomainError);
  EXPECT_EQ(exact_divide(n(3, 3), n(3, 1) - w(3, 1)), n(3, 1) - w(3, 2));
}

TEST(Cyclotomic, Pretty) {
  EXPECT_EQ((n(3, 1) - w(3, 1)).pretty(), "1 - w");
  EXPECT_EQ(CycInt(3).pretty(), "0");
  EXPECT_EQ((-w(3, 1)).pretty(), "-w");
}

TEST(Cyclotomic, PowerSums) {
  ExponentVector j(4, {1, 1, 3, 3}), jt(4, {0, 0, 2, 2});
  EXPECT_TRUE(power_sum(j, 1).is_zero());
  EXPECT_TRUE(power_sum(jt, 1).is_zero());
  EXPECT_EQ(power_sum(j, 0), n(4, 4));
}

TEST(Cyclotomic, ElementarySymmetric) {
  ExponentVector j(4, {1, 1, 3, 3});
  EXPECT_EQ(elementary_symmetric(j, 4), n(4, 1));
  EXPECT_EQ(elementary_symmetric(j, 0), n(4, 1));
  EXPECT_EQ(elementary_symmetric(j, 1), power_sum(j, 1));
  EXPECT_THROW(elementary_symmetric(j, 5), DomainError);
  // Coefficients of prod (x - w^j) against complex expansion.
  ExponentVector v(7, {0, 2, 3, 3, 6});
  for (int k = 0; k <= v.t(); ++k) {
    std::vector<std::complex<double>> roots;
    for (int e : v.exps()) roots.push_back(std::polar(1.0, 2 * std::numbers::pi * e / 7));
    std::complex<double> sum = 0;
    for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::complex<double> prod = 1;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (mask & (1u << i)) prod *= roots[i];
      }
      sum += prod;
    }
    EXPECT_LT(std::abs(oracle::to_complex(elementary_symmetric(v, k)) - sum), 1e-9);
  }
}

TEST(Cyclotomic, Newton) {
  ExponentVector j(4, {1, 1, 3, 3}), jt(4, {0, 0, 2, 2});
  EXPECT_TRUE(newton_identities_check(j, jt, 1).holds);
  EXPECT_TRUE(newton_identities_check(j, j, 4).holds);
  auto r = newton_identities_check(ExponentVector(6, {1, 1, 4, 4}), ExponentVector(6, {0, 2, 3, 5}), 1);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.power_sums_equal);
  EXPECT_TRUE(r.power_sums_v[0].is_zero());
  EXPECT_THROW(newton_identities_check(j, ExponentVector(4, {0, 1}), 1), DomainError);
}

TEST(Cyclotomic, SigmaStar) {
  EXPECT_TRUE(sigma_star_relation_check(ExponentVector(3, {0, 1, 2}), 1));
  EXPECT_TRUE(sigma_star_relation_check(ExponentVector(4, {1, 1, 3, 3}), 2));
  EXPECT_THROW(sigma_star_relation_check(ExponentVector(4, {1, 1, 3, 3}), 4), DomainError);
  std::mt19937 rng(11);
  for (int s = 2; s <= 12; ++s) {
    for (int t = 2; t <= 6; ++t) {
      std::uniform_int_distribution<int> e(0, s - 1);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> exps(static_cast<std::size_t>(t));
        for (auto& x : exps) x = e(rng);
        ExponentVector v(s, exps);
        for (int k = 1; k < t; ++k) ASSERT_TRUE(sigma_star_relation_check(v, k));
      }
    }
  }
}

TEST(Cyclotomic, Lemma14Examples) {
  // gcd(9, 6) = 3: lemma14_decide enforces the hypothesis; the root test does not.
  EXPECT_THROW(lemma14_decide(ExponentVector(9, {3, 3, 6, 6, 0, 0}), ExponentVector(9, {1, 2, 4, 5, 7, 8})), DomainError);
  EXPECT_TRUE(root_conditions_hold(ExponentVector(9, {3, 3, 6, 6, 0, 0}), ExponentVector(9, {1, 2, 4, 5, 7, 8})));
  EXPECT_TRUE(root_conditions_hold(ExponentVector(4, {1, 1, 3, 3}), ExponentVector(4, {0, 0, 2, 2})));
  EXPECT_THROW(lemma14_decide(ExponentVector(4, {1, 1, 3, 3}), ExponentVector(4, {0, 0, 2, 2})), DomainError);
  auto same = lemma14_decide(ExponentVector(5, {0, 1, 4}), ExponentVector(5, {4, 1, 0}));
  EXPECT_TRUE(same.conditions_hold);
  EXPECT_TRUE(same.equal_forced);
}

TEST(Cyclotomic, CounterexampleFamilies) {
  auto [j6, jt6] = counterexample_family(6, 5);
  EXPECT_EQ(j6.exps(), (std::vector<int>{0, 1, 1, 4, 4}));
  EXPECT_EQ(jt6.exps(), (std::vector<int>{0, 0, 2, 3, 5}));
  auto [j4, jt4] = counterexample_family(4, 5);
  EXPECT_EQ(j4.exps(), (std::vector<int>{0, 1, 1, 3, 3}));
  EXPECT_EQ(jt4.exps(), (std::vector<int>{0, 0, 0, 2, 2}));
  auto [j10, jt10] = counterexample_family(10, 4);
  EXPECT_EQ(j10.exps(), (std::vector<int>{2, 2, 7, 7}));
  EXPECT_EQ(jt10.exps(), (std::vector<int>{1, 3, 6, 8}));
  for (int s : {4, 6, 8, 9, 10, 12, 14, 15, 21, 25}) {
    const int p = smallest_prime_factor(s);
    for (int t = std::max(2 * p, s == 9 ? 6 : 0); t <= 2 * p + 4; ++t) {
      auto [j, jt] = counterexample_family(s, t);
      EXPECT_TRUE(root_conditions_hold(j, jt)) << s << "," << t;
      EXPECT_NE(j, jt);
      EXPECT_FALSE(roots_determined(s, t));
    }
  }
  EXPECT_THROW(counterexample_family(7, 20), DomainError);
  EXPECT_THROW(counterexample_family(4, 3), DomainError);
}

TEST(Cyclotomic, PrimeModuliDetermineRoots) {
  // Exhaustive: equal root sums and products force equal vectors for prime s.
  for (auto [s, t] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}}) {
    std::vector<ExponentVector> all;
    std::vector<int> cur(static_cast<std::size_t>(t), 0);
    std::function<void(int, int)> gen = [&](int i, int lo) {
      if (i == t) {
        all.emplace_back(s, cur);
        return;
      }
      for (int x = lo; x < s; ++x) {
        cur[static_cast<std::size_t>(i)] = x;
        gen(i + 1, x);
      }
    };
    gen(0, 0);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        ASSERT_FALSE(root_conditions_hold(all[a], all[b])) << s << "," << t;
      }
    }
  }
}
