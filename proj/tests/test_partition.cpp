#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tcore/partition.hpp"

using namespace tcore;

TEST(Partition, NormalizesAndRejectsNonPositive) {
  EXPECT_EQ(Partition({2, 4}), Partition({4, 2}));
  EXPECT_EQ(Partition({4, 2}).norm(), 6);
  EXPECT_THROW(Partition({3, 0}), DomainError);
  EXPECT_THROW(Partition({-1}), DomainError);
}

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition("4,2"), Partition({4, 2}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(parse_partition("2,4"), Partition({4, 2}));
  EXPECT_EQ(parse_partition(" 3 1, 2 "), Partition({3, 2, 1}));
  EXPECT_THROW(parse_partition("4,x"), ParseError);
  EXPECT_THROW(parse_partition("4,0"), ParseError);
  EXPECT_THROW(parse_partition("-2"), ParseError);
  EXPECT_THROW(parse_partition("2.5"), ParseError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition({4, 2})), Partition({2, 2, 1, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(Partition({3, 2, 1})), Partition({3, 2, 1}));
  for (const auto& p : oracle::partitions_upto(12)) {
    EXPECT_EQ(conjugate(conjugate(p)), p);
    EXPECT_EQ(conjugate(p), Partition(oracle::conjugate_rows(oracle::rows(p))));
  }
}

TEST(Partition, RVectorExamples) {
  EXPECT_EQ(r_vector(Partition({4, 2}), 3).counts, (std::vector<std::int64_t>{3, 1, 2}));
  EXPECT_EQ(r_vector(Partition(), 4).counts, (std::vector<std::int64_t>{0, 0, 0, 0}));
  EXPECT_EQ(r_vector(Partition({4, 2}), 2).counts, (std::vector<std::int64_t>{3, 3}));
  EXPECT_THROW(r_vector(Partition({1}), 1), DomainError);
}

TEST(Partition, RVectorMatchesCellCount) {
  for (const auto& p : oracle::partitions_upto(14)) {
    for (int s = 2; s <= 6; ++s) {
      auto r = r_vector(p, s);
      ASSERT_EQ(r.counts, oracle::residue_counts(p, s)) << p.to_string() << " s=" << s;
      std::int64_t total = 0;
      for (auto c : r.counts) total += c;
      EXPECT_EQ(total, p.norm());
      // Conjugation negates labels.
      auto rc = r_vector(conjugate(p), s);
      for (int i = 0; i < s; ++i) EXPECT_EQ(rc.counts[static_cast<std::size_t>(i)], r.counts[static_cast<std::size_t>((s - i) % s)]);
    }
  }
}

TEST(Partition, NVectorFromR) {
  EXPECT_EQ(n_vector_from_r(RVector{3, {3, 1, 2}}), NVector({2, -1, -1}));
  EXPECT_EQ(n_vector_from_r(RVector{3, {0, 0, 0}}), NVector({0, 0, 0}));
  EXPECT_EQ(n_vector_from_r(RVector{2, {3, 3}}), NVector({0, 0}));
}

TEST(Partition, CoreTestExamples) {
  EXPECT_TRUE(is_t_core(Partition({4, 2}), 3));
  EXPECT_FALSE(is_t_core(Partition({3, 2}), 4));
  EXPECT_TRUE(is_t_core(Partition(), 5));
}

TEST(Partition, CoreTestMatchesHookLengths) {
  for (const auto& p : oracle::partitions_upto(15)) {
    for (int t = 2; t <= 6; ++t) ASSERT_EQ(is_t_core(p, t), oracle::is_core(p, t)) << p.to_string() << " t=" << t;
  }
}

TEST(Partition, CoreOfExamples) {
  EXPECT_EQ(t_core_of(Partition({3, 2}), 4), Partition({1}));
  EXPECT_EQ(t_core_of(Partition({4, 2}), 3), Partition({4, 2}));
}

TEST(Partition, CoreOfMatchesRimHookRemoval) {
  for (const auto& p : oracle::partitions_upto(14)) {
    for (int t = 2; t <= 5; ++t) {
      auto c = t_core_of(p, t);
      ASSERT_EQ(c, oracle::core_by_rim_hooks(p, t)) << p.to_string() << " t=" << t;
      EXPECT_TRUE(is_t_core(c, t));
      EXPECT_EQ(t_core_of(c, t), c);
      EXPECT_EQ((p.norm() - c.norm()) % t, 0);
    }
  }
}

TEST(Partition, BetaNumbers) {
  EXPECT_EQ(beta_numbers(Partition({4, 2}), 3), (std::vector<std::int64_t>{6, 3, 0}));
  EXPECT_EQ(from_beta_numbers({6, 3, 0}), Partition({4, 2}));
  EXPECT_THROW(beta_numbers(Partition({1, 1}), 1), DomainError);
  EXPECT_THROW(from_beta_numbers({2, 2}), DomainError);
}

TEST(Partition, GksExamples) {
  EXPECT_EQ(core_to_nvec(Partition({4, 2}), 3), NVector({2, -1, -1}));
  EXPECT_EQ(nvec_to_core(NVector({0, 0, 0})), Partition());
  auto c = nvec_to_core(NVector({0, -1, 1, 0}));
  EXPECT_EQ(c.norm(), 5);
  EXPECT_TRUE(is_t_core(c, 4));
  EXPECT_EQ(core_to_nvec(c, 4), NVector({0, -1, 1, 0}));
  EXPECT_THROW(core_to_nvec(Partition({3, 2}), 4), DomainError);
  EXPECT_THROW(nvec_to_core(NVector({1, 0, 0})), DomainError);
}

TEST(Partition, NormFromNvec) {
  EXPECT_EQ(norm_from_nvec(NVector({2, -1, -1})), 6);
  EXPECT_EQ(norm_from_nvec(NVector({0, -1, 1, 0})), 5);
  EXPECT_EQ(norm_from_nvec(NVector({0, 0, 0, 0, 0})), 0);
  EXPECT_THROW(norm_from_nvec(NVector({1, 1})), DomainError);
}

TEST(Partition, GksRoundTripOnBox) {
  for (int t = 2; t <= 5; ++t) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(t), -3);
    for (;;) {
      std::int64_t sum = 0;
      for (auto x : n) sum += x;
      if (sum == 0) {
        NVector v(n);
        auto core = nvec_to_core(v);
        ASSERT_EQ(core_to_nvec(core, t), v);
        ASSERT_EQ(core.norm(), norm_from_nvec(v));
        ASSERT_EQ(nvec_to_core(conjugate_nvec(v)), conjugate(core));
      }
      std::size_t i = 0;
      while (i < n.size() && n[i] == 3) n[i++] = -3;
      if (i == n.size()) break;
      ++n[i];
    }
  }
}

TEST(Partition, ConjugateNvec) {
  EXPECT_EQ(conjugate_nvec(NVector({2, -1, -1})), NVector({1, 1, -2}));
  EXPECT_EQ(conjugate_nvec(NVector({0, 0, 0})), NVector({0, 0, 0}));
  EXPECT_EQ(conjugate_nvec(NVector({0, -1, 1, 0})), NVector({0, -1, 1, 0}));
  EXPECT_THROW(conjugate_nvec(NVector({1, 0})), DomainError);
}

TEST(Partition, DurfeeAndSplit) {
  EXPECT_EQ(durfee(Partition({4, 2})), 2);
  EXPECT_EQ(durfee(Partition()), 0);
  for (const auto& p : oracle::partitions_upto(14)) {
    auto split = diagonal_split(p);
    EXPECT_EQ(split.d, durfee(p));
    EXPECT_EQ(durfee(conjugate(p)), split.d);
    std::int64_t a = 0, b = 0;
    for (int x : split.pi1) a += x;
    for (int x : split.pi2) b += x;
    EXPECT_EQ(a + b - split.d, p.norm());
  }
}

TEST(Partition, DurfeeFromNvec) {
  for (int t = 2; t <= 5; ++t) {
    for (const auto& e : t_cores_below(t, 31)) {
      std::int64_t pos = 0, neg = 0;
      for (auto x : e.n.coords) (x > 0 ? pos : neg) += x;
      ASSERT_EQ(pos, durfee(e.core)) << e.core.to_string();
      ASSERT_EQ(-neg, durfee(e.core));
    }
  }
}

TEST(Partition, WordWindow) {
  auto w = word_window(Partition({4, 2}), 3, -1, 3);
  EXPECT_EQ(w, (std::vector<std::string>{"EEEEN", "ENNNN", "ENNNN"}));
  auto e = word_window(Partition(), 3, -2, 2);
  for (const auto& word : e) EXPECT_EQ(word, "EEENN");
  for (const auto& c : t_cores_below(3, 13)) {
    auto words = word_window(c.core, 3, -10, 10);
    for (int i = 0; i < 3; ++i) {
      // All E up to region n_i, then all N.
      const auto& word = words[static_cast<std::size_t>(i)];
      const auto switch_at = static_cast<std::int64_t>(word.find('N')) - 10;
      EXPECT_EQ(switch_at - 1, c.n[i]);
      EXPECT_EQ(word.find('E', word.find('N')), std::string::npos);
    }
  }
}

TEST(Partition, CoreEnumerationMatchesBruteForce) {
  for (int t = 2; t <= 5; ++t) {
    auto cores = t_cores_below(t, 16);
    std::vector<Partition> expected;
    for (const auto& p : oracle::partitions_upto(15)) {
      if (oracle::is_core(p, t)) expected.push_back(p);
    }
    ASSERT_EQ(cores.size(), expected.size()) << "t=" << t;
    for (std::size_t i = 1; i < cores.size(); ++i) EXPECT_LE(cores[i - 1].norm, cores[i].norm);
  }
}

TEST(Partition, PartitionsOf) {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}
