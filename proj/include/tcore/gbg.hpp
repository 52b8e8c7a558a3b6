#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tcore/cyclotomic.hpp"
#include "tcore/partition.hpp"

namespace tcore {

/// GBG-rank mod s: sum_i r_i(pi, s) w_s^i, an element of Z[w_s].
using GbgValue = CycInt;

GbgValue gbg_direct(const Partition& p, int s);

/// GBG-rank of a t-core from its n-vector:
///   sum_i w^{i+1} (w^{t n_i} - 1) / ((1 - w)(1 - w^t)),  gcd(s, t) = 1,
/// with the division carried out exactly in Z[w_s].
GbgValue gbg_formula(const NVector& n, int s);

/// s = 2 closed form for odd t: (1 - sum_i (-1)^{i + n_i}) / 4.
std::int64_t gbg_mod2(const NVector& n);

/// GBG value of a shifted shape whose rows start on the main diagonal (label 0)
/// and run rightward (labels 0, 1, ...). With `downward` the rows are columns
/// running down from the diagonal (labels 0, -1, ...).
GbgValue gbg_shifted(const std::vector<int>& rows, int s, bool downward);

/// binom(s + t, s) / (s + t); requires gcd(s, t) = 1.
std::int64_t nu_bound(int s, int t);

/// True when the census count reaches nu_bound: s prime or t < 2 p_s.
bool census_meets_bound(int s, int t);

struct NuOptions {
  std::int64_t budget = 10'000'000;  // residue vectors examined, s^{t-1}
  int jobs = 1;
};

struct ValueCensus {
  int s = 0;
  int t = 0;
  std::set<GbgValue> values;
  std::int64_t count = 0;
  std::int64_t bound = 0;
  std::int64_t candidates = 0;
};

/// Distinct GBG values of t-cores mod s, by running gbg_formula over every
/// residue vector m in {0..s-1}^t with sum(m) = 0 mod s.
ValueCensus nu(int s, int t, const NuOptions& opts = {});

/// Number of nondecreasing j in [0, s-1]^t with sum(j) = r mod s.
std::int64_t a_r(int s, int t, int r);
std::vector<std::int64_t> a_r_census(int s, int t);

struct Table1Row {
  int index = 0;  // 1..27
  NVector n;
  GbgValue value{3};
};

struct Table1 {
  std::vector<Table1Row> rows;
  /// Row indices grouped by GBG value.
  std::map<GbgValue, std::vector<int>> groups;
};

/// The 27 zero-sum representatives of Z_3^4 classes with n.1 = 0 mod 3, in the
/// fixed order used to index the theta sums s_j.
const std::vector<NVector>& table1_vectors();

/// GBG-rank mod 3 of every 4-core class.
Table1 table1();

}  // namespace tcore
