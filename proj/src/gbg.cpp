#include "tcore/gbg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <thread>

namespace tcore {

namespace {

void require_coprime(int s, int t, const char* what) {
  if (s < 2 || t < 2) throw DomainError(std::string(what) + ": moduli must be >= 2");
  if (gcd(s, t) != 1) {
    throw DomainError(std::string(what) + ": requires gcd(s, t) = 1, got s=" + std::to_string(s) +
                      " t=" + std::to_string(t));
  }
}

}  // namespace

GbgValue gbg_direct(const Partition& p, int s) {
  const RVector r = r_vector(p, s);
  IntPoly poly(r.counts.begin(), r.counts.end());
  return CycInt::from_poly(s, std::move(poly));
}

GbgValue gbg_formula(const NVector& n, int s) {
  const int t = n.t();
  require_coprime(s, t, "gbg_formula");
  if (n.sum() != 0) throw DomainError("gbg_formula: n-vector coordinates must sum to 0");
  IntPoly num(static_cast<std::size_t>(s), 0);
  auto idx = [s](std::int64_t e) { return static_cast<std::size_t>(((e % s) + s) % s); };
  for (int i = 0; i < t; ++i) {
    num[idx(i + 1 + static_cast<std::int64_t>(t) * (n[i] % s))] += 1;
    num[idx(i + 1)] -= 1;
  }
  const CycInt one = CycInt::integer(s, 1);
  const CycInt denom = (one - CycInt::root_power(s, 1)) * (one - CycInt::root_power(s, t));
  return exact_divide(CycInt::from_poly(s, std::move(num)), denom);
}

std::int64_t gbg_mod2(const NVector& n) {
  const int t = n.t();
  if (t < 3 || t % 2 == 0) throw DomainError("gbg_mod2: t must be odd and > 1");
  if (n.sum() != 0) throw DomainError("gbg_mod2: n-vector coordinates must sum to 0");
  std::int64_t total = 0;
  for (int i = 0; i < t; ++i) total += ((i + n[i]) % 2 == 0) ? 1 : -1;
  std::int64_t numer = 1 - total;
  if (numer % 4 != 0) throw std::logic_error("gbg_mod2: numerator not divisible by 4");
  return numer / 4;
}

GbgValue gbg_shifted(const std::vector<int>& rows, int s, bool downward) {
  IntPoly poly(static_cast<std::size_t>(s), 0);
  for (int len : rows) {
    for (int j = 0; j < len; ++j) {
      int label = downward ? -j : j;
      poly[static_cast<std::size_t>(((label % s) + s) % s)] += 1;
    }
  }
  return CycInt::from_poly(s, std::move(poly));
}

std::int64_t nu_bound(int s, int t) {
  require_coprime(s, t, "nu_bound");
  using boost::multiprecision::cpp_int;
  cpp_int binom = 1;
  for (int i = 1; i <= s; ++i) binom = binom * (t + i) / i;
  if (binom % (s + t) != 0) throw std::logic_error("nu_bound: binomial not divisible by s + t");
  return static_cast<std::int64_t>(binom / (s + t));
}

bool census_meets_bound(int s, int t) { return roots_determined(s, t); }

ValueCensus nu(int s, int t, const NuOptions& opts) {
  require_coprime(s, t, "nu");
  ValueCensus census;
  census.s = s;
  census.t = t;
  census.bound = nu_bound(s, t);
  std::int64_t total = 1;
  for (int i = 0; i < t - 1; ++i) {
    if (total > opts.budget / s + 1) throw DomainError("nu: enumeration budget exceeded");
    total *= s;
  }
  if (total > opts.budget) throw DomainError("nu: enumeration budget exceeded (" + std::to_string(total) + " candidates)");
  census.candidates = total;

  // Residue vector number `code` in base s gives m_0..m_{t-2}; the last
  // coordinate restores zero sum, which fixes m_{t-1} = -sum mod s.
  auto scan = [s, t](std::int64_t lo, std::int64_t hi, std::set<GbgValue>& out) {
    NVector n;
    n.coords.assign(static_cast<std::size_t>(t), 0);
    for (std::int64_t code = lo; code < hi; ++code) {
      std::int64_t rest = code, sum = 0;
      for (int i = 0; i < t - 1; ++i) {
        n.coords[static_cast<std::size_t>(i)] = rest % s;
        sum += rest % s;
        rest /= s;
      }
      n.coords.back() = -sum;
      out.insert(gbg_formula(n, s));
    }
  };

  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(total)));
  std::vector<std::set<GbgValue>> partial(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    scan(0, total, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      std::int64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
      workers.emplace_back(scan, lo, hi, std::ref(partial[static_cast<std::size_t>(w)]));
    }
    for (auto& th : workers) th.join();
  }
  for (auto& part : partial) census.values.merge(part);
  census.count = static_cast<std::int64_t>(census.values.size());
  return census;
}

std::vector<std::int64_t> a_r_census(int s, int t) {
  if (s < 1 || t < 1) throw DomainError("a_r_census: s and t must be >= 1");
  // dp[c][r]: multisets of size c over the values seen so far with sum = r mod s.
  using Table = std::vector<std::vector<std::int64_t>>;
  Table dp(static_cast<std::size_t>(t) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(s), 0));
  dp[0][0] = 1;
  for (int v = 0; v < s; ++v) {
    Table next(dp.size(), std::vector<std::int64_t>(static_cast<std::size_t>(s), 0));
    for (int c = 0; c <= t; ++c) {
      for (int r = 0; r < s; ++r) {
        std::int64_t ways = dp[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        if (ways == 0) continue;
        for (int k = 0; c + k <= t; ++k) {
          next[static_cast<std::size_t>(c + k)][static_cast<std::size_t>((r + k * v) % s)] += ways;
        }
      }
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(t)];
}

std::int64_t a_r(int s, int t, int r) {
  auto census = a_r_census(s, t);
  return census[static_cast<std::size_t>(((r % s) + s) % s)];
}

const std::vector<NVector>& table1_vectors() {
  static const std::vector<NVector> rows = {
      {0, -1, 1, 0},                                                            //
      {0, 0, 0, 0},   {1, 1, -2, 0},  {-1, -1, 1, 1}, {0, -1, -1, 2},           //
      {1, -1, 0, 0},  {0, 1, -2, 1},  {2, -1, -1, 0}, {0, 0, 1, -1},            //
      {0, 1, -1, 0},  {-1, 0, 1, 0},  {1, -1, 1, -1}, {0, -1, 0, 1},            //
      {1, 1, 0, -2},  {-1, 1, -1, 1}, {2, 0, -1, -1}, {1, 0, 0, -1},            //
      {1, 1, -1, -1}, {-1, 0, 0, 1},                                            //
      {1, 0, -1, 0},  {1, 0, -2, 1},  {1, -1, -1, 1}, {0, 0, -1, 1},            //
      {-1, 1, 0, 0},  {-1, 1, 1, -1}, {-1, 2, 0, -1}, {0, 1, 0, -1},
  };
  return rows;
}

Table1 table1() {
  Table1 table;
  int index = 1;
  for (const auto& n : table1_vectors()) {
    Table1Row row{index, n, gbg_formula(n, 3)};
    table.groups[row.value].push_back(index);
    table.rows.push_back(std::move(row));
    ++index;
  }
  return table;
}

}  // namespace tcore
