#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tcore/gbg.hpp"
#include "tcore/partition.hpp"

namespace tcore {

/// t-core and t-quotient. quotient[i] is read off runner i of the abacus, the
/// beta-numbers congruent to i mod t, with a beta-set whose size is a multiple of t.
struct LittlewoodDecomposition {
  Partition core;
  std::vector<Partition> quotient;
  int t = 0;

  friend bool operator==(const LittlewoodDecomposition&, const LittlewoodDecomposition&) = default;
};

LittlewoodDecomposition decompose(const Partition& p, int t);
Partition recompose(const LittlewoodDecomposition& d);

/// gbg_direct(p, s) == gbg_direct(t_core_of(p, s), s).
bool s_core_gbg_invariance_check(const Partition& p, int s);

struct OlssonReport {
  bool holds = true;
  std::int64_t checked = 0;
  /// First t-core whose s-core is not a t-core, if any.
  std::vector<Partition> violations;
};

/// For every t-core of norm < max_norm, its s-core is again a t-core.
OlssonReport olsson_check(int s, int t, std::int64_t max_norm);

struct StCoreSet {
  int s = 0;
  int t = 0;
  std::vector<Partition> cores;  // sorted by norm, then parts
};

/// Partitions that are both s-cores and t-cores. Throws std::logic_error if the
/// count differs from binom(s + t, s) / (s + t).
StCoreSet st_cores(int s, int t);

struct InjectivityReport {
  bool injective = true;
  /// Groups of distinct (s,t)-cores sharing a GBG value mod s.
  std::vector<std::pair<GbgValue, std::vector<Partition>>> collisions;
};

InjectivityReport gbg_injectivity_check(int s, int t);

/// (1 + s/2, 2, 1^{s/2 - 1}): an (s,t)-core with GBG 0 mod s, as is the empty
/// partition. Requires s even, s > 2, t > 1 + s/2, t != s + 1, gcd(s, t) = 1.
/// Throws std::logic_error if the returned partition fails either claim.
Partition counterexample_partition(int s, int t);

}  // namespace tcore
