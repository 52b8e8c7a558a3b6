#include "tcore/littlewood.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tcore {

namespace {

void require_coprime(int s, int t, const char* what) {
  if (s < 2 || t < 2 || gcd(s, t) != 1) {
    throw DomainError(std::string(what) + ": s and t must be coprime integers >= 2");
  }
}

std::int64_t round_up(std::int64_t x, std::int64_t t) { return (x + t - 1) / t * t; }

}  // namespace

LittlewoodDecomposition decompose(const Partition& p, int t) {
  if (t < 2) throw DomainError("decompose: t must be >= 2");
  const auto k = round_up(std::max(p.length(), 1), t);
  const auto betas = beta_numbers(p, static_cast<int>(k));
  LittlewoodDecomposition d;
  d.t = t;
  d.core = t_core_of(p, t);
  for (int r = 0; r < t; ++r) {
    std::vector<std::int64_t> runner;
    for (auto b : betas) {
      if (b % t == r) runner.push_back(b / t);
    }
    d.quotient.push_back(from_beta_numbers(std::move(runner)));
  }
  return d;
}

Partition recompose(const LittlewoodDecomposition& d) {
  const int t = d.t;
  if (t < 2 || static_cast<int>(d.quotient.size()) != t) {
    throw DomainError("recompose: quotient must have exactly t partitions");
  }
  if (!is_t_core(d.core, t)) throw DomainError("recompose: core is not a t-core");
  int maxlen = 0;
  for (const auto& q : d.quotient) maxlen = std::max(maxlen, q.length());
  // Enough beads that every runner holds at least maxlen of them.
  const auto k = round_up(std::max(d.core.length(), 1), t) + static_cast<std::int64_t>(t) * maxlen;
  const auto core_betas = beta_numbers(d.core, static_cast<int>(k));
  std::vector<std::int64_t> out;
  for (int r = 0; r < t; ++r) {
    std::vector<std::int64_t> levels;
    for (auto b : core_betas) {
      if (b % t == r) levels.push_back(b / t);
    }
    // levels is decreasing; a core runner is a solid column 0..c-1.
    const auto c = static_cast<std::int64_t>(levels.size());
    const auto& q = d.quotient[static_cast<std::size_t>(r)];
    for (std::int64_t i = 0; i < c; ++i) {
      const std::int64_t level = c - 1 - i + q.part(static_cast<int>(i));
      out.push_back(level * t + r);
    }
  }
  return from_beta_numbers(std::move(out));
}

bool s_core_gbg_invariance_check(const Partition& p, int s) {
  return gbg_direct(p, s) == gbg_direct(t_core_of(p, s), s);
}

OlssonReport olsson_check(int s, int t, std::int64_t max_norm) {
  require_coprime(s, t, "olsson_check");
  OlssonReport report;
  for (const auto& entry : t_cores_below(t, max_norm)) {
    ++report.checked;
    if (!is_t_core(t_core_of(entry.core, s), t)) {
      report.holds = false;
      report.violations.push_back(entry.core);
    }
  }
  return report;
}

StCoreSet st_cores(int s, int t) {
  require_coprime(s, t, "st_cores");
  // Enumerate cores for the smaller modulus; the largest (s,t)-core has
  // norm (s^2 - 1)(t^2 - 1) / 24.
  const int small = std::min(s, t), large = std::max(s, t);
  const std::int64_t bound =
      (static_cast<std::int64_t>(s) * s - 1) * (static_cast<std::int64_t>(t) * t - 1) / 24;
  StCoreSet set;
  set.s = s;
  set.t = t;
  for (const auto& entry : t_cores_below(small, bound + 1)) {
    if (is_t_core(entry.core, large)) set.cores.push_back(entry.core);
  }
  const auto expected = nu_bound(s, t);
  if (static_cast<std::int64_t>(set.cores.size()) != expected) {
    throw std::logic_error("st_cores: found " + std::to_string(set.cores.size()) + " cores, expected " +
                           std::to_string(expected));
  }
  return set;
}

InjectivityReport gbg_injectivity_check(int s, int t) {
  std::map<GbgValue, std::vector<Partition>> by_value;
  for (const auto& core : st_cores(s, t).cores) by_value[gbg_direct(core, s)].push_back(core);
  InjectivityReport report;
  for (auto& [value, cores] : by_value) {
    if (cores.size() > 1) {
      report.injective = false;
      report.collisions.emplace_back(value, std::move(cores));
    }
  }
  return report;
}

Partition counterexample_partition(int s, int t) {
  if (s <= 2 || s % 2 != 0) throw DomainError("counterexample_partition: s must be even and > 2");
  if (t <= 1 + s / 2) throw DomainError("counterexample_partition: need t > 1 + s/2");
  if (t == s + 1) throw DomainError("counterexample_partition: t = s + 1 is excluded");
  require_coprime(s, t, "counterexample_partition");
  std::vector<int> parts = {1 + s / 2, 2};
  parts.insert(parts.end(), static_cast<std::size_t>(s / 2 - 1), 1);
  Partition p(std::move(parts));
  if (!is_t_core(p, s) || !is_t_core(p, t)) {
    throw std::logic_error("counterexample_partition: " + p.to_string() + " is not an (" + std::to_string(s) + "," +
                           std::to_string(t) + ")-core");
  }
  if (!gbg_direct(p, s).is_zero()) {
    throw std::logic_error("counterexample_partition: GBG of " + p.to_string() + " is not 0");
  }
  return p;
}

}  // namespace tcore
