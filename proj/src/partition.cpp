#include "tcore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace tcore {

namespace {

void require_modulus(int s, const char* what) {
  if (s < 2) throw DomainError(std::string(what) + ": modulus must be >= 2, got " + std::to_string(s));
}

void require_zero_sum(const NVector& n, const char* what) {
  if (n.t() < 1) throw DomainError(std::string(what) + ": empty n-vector");
  if (n.sum() != 0) throw DomainError(std::string(what) + ": n-vector coordinates must sum to 0");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Smallest multiple of t that is >= k.
int round_up(int k, int t) { return ((k + t - 1) / t) * t; }

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) {
    if (x <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(x));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t Partition::norm() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::int64_t NVector::sum() const {
  return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("not an integer part: '" + std::string(tok) + "'");
    }
    if (value <= 0) throw ParseError("partition parts must be positive: '" + std::string(tok) + "'");
    parts.push_back(value);
    i = j;
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p.part(0)), 0);
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

RVector r_vector(const Partition& p, int s) {
  require_modulus(s, "r_vector");
  RVector r{s, std::vector<std::int64_t>(static_cast<std::size_t>(s), 0)};
  for (int i = 1; i <= p.length(); ++i) {
    int len = p.part(i - 1);
    // Row i covers contents j - i for j = 1..len: every full block of s
    // consecutive contents hits each label once.
    std::int64_t full = len / s;
    for (auto& c : r.counts) c += full;
    for (int j = static_cast<int>(full * s) + 1; j <= len; ++j) {
      ++r.counts[static_cast<std::size_t>(mod(j - i, s))];
    }
  }
  return r;
}

NVector n_vector_from_r(const RVector& r) {
  const auto s = r.counts.size();
  NVector n;
  n.coords.resize(s);
  for (std::size_t i = 0; i < s; ++i) n.coords[i] = r.counts[i] - r.counts[(i + 1) % s];
  return n;
}

NVector n_vector(const Partition& p, int t) { return n_vector_from_r(r_vector(p, t)); }

std::vector<std::int64_t> beta_numbers(const Partition& p, int k) {
  if (k < p.length()) throw DomainError("beta_numbers: k smaller than the number of parts");
  std::vector<std::int64_t> b(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) b[static_cast<std::size_t>(i)] = p.part(i) + k - 1 - i;
  return b;
}

Partition from_beta_numbers(std::vector<std::int64_t> betas) {
  std::sort(betas.begin(), betas.end(), std::greater<>());
  if (std::adjacent_find(betas.begin(), betas.end()) != betas.end()) {
    throw DomainError("from_beta_numbers: repeated bead position");
  }
  const auto k = static_cast<std::int64_t>(betas.size());
  std::vector<int> parts;
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t part = betas[static_cast<std::size_t>(i)] - (k - 1 - i);
    if (part < 0) throw DomainError("from_beta_numbers: negative bead position");
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  return Partition(std::move(parts));
}

bool is_t_core(const Partition& p, int t) {
  require_modulus(t, "is_t_core");
  // A hook of length divisible by t exists iff some bead can slide t places
  // down the abacus into an empty position.
  auto betas = beta_numbers(p, p.length());
  std::set<std::int64_t> occupied(betas.begin(), betas.end());
  for (auto b : betas) {
    if (b >= t && !occupied.contains(b - t)) return false;
  }
  return true;
}

Partition t_core_of(const Partition& p, int t) {
  require_modulus(t, "t_core_of");
  const int k = round_up(p.length(), t);
  std::vector<std::int64_t> runner_count(static_cast<std::size_t>(t), 0);
  for (auto b : beta_numbers(p, k)) ++runner_count[static_cast<std::size_t>(b % t)];
  std::vector<std::int64_t> pushed;
  pushed.reserve(static_cast<std::size_t>(k));
  for (int r = 0; r < t; ++r) {
    for (std::int64_t m = 0; m < runner_count[static_cast<std::size_t>(r)]; ++m) pushed.push_back(r + t * m);
  }
  return from_beta_numbers(std::move(pushed));
}

NVector core_to_nvec(const Partition& core, int t) {
  if (!is_t_core(core, t)) throw DomainError("core_to_nvec: " + core.to_string() + " is not a " + std::to_string(t) + "-core");
  return n_vector(core, t);
}

Partition nvec_to_core(const NVector& n) {
  require_zero_sum(n, "nvec_to_core");
  const int t = n.t();
  // Runner i of the Maya diagram (contents x = lambda_k - k) holds every
  // position i + t*m with m < n_i. Below the lowest first-gap all positions
  // are occupied, so only beads at or above it determine the partition.
  std::int64_t floor_pos = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < t; ++i) floor_pos = std::min(floor_pos, i + t * n[i]);
  std::vector<std::int64_t> beads;
  for (int i = 0; i < t; ++i) {
    std::int64_t m_lo = floor_div(floor_pos - i + t - 1, t);  // smallest m with i + t*m >= floor_pos
    for (std::int64_t m = m_lo; m < n[i]; ++m) beads.push_back(i + t * m);
  }
  std::sort(beads.begin(), beads.end(), std::greater<>());
  if (static_cast<std::int64_t>(beads.size()) != -floor_pos) {
    throw std::logic_error("nvec_to_core: bead count does not match charge");
  }
  std::vector<int> parts;
  for (std::size_t k = 0; k < beads.size(); ++k) {
    std::int64_t part = beads[k] + static_cast<std::int64_t>(k) + 1;
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  return Partition(std::move(parts));
}

std::int64_t norm_from_nvec(const NVector& n) {
  require_zero_sum(n, "norm_from_nvec");
  const std::int64_t t = n.t();
  std::int64_t sq = 0, lin = 0;
  for (int i = 0; i < n.t(); ++i) {
    sq += n[i] * n[i];
    lin += i * n[i];
  }
  // t * |n|^2 is even: for odd t, |n|^2 has the parity of sum(n) = 0.
  return t * sq / 2 + lin;
}

NVector conjugate_nvec(const NVector& n) {
  require_zero_sum(n, "conjugate_nvec");
  NVector out;
  out.coords.assign(n.coords.rbegin(), n.coords.rend());
  for (auto& c : out.coords) c = -c;
  return out;
}

int durfee(const Partition& p) {
  int d = 0;
  while (d < p.length() && p.part(d) >= d + 1) ++d;
  return d;
}

DiagonalSplit diagonal_split(const Partition& p) {
  DiagonalSplit split;
  split.d = durfee(p);
  const Partition conj = conjugate(p);
  for (int k = 0; k < split.d; ++k) {
    split.pi1.push_back(p.part(k) - k);
    split.pi2.push_back(conj.part(k) - k);
  }
  return split;
}

std::vector<std::string> word_window(const Partition& p, int t, int region_lo, int region_hi) {
  require_modulus(t, "word_window");
  if (region_lo > region_hi) throw DomainError("word_window: empty region range");
  // Exposed cells (including the extended column 0) have contents
  // lambda_k - k; everything below -length is exposed in column 0.
  std::set<std::int64_t> contents;
  for (int k = 1; k <= p.length(); ++k) contents.insert(p.part(k - 1) - k);
  auto exposed = [&](std::int64_t x) { return x <= -p.length() - 1 || contents.contains(x); };
  std::vector<std::string> words(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    for (int r = region_lo; r <= region_hi; ++r) {
      std::int64_t x = static_cast<std::int64_t>(t) * (r - 1) + i;
      words[static_cast<std::size_t>(i)] += exposed(x) ? 'E' : 'N';
    }
  }
  return words;
}

std::vector<CoreEntry> t_cores_below(int t, std::int64_t norm_bound) {
  require_modulus(t, "t_cores_below");
  std::vector<CoreEntry> out;
  if (norm_bound <= 0) return out;
  // (t/2)|n|^2 + b.n >= (t/2)|n|^2 - |b||n|, so |n| < (|b| + sqrt(|b|^2 + 2tN)) / t.
  double bnorm = std::sqrt(static_cast<double>(t - 1) * t * (2 * t - 1) / 6.0);
  auto radius = static_cast<std::int64_t>(
      (bnorm + std::sqrt(bnorm * bnorm + 2.0 * t * static_cast<double>(norm_bound))) / t) + 1;
  std::vector<std::int64_t> n(static_cast<std::size_t>(t), 0);
  std::function<void(int, std::int64_t)> walk = [&](int i, std::int64_t partial) {
    if (i == t - 1) {
      n.back() = -partial;
      if (std::abs(n.back()) > radius) return;
      NVector v(n);
      auto norm = norm_from_nvec(v);
      if (norm < norm_bound) out.push_back({v, nvec_to_core(v), norm});
      return;
    }
    for (std::int64_t x = -radius; x <= radius; ++x) {
      n[static_cast<std::size_t>(i)] = x;
      walk(i + 1, partial + x);
    }
  };
  walk(0, 0);
  std::sort(out.begin(), out.end(), [](const CoreEntry& a, const CoreEntry& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.core < b.core;
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace tcore
