#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcore {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (bad modulus, non-core input, nonzero-sum coordinates, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonincreasing sequence of positive integers. The constructor sorts its
/// input, so any multiset of positive parts is accepted.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::int64_t norm() const;

  /// Part i (0-based); zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Cell counts by residue label (j - i) mod s.
struct RVector {
  int s = 0;
  std::vector<std::int64_t> counts;

  friend bool operator==(const RVector&, const RVector&) = default;
};

/// Integer coordinates n_0..n_{t-1}. Zero-sum vectors are exactly the images of
/// t-cores; operations that need the zero-sum property check it.
struct NVector {
  std::vector<std::int64_t> coords;

  NVector() = default;
  explicit NVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  NVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  int t() const { return static_cast<int>(coords.size()); }
  std::int64_t sum() const;
  std::int64_t operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

  friend bool operator==(const NVector&, const NVector&) = default;
  friend auto operator<=>(const NVector&, const NVector&) = default;
};

/// Cells on and above the main diagonal (pi1, read by rows) and on and below it
/// (pi2, read by columns). Both are strict partitions with d parts: row k of
/// pi1 starts on the diagonal cell (k, k), and likewise column k of pi2. The d
/// diagonal cells belong to both pieces, so |pi| = |pi1| + |pi2| - d.
struct DiagonalSplit {
  std::vector<int> pi1;
  std::vector<int> pi2;
  int d = 0;
};

Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& p);

RVector r_vector(const Partition& p, int s);
NVector n_vector_from_r(const RVector& r);
/// n(pi, t) = n_vector_from_r(r_vector(pi, t)); defined for any partition.
NVector n_vector(const Partition& p, int t);

/// Beta-numbers lambda_i + k - i for i = 1..k (k >= length), decreasing.
std::vector<std::int64_t> beta_numbers(const Partition& p, int k);
/// Inverse of beta_numbers: any finite set of distinct nonnegative integers.
Partition from_beta_numbers(std::vector<std::int64_t> betas);

bool is_t_core(const Partition& p, int t);
Partition t_core_of(const Partition& p, int t);

NVector core_to_nvec(const Partition& core, int t);
Partition nvec_to_core(const NVector& n);
std::int64_t norm_from_nvec(const NVector& n);
NVector conjugate_nvec(const NVector& n);

int durfee(const Partition& p);
DiagonalSplit diagonal_split(const Partition& p);

/// Letters of the words W_0..W_{t-1} over regions lo..hi (one string per word,
/// 'E' or 'N' per region).
std::vector<std::string> word_window(const Partition& p, int t, int region_lo, int region_hi);

struct CoreEntry {
  NVector n;
  Partition core;
  std::int64_t norm = 0;
};

/// All t-cores with norm strictly below `norm_bound`, found by walking zero-sum
/// n-vectors. Sorted by norm, then by parts.
std::vector<CoreEntry> t_cores_below(int t, std::int64_t norm_bound);

/// All partitions of `n` in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace tcore
