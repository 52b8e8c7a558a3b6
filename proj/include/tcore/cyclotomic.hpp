#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tcore {

/// Dense integer polynomial, coefficient k multiplies x^k.
using IntPoly = std::vector<std::int64_t>;

int euler_phi(int s);
bool is_prime(int s);
/// Smallest prime divisor p_s of s >= 2.
int smallest_prime_factor(int s);
int gcd(int a, int b);

/// Phi_s, obtained by dividing x^s - 1 by Phi_d for every proper divisor d.
/// Results are cached; the returned reference stays valid for the program's lifetime.
const IntPoly& cyclotomic_polynomial(int s);

/// Element of Z[w_s] stored as its remainder modulo Phi_s: phi(s) integer
/// coefficients in the basis 1, w, ..., w^{phi(s)-1}. The representation is
/// canonical, so == is exact equality in the ring.
class CycInt {
 public:
  explicit CycInt(int s = 1);

  static CycInt integer(int s, std::int64_t value);
  /// w_s^k for any integer k.
  static CycInt root_power(int s, std::int64_t k);
  /// Reduces an arbitrary integer polynomial in w_s.
  static CycInt from_poly(int s, IntPoly poly);

  int modulus() const { return s_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  /// True when the value lies in Z (only the constant coefficient may be nonzero).
  bool is_rational_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  CycInt operator-() const;

  /// The Galois automorphism w -> w^m, gcd(m, s) = 1.
  CycInt galois(int m) const;
  /// w -> w^{-1}.
  CycInt conj() const { return galois(s_ - 1); }

  /// Human-readable form in powers of w, e.g. "1 - w" or "-w^2 + 3".
  std::string pretty(char symbol = 'w') const;

  friend bool operator==(const CycInt&, const CycInt&) = default;
  friend auto operator<=>(const CycInt&, const CycInt&) = default;

 private:
  void check_same_ring(const CycInt& o) const;

  int s_;
  std::vector<std::int64_t> c_;
};

/// Quotient a / b in Z[w_s]. Throws DomainError if b = 0 or the quotient is
/// not an algebraic integer.
CycInt exact_divide(const CycInt& a, const CycInt& b);

/// Exponents 0 <= j_0 <= ... <= j_{t-1} <= s - 1 naming the roots w_s^{j_i}.
/// The constructor sorts its input.
class ExponentVector {
 public:
  ExponentVector(int s, std::vector<int> exps);

  int s() const { return s_; }
  int t() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exps() const { return exps_; }
  /// Exponents of the inverse roots, (s - j) mod s, sorted.
  ExponentVector inverse() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  int s_;
  std::vector<int> exps_;
};

/// h_k = sum_i w_s^{k j_i}.
CycInt power_sum(const ExponentVector& v, int k);
/// sigma_k of the roots w_s^{j_i}, 0 <= k <= t.
CycInt elementary_symmetric(const ExponentVector& v, int k);

struct NewtonReport {
  std::vector<CycInt> power_sums_v, power_sums_w;  // h_1..h_kmax
  std::vector<CycInt> sigmas_v, sigmas_w;          // sigma_1..sigma_kmax, from Newton's recursion
  bool power_sums_equal = false;
  bool sigmas_equal = false;
  /// Newton's recursion reproduced the directly expanded sigma_k for both vectors.
  bool recursion_consistent = false;
  /// (h equal => sigma equal) and the recursion agreed with direct expansion.
  bool holds = false;
};

/// Runs Newton's identities k sigma_k = sum_{i=1}^k (-1)^{i-1} sigma_{k-i} h_i in
/// exact rational cyclotomic arithmetic for both vectors.
NewtonReport newton_identities_check(const ExponentVector& v, const ExponentVector& w, int kmax);

/// sigma_t(v) * sigma_k(v^{-1}) == sigma_{t-k}(v), 1 <= k <= t - 1.
bool sigma_star_relation_check(const ExponentVector& v, int k);

struct LemmaDecision {
  bool conditions_hold = false;  // equal root sums and equal root products
  bool equal_forced = false;     // j == j~
};

/// Root-sum and root-product equality of two exponent vectors, without any
/// hypothesis on gcd(s, t).
bool root_conditions_hold(const ExponentVector& j, const ExponentVector& jt);

/// Same as root_conditions_hold, plus equality of the vectors; requires gcd(s, t) = 1.
LemmaDecision lemma14_decide(const ExponentVector& j, const ExponentVector& jt);

/// Whether equal root sums and products force equal exponent vectors:
/// s prime, or s composite with t < 2 p_s.
bool roots_determined(int s, int t);

/// Two distinct exponent vectors of length t with equal root sums and equal
/// root products. Requires s composite and t >= 2 p_s (t >= 6 when s = 9).
/// Coprimality of s and t is not needed for the construction.
std::pair<ExponentVector, ExponentVector> counterexample_family(int s, int t);

}  // namespace tcore
