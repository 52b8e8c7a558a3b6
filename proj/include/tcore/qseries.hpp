#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcore/gbg.hpp"

namespace tcore {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated series  sum_{k = offset}^{order - 1} c_k q^k + O(q^order).
///
/// Coefficients below `offset` are exactly zero, so `offset` is a lower bound
/// for the valuation; a negative offset makes the value a Laurent series in q.
/// Power series (offset 0) are the common case. Every operation tracks the
/// precision it can guarantee: a product is known to
/// min(a.offset + b.order, b.offset + a.order).
class QSeries {
 public:
  explicit QSeries(std::int64_t order = 0, std::int64_t offset = 0);

  static QSeries one(std::int64_t order);
  static QSeries monomial(BigInt coeff, std::int64_t exponent, std::int64_t order);
  static QSeries from_coeffs(std::vector<BigInt> coeffs, std::int64_t offset = 0);

  std::int64_t order() const { return order_; }
  std::int64_t offset() const { return offset_; }
  /// Coefficient of q^k; zero below offset, throws past the precision.
  const BigInt& coeff(std::int64_t k) const;
  void add_to(std::int64_t k, const BigInt& v);

  /// Exponent of the first nonzero coefficient, if any is known.
  std::optional<std::int64_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  QSeries truncated(std::int64_t order) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  QSeries scaled(const BigInt& c) const;

  /// Multiplicative inverse; the leading coefficient must be +1 or -1.
  QSeries inverse() const;
  QSeries pow(int e) const;
  /// q -> q^m.
  QSeries dilate(int m) const;
  /// Multiply by q^a (a may be negative).
  QSeries shift(std::int64_t a) const;

  /// "1 - q - q^2 + q^5 + O(q^N)" with terms below `display_order`.
  std::string to_string(std::int64_t display_order) const;

 private:
  std::int64_t order_;
  std::int64_t offset_;
  std::vector<BigInt> c_;
};

/// First exponent < N at which a and b differ; nullopt when they agree below N.
/// Throws if either series is known to less than N.
std::optional<std::int64_t> first_discrepancy(const QSeries& a, const QSeries& b, std::int64_t n);

/// prod_{j >= 1} (1 - q^j) to order N.
QSeries euler(std::int64_t n);
/// E(q^m) to order N.
QSeries euler_dilated(int m, std::int64_t n);

/// q^leading_power * prod E(q^m)^e.
struct EtaQuotientSpec {
  struct Factor {
    int m;
    int e;
  };
  std::vector<Factor> factors;
  std::int64_t leading_power = 0;
};

QSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t n);

/// E^t(q^t) / E(q).
QSeries G_t_eta(int t, std::int64_t n);
/// sum over zero-sum n in Z^t of q^{(t/2)|n|^2 + b_t.n}.
QSeries G_t_theta(int t, std::int64_t n);
/// Generating function of 4-cores whose GBG-rank mod 3 equals c.
QSeries g_c_enumerated(const GbgValue& c, std::int64_t n);
/// The five GBG values taken by 4-cores mod 3, in table order:
/// -1, 0, 1, -w, -w^2.
const std::vector<GbgValue>& four_core_gbg_values();

/// [z; q^m]_inf = prod_{j>=0} (1 - z q^{mj})(1 - q^{m(j+1)}/z) at z = sign * q^a,
/// 0 <= a <= m.
QSeries bracket(int sign, int a, int m, std::int64_t n);
/// [q^{a_1}, q^{a_2}, ...; q^m]_inf.
QSeries bracket_product(const std::vector<int>& as, int m, std::int64_t n);

struct IdentityReport {
  std::string id;
  std::int64_t order = 0;
  bool holds = false;
  std::optional<std::int64_t> first_discrepancy;
  std::string detail;
};

/// sum (-1)^n q^{m n^2} z^n = E(q^{2m}) [z q^m; q^{2m}]_inf at z = sign * q^a,
/// |a| <= m.
IdentityReport jacobi_triple_check(int sign, int a, int m, std::int64_t n);

}  // namespace tcore
