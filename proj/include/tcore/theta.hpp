#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcore/qseries.hpp"

namespace tcore {

/// Lower bound ceil((a m^2 + b m + c) / 2) on the q-valuation of the z^m
/// coefficient, a > 0. For the theta sums below it is 9m(m+1)/2, the minimum of
/// 2|n|^2 + b_4.n over n.1 = 3m.
struct TailBound {
  std::int64_t a = 9;
  std::int64_t b = 9;
  std::int64_t c = 0;

  std::int64_t at(std::int64_t m) const;
  /// min of at(m) + k*m over integers m outside [lo, hi].
  std::int64_t min_outside(std::int64_t lo, std::int64_t hi, std::int64_t k = 0) const;

  friend bool operator==(const TailBound&, const TailBound&) = default;
};

/// Finite Laurent polynomial in z with QSeries coefficients on the window
/// [zmin, zmax]. Each entry carries its own q-precision; every coefficient
/// outside the window vanishes below the tail bound.
class LaurentTheta {
 public:
  LaurentTheta(std::int64_t zmin, std::vector<QSeries> entries, TailBound tail);

  std::int64_t zmin() const { return zmin_; }
  std::int64_t zmax() const { return zmin_ + static_cast<std::int64_t>(entries_.size()) - 1; }
  const TailBound& tail() const { return tail_; }

  /// Coefficient of z^m; outside the window, the zero series known up to the tail bound.
  QSeries entry(std::int64_t m) const;

  /// f(z) -> f(z q^k).
  LaurentTheta substitute_shift(std::int64_t k) const;
  /// z^e q^f f(z).
  LaurentTheta times_monomial(std::int64_t z_power, std::int64_t q_power) const;
  /// R(q) f(z); R must be a power series (offset >= 0).
  LaurentTheta times_series(const QSeries& r) const;
  LaurentTheta operator+(const LaurentTheta& o) const;
  LaurentTheta operator-() const;

  /// f(sign * q^k) as a Laurent series in q, with the precision the window and
  /// tail bound guarantee.
  QSeries evaluate(int sign, std::int64_t k) const;

 private:
  std::int64_t zmin_;
  std::vector<QSeries> entries_;
  TailBound tail_;
};

struct ThetaDiscrepancy {
  std::int64_t z_power;
  std::int64_t q_power;
};

/// First (z-power, q-power) with q-power < n where the two differ. Throws if
/// some coefficient is not known to order n on either side.
std::optional<ThetaDiscrepancy> first_discrepancy(const LaurentTheta& a, const LaurentTheta& b, std::int64_t n);

/// z-powers m with 9m(m+1)/2 + k m + extra < order.
std::pair<std::int64_t, std::int64_t> theta_window(std::int64_t order, std::int64_t k = 0, std::int64_t extra = 0);

/// s_j(z, q) = sum over n = n_j (mod 3) of q^{2|n|^2 + b_4.n} z^{n.1/3}, every
/// coefficient of z^m for m in [zmin, zmax] exact to q-order `order`.
LaurentTheta s_j(int j, std::int64_t order, std::int64_t zmin, std::int64_t zmax);
/// s_j on the window where coefficients can be nonzero below `order`.
LaurentTheta s_j(int j, std::int64_t order);

/// sum_n q^{9n(n+1)/2} z^n on [zmin, zmax], to q-order `order`.
LaurentTheta theta_factor(std::int64_t order, std::int64_t zmin, std::int64_t zmax);
LaurentTheta theta_factor(std::int64_t order);

/// Builds a theta object precise enough that, after z -> z q^k and a factor
/// q^extra, every z-coefficient (or the evaluation at z = +-q^k) is known to
/// `order`.
LaurentTheta s_j_for_shift(int j, std::int64_t k, std::int64_t extra, std::int64_t order);
LaurentTheta theta_factor_for_shift(std::int64_t k, std::int64_t extra, std::int64_t order);

/// s_j(sign * q^k, q) to q-order `order`.
QSeries s_j_at(int j, int sign, std::int64_t k, std::int64_t order);
/// Theta factor at z = sign * q^k to q-order `order`.
QSeries theta_factor_at(int sign, std::int64_t k, std::int64_t order);

}  // namespace tcore
