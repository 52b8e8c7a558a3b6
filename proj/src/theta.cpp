#include "tcore/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tcore {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod3(std::int64_t x) { return ((x % 3) + 3) % 3; }

std::int64_t theta_exponent(std::int64_t m) { return 9 * m * (m + 1) / 2; }

}  // namespace

std::int64_t TailBound::at(std::int64_t m) const { return floor_div(a * m * m + b * m + c + 1, 2); }

std::int64_t TailBound::min_outside(std::int64_t lo, std::int64_t hi, std::int64_t k) const {
  // a m^2 + (b + 2k) m + c is convex, so on each half-line the minimum sits
  // at the projection of floor or ceil of the vertex.
  const std::int64_t lin = b + 2 * k;
  const std::int64_t v_floor = floor_div(-lin, 2 * a);
  const std::int64_t candidates[] = {
      std::min(lo - 1, v_floor), std::min(lo - 1, v_floor + 1),
      std::max(hi + 1, v_floor), std::max(hi + 1, v_floor + 1),
  };
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (auto m : candidates) best = std::min(best, at(m) + k * m);
  return best;
}

LaurentTheta::LaurentTheta(std::int64_t zmin, std::vector<QSeries> entries, TailBound tail)
    : zmin_(zmin), entries_(std::move(entries)), tail_(tail) {
  if (tail_.a <= 0) throw DomainError("LaurentTheta: tail bound must be convex");
}

QSeries LaurentTheta::entry(std::int64_t m) const {
  if (m >= zmin_ && m <= zmax()) return entries_[static_cast<std::size_t>(m - zmin_)];
  const std::int64_t v = tail_.at(m);
  return QSeries(v, v);
}

LaurentTheta LaurentTheta::substitute_shift(std::int64_t k) const {
  std::vector<QSeries> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.push_back(entries_[i].shift(k * (zmin_ + static_cast<std::int64_t>(i))));
  }
  TailBound t = tail_;
  t.b += 2 * k;
  return LaurentTheta(zmin_, std::move(out), t);
}

LaurentTheta LaurentTheta::times_monomial(std::int64_t z_power, std::int64_t q_power) const {
  std::vector<QSeries> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.shift(q_power));
  // at'(m) = at(m - e) + f
  TailBound t{tail_.a, tail_.b - 2 * tail_.a * z_power,
              tail_.c + tail_.a * z_power * z_power - tail_.b * z_power + 2 * q_power};
  return LaurentTheta(zmin_ + z_power, std::move(out), t);
}

LaurentTheta LaurentTheta::times_series(const QSeries& r) const {
  if (r.offset() < 0) throw DomainError("LaurentTheta::times_series: factor must be a power series");
  std::vector<QSeries> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e * r);
  TailBound t = tail_;
  t.c += 2 * r.valuation().value_or(r.order());
  return LaurentTheta(zmin_, std::move(out), t);
}

LaurentTheta LaurentTheta::operator+(const LaurentTheta& o) const {
  if (tail_.a != o.tail_.a || tail_.b != o.tail_.b) {
    throw std::logic_error("LaurentTheta: cannot add objects with differently shaped tail bounds");
  }
  const std::int64_t lo = std::min(zmin_, o.zmin_), hi = std::max(zmax(), o.zmax());
  std::vector<QSeries> out;
  for (std::int64_t m = lo; m <= hi; ++m) out.push_back(entry(m) + o.entry(m));
  return LaurentTheta(lo, std::move(out), TailBound{tail_.a, tail_.b, std::min(tail_.c, o.tail_.c)});
}

LaurentTheta LaurentTheta::operator-() const {
  std::vector<QSeries> out;
  for (const auto& e : entries_) out.push_back(-e);
  return LaurentTheta(zmin_, std::move(out), tail_);
}

QSeries LaurentTheta::evaluate(int sign, std::int64_t k) const {
  if (sign != 1 && sign != -1) throw DomainError("LaurentTheta::evaluate: sign must be +1 or -1");
  std::int64_t order = tail_.min_outside(zmin_, zmax(), k);
  std::int64_t offset = order;
  for (std::int64_t m = zmin_; m <= zmax(); ++m) {
    const auto& e = entries_[static_cast<std::size_t>(m - zmin_)];
    order = std::min(order, e.order() + k * m);
    offset = std::min(offset, e.offset() + k * m);
  }
  QSeries acc(order, std::min(offset, order));
  for (std::int64_t m = zmin_; m <= zmax(); ++m) {
    QSeries term = entries_[static_cast<std::size_t>(m - zmin_)].shift(k * m);
    if (sign < 0 && m % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

std::optional<ThetaDiscrepancy> first_discrepancy(const LaurentTheta& a, const LaurentTheta& b, std::int64_t n) {
  const std::int64_t lo = std::min(a.zmin(), b.zmin()), hi = std::max(a.zmax(), b.zmax());
  if (a.tail().min_outside(lo, hi) < n || b.tail().min_outside(lo, hi) < n) {
    throw std::logic_error("first_discrepancy: z-window too narrow for q-order " + std::to_string(n));
  }
  for (std::int64_t m = lo; m <= hi; ++m) {
    if (auto k = first_discrepancy(a.entry(m), b.entry(m), n)) return ThetaDiscrepancy{m, *k};
  }
  return std::nullopt;
}

std::pair<std::int64_t, std::int64_t> theta_window(std::int64_t order, std::int64_t k, std::int64_t extra) {
  auto inside = [&](std::int64_t m) { return theta_exponent(m) + k * m + extra < order; };
  const std::int64_t vertex = floor_div(-(9 + 2 * k), 18);
  std::int64_t lo = vertex, hi = vertex;
  if (!inside(vertex)) {
    if (inside(vertex + 1)) {
      lo = hi = vertex + 1;
    } else {
      return {1, 0};
    }
  }
  while (inside(lo - 1)) --lo;
  while (inside(hi + 1)) ++hi;
  return {lo, hi};
}

LaurentTheta s_j(int j, std::int64_t order, std::int64_t zmin, std::int64_t zmax) {
  const auto& reps = table1_vectors();
  if (j < 1 || j > static_cast<int>(reps.size())) throw DomainError("s_j: index must lie in 1..27");
  const NVector& rep = reps[static_cast<std::size_t>(j) - 1];
  std::vector<QSeries> entries;
  for (std::int64_t m = zmin; m <= zmax; ++m) entries.emplace_back(order);
  // 2|n|^2 + b.n >= 2|n|^2 - sqrt(14)|n|, so |n| < (sqrt(14) + sqrt(14 + 8N)) / 4.
  const double root14 = std::sqrt(14.0);
  const auto radius = static_cast<std::int64_t>(
      (root14 + std::sqrt(14.0 + 8.0 * static_cast<double>(std::max<std::int64_t>(order, 0)))) / 4.0) + 1;
  std::vector<std::int64_t> axis[4];
  for (int i = 0; i < 4; ++i) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      if (mod3(x) == mod3(rep[i])) axis[i].push_back(x);
    }
  }
  for (auto n0 : axis[0]) {
    for (auto n1 : axis[1]) {
      for (auto n2 : axis[2]) {
        for (auto n3 : axis[3]) {
          const std::int64_t e = 2 * (n0 * n0 + n1 * n1 + n2 * n2 + n3 * n3) + n1 + 2 * n2 + 3 * n3;
          if (e >= order) continue;
          const std::int64_t m = (n0 + n1 + n2 + n3) / 3;
          if (m < zmin || m > zmax) continue;
          entries[static_cast<std::size_t>(m - zmin)].add_to(e, 1);
        }
      }
    }
  }
  return LaurentTheta(zmin, std::move(entries), TailBound{});
}

LaurentTheta s_j(int j, std::int64_t order) {
  auto [lo, hi] = theta_window(order);
  return s_j(j, order, lo, hi);
}

LaurentTheta theta_factor(std::int64_t order, std::int64_t zmin, std::int64_t zmax) {
  std::vector<QSeries> entries;
  for (std::int64_t m = zmin; m <= zmax; ++m) entries.push_back(QSeries::monomial(1, theta_exponent(m), order));
  return LaurentTheta(zmin, std::move(entries), TailBound{});
}

LaurentTheta theta_factor(std::int64_t order) {
  auto [lo, hi] = theta_window(order);
  return theta_factor(order, lo, hi);
}

namespace {

// q-order each entry needs so that q^{k m + extra} F_m is known to `order`.
std::int64_t inner_order(std::int64_t lo, std::int64_t hi, std::int64_t k, std::int64_t extra, std::int64_t order) {
  std::int64_t need = order;
  for (std::int64_t m = lo; m <= hi; ++m) need = std::max(need, order - k * m - extra);
  return need;
}

}  // namespace

LaurentTheta s_j_for_shift(int j, std::int64_t k, std::int64_t extra, std::int64_t order) {
  auto [lo, hi] = theta_window(order, k, extra);
  return s_j(j, inner_order(lo, hi, k, extra, order), lo, hi);
}

LaurentTheta theta_factor_for_shift(std::int64_t k, std::int64_t extra, std::int64_t order) {
  auto [lo, hi] = theta_window(order, k, extra);
  return theta_factor(inner_order(lo, hi, k, extra, order), lo, hi);
}

QSeries s_j_at(int j, int sign, std::int64_t k, std::int64_t order) {
  QSeries v = s_j_for_shift(j, k, 0, order).evaluate(sign, k);
  if (v.order() < order) throw std::logic_error("s_j_at: evaluation lost precision");
  return v.truncated(order);
}

QSeries theta_factor_at(int sign, std::int64_t k, std::int64_t order) {
  QSeries v = theta_factor_for_shift(k, 0, order).evaluate(sign, k);
  if (v.order() < order) throw std::logic_error("theta_factor_at: evaluation lost precision");
  return v.truncated(order);
}

}  // namespace tcore
