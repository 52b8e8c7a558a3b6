#include "tcore/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcore {

namespace {

const BigInt& zero_big() {
  static const BigInt z = 0;
  return z;
}

// In-place multiplication of a power series (offset 0) by (1 - c q^e).
void mul_binomial(QSeries& f, int c, std::int64_t e) {
  if (e == 0) {
    f = f.scaled(BigInt(1 - c));
    return;
  }
  for (std::int64_t k = f.order() - 1; k >= e; --k) {
    const BigInt& prev = f.coeff(k - e);
    if (prev != 0) f.add_to(k, -c * prev);
  }
}

}  // namespace

QSeries::QSeries(std::int64_t order, std::int64_t offset)
    : order_(order), offset_(offset), c_(static_cast<std::size_t>(std::max<std::int64_t>(0, order - offset))) {}

QSeries QSeries::one(std::int64_t order) {
  QSeries f(order);
  if (order > 0) f.c_[0] = 1;
  return f;
}

QSeries QSeries::monomial(BigInt coeff, std::int64_t exponent, std::int64_t order) {
  if (exponent >= order) return QSeries(order, order);
  QSeries f(order, exponent);
  f.c_[0] = std::move(coeff);
  return f;
}

QSeries QSeries::from_coeffs(std::vector<BigInt> coeffs, std::int64_t offset) {
  QSeries f(offset + static_cast<std::int64_t>(coeffs.size()), offset);
  f.c_ = std::move(coeffs);
  return f;
}

const BigInt& QSeries::coeff(std::int64_t k) const {
  if (k >= order_) {
    throw std::out_of_range("QSeries::coeff: q^" + std::to_string(k) + " is beyond the known order " +
                            std::to_string(order_));
  }
  if (k < offset_) return zero_big();
  return c_[static_cast<std::size_t>(k - offset_)];
}

void QSeries::add_to(std::int64_t k, const BigInt& v) {
  if (k < offset_ || k >= order_) throw std::out_of_range("QSeries::add_to: exponent outside stored range");
  c_[static_cast<std::size_t>(k - offset_)] += v;
}

std::optional<std::int64_t> QSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return offset_ + static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

QSeries QSeries::truncated(std::int64_t order) const {
  QSeries f(std::min(order, order_), offset_);
  for (std::size_t i = 0; i < f.c_.size(); ++i) f.c_[i] = c_[i];
  return f;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  QSeries out(std::min(order_, o.order_), std::min(offset_, o.offset_));
  for (std::int64_t k = out.offset_; k < out.order_; ++k) {
    out.c_[static_cast<std::size_t>(k - out.offset_)] = coeff(k) + o.coeff(k);
  }
  return *this = std::move(out);
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::int64_t order = std::min(a.offset_ + b.order_, b.offset_ + a.order_);
  QSeries out(order, a.offset_ + b.offset_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const std::int64_t ei = a.offset_ + static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const std::int64_t k = ei + b.offset_ + static_cast<std::int64_t>(j);
      if (k >= order) break;
      if (b.c_[j] != 0) out.c_[static_cast<std::size_t>(k - out.offset_)] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

QSeries QSeries::operator-() const { return scaled(BigInt(-1)); }

QSeries QSeries::scaled(const BigInt& c) const {
  QSeries out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

QSeries QSeries::inverse() const {
  auto v = valuation();
  if (!v) throw DomainError("QSeries::inverse: series is zero to known precision");
  const BigInt& lead = coeff(*v);
  if (lead != 1 && lead != -1) throw DomainError("QSeries::inverse: leading coefficient must be a unit");
  const std::int64_t rel = order_ - *v;
  std::vector<BigInt> w(static_cast<std::size_t>(rel));
  w[0] = lead;
  for (std::int64_t k = 1; k < rel; ++k) {
    BigInt acc = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
      const BigInt& u = coeff(*v + i);
      if (u != 0) acc += u * w[static_cast<std::size_t>(k - i)];
    }
    w[static_cast<std::size_t>(k)] = -lead * acc;
  }
  return from_coeffs(std::move(w), -*v);
}

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries result = one(order_ - offset_);
  QSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QSeries QSeries::dilate(int m) const {
  if (m < 1) throw DomainError("QSeries::dilate: factor must be >= 1");
  QSeries out(order_ * m, offset_ * m);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<std::size_t>(m)] = c_[i];
  return out;
}

QSeries QSeries::shift(std::int64_t a) const {
  QSeries out = *this;
  out.offset_ += a;
  out.order_ += a;
  return out;
}

std::string QSeries::to_string(std::int64_t display_order) const {
  std::string out;
  const std::int64_t upto = std::min(display_order, order_);
  for (std::int64_t k = offset_; k < upto; ++k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k == 1) out += "q";
    if (k != 0 && k != 1) out += "q^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  if (upto == order_) {
    out += " + O(q^" + std::to_string(order_) + ")";
  } else {
    out += " + ...";
  }
  return out;
}

std::optional<std::int64_t> first_discrepancy(const QSeries& a, const QSeries& b, std::int64_t n) {
  if (a.order() < n || b.order() < n) {
    throw std::logic_error("first_discrepancy: series known only to order " +
                           std::to_string(std::min(a.order(), b.order())) + " < " + std::to_string(n));
  }
  for (std::int64_t k = std::min(a.offset(), b.offset()); k < n; ++k) {
    if (a.coeff(k) != b.coeff(k)) return k;
  }
  return std::nullopt;
}

QSeries euler_dilated(int m, std::int64_t n) {
  if (m < 1) throw DomainError("euler_dilated: m must be >= 1");
  QSeries f = QSeries::one(n);
  for (std::int64_t j = 1; m * j < n; ++j) mul_binomial(f, 1, m * j);
  return f;
}

QSeries euler(std::int64_t n) { return euler_dilated(1, n); }

QSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t n) {
  const std::int64_t inner = n - spec.leading_power;
  QSeries f = QSeries::one(std::max<std::int64_t>(inner, 0));
  for (const auto& factor : spec.factors) {
    if (factor.m < 1) throw DomainError("eta_quotient: dilation must be >= 1");
    f = f * euler_dilated(factor.m, inner).pow(factor.e);
  }
  return f.shift(spec.leading_power).truncated(n);
}

QSeries G_t_eta(int t, std::int64_t n) { return eta_quotient({{{t, t}, {1, -1}}, 0}, n); }

QSeries G_t_theta(int t, std::int64_t n) {
  QSeries f(n);
  for (const auto& entry : t_cores_below(t, n)) f.add_to(entry.norm, 1);
  return f;
}

const std::vector<GbgValue>& four_core_gbg_values() {
  static const std::vector<GbgValue> values = {
      CycInt::integer(3, -1),
      CycInt::integer(3, 0),
      CycInt::integer(3, 1),
      -CycInt::root_power(3, 1),
      -CycInt::root_power(3, 2),
  };
  return values;
}

QSeries g_c_enumerated(const GbgValue& c, std::int64_t n) {
  const auto& allowed = four_core_gbg_values();
  if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) {
    throw DomainError("g_c_enumerated: " + c.pretty() + " is not a GBG value of 4-cores mod 3");
  }
  QSeries f(n);
  for (const auto& entry : t_cores_below(4, n)) {
    if (gbg_direct(entry.core, 3) == c) f.add_to(entry.norm, 1);
  }
  return f;
}

QSeries bracket(int sign, int a, int m, std::int64_t n) {
  if (sign != 1 && sign != -1) throw DomainError("bracket: sign must be +1 or -1");
  if (m < 1 || a < 0 || a > m) throw DomainError("bracket: need 0 <= a <= m for a power series");
  QSeries f = QSeries::one(n);
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t e1 = a + m * j, e2 = m * (j + 1) - a;
    if (e1 >= n && e2 >= n) break;
    if (e1 < n) mul_binomial(f, sign, e1);
    if (e2 < n) mul_binomial(f, sign, e2);
  }
  return f;
}

QSeries bracket_product(const std::vector<int>& as, int m, std::int64_t n) {
  QSeries f = QSeries::one(n);
  for (int a : as) f = f * bracket(1, a, m, n);
  return f;
}

IdentityReport jacobi_triple_check(int sign, int a, int m, std::int64_t n) {
  if (m < 1 || std::abs(a) > m) throw DomainError("jacobi_triple_check: need |a| <= m");
  QSeries lhs(n);
  const auto kmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n) / m)) + 2;
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const std::int64_t e = m * k * k + a * k;
    if (e >= n) continue;
    // coefficient (-sign)^k
    const bool negative = (k % 2 != 0) && sign > 0;
    lhs.add_to(e, negative ? -1 : 1);
  }
  QSeries rhs = euler_dilated(2 * m, n) * bracket(sign, a + m, 2 * m, n);
  IdentityReport r;
  r.id = "4.15";
  r.order = n;
  r.first_discrepancy = first_discrepancy(lhs, rhs, n);
  r.holds = !r.first_discrepancy;
  r.detail = "z = " + std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(a) + ", q -> q^" + std::to_string(m);
  return r;
}

}  // namespace tcore
