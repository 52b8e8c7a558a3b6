#include "tcore/cyclotomic.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "tcore/partition.hpp"

namespace tcore {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Remainder of p modulo the monic polynomial f (in place, integer coefficients).
template <typename T>
void reduce_mod_monic(std::vector<T>& p, const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    T c = p[k];
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] -= c * f[i];
    p[k] = 0;
  }
  p.resize(d, T(0));
}

void reduce_checked(IntPoly& p, const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    std::int64_t c = p[k];
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] = checked_add(p[k - d + i], -checked_mul(c, f[i]));
    p[k] = 0;
  }
  p.resize(d, 0);
}

// Exact quotient of a by the monic polynomial f; throws if the remainder is nonzero.
IntPoly divide_monic(IntPoly a, const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  if (a.size() < f.size()) throw std::logic_error("divide_monic: dividend degree too small");
  IntPoly q(a.size() - d, 0);
  for (std::size_t k = a.size(); k-- > d;) {
    std::int64_t c = a[k];
    q[k - d] = c;
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * f[i];
  }
  for (auto x : a) {
    if (x != 0) throw std::logic_error("divide_monic: nonzero remainder");
  }
  return q;
}

void require_ring_modulus(int s) {
  if (s < 1) throw DomainError("cyclotomic modulus must be >= 1, got " + std::to_string(s));
}

// Polynomial products in Z[w_s], reduced.
template <typename T>
std::vector<T> mul_reduce(const std::vector<T>& a, const std::vector<T>& b, const IntPoly& f) {
  std::vector<T> out(a.size() + b.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  reduce_mod_monic(out, f);
  return out;
}

}  // namespace

int gcd(int a, int b) { return std::gcd(a, b); }

int euler_phi(int s) {
  require_ring_modulus(s);
  int result = s;
  int n = s;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(int s) { return s >= 2 && smallest_prime_factor(s) == s; }

int smallest_prime_factor(int s) {
  if (s < 2) throw DomainError("smallest_prime_factor: argument must be >= 2");
  for (int p = 2; p * p <= s; ++p) {
    if (s % p == 0) return p;
  }
  return s;
}

const IntPoly& cyclotomic_polynomial(int s) {
  require_ring_modulus(s);
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(s) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(s)] = 1;
  for (int d = 1; d < s; ++d) {
    if (s % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(s, std::move(poly)).first->second;
}

CycInt::CycInt(int s) : s_(s) {
  require_ring_modulus(s);
  c_.assign(static_cast<std::size_t>(euler_phi(s)), 0);
}

CycInt CycInt::integer(int s, std::int64_t value) {
  CycInt out(s);
  out.c_[0] = value;
  return out;
}

CycInt CycInt::root_power(int s, std::int64_t k) {
  require_ring_modulus(s);
  IntPoly p(static_cast<std::size_t>(s), 0);
  p[static_cast<std::size_t>(mod(k, s))] = 1;
  return from_poly(s, std::move(p));
}

CycInt CycInt::from_poly(int s, IntPoly poly) {
  CycInt out(s);
  reduce_checked(poly, cyclotomic_polynomial(s));
  out.c_ = std::move(poly);
  return out;
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

bool CycInt::is_rational_integer() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](auto x) { return x == 0; });
}

void CycInt::check_same_ring(const CycInt& o) const {
  if (s_ != o.s_) {
    throw DomainError("CycInt modulus mismatch: " + std::to_string(s_) + " vs " + std::to_string(o.s_));
  }
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_same_ring(o);
  IntPoly prod(c_.size() + o.c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  reduce_checked(prod, cyclotomic_polynomial(s_));
  c_ = std::move(prod);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycInt CycInt::galois(int m) const {
  if (gcd(m, s_) != 1) throw DomainError("galois: exponent must be coprime to the modulus");
  IntPoly p(static_cast<std::size_t>(s_), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    auto idx = static_cast<std::size_t>(mod(static_cast<std::int64_t>(k) * m, s_));
    p[idx] = checked_add(p[idx], c_[k]);
  }
  return from_poly(s_, std::move(p));
}

std::string CycInt::pretty(char symbol) const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t c = c_[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k == 1) mono = std::string(1, symbol);
    if (k > 1) mono = std::string(1, symbol) + "^" + std::to_string(k);
    if (k == 0 || mag != 1) out += std::to_string(mag);
    out += mono;
  }
  return out.empty() ? "0" : out;
}

CycInt exact_divide(const CycInt& a, const CycInt& b) {
  const int s = a.modulus();
  if (b.modulus() != s) throw DomainError("exact_divide: modulus mismatch");
  if (b.is_zero()) throw DomainError("exact_divide: division by zero");
  // a / b = a * c / N(b), where c is the product of the other Galois
  // conjugates of b and N(b) = b * c is a rational integer.
  CycInt c = CycInt::integer(s, 1);
  for (int m = 2; m < s; ++m) {
    if (gcd(m, s) == 1) c *= b.galois(m);
  }
  CycInt norm = b * c;
  if (!norm.is_rational_integer()) throw std::logic_error("exact_divide: norm is not rational");
  const std::int64_t n = norm.coeffs()[0];
  CycInt num = a * c;
  IntPoly q(num.coeffs().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (num.coeffs()[i] % n != 0) throw DomainError("exact_divide: quotient is not in Z[w_" + std::to_string(s) + "]");
    q[i] = num.coeffs()[i] / n;
  }
  return CycInt::from_poly(s, std::move(q));
}

ExponentVector::ExponentVector(int s, std::vector<int> exps) : s_(s), exps_(std::move(exps)) {
  require_ring_modulus(s);
  for (int j : exps_) {
    if (j < 0 || j >= s) throw DomainError("exponent " + std::to_string(j) + " outside [0, s-1]");
  }
  std::sort(exps_.begin(), exps_.end());
}

ExponentVector ExponentVector::inverse() const {
  std::vector<int> inv;
  inv.reserve(exps_.size());
  for (int j : exps_) inv.push_back(static_cast<int>(mod(-j, s_)));
  return ExponentVector(s_, std::move(inv));
}

CycInt power_sum(const ExponentVector& v, int k) {
  CycInt out(v.s());
  for (int j : v.exps()) out += CycInt::root_power(v.s(), static_cast<std::int64_t>(k) * j);
  return out;
}

CycInt elementary_symmetric(const ExponentVector& v, int k) {
  if (k < 0 || k > v.t()) throw DomainError("elementary_symmetric: k out of range");
  std::vector<CycInt> e(static_cast<std::size_t>(v.t()) + 1, CycInt(v.s()));
  e[0] = CycInt::integer(v.s(), 1);
  int filled = 0;
  for (int j : v.exps()) {
    CycInt x = CycInt::root_power(v.s(), j);
    ++filled;
    for (int i = filled; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i) - 1] * x;
  }
  return e[static_cast<std::size_t>(k)];
}

namespace {

using RatPoly = std::vector<Rational>;

RatPoly to_rational(const CycInt& x) { return RatPoly(x.coeffs().begin(), x.coeffs().end()); }

// sigma_1..sigma_kmax from h_1..h_kmax by Newton's recursion; nullopt-like
// failure is reported by returning false when a coefficient is not integral.
bool newton_sigmas(int s, const std::vector<CycInt>& h, std::vector<CycInt>& sigmas) {
  const IntPoly& f = cyclotomic_polynomial(s);
  std::vector<RatPoly> sig{to_rational(CycInt::integer(s, 1))};
  std::vector<RatPoly> hr;
  for (const auto& x : h) hr.push_back(to_rational(x));
  bool integral = true;
  sigmas.clear();
  for (std::size_t k = 1; k <= h.size(); ++k) {
    RatPoly acc(static_cast<std::size_t>(euler_phi(s)), Rational(0));
    for (std::size_t i = 1; i <= k; ++i) {
      RatPoly term = mul_reduce(sig[k - i], hr[i - 1], f);
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += (i % 2 == 1) ? term[c] : -term[c];
    }
    IntPoly coeffs;
    for (auto& c : acc) {
      c /= static_cast<long long>(k);
      if (denominator(c) != 1) integral = false;
      coeffs.push_back(integral ? static_cast<std::int64_t>(numerator(c)) : 0);
    }
    sig.push_back(acc);
    sigmas.push_back(CycInt::from_poly(s, std::move(coeffs)));
  }
  return integral;
}

void require_same_shape(const ExponentVector& a, const ExponentVector& b, const char* what) {
  if (a.s() != b.s() || a.t() != b.t()) throw DomainError(std::string(what) + ": exponent vectors differ in shape");
}

}  // namespace

NewtonReport newton_identities_check(const ExponentVector& v, const ExponentVector& w, int kmax) {
  require_same_shape(v, w, "newton_identities_check");
  if (kmax < 1) throw DomainError("newton_identities_check: kmax must be >= 1");
  NewtonReport r;
  for (int k = 1; k <= kmax; ++k) {
    r.power_sums_v.push_back(power_sum(v, k));
    r.power_sums_w.push_back(power_sum(w, k));
  }
  bool ok_v = newton_sigmas(v.s(), r.power_sums_v, r.sigmas_v);
  bool ok_w = newton_sigmas(w.s(), r.power_sums_w, r.sigmas_w);
  r.recursion_consistent = ok_v && ok_w;
  for (int k = 1; k <= kmax && r.recursion_consistent; ++k) {
    CycInt direct_v = k <= v.t() ? elementary_symmetric(v, k) : CycInt(v.s());
    CycInt direct_w = k <= w.t() ? elementary_symmetric(w, k) : CycInt(w.s());
    if (direct_v != r.sigmas_v[static_cast<std::size_t>(k) - 1] ||
        direct_w != r.sigmas_w[static_cast<std::size_t>(k) - 1]) {
      r.recursion_consistent = false;
    }
  }
  r.power_sums_equal = r.power_sums_v == r.power_sums_w;
  r.sigmas_equal = r.sigmas_v == r.sigmas_w;
  r.holds = r.recursion_consistent && (!r.power_sums_equal || r.sigmas_equal);
  return r;
}

bool sigma_star_relation_check(const ExponentVector& v, int k) {
  const int t = v.t();
  if (k < 1 || k > t - 1) throw DomainError("sigma_star_relation_check: k must lie in [1, t-1]");
  return elementary_symmetric(v, t) * elementary_symmetric(v.inverse(), k) == elementary_symmetric(v, t - k);
}

bool root_conditions_hold(const ExponentVector& j, const ExponentVector& jt) {
  require_same_shape(j, jt, "root_conditions_hold");
  const int s = j.s();
  auto exp_sum = [s](const ExponentVector& v) {
    std::int64_t total = 0;
    for (int x : v.exps()) total += x;
    return mod(total, s);
  };
  return power_sum(j, 1) == power_sum(jt, 1) && exp_sum(j) == exp_sum(jt);
}

LemmaDecision lemma14_decide(const ExponentVector& j, const ExponentVector& jt) {
  require_same_shape(j, jt, "lemma14_decide");
  if (gcd(j.s(), j.t()) != 1) {
    throw DomainError("lemma14_decide: requires gcd(s, t) = 1, got s=" + std::to_string(j.s()) +
                      " t=" + std::to_string(j.t()));
  }
  return {root_conditions_hold(j, jt), j == jt};
}

bool roots_determined(int s, int t) {
  if (s < 2) throw DomainError("roots_determined: s must be >= 2");
  return is_prime(s) || t < 2 * smallest_prime_factor(s);
}

std::pair<ExponentVector, ExponentVector> counterexample_family(int s, int t) {
  if (s < 4 || is_prime(s)) throw DomainError("counterexample_family: s must be composite");
  const int p = smallest_prime_factor(s);
  std::vector<int> j, jt;
  if (s == 4) {
    j = {1, 1, 3, 3};
    jt = {0, 0, 2, 2};
  } else if (s == 6) {
    j = {1, 1, 4, 4};
    jt = {0, 2, 3, 5};
  } else if (s == 9) {
    j = {3, 3, 6, 6};
    jt = {1, 2, 4, 5, 7, 8};
  } else {
    // s > 3 p_s here, so the largest entry 3 + (s/p)(p-1) stays below s.
    const int step = s / p;
    for (int k = 0; k < p; ++k) {
      j.insert(j.end(), {2 + step * k, 2 + step * k});
      jt.insert(jt.end(), {1 + step * k, 3 + step * k});
    }
  }
  const auto base = static_cast<int>(std::max(j.size(), jt.size()));
  if (t < 2 * p || t < base) {
    throw DomainError("counterexample_family: need t >= " + std::to_string(std::max(2 * p, base)) +
                      " for s=" + std::to_string(s));
  }
  j.insert(j.begin(), static_cast<std::size_t>(t) - j.size(), 0);
  jt.insert(jt.begin(), static_cast<std::size_t>(t) - jt.size(), 0);
  ExponentVector a(s, std::move(j)), b(s, std::move(jt));
  if (a == b || !root_conditions_hold(a, b)) {
    throw std::logic_error("counterexample_family: construction failed for s=" + std::to_string(s));
  }
  return {std::move(a), std::move(b)};
}

}  // namespace tcore
