#include "tcore/identities.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "tcore/theta.hpp"

namespace tcore {

namespace {

using Factors = std::vector<EtaQuotientSpec::Factor>;

// Right-hand sides of the 4-core generating functions.
const EtaQuotientSpec kG4{{{4, 4}, {1, -1}}, 0};
const EtaQuotientSpec kGMinusOne{{{36, 4}, {9, -1}}, 5};
const EtaQuotientSpec kR1{{{6, 6}, {18, 2}, {3, -3}, {12, -1}, {36, -1}}, 0};
const EtaQuotientSpec kR2{{{9, 2}, {12, 4}, {3, -1}, {6, -1}, {18, -1}}, 1};
const EtaQuotientSpec kROmega{{{9, 2}, {12, 1}, {36, 1}, {3, -1}}, 2};
const EtaQuotientSpec kBracketRhs30{{{6, 2}, {2, 6}, {12, -5}, {4, -1}, {1, -2}}, 0};
const EtaQuotientSpec kBracketRhs37{{{4, 4}, {3, 2}, {12, -4}, {6, -1}, {2, -1}}, 0};

IdentityReport compare(const std::string& id, std::int64_t order, const QSeries& lhs, const QSeries& rhs,
                       std::string detail = {}) {
  IdentityReport r;
  r.id = id;
  r.order = order;
  r.first_discrepancy = first_discrepancy(lhs, rhs, order);
  r.holds = !r.first_discrepancy;
  r.detail = std::move(detail);
  return r;
}

IdentityReport compare(const std::string& id, std::int64_t order, const LaurentTheta& lhs, const LaurentTheta& rhs,
                       std::string detail = {}) {
  IdentityReport r;
  r.id = id;
  r.order = order;
  if (auto d = first_discrepancy(lhs, rhs, order)) {
    r.first_discrepancy = d->q_power;
    detail += (detail.empty() ? "" : "; ") + std::string("mismatch at z^") + std::to_string(d->z_power);
  }
  r.holds = !r.first_discrepancy;
  r.detail = std::move(detail);
  return r;
}

// Combines sub-reports: holds iff all hold; the first failing one supplies the
// discrepancy and detail.
IdentityReport combine(const std::string& id, std::int64_t order, const std::vector<IdentityReport>& parts) {
  IdentityReport r;
  r.id = id;
  r.order = order;
  r.holds = true;
  for (const auto& p : parts) {
    if (!p.holds) {
      r.holds = false;
      r.first_discrepancy = p.first_discrepancy;
      r.detail = p.detail;
      break;
    }
  }
  if (r.holds) r.detail = std::to_string(parts.size()) + " sub-checks";
  return r;
}

QSeries q_times(const QSeries& f, std::int64_t k, std::int64_t order) { return f.shift(k).truncated(order); }

QSeries B(int a, std::int64_t n) { return bracket(1, a, 12, n); }
QSeries Bs(const std::vector<int>& as, std::int64_t n) { return bracket_product(as, 12, n); }

QSeries sum_at(const std::vector<int>& js, int sign, std::int64_t k, std::int64_t order) {
  QSeries acc(order);
  for (int j : js) acc += s_j_at(j, sign, k, order);
  return acc;
}

// R(q) * Theta(sign q^k), with R expanded far enough to cover the Laurent part of Theta.
QSeries eta_times_theta_at(const EtaQuotientSpec& r, int sign, std::int64_t k, std::int64_t order) {
  QSeries th = theta_factor_at(sign, k, order);
  const std::int64_t low = std::min<std::int64_t>(th.offset(), 0);
  QSeries prod = eta_quotient(r, order - low) * th;
  return prod.truncated(order);
}

LaurentTheta theta_sum(int first, int last, std::int64_t order) {
  LaurentTheta acc = s_j(first, order);
  for (int j = first + 1; j <= last; ++j) acc = acc + s_j(j, order);
  return acc;
}

QSeries g(int index, std::int64_t n) { return g_c_enumerated(four_core_gbg_values()[static_cast<std::size_t>(index)], n); }

// ---- q-series identities ----

IdentityReport check_4_5(std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (int t = 2; t <= 5; ++t) {
    parts.push_back(compare("4.5", n, G_t_theta(t, n), G_t_eta(t, n), "t=" + std::to_string(t)));
  }
  return combine("4.5", n, parts);
}

IdentityReport check_4_7(std::int64_t n) {
  QSeries total(n);
  for (std::size_t c = 0; c < four_core_gbg_values().size(); ++c) total += g(static_cast<int>(c), n);
  return compare("4.7", n, eta_quotient(kG4, n), total);
}

IdentityReport check_4_13(std::int64_t n) {
  QSeries rhs = eta_quotient(kR1, n) + eta_quotient(kR2, n) + eta_quotient(kROmega, n).scaled(2) +
                eta_quotient(kGMinusOne, n);
  return compare("4.13", n, eta_quotient(kG4, n), rhs);
}

IdentityReport check_4_14(std::int64_t n) {
  QSeries enumerated = g(0, n);
  QSeries eta = eta_quotient(kGMinusOne, n);
  // q^5 G_4(q^9), with G_4 taken as the lattice sum.
  QSeries relabelled = q_times(G_t_theta(4, n / 9 + 1).dilate(9), 5, n);
  return combine("4.14", n,
                 {compare("4.14", n, enumerated, eta, "enumeration vs eta-quotient"),
                  compare("4.14", n, eta, relabelled, "eta-quotient vs dilated lattice sum")});
}

IdentityReport check_4_15(std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (int m = 1; m <= 3; ++m) {
    for (int a = -m; a <= m; ++a) {
      for (int sign : {1, -1}) parts.push_back(jacobi_triple_check(sign, a, m, n));
    }
  }
  return combine("4.15", n, parts);
}

IdentityReport check_4_17(std::int64_t n) {
  QSeries lhs = Bs({2, 3}, n) * (B(5, n) - q_times(B(1, n), 1, n));
  return compare("4.17", n, lhs, Bs({1, 5, 6}, n));
}

IdentityReport check_4_18(std::int64_t n) {
  QSeries lhs = B(5, n) + q_times(B(1, n), 1, n);
  QSeries rhs = Bs({2, 2, 4, 6}, n) * Bs({1, 3, 5}, n).inverse();
  return compare("4.18", n, lhs, rhs);
}

IdentityReport check_4_19(std::int64_t n) {
  QSeries lhs = Bs({3, 4}, n).pow(2);
  QSeries rhs = Bs({1, 5, 6, 6}, n) + q_times(Bs({2, 3}, n).pow(2), 1, n);
  return compare("4.19", n, lhs, rhs);
}

IdentityReport check_4_30(std::int64_t n) {
  QSeries lhs = Bs({4, 5, 5, 6}, n) + q_times(Bs({2, 3, 4}, n) * (B(5, n) - q_times(B(1, n), 1, n)), 1, n) +
                q_times(Bs({1, 4, 5, 6}, n), 1, n) + q_times(Bs({1, 1, 4, 6}, n), 2, n);
  return compare("4.30", n, lhs, eta_quotient(kBracketRhs30, n));
}

IdentityReport check_4_31(std::int64_t n) {
  QSeries lhs = Bs({4, 6}, n) * (B(5, n) + q_times(B(1, n), 1, n)).pow(2);
  return compare("4.31", n, lhs, eta_quotient(kBracketRhs30, n));
}

IdentityReport check_4_32(std::int64_t n) {
  QSeries lhs = B(2, n).pow(4) * Bs({4, 6}, n).pow(3) * Bs({1, 3, 5}, n).pow(-2);
  return compare("4.32", n, lhs, eta_quotient(kBracketRhs30, n));
}

IdentityReport check_4_37(std::int64_t n) {
  QSeries lhs = Bs({3, 4, 6}, n) * (B(5, n) - q_times(B(1, n), 1, n)) + q_times(Bs({2, 3, 3, 4}, n), 1, n);
  return compare("4.37", n, lhs, eta_quotient(kBracketRhs37, n));
}

IdentityReport check_4_38(std::int64_t n) {
  QSeries lhs = Bs({1, 5, 6, 6}, n) + q_times(Bs({2, 3}, n).pow(2), 1, n);
  QSeries rhs = eta_quotient(kBracketRhs37, n) * B(2, n) * B(4, n).inverse();
  return compare("4.38", n, lhs, rhs);
}

IdentityReport check_4_20(std::int64_t n) {
  QSeries constant(n);
  for (int j = 2; j <= 13; ++j) constant += s_j(j, n).entry(0);
  return compare("4.20", n, constant, eta_quotient(kR1, n));
}

// ---- bivariate identities ----

IdentityReport check_bivariate(const std::string& id, int first, int last, const EtaQuotientSpec& r, std::int64_t n) {
  return compare(id, n, theta_sum(first, last, n), theta_factor(n).times_series(eta_quotient(r, n)),
                 "s_" + std::to_string(first) + "..s_" + std::to_string(last));
}

IdentityReport check_4_39(std::int64_t n) {
  return combine("4.39", n,
                 {check_bivariate("4.39", 20, 23, kROmega, n), check_bivariate("4.39", 24, 27, kROmega, n)});
}

IdentityReport check_pairs(const std::string& id, int family, std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (auto [i, j] : functional_pairs(family)) parts.push_back(functional_equation_check(i, j, n));
  auto r = combine(id, n, parts);
  return r;
}

IdentityReport check_4_25(std::int64_t n) {
  LaurentTheta lhs = theta_factor_for_shift(9, 9, n).substitute_shift(9).times_monomial(1, 9);
  return compare("4.25", n, lhs, theta_factor(n));
}

// ---- evaluation points ----

IdentityReport vanish(const std::string& id, const std::vector<std::vector<int>>& groups, int sign, std::int64_t k,
                      std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (const auto& js : groups) {
    std::string label;
    for (int j : js) label += (label.empty() ? "s_" : "+s_") + std::to_string(j);
    label += " at z=" + std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(k);
    parts.push_back(compare(id, n, sum_at(js, sign, k, n), QSeries(n), label));
  }
  return combine(id, n, parts);
}

IdentityReport check_4_29(std::int64_t n) {
  return compare("4.29", n, sum_at({2, 6, 7, 10, 13}, -1, -6, n), eta_times_theta_at(kR1, -1, -6, n));
}

IdentityReport check_4_36(std::int64_t n) {
  return compare("4.36", n, sum_at({16, 17, 18}, -1, -3, n), eta_times_theta_at(kR2, -1, -3, n));
}

std::int64_t tail_point(int alpha) { return 6 * (1 - 2 * alpha); }

IdentityReport check_4_39z(std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (int alpha : {0, 1}) {
    parts.push_back(vanish("4.39z", {{20 + 4 * alpha}, {21 + 4 * alpha}, {22 + 4 * alpha}}, -1, tail_point(alpha), n));
  }
  return combine("4.39z", n, parts);
}

IdentityReport check_4_39v(std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (int alpha : {0, 1}) {
    const int j = 23 + 4 * alpha;
    QSeries lhs = s_j_at(j, -1, tail_point(alpha), n);
    QSeries rhs = eta_quotient({{{9, 2}, {12, 1}, {36, 1}}, 6 * alpha - 4}, n).scaled(alpha == 0 ? -1 : 1);
    parts.push_back(compare("4.39v", n, lhs, rhs, "s_" + std::to_string(j)));
  }
  return combine("4.39v", n, parts);
}

IdentityReport check_4_39e(std::int64_t n) {
  std::vector<IdentityReport> parts;
  for (int alpha : {0, 1}) {
    const int first = 20 + 4 * alpha;
    parts.push_back(compare("4.39e", n, sum_at({first, first + 1, first + 2, first + 3}, -1, tail_point(alpha), n),
                            eta_times_theta_at(kROmega, -1, tail_point(alpha), n),
                            "alpha=" + std::to_string(alpha)));
  }
  return combine("4.39e", n, parts);
}

struct Entry {
  std::string id;
  std::function<IdentityReport(std::int64_t)> run;
  bool evaluation = false;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"4.5", check_4_5},
      {"4.7", check_4_7},
      {"4.8", [](std::int64_t n) { return compare("4.8", n, g(0, n), eta_quotient(kGMinusOne, n)); }},
      {"4.9", [](std::int64_t n) { return compare("4.9", n, g(1, n), eta_quotient(kR1, n)); }},
      {"4.10", [](std::int64_t n) { return compare("4.10", n, g(2, n), eta_quotient(kR2, n)); }},
      {"4.11", [](std::int64_t n) { return compare("4.11", n, g(3, n), eta_quotient(kROmega, n)); }},
      {"4.12", [](std::int64_t n) { return compare("4.12", n, g(4, n), eta_quotient(kROmega, n)); }},
      {"4.13", check_4_13},
      {"4.14", check_4_14},
      {"4.15", check_4_15},
      {"4.17", check_4_17},
      {"4.18", check_4_18},
      {"4.19", check_4_19},
      {"4.20", check_4_20},
      {"4.22", [](std::int64_t n) { return check_bivariate("4.22", 2, 13, kR1, n); }},
      {"4.24", [](std::int64_t n) { return check_pairs("4.24", 1, n); }},
      {"4.24b", [](std::int64_t n) { return check_pairs("4.24b", 2, n); }},
      {"4.24c", [](std::int64_t n) { return check_pairs("4.24c", 3, n); }},
      {"4.25", check_4_25},
      {"4.27", [](std::int64_t n) { return vanish("4.27", {{4}, {8}, {11}}, -1, -6, n); }, true},
      {"4.28", [](std::int64_t n) { return vanish("4.28", {{3, 9}, {5, 12}}, -1, -6, n); }, true},
      {"4.29", check_4_29, true},
      {"4.30", check_4_30},
      {"4.31", check_4_31},
      {"4.32", check_4_32},
      {"4.33", [](std::int64_t n) { return check_bivariate("4.33", 14, 19, kR2, n); }},
      {"4.35", [](std::int64_t n) { return vanish("4.35", {{14}, {15}, {19}}, -1, -3, n); }, true},
      {"4.36", check_4_36, true},
      {"4.37", check_4_37},
      {"4.38", check_4_38},
      {"4.39", check_4_39},
      {"4.39z", check_4_39z, true},
      {"4.39v", check_4_39v, true},
      {"4.39e", check_4_39e, true},
  };
  return entries;
}

const Entry& lookup(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw DomainError("unknown identity id '" + id + "'");
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

IdentityReport check_identity(const std::string& id, std::int64_t order) {
  if (order < 2) throw DomainError("check_identity: order must be >= 2");
  return lookup(id).run(order);
}

IdentityReport evaluation_check(const std::string& id, std::int64_t order) {
  const Entry& e = lookup(id);
  if (!e.evaluation) throw DomainError("'" + id + "' is not an evaluation-point identity");
  if (order < 2) throw DomainError("evaluation_check: order must be >= 2");
  return e.run(order);
}

IdentityReport functional_equation_check(int i, int j, std::int64_t order) {
  LaurentTheta lhs = s_j_for_shift(i, 9, 9, order).substitute_shift(9).times_monomial(1, 9);
  return compare("4.24", order, lhs, s_j(j, order), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

const std::vector<std::pair<int, int>>& functional_pairs(int family) {
  static const std::vector<std::pair<int, int>> first = {{2, 3},  {3, 4},   {4, 5},   {5, 2},
                                                         {6, 7},  {7, 8},   {8, 9},   {9, 6},
                                                         {10, 11}, {11, 12}, {12, 13}, {13, 10}};
  static const std::vector<std::pair<int, int>> second = {{14, 15}, {15, 16}, {16, 17},
                                                          {17, 14}, {18, 19}, {19, 18}};
  static const std::vector<std::pair<int, int>> third = {{20, 21}, {21, 22}, {22, 23}, {23, 20},
                                                         {24, 25}, {25, 26}, {26, 27}, {27, 24}};
  switch (family) {
    case 1: return first;
    case 2: return second;
    case 3: return third;
    default: throw DomainError("functional_pairs: family must be 1, 2 or 3");
  }
}

}  // namespace tcore
