#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcore/qseries.hpp"

namespace tcore {

/// Registered identity keys, in registry order. Keys are equation numbers
/// ("4.13"), with suffixes for the sub-checks of one equation:
///   4.24 / 4.24b / 4.24c   functional-equation pairs for the three theta sums
///   4.39z                  s_{j+4a}(z_a) = 0 for j = 20, 21, 22
///   4.39v                  s_{23+4a}(z_a) = (-1)^{a+1} q^{6a-4} E^2(q^9) E(q^12) E(q^36)
///   4.39e                  both sides of 4.39 at z_a
std::vector<std::string> identity_ids();

/// Expands both sides of an identity to q-order `order` and compares them.
IdentityReport check_identity(const std::string& id, std::int64_t order);

/// z q^9 s_i(z q^9, q) = s_j(z, q), compared coefficientwise in z and q.
IdentityReport functional_equation_check(int i, int j, std::int64_t order);

/// Evaluation-point checks (4.27, 4.28, 4.29, 4.35, 4.36, 4.39z, 4.39v, 4.39e):
/// theta sums at z = -q^k as Laurent series in q.
IdentityReport evaluation_check(const std::string& id, std::int64_t order);

/// The (i, j) pairs for which the functional equation is claimed:
/// family 1 covers s_2..s_13, family 2 covers s_14..s_19, family 3 s_20..s_27.
const std::vector<std::pair<int, int>>& functional_pairs(int family);

}  // namespace tcore
