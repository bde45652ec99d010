#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbd/polynomial.hpp"
#include "gbd/rational.hpp"
#include "gbd/weight_order.hpp"

namespace gbd {

/// For each polynomial, the index (into its canonical term list) of the term
/// that should become leading.
struct TargetSelection {
  std::vector<std::size_t> targets;

  friend bool operator==(const TargetSelection&, const TargetSelection&) = default;
};

/// Rows alpha_i - beta for every polynomial i and every non-target monomial
/// beta of it. A weight vector w realizes the selection iff Gamma w > 0.
struct GammaSystem {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> rows;
};

// Throws InvalidArgument when the selection does not match the polynomials.
GammaSystem build_gamma(std::span<const Polynomial> polys, const TargetSelection& selection);

// Finds w with Gamma w > 0, w > 0 by maximizing t subject to
// Gamma w >= t, w >= t, t <= 1 with exact rational simplex (Bland's rule).
// The optimal vertex is scaled to integers by clearing denominators, so every
// entry is >= 1 and every row product is >= 1. Absent when infeasible.
std::optional<std::vector<Integer>> solve_strict_system(const GammaSystem& gamma);

// Weight order under which every polynomial's leading term is its target.
// The result is re-checked with leading_index; a mismatch throws
// InternalError.
std::optional<WeightOrder> realize_leading_terms(std::span<const Polynomial> polys, const TargetSelection& selection);

// exponents[i][j] is the exponent of x_j in the i-th pure-power polynomial
// sum_j x_j^{a_ij}. Assigning x_{sigma(i)} as the leading variable of row i is
// prunable when another permutation rho has a strictly larger product
// prod_i a_{i rho(i)}; such an assignment has no realizing weight vector.
bool permutation_prunable(std::span<const std::vector<std::uint64_t>> exponents, std::span<const std::size_t> sigma);

}  // namespace gbd
