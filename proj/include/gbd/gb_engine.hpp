#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gbd/poly_system.hpp"
#include "gbd/polynomial.hpp"
#include "gbd/weight_order.hpp"

namespace gbd {

// S(f,g) = (L/lt(f)) f - (L/lt(g)) g with L = lcm(lm(f), lm(g)) and lt
// including the leading coefficient, so the L terms cancel exactly.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightOrder& ord);

// One head reduction f -> f - t g, where t = lt(f)/lt(g). Absent when lt(g)
// does not divide lt(f).
std::optional<Polynomial> reduce_step(const Polynomial& f, const Polynomial& g, const WeightOrder& ord);

enum class ReductionStrategy {
  // Reduce the first reducible term in canonical (lex) storage order.
  first_match,
  // Reduce the largest reducible term under the active order.
  max_lt,
};

struct ReductionStep {
  std::size_t reducer;  // index into the basis
  Term multiplier;
};

/// f - sum(multiplier_k * basis[reducer_k]) == remainder, and no term of the
/// remainder is divisible by a leading monomial of the basis.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial remainder;
};

ReductionTrace normal_form(const Polynomial& f, std::span<const Polynomial> basis, const WeightOrder& ord,
                           ReductionStrategy strategy = ReductionStrategy::max_lt);

// Applies the recorded steps to f and returns the result.
Polynomial replay(const Polynomial& f, std::span<const Polynomial> basis, const ReductionTrace& trace);

struct GbOptions {
  // Skip pairs with coprime leading monomials (first Buchberger criterion).
  bool skip_coprime = true;
  ReductionStrategy strategy = ReductionStrategy::max_lt;
};

struct GbCertificate {
  bool is_basis = false;
  // Lexicographically smallest pair (i < j) whose S-polynomial does not
  // reduce to zero, with its remainder.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::optional<Polynomial> remainder;
  std::size_t pairs_checked = 0;
};

GbCertificate is_groebner_basis(std::span<const Polynomial> basis, const WeightOrder& ord, GbOptions options = {});
GbCertificate is_groebner_basis(const PolySystem& system, const WeightOrder& ord, GbOptions options = {});

bool pairwise_coprime_lt(std::span<const Polynomial> basis, const WeightOrder& ord);

struct ZeroDimWitness {
  bool zero_dimensional = false;
  // Some leading monomial is the constant: the ideal is the whole ring.
  bool unit_ideal = false;
  // For each variable, the first basis element whose leading monomial is a
  // pure power of it.
  std::vector<std::optional<std::size_t>> witness;
};

ZeroDimWitness is_zero_dimensional_lt(std::span<const Polynomial> basis, const WeightOrder& ord);

}  // namespace gbd
