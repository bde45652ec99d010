#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbd/gb_engine.hpp"
#include "gbd/monomial.hpp"
#include "gbd/poly_system.hpp"
#include "gbd/polynomial.hpp"
#include "gbd/weight_order.hpp"

namespace gbd {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

/// f = pure + mixed, where every monomial of `pure` is a pure power and no
/// monomial of `mixed` is.
struct PureSplit {
  Polynomial pure;
  Polynomial mixed;
};

PureSplit split_pure(const Polynomial& f);

enum class Verdict { no, yes };

struct DetectionResult {
  Verdict verdict = Verdict::no;
  std::optional<WeightOrder> witness;
  // Leading monomials of every input polynomial under the witness.
  std::optional<std::vector<Monomial>> leading_terms;
  std::optional<bool> zero_dimensional;
  // Candidates considered: (subset, assignment) pairs for the zero-dim
  // algorithm, complete leading-term selections for the exhaustive searches.
  std::uint64_t subsets_examined = 0;
  std::string diagnostics;

  bool yes() const { return verdict == Verdict::yes; }
};

enum class ConeSearch {
  // Test only the weight vector returned by the LP for the chosen subset.
  witness_only,
  // Additionally walk every cell of the subset's feasible cone, i.e. every
  // realizable leading-term choice for the remaining polynomials.
  exhaustive,
};

struct ZeroDimOptions {
  // Skip assignments ruled out by the permutation-product test when all
  // subset members carry pure powers of every variable.
  bool prune_permutations = true;
  ConeSearch cone = ConeSearch::exhaustive;
  GbOptions gb{};
};

/// Groebner basis detection for zero-dimensional ideals.
///
/// For every n-subset of the polynomials that contain pure powers, and every
/// injective assignment of variables to its members, the member assigned x_i
/// gets its highest pure power of x_i as target leading term. A weight vector
/// realizing those n targets is found by LP; the whole system is then tested
/// for being a Groebner basis under it. Subsets are visited in lex order of
/// member indices, assignments in lex order of the permutation.
DetectionResult detect_gbd_zero_dim(const PolySystem& system, const ZeroDimOptions& options = {});

// Some weight order makes the leading monomials pairwise coprime. `cap`
// bounds the number of coprime selections sent to the LP.
DetectionResult detect_sgbd(const PolySystem& system, std::uint64_t cap = kDefaultEnumerationCap);

// Exhaustive oracle over every leading-term selection. Refuses with
// CapExceeded when the number of selections exceeds `cap`.
DetectionResult detect_gbd_bruteforce(const PolySystem& system, bool require_zero_dim,
                                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gbd
