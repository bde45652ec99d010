#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbd/detector.hpp"
#include "gbd/monomial.hpp"
#include "gbd/poly_system.hpp"
#include "gbd/weight_order.hpp"

namespace gbd {

/// Family of subsets of {1..universe}; asks for `goal` pairwise disjoint
/// members. Every subset has at most `size_cap` elements.
struct SetPackingInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;  // 1-based elements, sorted
  std::size_t goal = 0;
  std::size_t size_cap = 0;

  // Throws InvalidArgument on empty sets, out-of-range or repeated elements,
  // or sets larger than size_cap.
  void validate() const;

  friend bool operator==(const SetPackingInstance&, const SetPackingInstance&) = default;
};

// Text format:
//   universe 4
//   1,2        # one set per line
//   3
//   goal 2
//   cap 2
SetPackingInstance parse_set_packing(std::string_view text);
std::string format_set_packing(const SetPackingInstance& inst);

/// Layout of the homogeneous encoding: variables X_1..X_nu followed by
/// Y_{l,j} for l = 1..goal, j = 1..k (row-major). Polynomial l is
/// sum_j Y_{l,j}^{alpha_j} M_j with M_j = prod_{i in S_j} X_i and
/// alpha_j = degree - deg(M_j). All indices here are 0-based.
struct EncodingMap {
  std::size_t universe = 0;
  std::size_t set_count = 0;
  std::size_t goal = 0;
  std::size_t degree = 0;
  std::vector<Monomial> set_monomials;  // M_j in the full ring
  std::vector<Exponent> alpha;          // per set j; identical for every l

  std::size_t dimension() const { return universe + goal * set_count; }
  std::size_t x_var(std::size_t element) const { return element; }
  std::size_t y_var(std::size_t poly, std::size_t set) const { return universe + poly * set_count + set; }
  // Y_{l,j}^{alpha_j} M_j
  Monomial encoded_monomial(std::size_t poly, std::size_t set) const;
};

struct EncodedPacking {
  PolySystem system;
  EncodingMap map;
};

// Homogeneous degree-`degree` encoding. Throws InvalidArgument unless
// size_cap < degree, which keeps every Y exponent positive.
EncodedPacking encode_set_packing(const SetPackingInstance& inst, std::size_t degree);

struct PackingWitness {
  WeightOrder order;
  std::vector<Monomial> leading_terms;
  bool coprime = false;
};

// Weight degree+1 on Y_{l,chosen[l]}, weight 1 elsewhere. Throws
// InternalError if the chosen sets are pairwise disjoint but the resulting
// leading monomials are not pairwise coprime.
PackingWitness packing_witness_order(const EncodingMap& map, std::span<const std::size_t> chosen);

// Recovers, per polynomial, the set index j from a leading monomial of the
// form Y_{l,j}^{alpha_j} M_j. Throws InvalidArgument on any other shape.
std::vector<std::size_t> decode_selection(const EncodingMap& map, std::span<const Monomial> leading_terms);

// F followed by every monomial of total degree 2m+1, in descending lex order.
// Every member of F must be homogeneous of degree m.
PolySystem elevate_to_zero_dim(const PolySystem& system, std::size_t degree);

struct PackingSolution {
  bool yes = false;
  std::vector<std::size_t> chosen;  // 0-based set indices, ascending
  std::uint64_t combinations_examined = 0;
};

// Exhaustive search over goal-subsets of the family, in lex order. Throws
// CapExceeded if C(k, goal) > cap.
PackingSolution solve_set_packing_bruteforce(const SetPackingInstance& inst,
                                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gbd
