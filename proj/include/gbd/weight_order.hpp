#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gbd/monomial.hpp"
#include "gbd/polynomial.hpp"
#include "gbd/rational.hpp"

namespace gbd {

/// Term order given by a positive weight vector, refined by descending lex:
/// a < b iff w.a < w.b, or the weights tie and a is lex-smaller than b.
class WeightOrder {
 public:
  // Throws InvalidArgument if any weight is not strictly positive.
  explicit WeightOrder(std::vector<Rational> weights);
  static WeightOrder from_integers(std::span<const Integer> weights);
  static WeightOrder uniform(std::size_t dimension);

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }

  // Weights multiplied by the lcm of their denominators.
  const std::vector<Integer>& integer_weights() const { return scaled_; }

  // Weighted degree w.a with the integer weights.
  Integer weigh(const Monomial& a) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::vector<Rational> weights_;
  std::vector<Integer> scaled_;
  // Copy of scaled_ when every entry fits in int64; dot products then fit in
  // __int128 for any exponent vector of practical length.
  std::vector<std::int64_t> fast_;
  bool use_fast_ = false;
};

// Position of the maximal term of f in f.terms(). Throws InvalidArgument on
// the zero polynomial.
std::size_t leading_index(const WeightOrder& ord, const Polynomial& f);
const Term& leading_term(const WeightOrder& ord, const Polynomial& f);

}  // namespace gbd
