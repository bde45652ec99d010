#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gbd/monomial.hpp"
#include "gbd/rational.hpp"

namespace gbd {

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

Term term_mul(const Term& a, const Term& b);

/// Sparse polynomial over the rationals in a ring of fixed dimension.
///
/// Terms are stored in strictly descending canonical lex order with nonzero
/// coefficients; the zero polynomial has no terms. The storage order says
/// nothing about leading terms, which are always taken with respect to an
/// explicit WeightOrder.
class Polynomial {
 public:
  explicit Polynomial(std::size_t dimension = 0) : n_(dimension) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::size_t dimension, std::vector<Term> terms);
  static Polynomial from_monomial(const Monomial& m, Rational coeff = 1);

  std::size_t dimension() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Index of `m` in terms(), if present.
  std::optional<std::size_t> find(const Monomial& m) const;

  // Common total degree of all terms, absent for zero or mixed degrees.
  std::optional<std::uint64_t> homogeneous_degree() const;
  std::uint64_t max_degree() const;

  // Removes the term at `index` of terms().
  void erase(std::size_t index);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Term& t, const Polynomial& p);
  friend Polynomial sub_mul(const Polynomial& p, const Term& t, const Polynomial& g);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

// p - t * g, computed by a single merge.
Polynomial sub_mul(const Polynomial& p, const Term& t, const Polynomial& g);

}  // namespace gbd
