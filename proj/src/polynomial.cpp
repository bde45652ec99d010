#include "gbd/polynomial.hpp"

#include <algorithm>

#include "gbd/errors.hpp"

namespace gbd {

Term term_mul(const Term& a, const Term& b) { return Term{a.coeff * b.coeff, mono_mul(a.mono, b.mono)}; }

Polynomial Polynomial::from_terms(std::size_t dimension, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.dimension() != dimension) throw DimensionError("term dimension does not match polynomial");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p(dimension);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, Rational coeff) {
  Polynomial p(m.dimension());
  if (coeff != 0) p.terms_.push_back(Term{std::move(coeff), m});
  return p;
}

std::optional<std::size_t> Polynomial::find(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it == terms_.end() || it->mono != m) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = terms_.front().mono.degree();
  for (const Term& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return d;
}

std::uint64_t Polynomial::max_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::erase(std::size_t index) {
  if (index >= terms_.size()) throw InvalidArgument("term index out of range");
  terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(index));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return sub_mul(a, Term{Rational(-1), Monomial(b.dimension())}, b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return sub_mul(a, Term{Rational(1), Monomial(b.dimension())}, b);
}

Polynomial operator*(const Term& t, const Polynomial& p) {
  if (t.mono.dimension() != p.dimension()) throw DimensionError("term and polynomial dimensions differ");
  Polynomial out(p.dimension());
  if (t.coeff == 0) return out;
  out.terms_.reserve(p.terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const Term& s : p.terms_) out.terms_.push_back(term_mul(t, s));
  return out;
}

Polynomial sub_mul(const Polynomial& p, const Term& t, const Polynomial& g) {
  if (p.dimension() != g.dimension()) throw DimensionError("polynomial dimensions differ");
  Polynomial scaled = t * g;
  const auto& lhs = p.terms();
  const auto& rhs = scaled.terms();
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].mono > rhs[j].mono)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].mono > lhs[i].mono) {
      out.push_back(Term{-rhs[j].coeff, rhs[j].mono});
      ++j;
    } else {
      Rational c = lhs[i].coeff - rhs[j].coeff;
      if (c != 0) out.push_back(Term{std::move(c), lhs[i].mono});
      ++i;
      ++j;
    }
  }
  Polynomial result(p.dimension());
  result.terms_ = std::move(out);
  return result;
}

}  // namespace gbd
