#include "gbd/weight_order.hpp"

#include <limits>

#include "gbd/errors.hpp"

namespace gbd {

WeightOrder::WeightOrder(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Integer denominator_lcm = 1;
  for (Rational& w : weights_) {
    w.canonicalize();
    if (w <= 0) throw InvalidArgument("weight " + to_string(w) + " is not positive");
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), w.get_den_mpz_t());
  }
  scaled_.reserve(weights_.size());
  use_fast_ = true;
  for (const Rational& w : weights_) {
    Integer s = w.get_num() * (denominator_lcm / w.get_den());
    if (!s.fits_slong_p()) use_fast_ = false;
    scaled_.push_back(std::move(s));
  }
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (use_fast_) {
    fast_.reserve(scaled_.size());
    for (const Integer& s : scaled_) fast_.push_back(s.get_si());
  }
}

WeightOrder WeightOrder::from_integers(std::span<const Integer> weights) {
  std::vector<Rational> q;
  q.reserve(weights.size());
  for (const Integer& w : weights) q.emplace_back(w);
  return WeightOrder(std::move(q));
}

WeightOrder WeightOrder::uniform(std::size_t dimension) {
  return WeightOrder(std::vector<Rational>(dimension, Rational(1)));
}

Integer WeightOrder::weigh(const Monomial& a) const {
  if (a.dimension() != dimension()) throw DimensionError("monomial dimension does not match weight order");
  Integer total = 0;
  for (std::size_t i = 0; i < scaled_.size(); ++i) total += scaled_[i] * a[i];
  return total;
}

std::strong_ordering WeightOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.dimension() != dimension() || b.dimension() != dimension()) {
    throw DimensionError("monomial dimension does not match weight order");
  }
  if (use_fast_) {
    // |w_i * (a_i - b_i)| < 2^95 and dimension is far below 2^30.
    __int128 diff = 0;
    for (std::size_t i = 0; i < fast_.size(); ++i) {
      diff += static_cast<__int128>(fast_[i]) * (static_cast<__int128>(a[i]) - static_cast<__int128>(b[i]));
    }
    if (diff < 0) return std::strong_ordering::less;
    if (diff > 0) return std::strong_ordering::greater;
  } else {
    Integer diff = 0;
    for (std::size_t i = 0; i < scaled_.size(); ++i) {
      diff += scaled_[i] * (static_cast<long>(a[i]) - static_cast<long>(b[i]));
    }
    int s = sgn(diff);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return a <=> b;
}

std::size_t leading_index(const WeightOrder& ord, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("leading term of the zero polynomial");
  const auto& terms = f.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (ord.compare(terms[i].mono, terms[best].mono) > 0) best = i;
  }
  return best;
}

const Term& leading_term(const WeightOrder& ord, const Polynomial& f) { return f.terms()[leading_index(ord, f)]; }

}  // namespace gbd
