#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace gbd {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial x_1^a_1 ... x_n^a_n in a ring of fixed
/// dimension n. Comparison operators give the canonical lexicographic order
/// (x_1 > x_2 > ... > x_n), which is the storage order of polynomials and the
/// tie-break of weight orders.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  std::size_t dimension() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_constant() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

// True iff a divides b.
bool mono_divides(const Monomial& a, const Monomial& b);

// b / a; requires mono_divides(a, b).
Monomial mono_quotient(const Monomial& b, const Monomial& a);

bool mono_coprime(const Monomial& a, const Monomial& b);

// Index of the single variable with a positive exponent, if there is exactly
// one. The constant monomial is not a pure power.
std::optional<std::size_t> is_pure_power(const Monomial& a);

// Unit vector x_i of the given dimension, raised to `power`.
Monomial pure_power(std::size_t dimension, std::size_t var, Exponent power);

}  // namespace gbd
