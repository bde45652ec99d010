#include "gbd/monomial.hpp"

#include <algorithm>
#include <limits>

#include "gbd/errors.hpp"

namespace gbd {

namespace {

void require_same_dimension(const Monomial& a, const Monomial& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("monomial dimensions differ: " + std::to_string(a.dimension()) + " vs " +
                         std::to_string(b.dimension()));
  }
}

}  // namespace

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_constant() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  std::vector<Exponent> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t sum = std::uint64_t{a[i]} + b[i];
    if (sum > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow in monomial product");
    out[i] = static_cast<Exponent>(sum);
  }
  return Monomial(std::move(out));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  std::vector<Exponent> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial(std::move(out));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  std::vector<Exponent> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
  return Monomial(std::move(out));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw InvalidArgument("monomial quotient is not exact");
  std::vector<Exponent> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[i] - a[i];
  return Monomial(std::move(out));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::optional<std::size_t> is_pure_power(const Monomial& a) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

Monomial pure_power(std::size_t dimension, std::size_t var, Exponent power) {
  if (var >= dimension) throw DimensionError("variable index out of range");
  std::vector<Exponent> out(dimension, 0);
  out[var] = power;
  return Monomial(std::move(out));
}

}  // namespace gbd
