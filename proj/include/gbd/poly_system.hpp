#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbd/monomial.hpp"
#include "gbd/polynomial.hpp"

namespace gbd {

/// A named ring together with a list of polynomials in it.
class PolySystem {
 public:
  PolySystem() = default;
  // Validates distinct, well-formed names and matching dimensions.
  PolySystem(std::vector<std::string> var_names, std::vector<Polynomial> polys);

  std::size_t dimension() const { return var_names_.size(); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }

  friend bool operator==(const PolySystem&, const PolySystem&) = default;

 private:
  std::vector<std::string> var_names_;
  std::vector<Polynomial> polys_;
};

bool is_valid_identifier(std::string_view name);

// Text format:
//   vars x y z
//   x^2 + 3/2*x*y - 1     # one polynomial per line
// '#' starts a comment, blank lines are ignored. Throws ParseError.
PolySystem parse_system(std::string_view text);

// A single polynomial over the given variables (no "vars" header).
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names);

// A coefficient-free product of variable powers, e.g. "x^2*y" or "1".
Monomial parse_monomial(std::string_view text, std::span<const std::string> var_names);

std::string format_monomial(const Monomial& m, std::span<const std::string> var_names);
std::string format_term(const Term& t, std::span<const std::string> var_names);
std::string format_polynomial(const Polynomial& p, std::span<const std::string> var_names);

// Inverse of parse_system up to canonical term order and coefficient
// reduction; ends with a newline.
std::string format_system(const PolySystem& system);

}  // namespace gbd
