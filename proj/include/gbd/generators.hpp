#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "gbd/poly_system.hpp"

namespace gbd {

// Random sparse systems for test corpora. Coefficients are drawn from
// {-coeff_bound..coeff_bound} \ {0}; the constant monomial never occurs.
struct RandomSystemShape {
  std::size_t vars = 2;
  std::size_t polys = 3;
  std::size_t max_terms = 3;
  std::uint32_t max_exponent = 3;
  int coeff_bound = 3;
  // Probability that a polynomial is seeded with a pure-power term.
  double pure_power_rate = 0.8;
};

PolySystem random_system(const RandomSystemShape& shape, std::mt19937_64& rng);

// Every polynomial homogeneous of total degree `degree`, with 1..max_terms
// distinct terms.
PolySystem random_homogeneous_system(std::size_t vars, std::size_t polys, std::size_t degree, std::size_t max_terms,
                                     int coeff_bound, std::mt19937_64& rng);

// Default variable names x, y, z, w, then v5, v6, ...
std::vector<std::string> default_var_names(std::size_t n);

}  // namespace gbd
