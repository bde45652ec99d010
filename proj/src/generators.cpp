#include "gbd/generators.hpp"

#include <algorithm>
#include <set>

#include "gbd/errors.hpp"

namespace gbd {

namespace {

Rational random_coefficient(int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, bound);
  std::bernoulli_distribution negative(0.5);
  int c = pick(rng);
  return Rational(negative(rng) ? -c : c);
}

Monomial random_monomial(std::size_t vars, std::uint32_t max_exponent, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, max_exponent);
  while (true) {
    std::vector<Exponent> exps(vars);
    for (auto& e : exps) e = pick(rng);
    Monomial m(std::move(exps));
    if (!m.is_constant()) return m;
  }
}

// Random monomial of total degree `degree`: split [0, degree] at random cut points.
Monomial random_monomial_of_degree(std::size_t vars, std::size_t degree, std::mt19937_64& rng) {
  std::vector<std::size_t> cuts;
  std::uniform_int_distribution<std::size_t> pick(0, degree);
  for (std::size_t i = 0; i + 1 < vars; ++i) cuts.push_back(pick(rng));
  cuts.push_back(0);
  cuts.push_back(degree);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Exponent> exps(vars);
  for (std::size_t i = 0; i < vars; ++i) exps[i] = static_cast<Exponent>(cuts[i + 1] - cuts[i]);
  return Monomial(std::move(exps));
}

}  // namespace

std::vector<std::string> default_var_names(std::size_t n) {
  static const char* const kFirst[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i < 4 ? kFirst[i] : "v" + std::to_string(i + 1));
  return names;
}

PolySystem random_system(const RandomSystemShape& shape, std::mt19937_64& rng) {
  if (shape.vars == 0 || shape.max_terms == 0 || shape.max_exponent == 0 || shape.coeff_bound <= 0) {
    throw InvalidArgument("random system shape needs positive sizes");
  }
  std::uniform_int_distribution<std::size_t> term_count(1, shape.max_terms);
  std::uniform_int_distribution<std::size_t> var_pick(0, shape.vars - 1);
  std::uniform_int_distribution<std::uint32_t> exp_pick(1, shape.max_exponent);
  std::bernoulli_distribution seed_pure(shape.pure_power_rate);

  std::vector<Polynomial> polys;
  for (std::size_t p = 0; p < shape.polys; ++p) {
    const std::size_t want = term_count(rng);
    std::set<Monomial> monos;
    if (seed_pure(rng)) monos.insert(pure_power(shape.vars, var_pick(rng), exp_pick(rng)));
    // Bounded attempts: small shapes may have fewer distinct monomials than requested.
    for (int attempt = 0; monos.size() < want && attempt < 64; ++attempt) {
      monos.insert(random_monomial(shape.vars, shape.max_exponent, rng));
    }
    std::vector<Term> terms;
    for (const Monomial& m : monos) terms.push_back(Term{random_coefficient(shape.coeff_bound, rng), m});
    polys.push_back(Polynomial::from_terms(shape.vars, std::move(terms)));
  }
  return PolySystem(default_var_names(shape.vars), std::move(polys));
}

PolySystem random_homogeneous_system(std::size_t vars, std::size_t polys, std::size_t degree, std::size_t max_terms,
                                     int coeff_bound, std::mt19937_64& rng) {
  if (vars == 0 || degree == 0 || max_terms == 0 || coeff_bound <= 0) {
    throw InvalidArgument("random homogeneous system needs positive sizes");
  }
  std::uniform_int_distribution<std::size_t> term_count(1, max_terms);
  std::vector<Polynomial> out;
  for (std::size_t p = 0; p < polys; ++p) {
    const std::size_t want = term_count(rng);
    std::set<Monomial> monos;
    for (int attempt = 0; monos.size() < want && attempt < 64; ++attempt) {
      monos.insert(random_monomial_of_degree(vars, degree, rng));
    }
    std::vector<Term> terms;
    for (const Monomial& m : monos) terms.push_back(Term{random_coefficient(coeff_bound, rng), m});
    out.push_back(Polynomial::from_terms(vars, std::move(terms)));
  }
  return PolySystem(default_var_names(vars), std::move(out));
}

}  // namespace gbd
