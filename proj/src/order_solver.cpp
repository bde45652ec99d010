#include "gbd/order_solver.hpp"

#include <algorithm>
#include <numeric>

#include "gbd/errors.hpp"

namespace gbd {

namespace {

// Dictionary-form simplex for: maximize c.x subject to A x <= b, x >= 0 with
// b >= 0, so the all-slack basis is feasible from the start. Row i reads
//   x_{basic[i]} = rhs[i] + sum_k coef[i][k] * x_{nonbasic[k]}.
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : rhs_(std::move(b)), objective_(std::move(c)) {
    const std::size_t vars = objective_.size();
    nonbasic_.resize(vars);
    std::iota(nonbasic_.begin(), nonbasic_.end(), std::size_t{0});
    basic_.resize(a.size());
    std::iota(basic_.begin(), basic_.end(), vars);
    coef_ = std::move(a);
    for (auto& row : coef_) {
      for (Rational& v : row) v = -v;
    }
    value_ = 0;
  }

  void optimize() {
    while (true) {
      // Bland: entering variable of smallest index with positive reduced cost.
      std::optional<std::size_t> enter;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        if (sgn(objective_[k]) > 0 && (!enter || nonbasic_[k] < nonbasic_[*enter])) enter = k;
      }
      if (!enter) return;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < basic_.size(); ++i) {
        if (sgn(coef_[i][*enter]) >= 0) continue;
        Rational ratio = rhs_[i] / -coef_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basic_[i] < basic_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) throw InternalError("strict-feasibility LP reported unbounded");
      pivot(*leave, *enter);
    }
  }

  // Value of original variable `var` at the current basic solution.
  Rational value_of(std::size_t var) const {
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (basic_[i] == var) return rhs_[i];
    }
    return 0;
  }

  const Rational& objective_value() const { return value_; }

 private:
  void pivot(std::size_t r, std::size_t k) {
    const Rational p = coef_[r][k];
    auto& row = coef_[r];
    rhs_[r] = -rhs_[r] / p;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = j == k ? Rational(1 / p) : Rational(-row[j] / p);
    }
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (i == r || sgn(coef_[i][k]) == 0) continue;
      const Rational factor = coef_[i][k];
      rhs_[i] += factor * rhs_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        coef_[i][j] = j == k ? Rational(factor * row[k]) : Rational(coef_[i][j] + factor * row[j]);
      }
    }
    if (sgn(objective_[k]) != 0) {
      const Rational factor = objective_[k];
      value_ += factor * rhs_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        objective_[j] = j == k ? Rational(factor * row[k]) : Rational(objective_[j] + factor * row[j]);
      }
    }
    std::swap(basic_[r], nonbasic_[k]);
  }

  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> rhs_;
  std::vector<Rational> objective_;
  Rational value_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace

GammaSystem build_gamma(std::span<const Polynomial> polys, const TargetSelection& selection) {
  if (selection.targets.size() != polys.size()) {
    throw InvalidArgument("selection has " + std::to_string(selection.targets.size()) + " targets for " +
                          std::to_string(polys.size()) + " polynomials");
  }
  GammaSystem gamma;
  gamma.dimension = polys.empty() ? 0 : polys.front().dimension();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& terms = polys[i].terms();
    if (polys[i].dimension() != gamma.dimension) throw DimensionError("polynomial dimensions differ");
    if (selection.targets[i] >= terms.size()) {
      throw InvalidArgument("target index " + std::to_string(selection.targets[i]) + " out of range for polynomial " +
                            std::to_string(i));
    }
    const Monomial& alpha = terms[selection.targets[i]].mono;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k == selection.targets[i]) continue;
      std::vector<std::int64_t> row(gamma.dimension);
      bool nonzero = false;
      for (std::size_t v = 0; v < gamma.dimension; ++v) {
        row[v] = static_cast<std::int64_t>(alpha[v]) - static_cast<std::int64_t>(terms[k].mono[v]);
        nonzero = nonzero || row[v] != 0;
      }
      if (!nonzero) throw InternalError("zero row in Gamma: repeated monomial");
      gamma.rows.push_back(std::move(row));
    }
  }
  return gamma;
}

std::optional<std::vector<Integer>> solve_strict_system(const GammaSystem& gamma) {
  const std::size_t n = gamma.dimension;
  for (const auto& row : gamma.rows) {
    if (row.size() != n) throw DimensionError("Gamma row length does not match dimension");
  }
  // Variables: w_0..w_{n-1}, t = index n.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(gamma.rows.size() + n + 1);
  for (const auto& row : gamma.rows) {
    std::vector<Rational> r(n + 1);
    for (std::size_t v = 0; v < n; ++v) r[v] = -static_cast<long>(row[v]);
    r[n] = 1;
    a.push_back(std::move(r));
    b.emplace_back(0);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> r(n + 1);
    r[v] = -1;
    r[n] = 1;
    a.push_back(std::move(r));
    b.emplace_back(0);
  }
  {
    std::vector<Rational> r(n + 1);
    r[n] = 1;
    a.push_back(std::move(r));
    b.emplace_back(1);
  }
  std::vector<Rational> c(n + 1);
  c[n] = 1;

  Dictionary lp(std::move(a), std::move(b), std::move(c));
  lp.optimize();
  if (sgn(lp.objective_value()) <= 0) return std::nullopt;

  std::vector<Rational> w(n);
  Integer denominator_lcm = 1;
  for (std::size_t v = 0; v < n; ++v) {
    w[v] = lp.value_of(v);
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), w[v].get_den_mpz_t());
  }
  std::vector<Integer> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = w[v].get_num() * (denominator_lcm / w[v].get_den());
    if (out[v] < 1) throw InternalError("LP witness has a non-positive weight");
  }
  for (const auto& row : gamma.rows) {
    Integer dot = 0;
    for (std::size_t v = 0; v < n; ++v) dot += out[v] * static_cast<long>(row[v]);
    if (dot < 1) throw InternalError("LP witness violates a strict inequality");
  }
  return out;
}

std::optional<WeightOrder> realize_leading_terms(std::span<const Polynomial> polys, const TargetSelection& selection) {
  if (polys.empty()) throw InvalidArgument("no polynomials to realize leading terms for");
  GammaSystem gamma = build_gamma(polys, selection);
  auto w = solve_strict_system(gamma);
  if (!w) return std::nullopt;
  WeightOrder ord = WeightOrder::from_integers(*w);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (leading_index(ord, polys[i]) != selection.targets[i]) {
      throw InternalError("LP witness does not realize the selected leading terms");
    }
  }
  return ord;
}

bool permutation_prunable(std::span<const std::vector<std::uint64_t>> exponents, std::span<const std::size_t> sigma) {
  const std::size_t n = exponents.size();
  for (const auto& row : exponents) {
    if (row.size() != n) throw InvalidArgument("exponent matrix is not square");
    for (std::uint64_t a : row) {
      if (a == 0) throw InvalidArgument("exponent matrix has a non-positive entry");
    }
  }
  if (sigma.size() != n) throw InvalidArgument("permutation length does not match matrix");
  std::vector<std::size_t> check(sigma.begin(), sigma.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (check[i] != i) throw InvalidArgument("sigma is not a permutation");
  }

  auto product = [&](std::span<const std::size_t> perm) {
    Integer p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= static_cast<unsigned long>(exponents[i][perm[i]]);
    return p;
  };
  const Integer target = product(sigma);
  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  do {
    if (!std::equal(rho.begin(), rho.end(), sigma.begin()) && product(rho) > target) return true;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return false;
}

}  // namespace gbd
