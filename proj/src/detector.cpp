#include "gbd/detector.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "gbd/errors.hpp"
#include "gbd/order_solver.hpp"

namespace gbd {

namespace {

void validate(const PolySystem& system) {
  if (system.size() == 0) throw InvalidArgument("empty polynomial system");
  if (system.dimension() == 0) throw InvalidArgument("polynomial system has no variables");
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].is_zero()) throw InvalidArgument("polynomial " + std::to_string(i + 1) + " is zero");
  }
}

// Fills the witness fields of a yes-result and re-checks it from scratch,
// without the coprime-pair shortcut.
void finish_yes(DetectionResult& result, const PolySystem& system, WeightOrder ord, bool require_zero_dim,
                bool require_coprime) {
  std::span<const Polynomial> polys(system.polys());
  GbOptions strict;
  strict.skip_coprime = false;
  if (!require_coprime && !is_groebner_basis(polys, ord, strict).is_basis) {
    throw InternalError("detector witness failed Groebner basis re-verification");
  }
  ZeroDimWitness zd = is_zero_dimensional_lt(polys, ord);
  if (require_zero_dim && !zd.zero_dimensional) {
    throw InternalError("detector witness failed zero-dimensionality re-verification");
  }
  if (require_coprime && !pairwise_coprime_lt(polys, ord)) {
    throw InternalError("detector witness failed coprimality re-verification");
  }
  std::vector<Monomial> lts;
  lts.reserve(polys.size());
  for (const Polynomial& f : polys) lts.push_back(leading_term(ord, f).mono);
  result.verdict = Verdict::yes;
  result.leading_terms = std::move(lts);
  result.zero_dimensional = zd.zero_dimensional;
  result.witness = std::move(ord);
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t universe) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < universe - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Kuhn's augmenting-path matching of variables to polynomials.
bool has_injective_cover(const std::vector<std::vector<Exponent>>& top, std::size_t n) {
  std::vector<std::optional<std::size_t>> owner(top.size());
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t var, std::vector<bool>& seen) {
    for (std::size_t k = 0; k < top.size(); ++k) {
      if (top[k][var] == 0 || seen[k]) continue;
      seen[k] = true;
      if (!owner[k] || augment(*owner[k], seen)) {
        owner[k] = var;
        return true;
      }
    }
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> seen(top.size(), false);
    if (!augment(v, seen)) return false;
  }
  return true;
}

// Depth-first walk over leading-term choices for polys[depth..], keeping only
// branches whose prefix is realizable by some weight vector. `visit` is called
// on complete selections with a realizing order and returns true to stop.
class SelectionWalk {
 public:
  using Filter = std::function<bool(const std::vector<std::size_t>&)>;
  using Visit = std::function<bool(const std::vector<std::size_t>&, const WeightOrder&)>;

  SelectionWalk(std::span<const Polynomial> polys, Filter leaf_filter, Visit visit)
      : polys_(polys), filter_(std::move(leaf_filter)), visit_(std::move(visit)) {}

  bool run(std::vector<std::size_t> fixed) {
    targets_ = std::move(fixed);
    if (targets_.size() == polys_.size()) return leaf();
    return descend();
  }

  std::uint64_t leaves() const { return leaves_; }
  std::uint64_t lp_calls() const { return lp_calls_; }

 private:
  bool descend() {
    const std::size_t depth = targets_.size();
    for (std::size_t j = 0; j < polys_[depth].size(); ++j) {
      targets_.push_back(j);
      bool stop = false;
      if (targets_.size() == polys_.size()) {
        stop = leaf();
      } else if (prefix_realizable()) {
        stop = descend();
      }
      targets_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  bool leaf() {
    ++leaves_;
    if (filter_ && !filter_(targets_)) return false;
    ++lp_calls_;
    auto ord = realize_leading_terms(polys_, TargetSelection{targets_});
    return ord && visit_(targets_, *ord);
  }

  bool prefix_realizable() {
    ++lp_calls_;
    return realize_leading_terms(polys_.first(targets_.size()), TargetSelection{targets_}).has_value();
  }

  std::span<const Polynomial> polys_;
  Filter filter_;
  Visit visit_;
  std::vector<std::size_t> targets_;
  std::uint64_t leaves_ = 0;
  std::uint64_t lp_calls_ = 0;
};

std::uint64_t selection_count(const PolySystem& system) {
  std::uint64_t total = 1;
  for (const Polynomial& f : system.polys()) {
    if (total > std::numeric_limits<std::uint64_t>::max() / f.size()) return std::numeric_limits<std::uint64_t>::max();
    total *= f.size();
  }
  return total;
}

}  // namespace

PureSplit split_pure(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("split of the zero polynomial");
  std::vector<Term> pure;
  std::vector<Term> mixed;
  for (const Term& t : f.terms()) {
    (is_pure_power(t.mono) ? pure : mixed).push_back(t);
  }
  return PureSplit{Polynomial::from_terms(f.dimension(), std::move(pure)),
                   Polynomial::from_terms(f.dimension(), std::move(mixed))};
}

DetectionResult detect_gbd_zero_dim(const PolySystem& system, const ZeroDimOptions& options) {
  validate(system);
  const std::size_t n = system.dimension();
  std::span<const Polynomial> polys(system.polys());
  DetectionResult result;

  // A nonzero constant generates the unit ideal; its leading monomial is 1
  // under every order.
  for (const Polynomial& f : polys) {
    if (f.size() == 1 && f.terms().front().mono.is_constant()) {
      result.diagnostics = "unit ideal: the system contains a nonzero constant";
      finish_yes(result, system, WeightOrder::uniform(n), true, false);
      return result;
    }
  }

  // Members of F1 and, per member, the highest pure power of each variable.
  std::vector<std::size_t> f1;
  std::vector<std::vector<Exponent>> top;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<Exponent> row(n, 0);
    bool any = false;
    for (const Term& t : polys[i].terms()) {
      if (auto v = is_pure_power(t.mono)) {
        row[*v] = std::max(row[*v], t.mono[*v]);
        any = true;
      }
    }
    if (any) {
      f1.push_back(i);
      top.push_back(std::move(row));
    }
  }
  if (f1.size() < n || !has_injective_cover(top, n)) {
    result.diagnostics = "pure powers of " + std::to_string(f1.size()) +
                         " polynomial(s) cannot cover every variable injectively";
    return result;
  }

  std::uint64_t pruned = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t feasible = 0;
  std::uint64_t cone_cells = 0;
  auto summary = [&] {
    std::ostringstream out;
    out << "F1=" << f1.size() << " candidates=" << result.subsets_examined << " pruned=" << pruned
        << " lp_infeasible=" << infeasible << " lp_feasible=" << feasible << " cone_cells=" << cone_cells;
    return out.str();
  };
  auto accepts = [&](const WeightOrder& ord) {
    return is_groebner_basis(polys, ord, options.gb).is_basis && is_zero_dimensional_lt(polys, ord).zero_dimensional;
  };

  std::vector<std::size_t> combo(n);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  do {
    const bool total = std::all_of(combo.begin(), combo.end(), [&](std::size_t k) {
      return std::all_of(top[k].begin(), top[k].end(), [](Exponent e) { return e > 0; });
    });
    std::vector<std::vector<std::uint64_t>> matrix;
    if (total) {
      for (std::size_t k : combo) matrix.emplace_back(top[k].begin(), top[k].end());
    }

    std::vector<std::size_t> assignment(n);  // member combo[i] leads with x_{assignment[i]}
    std::iota(assignment.begin(), assignment.end(), std::size_t{0});
    do {
      bool valid = true;
      for (std::size_t i = 0; i < n && valid; ++i) valid = top[combo[i]][assignment[i]] > 0;
      if (!valid) continue;
      ++result.subsets_examined;
      if (options.prune_permutations && total && permutation_prunable(matrix, assignment)) {
        ++pruned;
        continue;
      }

      // Subset members first, remaining polynomials after.
      std::vector<Polynomial> ordered;
      std::vector<std::size_t> targets;
      std::vector<bool> in_subset(polys.size(), false);
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& f = polys[f1[combo[i]]];
        in_subset[f1[combo[i]]] = true;
        ordered.push_back(f);
        targets.push_back(*f.find(pure_power(n, assignment[i], top[combo[i]][assignment[i]])));
      }
      auto ord = realize_leading_terms(std::span<const Polynomial>(ordered), TargetSelection{targets});
      if (!ord) {
        ++infeasible;
        continue;
      }
      ++feasible;
      if (accepts(*ord)) {
        result.diagnostics = summary();
        finish_yes(result, system, *ord, true, false);
        return result;
      }
      if (options.cone == ConeSearch::witness_only) continue;

      std::vector<std::size_t> tested;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (!in_subset[i]) ordered.push_back(polys[i]);
      }
      for (const Polynomial& f : ordered) tested.push_back(leading_index(*ord, f));
      std::optional<WeightOrder> found;
      SelectionWalk walk(
          ordered, nullptr,
          [&](const std::vector<std::size_t>& sel, const WeightOrder& cell) {
            ++cone_cells;
            if (sel == tested || !accepts(cell)) return false;
            found = cell;
            return true;
          });
      if (walk.run(targets)) {
        result.diagnostics = summary();
        finish_yes(result, system, *found, true, false);
        return result;
      }
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  } while (next_combination(combo, f1.size()));

  result.diagnostics = summary();
  return result;
}

DetectionResult detect_sgbd(const PolySystem& system, std::uint64_t cap) {
  validate(system);
  std::span<const Polynomial> polys(system.polys());
  DetectionResult result;
  std::vector<std::size_t> targets;
  std::optional<WeightOrder> found;

  std::function<bool()> descend = [&]() -> bool {
    const std::size_t depth = targets.size();
    if (depth == polys.size()) {
      if (++result.subsets_examined > cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " coprime selections");
      }
      found = realize_leading_terms(polys, TargetSelection{targets});
      return found.has_value();
    }
    for (std::size_t j = 0; j < polys[depth].size(); ++j) {
      const Monomial& m = polys[depth].terms()[j].mono;
      bool coprime = true;
      for (std::size_t i = 0; i < depth && coprime; ++i) coprime = mono_coprime(polys[i].terms()[targets[i]].mono, m);
      if (!coprime) continue;
      targets.push_back(j);
      if (descend()) return true;
      targets.pop_back();
    }
    return false;
  };

  if (descend()) {
    result.diagnostics = "coprime selections tested=" + std::to_string(result.subsets_examined);
    finish_yes(result, system, *found, false, true);
    return result;
  }
  result.diagnostics = "coprime selections tested=" + std::to_string(result.subsets_examined);
  return result;
}

DetectionResult detect_gbd_bruteforce(const PolySystem& system, bool require_zero_dim, std::uint64_t cap) {
  validate(system);
  const std::uint64_t total = selection_count(system);
  if (total > cap) {
    throw CapExceeded(std::to_string(total) + " leading-term selections exceed the cap of " + std::to_string(cap));
  }
  std::span<const Polynomial> polys(system.polys());
  const std::size_t n = system.dimension();
  DetectionResult result;
  std::optional<WeightOrder> found;

  SelectionWalk::Filter filter;
  if (require_zero_dim) {
    filter = [&](const std::vector<std::size_t>& sel) {
      std::vector<bool> covered(n, false);
      for (std::size_t i = 0; i < sel.size(); ++i) {
        const Monomial& m = polys[i].terms()[sel[i]].mono;
        if (m.is_constant()) return true;
        if (auto v = is_pure_power(m)) covered[*v] = true;
      }
      return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
    };
  }
  SelectionWalk walk(polys, filter, [&](const std::vector<std::size_t>&, const WeightOrder& ord) {
    if (!is_groebner_basis(polys, ord).is_basis) return false;
    found = ord;
    return true;
  });
  const bool yes = walk.run({});
  result.subsets_examined = walk.leaves();
  result.diagnostics =
      "selections=" + std::to_string(total) + " reached=" + std::to_string(walk.leaves()) + " lp_calls=" +
      std::to_string(walk.lp_calls());
  if (yes) finish_yes(result, system, *found, require_zero_dim, false);
  return result;
}

}  // namespace gbd
