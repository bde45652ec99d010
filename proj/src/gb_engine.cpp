#include "gbd/gb_engine.hpp"

#include <algorithm>

#include "gbd/errors.hpp"

namespace gbd {

namespace {

struct Leads {
  std::vector<Monomial> monos;
  std::vector<Rational> coeffs;
};

Leads collect_leads(std::span<const Polynomial> basis, const WeightOrder& ord) {
  Leads leads;
  leads.monos.reserve(basis.size());
  leads.coeffs.reserve(basis.size());
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw InvalidArgument("zero polynomial in basis");
    const Term& lt = leading_term(ord, g);
    leads.monos.push_back(lt.mono);
    leads.coeffs.push_back(lt.coeff);
  }
  return leads;
}

std::optional<std::size_t> first_divisor(const Leads& leads, const Monomial& m) {
  for (std::size_t i = 0; i < leads.monos.size(); ++i) {
    if (mono_divides(leads.monos[i], m)) return i;
  }
  return std::nullopt;
}

Polynomial s_polynomial_with_leads(const Polynomial& f, const Term& lf, const Polynomial& g, const Term& lg) {
  Monomial l = mono_lcm(lf.mono, lg.mono);
  Term tf{Rational(1) / lf.coeff, mono_quotient(l, lf.mono)};
  Term tg{Rational(1) / lg.coeff, mono_quotient(l, lg.mono)};
  return sub_mul(tf * f, tg, g);
}

ReductionTrace reduce_fully(const Polynomial& f, std::span<const Polynomial> basis, const Leads& leads,
                            const WeightOrder& ord, ReductionStrategy strategy, bool record) {
  ReductionTrace trace;
  Polynomial h = f;
  std::vector<Term> remainder;
  auto apply = [&](std::size_t term_index, std::size_t reducer) {
    const Term& target = h.terms()[term_index];
    Term t{target.coeff / leads.coeffs[reducer], mono_quotient(target.mono, leads.monos[reducer])};
    if (record) trace.steps.push_back(ReductionStep{reducer, t});
    h = sub_mul(h, t, basis[reducer]);
  };

  if (strategy == ReductionStrategy::max_lt) {
    while (!h.is_zero()) {
      std::size_t idx = leading_index(ord, h);
      if (auto reducer = first_divisor(leads, h.terms()[idx].mono)) {
        apply(idx, *reducer);
      } else {
        remainder.push_back(h.terms()[idx]);
        h.erase(idx);
      }
    }
    trace.remainder = Polynomial::from_terms(f.dimension(), std::move(remainder));
  } else {
    while (true) {
      bool reduced = false;
      for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (auto reducer = first_divisor(leads, h.terms()[idx].mono)) {
          apply(idx, *reducer);
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    trace.remainder = std::move(h);
  }
  return trace;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of a zero polynomial");
  if (f.dimension() != g.dimension()) throw DimensionError("polynomial dimensions differ");
  return s_polynomial_with_leads(f, leading_term(ord, f), g, leading_term(ord, g));
}

std::optional<Polynomial> reduce_step(const Polynomial& f, const Polynomial& g, const WeightOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("reduction involving a zero polynomial");
  const Term& lf = leading_term(ord, f);
  const Term& lg = leading_term(ord, g);
  if (!mono_divides(lg.mono, lf.mono)) return std::nullopt;
  Term t{lf.coeff / lg.coeff, mono_quotient(lf.mono, lg.mono)};
  return sub_mul(f, t, g);
}

ReductionTrace normal_form(const Polynomial& f, std::span<const Polynomial> basis, const WeightOrder& ord,
                           ReductionStrategy strategy) {
  Leads leads = collect_leads(basis, ord);
  return reduce_fully(f, basis, leads, ord, strategy, true);
}

Polynomial replay(const Polynomial& f, std::span<const Polynomial> basis, const ReductionTrace& trace) {
  Polynomial h = f;
  for (const ReductionStep& step : trace.steps) {
    if (step.reducer >= basis.size()) throw InvalidArgument("trace refers to a missing reducer");
    h = sub_mul(h, step.multiplier, basis[step.reducer]);
  }
  return h;
}

GbCertificate is_groebner_basis(std::span<const Polynomial> basis, const WeightOrder& ord, GbOptions options) {
  if (basis.empty()) throw InvalidArgument("Groebner basis test on an empty system");
  Leads leads = collect_leads(basis, ord);
  GbCertificate cert;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (options.skip_coprime && mono_coprime(leads.monos[i], leads.monos[j])) continue;
      ++cert.pairs_checked;
      Polynomial s = s_polynomial_with_leads(basis[i], Term{leads.coeffs[i], leads.monos[i]}, basis[j],
                                             Term{leads.coeffs[j], leads.monos[j]});
      if (s.is_zero()) continue;
      ReductionTrace trace = reduce_fully(s, basis, leads, ord, options.strategy, false);
      if (!trace.remainder.is_zero()) {
        cert.failing_pair = std::make_pair(i, j);
        cert.remainder = std::move(trace.remainder);
        return cert;
      }
    }
  }
  cert.is_basis = true;
  return cert;
}

GbCertificate is_groebner_basis(const PolySystem& system, const WeightOrder& ord, GbOptions options) {
  return is_groebner_basis(std::span<const Polynomial>(system.polys()), ord, options);
}

bool pairwise_coprime_lt(std::span<const Polynomial> basis, const WeightOrder& ord) {
  Leads leads = collect_leads(basis, ord);
  for (std::size_t i = 0; i < leads.monos.size(); ++i) {
    for (std::size_t j = i + 1; j < leads.monos.size(); ++j) {
      if (!mono_coprime(leads.monos[i], leads.monos[j])) return false;
    }
  }
  return true;
}

ZeroDimWitness is_zero_dimensional_lt(std::span<const Polynomial> basis, const WeightOrder& ord) {
  if (basis.empty()) throw InvalidArgument("zero-dimensionality test on an empty system");
  Leads leads = collect_leads(basis, ord);
  ZeroDimWitness out;
  out.witness.assign(ord.dimension(), std::nullopt);
  for (std::size_t k = 0; k < leads.monos.size(); ++k) {
    const Monomial& m = leads.monos[k];
    if (m.is_constant()) out.unit_ideal = true;
    if (auto var = is_pure_power(m); var && !out.witness[*var]) out.witness[*var] = k;
  }
  out.zero_dimensional =
      out.unit_ideal || std::all_of(out.witness.begin(), out.witness.end(), [](const auto& w) { return w.has_value(); });
  return out;
}

}  // namespace gbd
