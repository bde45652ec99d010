#include "gbd/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "gbd/errors.hpp"
#include "gbd/gb_engine.hpp"

namespace gbd {

void SetPackingInstance::validate() const {
  if (universe == 0) throw InvalidArgument("set packing universe must be positive");
  if (goal == 0) throw InvalidArgument("set packing goal must be positive");
  if (size_cap == 0) throw InvalidArgument("set packing size cap must be positive");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const auto& s = sets[j];
    const std::string where = "set " + std::to_string(j + 1);
    if (s.empty()) throw InvalidArgument(where + " is empty");
    if (s.size() > size_cap) throw InvalidArgument(where + " has more than " + std::to_string(size_cap) + " elements");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 1 || s[k] > universe) throw InvalidArgument(where + " has element outside 1.." + std::to_string(universe));
      if (k > 0 && s[k] <= s[k - 1]) throw InvalidArgument(where + " is not strictly increasing");
    }
  }
}

namespace {

std::size_t parse_count(std::string_view text, std::size_t line_no, std::size_t column) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", line_no, column);
  }
  if (text.size() > 9) throw ParseError("integer too large", line_no, column);
  return static_cast<std::size_t>(std::stoul(std::string(text)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Polynomial encoded_polynomial(const EncodingMap& map, std::size_t poly) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < map.set_count; ++j) terms.push_back(Term{Rational(1), map.encoded_monomial(poly, j)});
  return Polynomial::from_terms(map.dimension(), std::move(terms));
}

}  // namespace

SetPackingInstance parse_set_packing(std::string_view text) {
  SetPackingInstance inst;
  bool have_universe = false;
  bool have_goal = false;
  bool have_cap = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    const std::size_t column = static_cast<std::size_t>(line.data() - raw.data()) + 1;

    auto keyword = [&](std::string_view key, std::size_t& slot, bool& seen) {
      if (line.substr(0, key.size()) != key || line.size() == key.size() ||
          !std::isspace(static_cast<unsigned char>(line[key.size()]))) {
        return false;
      }
      if (seen) throw ParseError("duplicate '" + std::string(key) + "' line", line_no, column);
      std::string_view value = trim(line.substr(key.size()));
      slot = parse_count(value, line_no, column + (value.data() - line.data()));
      seen = true;
      return true;
    };
    if (keyword("universe", inst.universe, have_universe) || keyword("goal", inst.goal, have_goal) ||
        keyword("cap", inst.size_cap, have_cap)) {
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(line.front()))) {
      throw ParseError("expected 'universe', 'goal', 'cap' or a comma-separated set", line_no, column);
    }
    std::vector<std::size_t> set;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      if (comma == std::string_view::npos) comma = line.size();
      std::string_view item = trim(line.substr(pos, comma - pos));
      set.push_back(parse_count(item, line_no, column + pos));
      pos = comma + 1;
    }
    std::sort(set.begin(), set.end());
    inst.sets.push_back(std::move(set));
  }
  if (!have_universe) throw ParseError("missing 'universe' line", line_no, 1);
  if (!have_goal) throw ParseError("missing 'goal' line", line_no, 1);
  if (!have_cap) throw ParseError("missing 'cap' line", line_no, 1);
  inst.validate();
  return inst;
}

std::string format_set_packing(const SetPackingInstance& inst) {
  std::ostringstream out;
  out << "universe " << inst.universe << '\n';
  for (const auto& set : inst.sets) {
    for (std::size_t k = 0; k < set.size(); ++k) out << (k ? "," : "") << set[k];
    out << '\n';
  }
  out << "goal " << inst.goal << '\n' << "cap " << inst.size_cap << '\n';
  return out.str();
}

Monomial EncodingMap::encoded_monomial(std::size_t poly, std::size_t set) const {
  if (poly >= goal || set >= set_count) throw InvalidArgument("encoding index out of range");
  std::vector<Exponent> exps(set_monomials[set].exponents().begin(), set_monomials[set].exponents().end());
  exps[y_var(poly, set)] = alpha[set];
  return Monomial(std::move(exps));
}

EncodedPacking encode_set_packing(const SetPackingInstance& inst, std::size_t degree) {
  inst.validate();
  if (inst.size_cap >= degree) {
    throw InvalidArgument("size cap " + std::to_string(inst.size_cap) + " must be below the degree " +
                          std::to_string(degree) + " so every Y exponent stays positive");
  }
  if (inst.sets.empty()) throw InvalidArgument("cannot encode an empty family");

  EncodingMap map;
  map.universe = inst.universe;
  map.set_count = inst.sets.size();
  map.goal = inst.goal;
  map.degree = degree;
  for (const auto& set : inst.sets) {
    std::vector<Exponent> exps(map.dimension(), 0);
    for (std::size_t element : set) exps[map.x_var(element - 1)] = 1;
    map.set_monomials.emplace_back(std::move(exps));
    map.alpha.push_back(static_cast<Exponent>(degree - set.size()));
  }

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= map.universe; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t l = 1; l <= map.goal; ++l) {
    for (std::size_t j = 1; j <= map.set_count; ++j) names.push_back("Y" + std::to_string(l) + "_" + std::to_string(j));
  }
  std::vector<Polynomial> polys;
  for (std::size_t l = 0; l < map.goal; ++l) {
    Polynomial f = encoded_polynomial(map, l);
    if (f.homogeneous_degree() != degree) throw InternalError("encoded polynomial is not homogeneous of the degree");
    polys.push_back(std::move(f));
  }
  return EncodedPacking{PolySystem(std::move(names), std::move(polys)), std::move(map)};
}

PackingWitness packing_witness_order(const EncodingMap& map, std::span<const std::size_t> chosen) {
  if (chosen.size() != map.goal) throw InvalidArgument("need one chosen set per polynomial");
  std::vector<Rational> weights(map.dimension(), Rational(1));
  for (std::size_t l = 0; l < chosen.size(); ++l) {
    if (chosen[l] >= map.set_count) throw InvalidArgument("chosen set index out of range");
    weights[map.y_var(l, chosen[l])] = static_cast<unsigned long>(map.degree + 1);
  }
  PackingWitness out{WeightOrder(std::move(weights)), {}, true};
  for (std::size_t l = 0; l < map.goal; ++l) {
    Monomial lt = leading_term(out.order, encoded_polynomial(map, l)).mono;
    if (lt != map.encoded_monomial(l, chosen[l])) throw InternalError("witness order picked an unexpected leading term");
    out.leading_terms.push_back(std::move(lt));
  }
  bool disjoint = true;
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      out.coprime = out.coprime && mono_coprime(out.leading_terms[a], out.leading_terms[b]);
      disjoint = disjoint && chosen[a] != chosen[b] &&
                 mono_coprime(map.set_monomials[chosen[a]], map.set_monomials[chosen[b]]);
    }
  }
  if (disjoint && !out.coprime) throw InternalError("disjoint sets produced non-coprime leading terms");
  return out;
}

std::vector<std::size_t> decode_selection(const EncodingMap& map, std::span<const Monomial> leading_terms) {
  if (leading_terms.size() != map.goal) throw InvalidArgument("need one leading term per polynomial");
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < leading_terms.size(); ++l) {
    const Monomial& m = leading_terms[l];
    if (m.dimension() != map.dimension()) throw DimensionError("leading term dimension does not match encoding");
    std::optional<std::size_t> set;
    for (std::size_t v = map.universe; v < map.dimension(); ++v) {
      if (m[v] == 0) continue;
      const std::size_t row = (v - map.universe) / map.set_count;
      if (set || row != l) throw InvalidArgument("leading term " + std::to_string(l + 1) + " has a foreign Y factor");
      set = (v - map.universe) % map.set_count;
    }
    if (!set) throw InvalidArgument("leading term " + std::to_string(l + 1) + " has no Y factor");
    if (m != map.encoded_monomial(l, *set)) {
      throw InvalidArgument("leading term " + std::to_string(l + 1) + " does not match the encoding");
    }
    out.push_back(*set);
  }
  return out;
}

PolySystem elevate_to_zero_dim(const PolySystem& system, std::size_t degree) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].homogeneous_degree() != degree) {
      throw InvalidArgument("polynomial " + std::to_string(i + 1) + " is not homogeneous of degree " +
                            std::to_string(degree));
    }
  }
  const std::size_t n = system.dimension();
  const Exponent target = static_cast<Exponent>(2 * degree + 1);
  std::vector<Polynomial> polys = system.polys();
  std::vector<Exponent> exps(n, 0);
  // Descending lex: larger exponents on earlier variables come first.
  std::function<void(std::size_t, Exponent)> emit = [&](std::size_t var, Exponent left) {
    if (var + 1 == n) {
      exps[var] = left;
      polys.push_back(Polynomial::from_monomial(Monomial(exps)));
      return;
    }
    for (Exponent e = left + 1; e-- > 0;) {
      exps[var] = e;
      emit(var + 1, left - e);
    }
  };
  if (n > 0) emit(0, target);
  return PolySystem(system.var_names(), std::move(polys));
}

PackingSolution solve_set_packing_bruteforce(const SetPackingInstance& inst, std::uint64_t cap) {
  inst.validate();
  const std::size_t k = inst.sets.size();
  const std::size_t c = inst.goal;
  PackingSolution out;
  if (c > k) return out;
  Integer combos;
  mpz_bin_uiui(combos.get_mpz_t(), k, c);
  if (combos > Integer(std::to_string(cap))) {
    throw CapExceeded(to_string(combos) + " combinations exceed the cap of " + std::to_string(cap));
  }
  auto disjoint = [&](std::size_t a, std::size_t b) {
    const auto& x = inst.sets[a];
    const auto& y = inst.sets[b];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) return false;
      x[i] < y[j] ? ++i : ++j;
    }
    return true;
  };
  std::vector<std::size_t> combo(c);
  for (std::size_t i = 0; i < c; ++i) combo[i] = i;
  while (true) {
    ++out.combinations_examined;
    bool ok = true;
    for (std::size_t a = 0; a < c && ok; ++a) {
      for (std::size_t b = a + 1; b < c && ok; ++b) ok = disjoint(combo[a], combo[b]);
    }
    if (ok) {
      out.yes = true;
      out.chosen = combo;
      return out;
    }
    std::size_t i = c;
    while (i-- > 0 && combo[i] == k - c + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++combo[i];
    for (std::size_t j = i + 1; j < c; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

}  // namespace gbd
