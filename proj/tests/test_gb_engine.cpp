#include <doctest.h>

#include <random>

#include "gbd/errors.hpp"
#include "gbd/gb_engine.hpp"
#include "gbd/generators.hpp"
#include "gbd/poly_system.hpp"
#include "oracles.hpp"

using namespace gbd;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

Polynomial P(const char* text, const std::vector<std::string>& vars = kXY) { return parse_polynomial(text, vars); }

WeightOrder order(std::initializer_list<long> w) {
  std::vector<Rational> ws;
  for (long v : w) ws.emplace_back(v);
  return WeightOrder(ws);
}

std::vector<long long> as_ll(const WeightOrder& ord) {
  std::vector<long long> out;
  for (const Integer& z : ord.integer_weights()) out.push_back(z.get_si());
  return out;
}

WeightOrder random_order(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(1, 5);
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(pick(rng));
  return WeightOrder(w);
}

}  // namespace

TEST_CASE("s_polynomial") {
  const auto w = order({1, 1});
  Polynomial f = P("x^2 + y"), g = P("x*y + 1");
  Polynomial s = s_polynomial(f, g, w);
  CHECK(format_polynomial(s, kXY) == "-x + y^2");
  CHECK(oracle::to_dense(s) == oracle::s_poly(as_ll(w), oracle::to_dense(f), oracle::to_dense(g)));

  CHECK(s_polynomial(f, f, w).is_zero());
  CHECK(s_polynomial(P("x^2"), P("y^3"), w).is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial(2), f, w), InvalidArgument);
}

TEST_CASE("reduce_step") {
  const auto w = order({1, 1});
  auto h = reduce_step(P("x^2*y + 1"), P("x*y - 1"), w);
  REQUIRE(h);
  CHECK(format_polynomial(*h, kXY) == "x + 1");
  auto zero = reduce_step(P("x^2"), P("x"), w);
  REQUIRE(zero);
  CHECK(zero->is_zero());
  CHECK_FALSE(reduce_step(P("y"), P("x"), w));
  CHECK_THROWS_AS(reduce_step(P("y"), Polynomial(2), w), InvalidArgument);
}

TEST_CASE("normal_form") {
  const auto w = order({1, 1});
  std::vector<Polynomial> basis = {P("x")};
  CHECK(normal_form(P("x^2"), basis, w).remainder.is_zero());

  basis = {P("x^2 + 1")};
  CHECK(format_polynomial(normal_form(P("5"), basis, w).remainder, kXY) == "5");

  basis = {P("x*y - 1")};
  for (auto strategy : {ReductionStrategy::max_lt, ReductionStrategy::first_match}) {
    ReductionTrace trace = normal_form(P("x^2*y + 1"), basis, w, strategy);
    CHECK(format_polynomial(trace.remainder, kXY) == "x + 1");
    CHECK(replay(P("x^2*y + 1"), basis, trace) == trace.remainder);
  }

  basis = {P("x"), Polynomial(2)};
  CHECK_THROWS_AS(normal_form(P("x"), basis, w), InvalidArgument);
}

TEST_CASE("is_groebner_basis examples") {
  std::vector<Polynomial> coprime = {P("x + y"), P("y")};
  CHECK(is_groebner_basis(coprime, order({2, 1})).is_basis);

  std::vector<Polynomial> single = {P("x^2")};
  CHECK(is_groebner_basis(single, order({1, 1})).is_basis);

  std::vector<Polynomial> failing = {P("x^2"), P("x*y + 1")};
  for (bool skip : {true, false}) {
    GbCertificate cert = is_groebner_basis(failing, order({1, 1}), GbOptions{skip, ReductionStrategy::max_lt});
    CHECK_FALSE(cert.is_basis);
    REQUIRE(cert.failing_pair);
    CHECK(*cert.failing_pair == std::pair<std::size_t, std::size_t>(0, 1));
    REQUIRE(cert.remainder);
    CHECK(format_polynomial(*cert.remainder, kXY) == "-x");
  }

  std::vector<Polynomial> empty;
  CHECK_THROWS_AS(is_groebner_basis(empty, order({1, 1})), InvalidArgument);
  std::vector<Polynomial> with_zero = {P("x"), Polynomial(2)};
  CHECK_THROWS_AS(is_groebner_basis(with_zero, order({1, 1})), InvalidArgument);
}

TEST_CASE("pairwise_coprime_lt and zero-dimensionality") {
  const auto w = order({1, 1});
  std::vector<Polynomial> a = {P("x^2"), P("y^3")};
  CHECK(pairwise_coprime_lt(a, w));
  std::vector<Polynomial> b = {P("x^2"), P("x*y")};
  CHECK_FALSE(pairwise_coprime_lt(b, w));
  const std::vector<std::string> yzw = {"y", "z", "w"};
  std::vector<Polynomial> c = {P("y*z", yzw), P("y*w", yzw)};
  CHECK_FALSE(pairwise_coprime_lt(c, order({1, 1, 1})));

  ZeroDimWitness zd = is_zero_dimensional_lt(a, w);
  CHECK(zd.zero_dimensional);
  CHECK_FALSE(zd.unit_ideal);
  CHECK(zd.witness == std::vector<std::optional<std::size_t>>{0, 1});

  std::vector<Polynomial> mixed = {P("x*y")};
  CHECK_FALSE(is_zero_dimensional_lt(mixed, w).zero_dimensional);

  std::vector<Polynomial> unit = {P("1")};
  ZeroDimWitness u = is_zero_dimensional_lt(unit, w);
  CHECK(u.zero_dimensional);
  CHECK(u.unit_ideal);
}

TEST_CASE("S-polynomials cancel the lcm and match the expand-and-subtract oracle") {
  std::mt19937_64 rng(21);
  RandomSystemShape shape;
  shape.polys = 2;
  shape.max_terms = 4;
  for (int trial = 0; trial < 500; ++trial) {
    shape.vars = 1 + trial % 3;
    PolySystem s = random_system(shape, rng);
    WeightOrder w = random_order(shape.vars, rng);
    Polynomial sp = s_polynomial(s[0], s[1], w);
    Monomial l = mono_lcm(leading_term(w, s[0]).mono, leading_term(w, s[1]).mono);
    CHECK_FALSE(sp.find(l));
    CHECK(oracle::to_dense(sp) == oracle::s_poly(as_ll(w), oracle::to_dense(s[0]), oracle::to_dense(s[1])));
  }
}

TEST_CASE("normal form: traces replay and remainders are fully reduced") {
  std::mt19937_64 rng(22);
  RandomSystemShape shape;
  shape.max_terms = 4;
  for (int trial = 0; trial < 400; ++trial) {
    shape.vars = 1 + trial % 3;
    shape.polys = 1 + trial % 4;
    PolySystem s = random_system(shape, rng);
    WeightOrder w = random_order(shape.vars, rng);
    Polynomial f = random_system(shape, rng)[0];
    for (auto strategy : {ReductionStrategy::max_lt, ReductionStrategy::first_match}) {
      ReductionTrace trace = normal_form(f, s.polys(), w, strategy);
      CHECK(replay(f, s.polys(), trace) == trace.remainder);
      for (const Term& t : trace.remainder.terms()) {
        for (const Polynomial& g : s.polys()) CHECK_FALSE(mono_divides(leading_term(w, g).mono, t.mono));
      }
    }
  }
}

TEST_CASE("GB verdicts: oracle agreement, coprime skip, strategy independence") {
  std::mt19937_64 rng(23);
  RandomSystemShape shape;
  shape.max_terms = 3;
  int positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    shape.vars = 1 + trial % 3;
    shape.polys = 2 + trial % 3;
    PolySystem s = random_system(shape, rng);
    WeightOrder w = random_order(shape.vars, rng);

    const bool verdict = is_groebner_basis(s, w).is_basis;
    CHECK(verdict == is_groebner_basis(s, w, GbOptions{false, ReductionStrategy::max_lt}).is_basis);
    CHECK(verdict == is_groebner_basis(s, w, GbOptions{false, ReductionStrategy::first_match}).is_basis);
    CHECK(verdict == is_groebner_basis(s, w, GbOptions{true, ReductionStrategy::first_match}).is_basis);

    std::vector<oracle::Dense> dense;
    for (const auto& p : s.polys()) dense.push_back(oracle::to_dense(p));
    CHECK(verdict == oracle::is_gb(as_ll(w), dense));

    if (verdict) {
      ++positives;
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          Polynomial sp = s_polynomial(s[i], s[j], w);
          CHECK(normal_form(sp, s.polys(), w, ReductionStrategy::max_lt).remainder.is_zero());
          CHECK(normal_form(sp, s.polys(), w, ReductionStrategy::first_match).remainder.is_zero());
        }
      }
    }
  }
  CHECK(positives > 50);
}
