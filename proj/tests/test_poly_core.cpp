#include <doctest.h>

#include <random>

#include "gbd/errors.hpp"
#include "gbd/generators.hpp"
#include "gbd/monomial.hpp"
#include "gbd/poly_system.hpp"
#include "gbd/weight_order.hpp"

using namespace gbd;

namespace {

WeightOrder order(std::initializer_list<long> w) {
  std::vector<Rational> ws;
  for (long v : w) ws.emplace_back(v);
  return WeightOrder(ws);
}

Monomial random_mono(std::size_t n, std::uint32_t max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, max_exp);
  std::vector<Exponent> e(n);
  for (auto& x : e) x = pick(rng);
  return Monomial(e);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("monomial arithmetic") {
  CHECK(mono_mul({1, 0}, {0, 1}) == Monomial{1, 1});
  CHECK(mono_mul({0, 0}, {2, 3}) == Monomial{2, 3});
  CHECK(mono_mul({2, 1}, {1, 4}) == Monomial{3, 5});

  CHECK(mono_lcm({2, 0}, {1, 1}) == Monomial{2, 1});
  CHECK(mono_lcm({0, 0}, {0, 0}) == Monomial{0, 0});
  CHECK(mono_lcm({3, 1}, {3, 1}) == Monomial{3, 1});

  CHECK(mono_divides({1, 0}, {2, 1}));
  CHECK_FALSE(mono_divides({2, 0}, {1, 3}));
  CHECK(mono_divides({0, 0}, {5, 7}));

  CHECK(is_pure_power({0, 3}) == std::optional<std::size_t>(1));
  CHECK_FALSE(is_pure_power({1, 1}));
  CHECK_FALSE(is_pure_power({0, 0}));

  CHECK_THROWS_AS(mono_mul({1}, {1, 2}), DimensionError);
  CHECK_THROWS_AS(mono_lcm({1}, {1, 2}), DimensionError);
  CHECK_THROWS_AS((void)mono_divides({1}, {1, 2}), DimensionError);
  CHECK_THROWS_AS(mono_mul({0xffffffffu}, {1}), OverflowError);
}

TEST_CASE("weight order comparison") {
  CHECK(order({2, 1}).compare({2, 0}, {1, 1}) > 0);
  CHECK(order({1, 1}).compare({2, 0}, {1, 1}) > 0);
  CHECK(order({1, 1}).compare({1, 1}, {2, 0}) < 0);
  CHECK(order({3, 7}).compare({4, 1}, {4, 1}) == 0);
  CHECK(WeightOrder({Rational(1, 3), Rational(1, 2)}).compare({3, 0}, {0, 2}) == 0 ? false : true);
  CHECK(WeightOrder({Rational(1, 3), Rational(1, 2)}).integer_weights() == std::vector<Integer>{2, 3});
  CHECK_THROWS_AS(order({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(order({1, -1}), InvalidArgument);
  CHECK_THROWS_AS((void)order({1, 1}).compare({1}, {1, 0}), DimensionError);
}

TEST_CASE("leading term") {
  const std::vector<std::string> xy = {"x", "y"};
  CHECK(leading_term(order({2, 1}), parse_polynomial("x^2 + x*y + y^2", xy)).mono == Monomial{2, 0});
  CHECK(leading_term(order({1, 1}), parse_polynomial("5", xy)).coeff == 5);
  CHECK(leading_term(order({1, 3}), parse_polynomial("x + y", xy)).mono == Monomial{0, 1});
  CHECK_THROWS_AS((void)leading_term(order({1, 1}), Polynomial(2)), InvalidArgument);
}

TEST_CASE("compare is a total order compatible with weights") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> wpick(1, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(wpick(rng), wpick(rng));
    WeightOrder ord(w);
    Monomial a = random_mono(n, 4, rng), b = random_mono(n, 4, rng), c = random_mono(n, 4, rng);
    auto ab = ord.compare(a, b), ba = ord.compare(b, a);
    CHECK((ab < 0) == (ba > 0));
    CHECK((ab == 0) == (a == b));
    if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
    // Multiplicativity: a < b implies a*c < b*c.
    if (ord.less(a, b)) CHECK(ord.less(mono_mul(a, c), mono_mul(b, c)));
    if (!a.is_constant()) CHECK(ord.less(Monomial(n), a));
  }
}

TEST_CASE("lcm degree facts") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Monomial a = random_mono(3, 5, rng), b = random_mono(3, 5, rng);
    Monomial l = mono_lcm(a, b);
    CHECK(mono_divides(a, l));
    CHECK(mono_divides(b, l));
    CHECK(mono_divides(l, mono_mul(a, b)));
    CHECK(l.degree() >= std::max(a.degree(), b.degree()));
    CHECK(l.degree() <= a.degree() + b.degree());
    CHECK(mono_coprime(a, b) == mono_gcd(a, b).is_constant());
  }
}

TEST_CASE("polynomial arithmetic keeps canonical form") {
  const std::vector<std::string> xy = {"x", "y"};
  Polynomial f = parse_polynomial("x^2 + 3*x*y - y", xy);
  Polynomial g = parse_polynomial("-x^2 + y", xy);
  CHECK(format_polynomial(f + g, xy) == "3*x*y");
  CHECK((f - f).is_zero());
  CHECK(format_polynomial(Term{Rational(-2), Monomial{0, 1}} * g, xy) == "2*x^2*y - 2*y^2");
  CHECK(sub_mul(f, Term{Rational(1), Monomial{0, 0}}, f).is_zero());
  CHECK(f.homogeneous_degree() == std::nullopt);
  CHECK(parse_polynomial("x*y + y^2", xy).homogeneous_degree() == std::optional<std::uint64_t>(2));
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f.terms()[i - 1].mono > f.terms()[i].mono);
}

TEST_CASE("parse_system") {
  PolySystem s = parse_system("vars x y\nx^2 + x*y\ny^2");
  CHECK(s.dimension() == 2);
  REQUIRE(s.size() == 2);
  CHECK(format_polynomial(s[0], s.var_names()) == "x^2 + x*y");
  CHECK(format_polynomial(s[1], s.var_names()) == "y^2");

  PolySystem merged = parse_system("vars x\n3/2*x - 1/2*x");
  REQUIRE(merged.size() == 1);
  CHECK(format_polynomial(merged[0], merged.var_names()) == "x");

  CHECK_THROWS_AS(parse_system("vars x\nx^-1"), ParseError);

  PolySystem commented = parse_system("# header\nvars a b1\n\n2/4*a^1*b1 # tail\n  \n-b1^3\n");
  CHECK(format_system(commented) == "vars a b1\n1/2*a*b1\n-b1^3\n");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_system("vars x y\nx + z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_system("vars x\n1/0*x"), ParseError);
  CHECK_THROWS_AS(parse_system("x + y"), ParseError);
  CHECK_THROWS_AS(parse_system("vars x x\nx"), ParseError);
  CHECK_THROWS_AS(parse_system("vars x\nx^"), ParseError);
  CHECK_THROWS_AS(parse_system("vars x\nx +"), ParseError);
  CHECK_THROWS_AS(parse_system("vars x\nx^0"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    RandomSystemShape shape;
    shape.vars = 1 + trial % 4;
    shape.polys = 1 + trial % 5;
    shape.max_terms = 4;
    shape.coeff_bound = 7;
    PolySystem s = random_system(shape, rng);
    const std::string text = format_system(s);
    PolySystem back = parse_system(text);
    CHECK(back == s);
    CHECK(format_system(back) == text);
  }
}
