#include <doctest.h>

#include <random>

#include "gbd/detector.hpp"
#include "gbd/errors.hpp"
#include "gbd/generators.hpp"
#include "gbd/poly_system.hpp"
#include "oracles.hpp"

using namespace gbd;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<std::string> lts_text(const DetectionResult& r, const PolySystem& s) {
  std::vector<std::string> out;
  for (const Monomial& m : *r.leading_terms) out.push_back(format_monomial(m, s.var_names()));
  return out;
}

}  // namespace

TEST_CASE("split_pure") {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  auto split = split_pure(parse_polynomial("x^2 + x*y", xyz));
  CHECK(format_polynomial(split.pure, xyz) == "x^2");
  CHECK(format_polynomial(split.mixed, xyz) == "x*y");
  split = split_pure(parse_polynomial("x*y + y*z", xyz));
  CHECK(split.pure.is_zero());
  CHECK(format_polynomial(split.mixed, xyz) == "x*y + y*z");
  split = split_pure(parse_polynomial("x^3 + y^2", xyz));
  CHECK(format_polynomial(split.pure, xyz) == "x^3 + y^2");
  CHECK(split.mixed.is_zero());
  CHECK_THROWS_AS(split_pure(Polynomial(3)), InvalidArgument);
}

TEST_CASE("detect_gbd_zero_dim examples") {
  PolySystem s = parse_system("vars x y\nx^2 + x*y\ny^2");
  DetectionResult r = detect_gbd_zero_dim(s);
  REQUIRE(r.yes());
  CHECK(r.witness->integer_weights()[0] > r.witness->integer_weights()[1]);
  CHECK(lts_text(r, s) == std::vector<std::string>{"x^2", "y^2"});
  CHECK(r.zero_dimensional == true);
  CHECK(detect_gbd_bruteforce(s, true).yes());

  CHECK_FALSE(detect_gbd_zero_dim(parse_system("vars x y\nx*y")).yes());
  CHECK_FALSE(detect_gbd_zero_dim(parse_system("vars x y\nx + y")).yes());

  PolySystem unit = parse_system("vars x y\nx*y + x\n3");
  DetectionResult u = detect_gbd_zero_dim(unit);
  CHECK(u.yes());
  CHECK(detect_gbd_bruteforce(unit, true).yes());

  CHECK_THROWS_AS(detect_gbd_zero_dim(PolySystem({"x"}, {})), InvalidArgument);
  CHECK_THROWS_AS(detect_gbd_zero_dim(PolySystem({"x"}, {Polynomial(1)})), InvalidArgument);
}

TEST_CASE("one LP witness per candidate can miss the order that works") {
  // Pure powers y^3, x^2 admit any w; only w2 > 2*w1 makes 3x^3 - 3xy lead
  // with x*y, and only then is the system a GB.
  PolySystem s = parse_system("vars x y\n3*y^3\n3*x^2\n-x^3\n3*x^3 - 3*x*y");
  ZeroDimOptions single;
  single.cone = ConeSearch::witness_only;
  CHECK_FALSE(detect_gbd_zero_dim(s, single).yes());

  DetectionResult r = detect_gbd_zero_dim(s);
  REQUIRE(r.yes());
  const auto& w = r.witness->integer_weights();
  CHECK(w[1] > 2 * w[0]);
  CHECK(detect_gbd_bruteforce(s, true).yes());

  std::vector<oracle::Dense> dense;
  for (const auto& p : s.polys()) dense.push_back(oracle::to_dense(p));
  CHECK(oracle::is_gb({w[0].get_si(), w[1].get_si()}, dense));
  CHECK_FALSE(oracle::is_gb({1, 1}, dense));
}

TEST_CASE("detect_sgbd examples") {
  // Encodings of the packing instances {{1},{2}} and {{1},{1}} with goal 2.
  PolySystem yes = parse_system("vars X1 X2 Y11 Y12 Y21 Y22\nY11*X1 + Y12*X2\nY21*X1 + Y22*X2");
  DetectionResult r = detect_sgbd(yes);
  REQUIRE(r.yes());
  CHECK(lts_text(r, yes) == std::vector<std::string>{"X1*Y11", "X2*Y22"});

  PolySystem no = parse_system("vars X1 Y11 Y12 Y21 Y22\nY11*X1 + Y12*X1\nY21*X1 + Y22*X1");
  CHECK_FALSE(detect_sgbd(no).yes());

  CHECK(detect_sgbd(parse_system("vars x\nx")).yes());
}

TEST_CASE("detect_gbd_bruteforce examples") {
  CHECK_FALSE(detect_gbd_bruteforce(parse_system("vars x y\nx^2\nx*y + 1"), false).yes());
  PolySystem single = parse_system("vars x\nx");
  CHECK(detect_gbd_bruteforce(single, false).yes());
  DetectionResult r = detect_gbd_bruteforce(single, true);
  CHECK(r.yes());
  CHECK(r.zero_dimensional == true);
}

TEST_CASE("caps refuse instead of truncating") {
  PolySystem big = parse_system("vars x y z\nx + y + z + x*y\nx + y + z + y*z\nx + y + z + x*z");
  CHECK_THROWS_AS(detect_gbd_bruteforce(big, false, 10), CapExceeded);
  CHECK_NOTHROW(detect_gbd_bruteforce(big, false, 64));
  CHECK_THROWS_AS(detect_sgbd(big, 1), CapExceeded);
}

TEST_CASE("detector properties on random systems") {
  std::mt19937_64 rng(41);
  RandomSystemShape shape;
  shape.max_terms = 3;
  int yes_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    shape.vars = 1 + trial % 3;
    shape.polys = 1 + trial % 4;
    PolySystem s = random_system(shape, rng);

    DetectionResult zd = detect_gbd_zero_dim(s);
    DetectionResult brute_zd = detect_gbd_bruteforce(s, true);
    DetectionResult brute = detect_gbd_bruteforce(s, false);
    DetectionResult sgbd = detect_sgbd(s);
    CHECK(zd.yes() == brute_zd.yes());
    if (brute_zd.yes()) CHECK(brute.yes());
    if (sgbd.yes()) CHECK(brute.yes());
    if (zd.yes()) {
      ++yes_count;
      CHECK(is_groebner_basis(s, *zd.witness, GbOptions{false, ReductionStrategy::first_match}).is_basis);
      CHECK(is_zero_dimensional_lt(s.polys(), *zd.witness).zero_dimensional);
    }
    if (sgbd.yes()) CHECK(pairwise_coprime_lt(s.polys(), *sgbd.witness));

    std::size_t f1 = 0;
    for (const Polynomial& f : s.polys()) f1 += split_pure(f).pure.is_zero() ? 0 : 1;
    CHECK(zd.subsets_examined <= binomial(f1, shape.vars) * factorial(shape.vars));
    if (zd.diagnostics.rfind("pure powers of", 0) == 0) CHECK_FALSE(brute_zd.yes());

    ZeroDimOptions plain;
    plain.prune_permutations = false;
    CHECK(detect_gbd_zero_dim(s, plain).yes() == zd.yes());
  }
  CHECK(yes_count > 30);
}
