#include "lietools/poly.hpp"

#include <random>

#include "doctest.h"
#include "lietools/errors.hpp"
#include "lietools/lndcalc.hpp"

using namespace lietools;

namespace {

MultiPoly random_poly(const QuotientRing& ring, std::mt19937& rng, unsigned max_degree, int max_terms) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, ring.num_vars() - 1);
  MultiPoly f = ring.zero();
  for (int t = term_count(rng); t > 0; --t) {
    Monomial m(ring.num_vars(), 0);
    for (unsigned d = deg(rng); d > 0; --d) ++m[var(rng)];
    f.add_term(m, Rational(coef(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("normal form examples") {
  const QuotientRing ring = sl2_coordinate_ring();
  CHECK(ring.format(ring.normal_form(ring.parse("a1*b2"))) == "a2*b1 + 1");
  CHECK(ring.format(ring.normal_form(ring.parse("5"))) == "5");
  CHECK(ring.format(ring.normal_form(ring.parse("a1*b2*a1*b2"))) == "a2^2*b1^2 + 2*a2*b1 + 1");
  CHECK(ring.normal_form(ring.parse("a1*b2 - a2*b1 - 1")).is_zero());
  CHECK(ring.format(ring.normal_form(ring.parse("a1"))) == "a1");
  CHECK(ring.format(ring.normal_form(ring.parse("a1*b2 + a2*b1"))) == "2*a2*b1 + 1");
  CHECK(ring.format(ring.normal_form(ring.parse("a2*b1"))) == "a2*b1");
}

TEST_CASE("parsing and formatting") {
  const QuotientRing ring = sl2_coordinate_ring();
  CHECK(ring.format(ring.parse("  3/6 * a1 ^ 2*b2 -a1*a1*b2 ")) == "-1/2*a1^2*b2");
  CHECK(ring.format(ring.parse("0")) == "0");
  CHECK(ring.format(ring.parse("-1")) == "-1");
  CHECK(ring.format(ring.parse("b1^1")) == "b1");
  CHECK(ring.format(ring.parse("a1^0")) == "1");
  CHECK_THROWS_AS(ring.parse("c1"), ParseError);
  CHECK_THROWS_AS(ring.parse("a1 +"), ParseError);
  CHECK_THROWS_AS(ring.parse("1/0"), ParseError);
  CHECK_THROWS_AS(ring.parse("a1^"), ParseError);
  CHECK_THROWS_AS(ring.parse(""), ParseError);
  CHECK_THROWS_AS(ring.parse("a1 a2"), ParseError);
}

TEST_CASE("format and parse round trip") {
  const QuotientRing ring = sl2_coordinate_ring();
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = random_poly(ring, rng, 5, 6);
    CHECK(ring.parse(ring.format(f)) == f);
  }
}

TEST_CASE("graded lex order") {
  CHECK(grlex_less(Monomial{0, 0, 0, 0}, Monomial{0, 0, 0, 1}));
  CHECK(grlex_less(Monomial{0, 1, 1, 0}, Monomial{1, 0, 0, 1}));  // a2*b1 < a1*b2
  CHECK(grlex_less(Monomial{1, 0, 0, 1}, Monomial{0, 0, 3, 0}));
  CHECK_FALSE(grlex_less(Monomial{1, 0, 0, 0}, Monomial{1, 0, 0, 0}));
}

TEST_CASE("ring construction is validated") {
  const std::size_t n = 2;
  // x*y -> x^2 is not a decrease in graded-lex order with x before y.
  RewriteRule bad{Monomial{1, 1}, MultiPoly::monomial(Monomial{2, 0})};
  CHECK_THROWS_AS(QuotientRing({"x", "y"}, {bad}), DomainError);
  CHECK_THROWS_AS(QuotientRing({"x", "x"}), DomainError);
  RewriteRule good{Monomial{2, 0}, MultiPoly::monomial(Monomial{1, 1}) + MultiPoly::constant(n, 1)};
  const QuotientRing ring({"x", "y"}, {good});
  CHECK(ring.format(ring.normal_form(ring.parse("x^3"))) == "x*y^2 + x + y");
  CHECK_THROWS_AS(ring.index_of("z"), DomainError);
}

TEST_CASE("arithmetic") {
  const QuotientRing ring({"x", "y"});
  const MultiPoly x = ring.gen("x"), y = ring.gen("y");
  CHECK(ring.format((x + y).pow(2)) == "x^2 + 2*x*y + y^2");
  CHECK((x - x).is_zero());
  CHECK((x * Rational(0)).is_zero());
  CHECK((x + y).pow(0) == ring.constant(1));
  CHECK((x * y + ring.constant(3)).constant_term() == 3);
  CHECK((x * y).total_degree() == 2);
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), DomainError);
}

TEST_CASE("normal form is idempotent and irreducible") {
  const QuotientRing ring = sl2_coordinate_ring();
  std::mt19937 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const MultiPoly f = random_poly(ring, rng, 5, 8);
    const MultiPoly nf = ring.normal_form(f);
    CHECK(ring.normal_form(nf) == nf);
    CHECK(ring.is_reduced(nf));
  }
}

TEST_CASE("normal form differs from its input by a multiple of the relation") {
  // f - nf(f) vanishes on SL2: evaluate at integer points with determinant 1.
  const QuotientRing ring = sl2_coordinate_ring();
  std::mt19937 rng(99);
  const std::vector<std::vector<int>> points{{1, 0, 0, 1}, {2, 1, 1, 1}, {1, 3, 0, 1}, {3, 5, 1, 2}, {-1, 2, -1, 1}};
  for (int i = 0; i < 50; ++i) {
    const MultiPoly f = random_poly(ring, rng, 4, 6);
    const MultiPoly diff = f - ring.normal_form(f);
    for (const auto& p : points) {
      REQUIRE(p[0] * p[3] - p[1] * p[2] == 1);
      std::vector<MultiPoly> images;
      for (int v : p) images.push_back(MultiPoly::constant(0, v));
      CHECK(substitute(diff, images, 0).is_zero());
    }
  }
}

TEST_CASE("substitution") {
  const QuotientRing ring({"u", "v"});
  const QuotientRing target({"s", "t"});
  const MultiPoly f = ring.parse("u*v + u");
  const MultiPoly g = substitute(f, {target.parse("s + t"), target.parse("s")}, target.num_vars());
  CHECK(target.format(g) == "s^2 + s*t + s + t");
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(3, 6)) == "1/2");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
}
