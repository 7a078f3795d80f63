#include "lietools/lndcalc.hpp"

#include <random>

#include "doctest.h"
#include "lietools/errors.hpp"

using namespace lietools;

namespace {

struct Sl2 {
  QuotientRing ring = sl2_coordinate_ring();
  Derivation d1 = sl2_standard_derivations(ring).first;
  Derivation d2 = sl2_standard_derivations(ring).second;

  MultiPoly p(const char* text) const { return ring.normal_form(ring.parse(text)); }
  std::string show(const MultiPoly& f) const { return ring.format(f); }
};

MultiPoly random_poly(const QuotientRing& ring, std::mt19937& rng, unsigned max_degree, int max_terms) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, ring.num_vars() - 1);
  MultiPoly f = ring.zero();
  for (int t = term_count(rng); t > 0; --t) {
    Monomial m(ring.num_vars(), 0);
    for (unsigned d = deg(rng); d > 0; --d) ++m[var(rng)];
    f.add_term(m, Rational(coef(rng)));
  }
  return ring.normal_form(f);
}

// Homogeneous for the diagonal torus: every monomial has weight w.
MultiPoly random_homogeneous(const QuotientRing& ring, std::mt19937& rng, int w) {
  std::uniform_int_distribution<int> coef(1, 4);
  std::uniform_int_distribution<unsigned> e(0, 2);
  MultiPoly f = ring.zero();
  for (int attempt = 0; attempt < 40 || f.is_zero(); ++attempt) {
    Monomial m{e(rng), e(rng), e(rng), e(rng)};
    const int weight = -static_cast<int>(m[0]) + static_cast<int>(m[1]) - static_cast<int>(m[2]) + static_cast<int>(m[3]);
    if (weight == w) f.add_term(m, Rational(coef(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("derivation examples") {
  const Sl2 s;
  CHECK(s.show(apply_derivation(s.ring, s.d1, s.p("b1"))) == "a1");
  CHECK(apply_derivation(s.ring, s.d1, s.p("a1")).is_zero());
  CHECK(s.show(apply_derivation(s.ring, s.d2, s.ring.parse("a1*b2"))) == "b1*b2");
  CHECK(apply_derivation(s.ring, s.d1, s.p("1")).is_zero());
  CHECK(apply_derivation(s.ring, s.d2, s.p("1")).is_zero());
  CHECK(apply_derivation(s.ring, s.d2, s.p("b2")).is_zero());
  CHECK(s.show(apply_derivation(s.ring, s.d1, s.p("b2"))) == "a2");
  CHECK(s.show(apply_derivation(s.ring, s.d2, s.p("a2"))) == "b2");
}

TEST_CASE("the standard derivations descend to the quotient") {
  const Sl2 s;
  CHECK(preserves_relations(s.ring, s.d1));
  CHECK(preserves_relations(s.ring, s.d2));
  CHECK(apply_derivation(s.ring, s.d1, s.ring.parse("a1*b2 - a2*b1 - 1")).is_zero());
  CHECK(apply_derivation(s.ring, s.d2, s.ring.parse("a1*b2 - a2*b1 - 1")).is_zero());

  // d(a1) = a1 does not preserve a1*b2 - a2*b1 - 1.
  const auto bad = Derivation::from_images(s.ring, {{"a1", s.ring.gen("a1")}});
  CHECK_FALSE(preserves_relations(s.ring, bad));
  CHECK_THROWS_AS(Derivation::from_images(s.ring, {{"x", s.ring.gen("a1")}}), DomainError);
}

TEST_CASE("delta degree examples") {
  const Sl2 s;
  CHECK(delta_degree(s.ring, s.d1, s.p("a1")) == 0);
  CHECK(delta_degree(s.ring, s.d1, s.p("a1*b2")) == 1);
  CHECK(delta_degree(s.ring, s.d2, s.p("a1*b2")) == 1);
  CHECK(delta_degree(s.ring, s.d1, s.p("b1^2")) == 2);
  CHECK(delta_degree(s.ring, s.d1, s.p("7")) == 0);
  CHECK_THROWS_AS(delta_degree(s.ring, s.d1, s.p("0")), DomainError);

  for (const char* g : {"a1", "a2", "b1", "b2"}) {
    CHECK(delta_degree(s.ring, s.d1, s.p(g), 4) <= 1);
    CHECK(delta_degree(s.ring, s.d2, s.p(g), 4) <= 1);
  }
  // b1^2 needs three applications.
  CHECK_THROWS_AS(delta_degree(s.ring, s.d1, s.p("b1^2"), 2), NotNilpotentError);
  CHECK(delta_degree(s.ring, s.d1, s.p("b1^2"), 3) == 2);

  // d(x) = x on C[x] is not locally nilpotent.
  const QuotientRing line({"x"});
  const auto euler = Derivation::from_images(line, {{"x", line.gen("x")}});
  CHECK_THROWS_AS(delta_degree(line, euler, line.gen("x")), NotNilpotentError);
}

TEST_CASE("kernel membership") {
  const Sl2 s;
  CHECK(is_in_kernel(s.ring, s.d1, s.p("a2")));
  CHECK(is_in_kernel(s.ring, s.d1, s.p("a1")));
  CHECK_FALSE(is_in_kernel(s.ring, s.d1, s.p("b1")));
  CHECK(is_in_kernel(s.ring, s.d2, s.p("b1*b2")));
  CHECK(is_in_kernel(s.ring, s.d2, s.p("b1")));
  for (const char* ai : {"a1", "a2"})
    for (const char* bj : {"b1", "b2"}) {
      const MultiPoly f = s.ring.normal_form(s.ring.gen(ai) * s.ring.gen(bj));
      CHECK(delta_degree(s.ring, s.d1, f) <= 1);
      CHECK(delta_degree(s.ring, s.d2, f) <= 1);
    }
}

TEST_CASE("semi-compatibility witness") {
  const Sl2 s;
  const auto report =
      verify_semicompatibility_witness(s.ring, s.d1, s.d2, {s.p("a1"), s.p("a2")}, {s.p("b1"), s.p("b2")});
  REQUIRE(report.found);
  CHECK(report.degree <= 2);
  CHECK(report.to_string(s.ring) == "1 = a1*b2 - a2*b1");

  // The combination really evaluates to 1.
  MultiPoly sum = s.ring.zero();
  for (const auto& t : report.terms) sum += t.coefficient * (t.left * t.right);
  CHECK(s.ring.normal_form(sum) == s.ring.constant(1));

  const auto none = verify_semicompatibility_witness(s.ring, s.d1, s.d2, {s.p("a1")}, {s.p("b1")}, 3);
  CHECK_FALSE(none.found);
  CHECK(none.to_string(s.ring) == "not found at degree 3");

  CHECK_THROWS_AS(verify_semicompatibility_witness(s.ring, s.d1, s.d2, {s.p("b1")}, {s.p("b2")}), PreconditionError);
  CHECK_THROWS_AS(verify_semicompatibility_witness(s.ring, s.d1, s.d2, {s.p("a1")}, {s.p("a2")}), PreconditionError);
}

TEST_CASE("witness in a trivial ring") {
  const QuotientRing line({"x"});
  const auto zero = Derivation::from_images(line, {});
  const auto report = verify_semicompatibility_witness(line, zero, zero, {line.constant(1)}, {line.constant(1)});
  REQUIRE(report.found);
  CHECK(report.to_string(line) == "1 = 1*1");
}

TEST_CASE("compatibility condition") {
  const Sl2 s;
  CHECK(verify_compatibility_condition2(s.ring, s.d1, s.d2, s.p("a1*b2")));
  CHECK_FALSE(verify_compatibility_condition2(s.ring, s.d1, s.d2, s.p("a1")));
  CHECK_FALSE(verify_compatibility_condition2(s.ring, s.d1, s.d2, s.p("b1^2")));
}

TEST_CASE("torus weights") {
  const Sl2 s;
  CHECK(diagonal_torus_weight(s.p("a1*a2")) == TorusWeight{0});
  CHECK(diagonal_torus_weight(s.ring.parse("a2*b1 + 1/2")) == TorusWeight{0});
  CHECK(diagonal_torus_weight(s.p("a1")) == TorusWeight{-1});
  CHECK(diagonal_torus_weight(s.p("b2^3")) == TorusWeight{3});
  CHECK_FALSE(diagonal_torus_weight(s.p("a1 + a2")).has_value());
  CHECK_FALSE(diagonal_torus_weight(s.p("0")).has_value());
  for (const auto& f : sl2_torus_invariants(s.ring)) CHECK(diagonal_torus_weight(f) == TorusWeight{0});

  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const int wf = static_cast<int>(rng() % 5) - 2, wg = static_cast<int>(rng() % 5) - 2;
    const MultiPoly f = random_homogeneous(s.ring, rng, wf);
    const MultiPoly g = random_homogeneous(s.ring, rng, wg);
    REQUIRE(diagonal_torus_weight(f) == TorusWeight{wf});
    const MultiPoly fg = s.ring.normal_form(f * g);
    if (!fg.is_zero()) CHECK(diagonal_torus_weight(fg) == TorusWeight{wf + wg});
  }
}

TEST_CASE("invariant hypersurface") {
  const auto check = verify_invariant_hypersurface();
  CHECK(check.reduced.is_zero());
  CHECK(check.identity_vanishes);
  CHECK(check.sign_flip_invariant);
  CHECK(check.passed());
  const Sl2 s;
  CHECK(s.show(s.ring.normal_form(s.ring.parse("a2*b1 + 1/2 - 1/2"))) == "a2*b1");
}

TEST_CASE("Leibniz rule on random pairs") {
  const Sl2 s;
  std::mt19937 rng(314159);
  int samples = 0;
  for (int i = 0; i < 120; ++i) {
    const MultiPoly f = random_poly(s.ring, rng, 4, 5);
    const MultiPoly g = random_poly(s.ring, rng, 4, 5);
    for (const Derivation* d : {&s.d1, &s.d2}) {
      const MultiPoly lhs = apply_derivation(s.ring, *d, s.ring.normal_form(f * g));
      const MultiPoly rhs = s.ring.normal_form(apply_derivation(s.ring, *d, f) * g + f * apply_derivation(s.ring, *d, g));
      CHECK(lhs == rhs);
    }
    ++samples;
  }
  CHECK(samples >= 100);
}

TEST_CASE("delta degree is additive on products") {
  const Sl2 s;
  std::mt19937 rng(271828);
  int samples = 0;
  while (samples < 60) {
    const MultiPoly f = random_poly(s.ring, rng, 3, 4);
    const MultiPoly g = random_poly(s.ring, rng, 3, 4);
    if (f.is_zero() || g.is_zero()) continue;
    const MultiPoly fg = s.ring.normal_form(f * g);
    REQUIRE_FALSE(fg.is_zero());
    for (const Derivation* d : {&s.d1, &s.d2})
      CHECK(delta_degree(s.ring, *d, fg) == delta_degree(s.ring, *d, f) + delta_degree(s.ring, *d, g));
    ++samples;
  }
}
