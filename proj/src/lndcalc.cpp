#include "lietools/lndcalc.hpp"

#include <algorithm>

#include "lietools/errors.hpp"

namespace lietools {

Derivation Derivation::from_images(const QuotientRing& ring, const std::map<std::string, MultiPoly>& images) {
  std::vector<MultiPoly> out(ring.num_vars(), ring.zero());
  for (const auto& [name, image] : images) {
    if (image.num_vars() != ring.num_vars())
      throw DomainError("image of " + name + " does not belong to the ring");
    out[ring.index_of(name)] = image;
  }
  return Derivation(std::move(out));
}

MultiPoly apply_derivation(const QuotientRing& ring, const Derivation& d, const MultiPoly& f) {
  MultiPoly out = ring.zero();
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0 || d.image(i).is_zero()) continue;
      Monomial lowered = m;
      --lowered[i];
      out += MultiPoly::monomial(lowered, c * m[i]) * d.image(i);
    }
  }
  return ring.normal_form(out);
}

bool preserves_relations(const QuotientRing& ring, const Derivation& d) {
  for (const auto& rule : ring.rules()) {
    const MultiPoly relation = MultiPoly::monomial(rule.lead) - rule.replacement;
    if (!apply_derivation(ring, d, relation).is_zero()) return false;
  }
  return true;
}

unsigned delta_degree(const QuotientRing& ring, const Derivation& d, const MultiPoly& f, unsigned cap) {
  MultiPoly g = ring.normal_form(f);
  if (g.is_zero()) throw DomainError("delta-degree is undefined for the zero element");
  unsigned applications = 0;
  while (!g.is_zero()) {
    if (applications == cap)
      throw NotNilpotentError("derivation did not annihilate " + ring.format(ring.normal_form(f)) + " within " +
                              std::to_string(cap) + " applications");
    g = apply_derivation(ring, d, g);
    ++applications;
  }
  return applications - 1;
}

bool is_in_kernel(const QuotientRing& ring, const Derivation& d, const MultiPoly& f) {
  return apply_derivation(ring, d, ring.normal_form(f)).is_zero();
}

QuotientRing sl2_coordinate_ring() {
  // Generator order a1 > a2 > b1 > b2 makes a1*b2 the graded-lex leader of
  // the determinant.
  const std::vector<std::string> gens{"a1", "a2", "b1", "b2"};
  MultiPoly replacement(4);
  replacement.add_term({0, 1, 1, 0}, 1);
  replacement.add_term({0, 0, 0, 0}, 1);
  return QuotientRing(gens, {RewriteRule{{1, 0, 0, 1}, replacement}});
}

std::pair<Derivation, Derivation> sl2_standard_derivations(const QuotientRing& ring) {
  auto d1 = Derivation::from_images(ring, {{"b1", ring.gen("a1")}, {"b2", ring.gen("a2")}});
  auto d2 = Derivation::from_images(ring, {{"a1", ring.gen("b1")}, {"a2", ring.gen("b2")}});
  if (!preserves_relations(ring, d1) || !preserves_relations(ring, d2))
    throw InconsistencyError("standard derivations do not preserve the determinant relation");
  return {std::move(d1), std::move(d2)};
}

namespace {

struct KernelProduct {
  MultiPoly value;  // normal form of the product
  unsigned degree;
};

// All products of at most max_degree elements of `gens` (with repetition),
// deduplicated by normal form, lowest degree first.
std::vector<KernelProduct> bounded_products(const QuotientRing& ring, const std::vector<MultiPoly>& gens,
                                            unsigned max_degree) {
  std::vector<KernelProduct> out;
  std::vector<KernelProduct> frontier{{ring.constant(1), 0}};
  // start index into gens for each frontier entry, to enumerate multisets
  std::vector<std::size_t> start{0};
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    std::vector<KernelProduct> next;
    std::vector<std::size_t> next_start;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (std::size_t g = start[f]; g < gens.size(); ++g) {
        next.push_back({ring.normal_form(frontier[f].value * gens[g]), deg});
        next_start.push_back(g);
      }
    for (const auto& p : next) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const KernelProduct& q) { return q.value == p.value; });
      if (!dup) out.push_back(p);
    }
    frontier = std::move(next);
    start = std::move(next_start);
  }
  return out;
}

std::string factor_text(const QuotientRing& ring, const MultiPoly& p) {
  std::string s = ring.format(p);
  return p.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string SemicompatibilityReport::to_string(const QuotientRing& ring) const {
  if (!found) return "not found at degree " + std::to_string(degree);
  std::string out = "1 = ";
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coefficient);
    if (mag != 1) out += format_rational(mag) + "*";
    out += factor_text(ring, t.left) + "*" + factor_text(ring, t.right);
  }
  return out;
}

SemicompatibilityReport verify_semicompatibility_witness(const QuotientRing& ring, const Derivation& d1,
                                                         const Derivation& d2, const std::vector<MultiPoly>& k1,
                                                         const std::vector<MultiPoly>& k2, unsigned max_degree) {
  for (const auto& f : k1)
    if (!is_in_kernel(ring, d1, f))
      throw PreconditionError("element " + ring.format(f) + " of the first list is not in the kernel of d1");
  for (const auto& g : k2)
    if (!is_in_kernel(ring, d2, g))
      throw PreconditionError("element " + ring.format(g) + " of the second list is not in the kernel of d2");

  const auto left_all = bounded_products(ring, k1, max_degree);
  const auto right_all = bounded_products(ring, k2, max_degree);

  SemicompatibilityReport report;
  report.degree = max_degree;
  for (unsigned bound = 1; bound <= max_degree; ++bound) {
    std::vector<const KernelProduct*> left, right;
    for (const auto& p : left_all)
      if (p.degree <= bound) left.push_back(&p);
    for (const auto& p : right_all)
      if (p.degree <= bound) right.push_back(&p);

    std::vector<std::pair<std::size_t, std::size_t>> columns;
    std::vector<MultiPoly> products;
    std::map<Monomial, std::size_t, GrlexGreater> rows;
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        MultiPoly prod = ring.normal_form(left[i]->value * right[j]->value);
        for (const auto& [m, c] : prod.terms()) rows.try_emplace(m, 0);
        columns.emplace_back(i, j);
        products.push_back(std::move(prod));
      }
    const Monomial one(ring.num_vars(), 0);
    rows.try_emplace(one, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;

    RationalMatrix system(rows.size(), products.size());
    for (std::size_t col = 0; col < products.size(); ++col)
      for (const auto& [m, c] : products[col].terms()) system(rows.at(m), col) = c;
    std::vector<Rational> target(rows.size());
    target[rows.at(one)] = 1;

    auto solution = solve(system, target);
    if (!solution) continue;
    report.found = true;
    report.degree = bound;
    for (std::size_t col = 0; col < columns.size(); ++col) {
      if (sgn((*solution)[col]) == 0) continue;
      report.terms.push_back(
          {(*solution)[col], left[columns[col].first]->value, right[columns[col].second]->value});
    }
    return report;
  }
  return report;
}

bool verify_compatibility_condition2(const QuotientRing& ring, const Derivation& d1, const Derivation& d2,
                                     const MultiPoly& a, unsigned cap) {
  return delta_degree(ring, d1, a, cap) == 1 && delta_degree(ring, d2, a, cap) <= 1;
}

std::optional<TorusWeight> torus_weight(const MultiPoly& f, const std::vector<int>& generator_weights) {
  if (generator_weights.size() != f.num_vars()) throw DomainError("torus_weight: one weight per generator required");
  std::optional<int> common;
  for (const auto& [m, c] : f.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += generator_weights[i] * static_cast<int>(m[i]);
    if (common && *common != w) return std::nullopt;
    common = w;
  }
  if (!common) return std::nullopt;
  return TorusWeight{*common};
}

std::optional<TorusWeight> diagonal_torus_weight(const MultiPoly& f) {
  // a1, a2, b1, b2
  return torus_weight(f, {-1, +1, -1, +1});
}

std::vector<MultiPoly> sl2_torus_invariants(const QuotientRing& ring) {
  return {ring.gen("a1") * ring.gen("a2"), ring.gen("b1") * ring.gen("b2"),
          ring.gen("a2") * ring.gen("b1") + ring.constant(Rational(1, 2))};
}

HypersurfaceCheck verify_invariant_hypersurface() {
  const QuotientRing sl2 = sl2_coordinate_ring();
  const QuotientRing uvz({"u", "v", "z"});
  const MultiPoly equation = uvz.parse("u*v - z^2 + 1/4");

  HypersurfaceCheck check;
  check.reduced = sl2.normal_form(substitute(equation, sl2_torus_invariants(sl2), sl2.num_vars()));
  check.identity_vanishes = check.reduced.is_zero();

  const MultiPoly flipped = substitute(equation, {-uvz.gen("u"), -uvz.gen("v"), -uvz.gen("z")}, uvz.num_vars());
  check.sign_flip_invariant = flipped == equation;
  return check;
}

}  // namespace lietools
