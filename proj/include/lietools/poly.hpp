#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lietools/linalg.hpp"

namespace lietools {

/// Exponent vector, one entry per generator of the ambient ring.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t degree(const Monomial& m);

/// Graded lexicographic order; earlier generators are larger.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// decreasing graded-lex order and zero coefficients are never stored, so
/// structural equality is polynomial equality.
class MultiPoly {
public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Rational(-1); }

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// lead -> replacement. The replacement must be strictly smaller than the
/// lead in graded-lex order, which makes rewriting terminate.
struct RewriteRule {
  Monomial lead;
  MultiPoly replacement;
};

/// Polynomial ring over Q modulo rewrite rules. With a single rule the rule
/// set is its own Groebner basis and normal forms are unique. With several
/// rules confluence is not checked; normal forms are then only guaranteed to
/// be irreducible.
class QuotientRing {
public:
  /// Throws DomainError on duplicate generator names or a rule that fails
  /// the ordering requirement.
  QuotientRing(std::vector<std::string> generators, std::vector<RewriteRule> rules = {});

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  std::size_t num_vars() const noexcept { return generators_.size(); }

  /// Throws DomainError for an unknown name.
  std::size_t index_of(std::string_view name) const;
  MultiPoly gen(std::string_view name) const { return MultiPoly::variable(num_vars(), index_of(name)); }
  MultiPoly constant(const Rational& c) const { return MultiPoly::constant(num_vars(), c); }
  MultiPoly zero() const { return MultiPoly(num_vars()); }

  MultiPoly normal_form(const MultiPoly& f) const;
  bool is_reduced(const MultiPoly& f) const;

  /// Parses `coef*gen^exp*...` terms joined by + and -; whitespace is
  /// ignored, `^1` may be omitted and coefficients may be `p/q`. The result
  /// is not reduced. Throws ParseError.
  MultiPoly parse(std::string_view text) const;
  /// Canonical text: terms in decreasing graded-lex order.
  std::string format(const MultiPoly& f) const;
  std::string format_monomial(const Monomial& m) const;

private:
  std::vector<std::string> generators_;
  std::vector<RewriteRule> rules_;
};

/// Ring homomorphism defined by generator images: sum c * prod images[i]^e_i.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images, std::size_t target_vars);

std::string format_rational(const Rational& q);

}  // namespace lietools
