#include "lietools/poly.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "lietools/errors.hpp"

namespace lietools {

std::uint32_t degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(num_vars_, 0)); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != num_vars_) throw DomainError("monomial has wrong number of variables");
  if (sgn(c) == 0) return;
  Rational cc = c;
  cc.canonicalize();  // mpq_class(p, q) does not reduce on construction
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second += cc;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_) throw DomainError("polynomials live in rings with different generator counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational cc = c;
  cc.canonicalize();
  for (auto& [m, coef] : terms_) coef *= cc;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  Monomial prod(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(num_vars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(std::vector<std::string> generators, std::vector<RewriteRule> rules)
    : generators_(std::move(generators)), rules_(std::move(rules)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty() || !(std::isalpha(static_cast<unsigned char>(g[0])) || g[0] == '_'))
      throw DomainError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw DomainError("duplicate generator name '" + g + "'");
  }
  for (const auto& rule : rules_) {
    if (rule.lead.size() != num_vars() || rule.replacement.num_vars() != num_vars())
      throw DomainError("rewrite rule has wrong number of variables");
    for (const auto& [m, c] : rule.replacement.terms())
      if (!grlex_less(m, rule.lead))
        throw DomainError("rewrite rule " + format_monomial(rule.lead) + " -> " + format(rule.replacement) +
                          " does not decrease in graded-lex order");
  }
}

std::size_t QuotientRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

bool QuotientRing::is_reduced(const MultiPoly& f) const {
  for (const auto& [m, c] : f.terms())
    for (const auto& rule : rules_)
      if (divides(rule.lead, m)) return false;
  return true;
}

MultiPoly QuotientRing::normal_form(const MultiPoly& f) const {
  if (f.num_vars() != num_vars()) throw DomainError("polynomial does not belong to this ring");
  MultiPoly result(num_vars());
  MultiPoly work = f;
  while (!work.is_zero()) {
    // Largest term first: every rewrite only introduces smaller monomials.
    const auto lead_it = work.terms().begin();
    const Monomial m = lead_it->first;
    const Rational c = lead_it->second;
    const RewriteRule* hit = nullptr;
    for (const auto& rule : rules_)
      if (divides(rule.lead, m)) {
        hit = &rule;
        break;
      }
    work.add_term(m, -c);
    if (!hit) {
      result.add_term(m, c);
      continue;
    }
    Monomial quotient(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) quotient[i] = m[i] - hit->lead[i];
    work += MultiPoly::monomial(quotient, c) * hit->replacement;
  }
  return result;
}

std::string QuotientRing::format_monomial(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string QuotientRing::format(const MultiPoly& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    const bool is_const = degree(m) == 0;
    if (is_const) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += format_monomial(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(const QuotientRing& ring, std::string_view text) : ring_(ring) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  MultiPoly run() {
    if (s_.empty()) fail("empty polynomial");
    MultiPoly out = ring_.zero();
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term() * sign;
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  mpz_class integer() {
    if (!at_digit()) fail("expected a number");
    std::string digits;
    while (at_digit()) digits += s_[pos_++];
    return mpz_class(digits);
  }

  MultiPoly term() {
    MultiPoly t = ring_.constant(1);
    while (true) {
      t = t * factor();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  MultiPoly factor() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (at_digit()) {
      Rational q(integer());
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        q /= Rational(den);
      }
      return ring_.constant(q);
    }
    const char ch = s_[pos_];
    if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) fail(std::string("unexpected character '") + ch + "'");
    std::string name;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += s_[pos_++];
    std::size_t idx = 0;
    try {
      idx = ring_.index_of(name);
    } catch (const DomainError&) {
      fail("unknown generator '" + name + "'");
    }
    unsigned exp = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      mpz_class e = integer();
      if (e > 10000) fail("exponent too large");
      exp = static_cast<unsigned>(e.get_ui());
    }
    Monomial m(ring_.num_vars(), 0);
    m[idx] = exp;
    return MultiPoly::monomial(m);
  }

  const QuotientRing& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly QuotientRing::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images, std::size_t target_vars) {
  if (images.size() != f.num_vars()) throw DomainError("substitute: need one image per generator");
  for (const auto& img : images)
    if (img.num_vars() != target_vars) throw DomainError("substitute: image lives in the wrong ring");
  MultiPoly out(target_vars);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * images[i].pow(m[i]);
    out += t;
  }
  return out;
}

}  // namespace lietools
