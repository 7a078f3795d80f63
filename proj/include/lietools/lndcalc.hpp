#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietools/poly.hpp"

namespace lietools {

/// A derivation of a quotient ring, determined by the images of the
/// generators. Generators without an explicit image map to zero.
class Derivation {
public:
  /// Throws DomainError for an image keyed by an unknown generator or living
  /// in a different ring.
  static Derivation from_images(const QuotientRing& ring, const std::map<std::string, MultiPoly>& images);

  const MultiPoly& image(std::size_t generator) const { return images_.at(generator); }
  const std::vector<MultiPoly>& images() const noexcept { return images_; }

private:
  explicit Derivation(std::vector<MultiPoly> images) : images_(std::move(images)) {}
  std::vector<MultiPoly> images_;
};

/// Leibniz extension of d applied to f, reduced to normal form.
MultiPoly apply_derivation(const QuotientRing& ring, const Derivation& d, const MultiPoly& f);

/// True when d maps every relation (lead - replacement) to zero in the ring,
/// i.e. d descends to the quotient.
bool preserves_relations(const QuotientRing& ring, const Derivation& d);

inline constexpr unsigned kDefaultDegreeCap = 64;

/// n - 1 for the least n with d^n(f) = 0. Throws DomainError for f = 0 and
/// NotNilpotentError when d^cap(f) is still nonzero.
unsigned delta_degree(const QuotientRing& ring, const Derivation& d, const MultiPoly& f,
                      unsigned cap = kDefaultDegreeCap);

bool is_in_kernel(const QuotientRing& ring, const Derivation& d, const MultiPoly& f);

/// C[a1,a2,b1,b2] / (a1 b2 - a2 b1 - 1) for the matrix [[a1, a2], [b1, b2]],
/// with the single rule a1*b2 -> a2*b1 + 1.
QuotientRing sl2_coordinate_ring();

/// (d1, d2) with d1 = a1 d/db1 + a2 d/db2 and d2 = b1 d/da1 + b2 d/da2: the
/// locally nilpotent derivations of the lower and upper unipotent subgroups
/// acting by left multiplication. Throws InconsistencyError if either fails
/// to preserve the determinant relation.
std::pair<Derivation, Derivation> sl2_standard_derivations(const QuotientRing& ring);

struct WitnessTerm {
  Rational coefficient;
  MultiPoly left;   // product of elements of K1
  MultiPoly right;  // product of elements of K2
};

struct SemicompatibilityReport {
  bool found = false;
  /// Per-side degree bound at which the search stopped (the first success,
  /// or the maximum when nothing was found).
  unsigned degree = 0;
  std::vector<WitnessTerm> terms;

  /// "1 = a1*b2 - a2*b1", or "not found at degree D".
  std::string to_string(const QuotientRing& ring) const;
};

inline constexpr unsigned kDefaultWitnessDegree = 3;

/// Looks for the constant 1 in the span of products f*g, f a product of at
/// most `max_degree` elements of K1 and g likewise from K2, by exact linear
/// algebra over Q, trying bounds 1, 2, ..., max_degree in turn. Elements of
/// K1 must lie in Ker d1 and elements of K2 in Ker d2; otherwise
/// PreconditionError names the offending element.
SemicompatibilityReport verify_semicompatibility_witness(const QuotientRing& ring, const Derivation& d1,
                                                         const Derivation& d2, const std::vector<MultiPoly>& k1,
                                                         const std::vector<MultiPoly>& k2,
                                                         unsigned max_degree = kDefaultWitnessDegree);

/// deg_d1(a) = 1 and deg_d2(a) <= 1. Propagates NotNilpotentError.
bool verify_compatibility_condition2(const QuotientRing& ring, const Derivation& d1, const Derivation& d2,
                                     const MultiPoly& a, unsigned cap = kDefaultDegreeCap);

struct TorusWeight {
  int weight = 0;
  friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
};

/// Common weight of all monomials under the grading by `generator_weights`,
/// or nullopt when f is zero or not homogeneous.
std::optional<TorusWeight> torus_weight(const MultiPoly& f, const std::vector<int>& generator_weights);

/// Grading of C[SL2] by right multiplication with diag(t^-1, t): the first
/// column (a1, b1) has weight -1 and the second (a2, b2) weight +1.
std::optional<TorusWeight> diagonal_torus_weight(const MultiPoly& f);

/// u = a1*a2, v = b1*b2, z = a2*b1 + 1/2 in C[SL2].
std::vector<MultiPoly> sl2_torus_invariants(const QuotientRing& ring);

struct HypersurfaceCheck {
  MultiPoly reduced;             // normal form of u*v - z^2 + 1/4 in C[SL2]
  bool identity_vanishes = false;
  bool sign_flip_invariant = false;  // under (u, v, z) -> (-u, -v, -z)
  bool passed() const noexcept { return identity_vanishes && sign_flip_invariant; }
};

/// Checks that the invariants of the diagonal torus satisfy
/// u*v - z^2 + 1/4 = 0, and that this equation is fixed by the sign flip.
HypersurfaceCheck verify_invariant_hypersurface();

}  // namespace lietools
