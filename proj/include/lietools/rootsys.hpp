#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lietools {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f) noexcept;

/// Label of a simple Lie type. Construction validates the rank against the
/// family and canonicalizes the low-rank coincidences C2 -> B2 and D3 -> A3.
class LieType {
public:
  LieType(Family family, int rank);

  /// Strict grammar: one uppercase letter A-G followed by a decimal rank with
  /// no sign, whitespace or leading zero ("B3", "E6"). Throws ParseError on
  /// malformed text and InvalidTypeError on a rank the family does not allow.
  static LieType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_exceptional() const noexcept {
    return family_ == Family::E || family_ == Family::F || family_ == Family::G;
  }

  std::string to_string() const;  // "B3"

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;

private:
  Family family_;
  int rank_;
};

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

/// Largest rank for which explicit root data is built.
inline constexpr int kMaxRootSystemRank = 128;

/// Positive roots of a simple type in a fixed realization.
///
/// Classical types and G2 use the usual ambient coordinates (A_n in n+1
/// coordinates summing to zero, B/C/D in n coordinates, G2 in three
/// coordinates summing to zero). E6, E7, E8 and F4 are generated from their
/// Cartan matrices, so for them the ambient coordinates are the simple-root
/// coordinates themselves. Positive roots are ordered by height, then by
/// simple-root coefficients in decreasing lexicographic order.
class RootSystem {
public:
  const LieType& lie_type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }
  std::size_t ambient_dimension() const noexcept { return ambient_dim_; }

  const IntMatrix& simple_roots() const noexcept { return simple_roots_; }
  const IntMatrix& positive_roots() const noexcept { return positive_roots_; }
  /// Expansion of each positive root in the simple roots.
  const IntMatrix& coefficients() const noexcept { return coefficients_; }
  const std::vector<int>& heights() const noexcept { return heights_; }
  /// cartan()[i][j] = 2 (a_i, a_j) / (a_j, a_j).
  const IntMatrix& cartan_matrix() const noexcept { return cartan_; }

  std::size_t num_positive_roots() const noexcept { return positive_roots_.size(); }
  /// 2 |positive roots| + rank.
  int dimension() const noexcept { return 2 * static_cast<int>(positive_roots_.size()) + rank(); }

  std::optional<std::size_t> find(const IntVector& ambient_root) const;
  /// Index of the unique root of maximal height.
  std::size_t highest_root() const noexcept { return positive_roots_.size() - 1; }

private:
  friend RootSystem build_root_system(const LieType& t);
  explicit RootSystem(LieType t) : type_(t) {}

  LieType type_;
  std::size_t ambient_dim_ = 0;
  IntMatrix simple_roots_;
  IntMatrix positive_roots_;
  IntMatrix coefficients_;
  std::vector<int> heights_;
  IntMatrix cartan_;
  std::map<IntVector, std::size_t> index_;
};

/// Throws CapacityError above kMaxRootSystemRank and InconsistencyError if a
/// root fails to expand with nonnegative integer coefficients.
RootSystem build_root_system(const LieType& t);

/// Memoized, thread-safe access to build_root_system.
std::shared_ptr<const RootSystem> root_system(const LieType& t);

/// Standard Cartan matrix of the type, same convention as RootSystem.
IntMatrix cartan_matrix(const LieType& t);

/// Positive roots in simple-root coordinates obtained by closing the simple
/// roots under root strings, using only the Cartan matrix. Unordered.
IntMatrix positive_roots_from_cartan(const IntMatrix& cartan);

int group_dimension(const LieType& t);

/// Eigenvalue of ad h on the root space of `root` for the semisimple element
/// of a principal sl2 triple: twice the height. DomainError if `root` is not
/// a positive root of rs (ambient coordinates).
int principal_h_eigenvalue(const RootSystem& rs, const IntVector& root);
int principal_h_eigenvalue(const RootSystem& rs, std::size_t root_index);

/// Dimension of a regular orbit: dim G - rank G.
int regular_orbit_dimension(const LieType& t);

}  // namespace lietools
