#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lietools/partitions.hpp"
#include "lietools/rootsys.hpp"

namespace lietools {

enum class CountMethod { PartitionFormula, ExceptionalTable };

std::string to_string(CountMethod m);

/// Number of nilpotent adjoint orbits. The zero orbit is included for every
/// type. D-type counts use the pair-of-partitions formula as stated, without
/// doubling very even classes.
struct OrbitCount {
  LieType lie_type;
  std::uint64_t count = 0;
  CountMethod method = CountMethod::PartitionFormula;
  bool includes_zero_orbit = true;
  bool d_formula_verbatim = false;  // set for D-type results
};

OrbitCount nilpotent_orbit_count(const LieType& t);

/// Number of pairs (lambda, mu) with weight * |lambda| + |mu| = total, lambda
/// unrestricted and mu satisfying `mu_constraint`. Building block of the
/// B, C and D formulas.
std::uint64_t count_partition_pairs(int total, int lambda_weight, PartitionConstraint mu_constraint);

/// Upper bound on n for the explicit type-A classification.
inline constexpr int kTypeAClassifyCap = 40;

/// Jordan types labelling the nilpotent orbits of sl_{n+1}: all partitions
/// of n+1, lexicographically decreasing.
std::vector<Partition> classify_nilpotent_orbits_typeA(int n);

/// (n+1)^2 - sum of squared conjugate parts, n+1 = |p|. Note this is the
/// dimension in gl_{n+1}, which equals the dimension in sl_{n+1}.
std::uint64_t orbit_dimension_typeA(const Partition& p);

inline constexpr int kCentralizerOracleCap = 8;

/// Dimension of the centralizer of the nilpotent Jordan matrix of type p in
/// gl_k, computed as the kernel of Y -> NY - YN by exact elimination.
std::uint64_t centralizer_dimension_oracle(const Partition& p);

/// Jordan type of the subregular nilpotent orbit for A_r (r >= 2), D_l
/// (l >= 4) and B_3. Other types throw UnsupportedCaseError.
Partition subregular_partition(const LieType& t);

struct SubregularDatum {
  LieType lie_type;
  Partition partition;
  int codimension = 0;  // rank + 2
};

SubregularDatum subregular_datum(const LieType& t);

}  // namespace lietools
