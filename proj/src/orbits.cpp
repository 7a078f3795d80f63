#include "lietools/orbits.hpp"

#include "lietools/errors.hpp"
#include "lietools/linalg.hpp"

namespace lietools {

namespace {

std::uint64_t checked_mul_add(std::uint64_t acc, std::uint64_t a, std::uint64_t b) {
  std::uint64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out))
    throw OverflowError("nilpotent orbit count exceeds 64 bits");
  return out;
}

}  // namespace

std::string to_string(CountMethod m) {
  return m == CountMethod::PartitionFormula ? "partition-formula" : "exceptional-table";
}

std::uint64_t count_partition_pairs(int total, int lambda_weight, PartitionConstraint mu_constraint) {
  if (total < 0 || lambda_weight < 1) throw DomainError("count_partition_pairs: bad arguments");
  const auto lambda_counts = partition_count_table(total / lambda_weight, PartitionConstraint::Unrestricted);
  const auto mu_counts = partition_count_table(total, mu_constraint);
  std::uint64_t sum = 0;
  for (int k = 0; lambda_weight * k <= total; ++k)
    sum = checked_mul_add(sum, lambda_counts[k], mu_counts[total - lambda_weight * k]);
  return sum;
}

OrbitCount nilpotent_orbit_count(const LieType& t) {
  OrbitCount out{t};
  const int m = t.rank();
  switch (t.family()) {
    case Family::A:
      out.count = count_partitions(m + 1, PartitionConstraint::Unrestricted);
      break;
    case Family::B:
      out.count = count_partition_pairs(2 * m + 1, 2, PartitionConstraint::DistinctOddParts);
      break;
    case Family::C:
      out.count = count_partition_pairs(m, 1, PartitionConstraint::DistinctParts);
      break;
    case Family::D:
      out.count = count_partition_pairs(2 * m, 2, PartitionConstraint::DistinctOddParts);
      out.d_formula_verbatim = true;
      break;
    case Family::G:
      out.count = 5;
      out.method = CountMethod::ExceptionalTable;
      break;
    case Family::F:
      out.count = 16;
      out.method = CountMethod::ExceptionalTable;
      break;
    case Family::E:
      out.count = m == 6 ? 21 : m == 7 ? 45 : 70;
      out.method = CountMethod::ExceptionalTable;
      break;
  }
  return out;
}

std::vector<Partition> classify_nilpotent_orbits_typeA(int n) {
  if (n < 1) throw DomainError("type A classification needs n >= 1");
  if (n > kTypeAClassifyCap)
    throw CapacityError("type A classification is capped at n = " + std::to_string(kTypeAClassifyCap));
  return enumerate_partitions(n + 1, PartitionConstraint::Unrestricted);
}

std::uint64_t orbit_dimension_typeA(const Partition& p) {
  if (p.empty()) throw DomainError("orbit dimension needs a nonempty partition");
  const auto k = static_cast<std::uint64_t>(p.total());
  return k * k - conjugate_square_sum(p);
}

std::uint64_t centralizer_dimension_oracle(const Partition& p) {
  const int k = p.total();
  if (k > kCentralizerOracleCap)
    throw CapacityError("centralizer oracle is capped at matrix size " + std::to_string(kCentralizerOracleCap));
  if (k == 0) return 0;
  const auto n = static_cast<std::size_t>(k);

  std::vector<std::vector<int>> jordan(n, std::vector<int>(n, 0));
  std::size_t offset = 0;
  for (int block : p) {
    for (int i = 0; i + 1 < block; ++i) jordan[offset + i][offset + i + 1] = 1;
    offset += static_cast<std::size_t>(block);
  }

  // Row (i, j) of the system: (NY - YN)_{ij} = 0, unknown Y_{ab} at column a*n+b.
  RationalMatrix system(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t m = 0; m < n; ++m) {
        if (jordan[i][m]) system(row, m * n + j) += jordan[i][m];
        if (jordan[m][j]) system(row, i * n + m) -= jordan[m][j];
      }
    }
  return kernel_dimension(system);
}

Partition subregular_partition(const LieType& t) {
  const int r = t.rank();
  if (t.family() == Family::A && r >= 2) return Partition{r, 1};
  if (t.family() == Family::D && r >= 4) return Partition{2 * r - 3, 3};
  if (t.family() == Family::B && r == 3) return Partition{5, 1, 1};
  throw UnsupportedCaseError("subregular partition is provided only for A_r (r >= 2), D_l (l >= 4) and B_3; got " +
                             t.to_string());
}

SubregularDatum subregular_datum(const LieType& t) {
  return SubregularDatum{t, subregular_partition(t), t.rank() + 2};
}

}  // namespace lietools
