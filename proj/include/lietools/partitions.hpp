#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lietools {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  int total() const noexcept;
  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;
  bool contains(int value) const noexcept { return multiplicity(value) > 0; }

  /// "(3,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequence.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

enum class PartitionConstraint { Unrestricted, DistinctParts, DistinctOddParts };

std::string to_string(PartitionConstraint c);

/// Counts below or at this total are computed by enumeration; above it by
/// the generating-function recurrences.
inline constexpr int kCountEnumerationCap = 40;

/// Every partition of n satisfying c, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n, PartitionConstraint c);

/// Number of partitions of n satisfying c. Throws OverflowError if the count
/// does not fit in 64 bits.
std::uint64_t count_partitions(int n, PartitionConstraint c);

/// Dynamic-programming count, valid for every n. count_partitions delegates
/// here above kCountEnumerationCap.
std::uint64_t count_partitions_recurrence(int n, PartitionConstraint c);

/// Counts for 0..n in one pass of the recurrence.
std::vector<std::uint64_t> partition_count_table(int n, PartitionConstraint c);

Partition conjugate_partition(const Partition& p);

/// Every odd part occurs with even multiplicity.
bool is_symplectic_partition(const Partition& p);

/// Every even part occurs with even multiplicity.
bool is_orthogonal_partition(const Partition& p);

/// Sum of squares of the conjugate parts; the dimension of the centralizer
/// in gl of a nilpotent matrix with Jordan type p.
std::uint64_t conjugate_square_sum(const Partition& p);

}  // namespace lietools
