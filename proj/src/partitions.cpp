#include "lietools/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "lietools/errors.hpp"

namespace lietools {

namespace {

void check_total(int n) {
  if (n < 0) throw DomainError("partition total must be nonnegative, got " + std::to_string(n));
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("partition count exceeds 64 bits");
  return out;
}

// Depth-first generation; larger leading parts first gives lexicographically
// decreasing output.
void generate(int remaining, int max_part, PartitionConstraint c, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  int first = std::min(remaining, max_part);
  int step = 1;
  if (c == PartitionConstraint::DistinctOddParts) {
    if (first % 2 == 0) --first;
    step = 2;
  }
  for (int part = first; part >= 1; part -= step) {
    prefix.push_back(part);
    int next_max = part;
    if (c == PartitionConstraint::DistinctParts) next_max = part - 1;
    if (c == PartitionConstraint::DistinctOddParts) next_max = part - 2;
    generate(remaining - part, next_max, c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::total() const noexcept {
  int sum = 0;
  for (int p : parts_) sum += p;
  return sum;
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(PartitionConstraint c) {
  switch (c) {
    case PartitionConstraint::Unrestricted: return "unrestricted";
    case PartitionConstraint::DistinctParts: return "distinct-parts";
    case PartitionConstraint::DistinctOddParts: return "distinct-odd-parts";
  }
  return "?";
}

std::vector<Partition> enumerate_partitions(int n, PartitionConstraint c) {
  check_total(n);
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, c, prefix, out);
  return out;
}

std::vector<std::uint64_t> partition_count_table(int n, PartitionConstraint c) {
  check_total(n);
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int k = 1; k <= n; ++k) {
    switch (c) {
      case PartitionConstraint::Unrestricted:
        for (int s = k; s <= n; ++s) dp[s] = checked_add(dp[s], dp[s - k]);
        break;
      case PartitionConstraint::DistinctParts:
        for (int s = n; s >= k; --s) dp[s] = checked_add(dp[s], dp[s - k]);
        break;
      case PartitionConstraint::DistinctOddParts:
        if (k % 2 == 1)
          for (int s = n; s >= k; --s) dp[s] = checked_add(dp[s], dp[s - k]);
        break;
    }
  }
  return dp;
}

std::uint64_t count_partitions_recurrence(int n, PartitionConstraint c) {
  return partition_count_table(n, c).back();
}

std::uint64_t count_partitions(int n, PartitionConstraint c) {
  check_total(n);
  if (n <= kCountEnumerationCap) return enumerate_partitions(n, c).size();
  return count_partitions_recurrence(n, c);
}

Partition conjugate_partition(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(p[0]), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++conj[j];
  return Partition(std::move(conj));
}

bool is_symplectic_partition(const Partition& p) {
  for (int part : p)
    if (part % 2 == 1 && p.multiplicity(part) % 2 != 0) return false;
  return true;
}

bool is_orthogonal_partition(const Partition& p) {
  for (int part : p)
    if (part % 2 == 0 && p.multiplicity(part) % 2 != 0) return false;
  return true;
}

std::uint64_t conjugate_square_sum(const Partition& p) {
  std::uint64_t sum = 0;
  for (int c : conjugate_partition(p)) sum += static_cast<std::uint64_t>(c) * c;
  return sum;
}

}  // namespace lietools
