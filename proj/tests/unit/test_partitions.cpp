#include "lietools/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "lietools/errors.hpp"

using namespace lietools;

namespace {

// Euler's pentagonal-number recurrence, written independently of the library.
std::vector<std::uint64_t> pentagonal_table(int n_max) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[n - g1];
      if (g2 <= n) acc += sign * p[n - g2];
    }
    p[n] = acc;
  }
  return {p.begin(), p.end()};
}

bool all_odd(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
}

bool all_distinct(const Partition& p) {
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

}  // namespace

TEST_CASE("enumeration examples") {
  const auto four = enumerate_partitions(4, PartitionConstraint::Unrestricted);
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(four == expected);

  const auto zero = enumerate_partitions(0, PartitionConstraint::Unrestricted);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  const auto seven = enumerate_partitions(7, PartitionConstraint::DistinctOddParts);
  REQUIRE(seven.size() == 1);
  CHECK(seven[0] == Partition{7});

  const auto eight = enumerate_partitions(8, PartitionConstraint::DistinctOddParts);
  CHECK(eight == std::vector<Partition>{{7, 1}, {5, 3}});
}

TEST_CASE("count examples") {
  CHECK(count_partitions(5, PartitionConstraint::Unrestricted) == 7);
  CHECK(count_partitions(4, PartitionConstraint::Unrestricted) == 5);
  CHECK(count_partitions(1, PartitionConstraint::DistinctParts) == 1);
  CHECK(count_partitions(8, PartitionConstraint::DistinctOddParts) == 2);
  CHECK(count_partitions(0, PartitionConstraint::DistinctOddParts) == 1);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({0}), DomainError);
  CHECK_THROWS_AS(Partition({-2, 1}), DomainError);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(enumerate_partitions(-1, PartitionConstraint::Unrestricted), DomainError);
  CHECK(Partition{3, 1}.to_string() == "(3,1)");
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition{3, 3, 1}.multiplicity(3) == 2);
}

TEST_CASE("unrestricted counts match the pentagonal recurrence for n <= 40") {
  const auto oracle = pentagonal_table(40);
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(count_partitions(n, PartitionConstraint::Unrestricted) == oracle[n]);
    CHECK(enumerate_partitions(n, PartitionConstraint::Unrestricted).size() == oracle[n]);
    CHECK(count_partitions_recurrence(n, PartitionConstraint::Unrestricted) == oracle[n]);
  }
}

TEST_CASE("restricted counts match filters of the unrestricted enumeration") {
  for (int n = 0; n <= 24; ++n) {
    CAPTURE(n);
    const auto all = enumerate_partitions(n, PartitionConstraint::Unrestricted);
    const auto distinct = std::count_if(all.begin(), all.end(), all_distinct);
    const auto odd_parts = std::count_if(all.begin(), all.end(), all_odd);
    const auto distinct_odd =
        std::count_if(all.begin(), all.end(), [](const Partition& p) { return all_odd(p) && all_distinct(p); });
    const auto self_conjugate =
        std::count_if(all.begin(), all.end(), [](const Partition& p) { return conjugate_partition(p) == p; });

    CHECK(count_partitions(n, PartitionConstraint::DistinctParts) == static_cast<std::uint64_t>(distinct));
    // Euler: distinct parts are equinumerous with odd parts.
    CHECK(count_partitions(n, PartitionConstraint::DistinctParts) == static_cast<std::uint64_t>(odd_parts));
    CHECK(count_partitions(n, PartitionConstraint::DistinctOddParts) == static_cast<std::uint64_t>(distinct_odd));
    // Distinct odd parts are the hook lengths of self-conjugate diagrams.
    CHECK(count_partitions(n, PartitionConstraint::DistinctOddParts) == static_cast<std::uint64_t>(self_conjugate));
  }
}

TEST_CASE("enumeration and recurrence agree on the overlap") {
  for (auto c : {PartitionConstraint::Unrestricted, PartitionConstraint::DistinctParts,
                 PartitionConstraint::DistinctOddParts}) {
    const auto table = partition_count_table(kCountEnumerationCap, c);
    for (int n = 0; n <= kCountEnumerationCap; ++n) {
      CAPTURE(n);
      const auto enumerated = enumerate_partitions(n, c).size();
      CHECK(enumerated == count_partitions_recurrence(n, c));
      CHECK(enumerated == table[n]);
      CHECK(enumerated == count_partitions(n, c));
    }
  }
}

TEST_CASE("counts for n <= 200 stay exact") {
  const auto table = partition_count_table(200, PartitionConstraint::Unrestricted);
  CHECK(table[100] == 190569292ULL);
  CHECK(table[200] == 3972999029388ULL);
  CHECK(count_partitions(200, PartitionConstraint::Unrestricted) == 3972999029388ULL);
  // Odd-part coin counting, equinumerous with distinct parts.
  std::vector<std::uint64_t> odd(201, 0);
  odd[0] = 1;
  for (int part = 1; part <= 200; part += 2)
    for (int n = part; n <= 200; ++n) odd[n] += odd[n - part];
  CHECK(count_partitions(200, PartitionConstraint::DistinctParts) == odd[200]);
  for (int n = 1; n <= 200; ++n) CHECK(table[n] >= table[n - 1]);
}

TEST_CASE("counts that overflow 64 bits are reported") {
  CHECK_THROWS_AS(count_partitions(1000, PartitionConstraint::Unrestricted), OverflowError);
}

TEST_CASE("conjugation is an involution preserving the total for n <= 20") {
  CHECK(conjugate_partition(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate_partition(Partition{}) == Partition{});
  CHECK(conjugate_partition(Partition{2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 20; ++n) {
    for (const auto& p : enumerate_partitions(n, PartitionConstraint::Unrestricted)) {
      const Partition q = conjugate_partition(p);
      CHECK(q.total() == n);
      CHECK(conjugate_partition(q) == p);
      CHECK(q.length() == static_cast<std::size_t>(p.empty() ? 0 : p.parts().front()));
    }
  }
}

TEST_CASE("constraint outputs are nested and deterministic") {
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n, PartitionConstraint::Unrestricted);
    const auto distinct = enumerate_partitions(n, PartitionConstraint::DistinctParts);
    const auto distinct_odd = enumerate_partitions(n, PartitionConstraint::DistinctOddParts);
    const std::set<Partition> all_set(all.begin(), all.end());
    const std::set<Partition> distinct_set(distinct.begin(), distinct.end());
    CHECK(all_set.size() == all.size());
    for (const auto& p : distinct) CHECK(all_set.count(p) == 1);
    for (const auto& p : distinct_odd) {
      CHECK(distinct_set.count(p) == 1);
      CHECK(all_odd(p));
      CHECK(all_distinct(p));
    }
    CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>{}));
    CHECK(enumerate_partitions(n, PartitionConstraint::Unrestricted) == all);
  }
}

TEST_CASE("symplectic and orthogonal tests") {
  CHECK_FALSE(is_symplectic_partition(Partition{3, 1}));
  CHECK(is_symplectic_partition(Partition{2, 2}));
  CHECK(is_symplectic_partition(Partition{3, 3, 1, 1}));
  CHECK_FALSE(is_orthogonal_partition(Partition{4, 1}));
  CHECK(is_orthogonal_partition(Partition{5, 3}));
  CHECK(is_orthogonal_partition(Partition{}));
  CHECK(is_orthogonal_partition(Partition{2, 2, 1}));
  CHECK_FALSE(is_symplectic_partition(Partition{2, 1}));
}

TEST_CASE("conjugate square sum") {
  CHECK(conjugate_square_sum(Partition{3, 1}) == 4 + 1 + 1);
  CHECK(conjugate_square_sum(Partition{1, 1, 1}) == 9);
  CHECK(conjugate_square_sum(Partition{}) == 0);
}
