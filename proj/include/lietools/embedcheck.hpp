#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietools/rootsys.hpp"

namespace lietools {

/// A subgroup type R inside a simple group type G. `family_parameter` is the
/// l of the parametrized families (A_{2l}/B_l, A_{2l-1}/C_l, D_l/B_{l-1}).
struct EmbeddingCase {
  LieType g_type{Family::A, 1};
  LieType r_type{Family::A, 1};
  std::optional<int> family_parameter;

  std::string to_string() const;  // "B3 in D4"
  friend bool operator==(const EmbeddingCase&, const EmbeddingCase&) = default;
};

enum class Criterion { OrbitCount, DimensionGap, SubregularPartition, CitedOnly };
enum class Witness { Principal, Subregular, None };

std::string to_string(Criterion c);
std::string to_string(Witness w);

using NamedNumbers = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of one check on one (G, R) pair.
///
/// A verdict that holds names a witness SL2 kind. Criterion::CitedOnly marks
/// conclusions that rest on arguments not recomputed here (triality, lifting
/// of sl2 triples in exceptional types); `note` then states the cited fact.
struct CaseVerdict {
  EmbeddingCase embedding;
  Criterion criterion = Criterion::OrbitCount;
  Witness witness = Witness::None;
  bool holds = false;
  /// Dimension-gap check failed and the pair must be settled by the
  /// subregular partition argument instead.
  bool deferred = false;
  NamedNumbers numbers;
  std::string anchor;  // short key of the fact being reproduced
  std::string note;

  std::optional<std::int64_t> number(const std::string& key) const;
};

/// Principal witness when the nilpotent orbit count of R is strictly less
/// than that of G.
CaseVerdict orbit_count_criterion(const LieType& g, const LieType& r);

/// Cases (1)-(6) of the rank >= 2 principal-subgroup list: B2 in A3/A4; G2 in
/// B3/D4/A6; B_l in A_{2l} and C_l in A_{2l-1} for 3 <= l <= l_max; B_{l-1}
/// in D_l for 4 <= l <= l_max; F4 in E6. `case_index` tags which case.
struct Rank2Case {
  int case_index = 0;
  CaseVerdict verdict;
};

/// Evaluates every case without throwing. l_max >= 4.
std::vector<Rank2Case> evaluate_rank2_cases(int l_max);

/// As evaluate_rank2_cases but throws InconsistencyError naming the first
/// case whose orbit-count inequality fails.
std::vector<Rank2Case> rank2_cases_report(int l_max);

/// One evaluated instance of a table row.
struct TableInstance {
  EmbeddingCase embedding;
  std::int64_t rank_plus_three = 0;        // from the row's closed form
  std::int64_t rank_plus_three_computed = 0;  // rank G + 3 from the type
  std::int64_t gap = 0;                     // from the row's closed form
  std::int64_t gap_computed = 0;            // dim G - dim R from root systems
  bool consistent() const noexcept { return rank_plus_three == rank_plus_three_computed && gap == gap_computed; }
  bool gap_exceeds() const noexcept { return gap_computed > rank_plus_three_computed; }
};

/// A row of the principal-embedding table, with its columns as printed
/// (G, R, rank G + 3, dim G - dim R). Parametrized rows carry closed forms in
/// l and are evaluated for l_min <= l <= l_max.
struct TableRow {
  std::string g_label;
  std::string r_label;
  std::string rank_column;
  std::string gap_column;
  bool parametrized = false;
  int l_min = 0;
  std::vector<TableInstance> instances;
};

inline constexpr int kDefaultLMax = 50;

/// The seven rows, evaluated. Parametrized A-rows start at l = 2, which
/// includes C2 = B2 in A3 and B2 in A4; the D-row starts at l = 4.
std::vector<TableRow> evaluate_principal_table(int l_max = kDefaultLMax);

/// As evaluate_principal_table but throws InconsistencyError if any closed
/// form disagrees with the root-system computation. l_max >= 4.
std::vector<TableRow> principal_table(int l_max = kDefaultLMax);

/// Instances where dim G - dim R > rank G + 3 fails.
std::vector<EmbeddingCase> dimension_gap_exceptions(int l_max = kDefaultLMax);

/// Strict inequality dim G - dim R > rank G + 3 for a pair of the table.
/// When it fails the verdict is marked deferred. `parameter`, when given, must
/// match the family parameter implied by the types. UnsupportedCaseError for
/// pairs outside the table.
CaseVerdict dimension_gap_check(const LieType& g, const LieType& r, std::optional<int> parameter = std::nullopt);

/// Shows that no conjugate of the subregular SL2 of G lies in R using the
/// Jordan type of the subregular orbit: (2l-1,1) is not symplectic for
/// C_l in A_{2l-1}; (2l,1) is not orthogonal for B_l in A_{2l}; (2l-3,3) fixes
/// no line for B_{l-1} in D_l. G2 in B3/D4/A6 and F4 in E6 return CitedOnly.
CaseVerdict subregular_membership_check(const LieType& g, const LieType& r);

/// N - n + m - 2: the dimension a subgroup R of rank m would need if the
/// semisimple element of the SL2 were regular in G (dim N, rank n).
std::int64_t regular_case_dimension(const LieType& g, const LieType& r);

/// Whether (g, r) is one of the analysed principal embeddings.
bool is_supported_pair(const LieType& g, const LieType& r);

/// Human-readable list of the supported pairs.
std::string supported_pairs_description();

/// Full decision for one pair: which SL2 subgroup witnesses that no
/// conjugate lies in R.
struct EmbeddingDecision {
  CaseVerdict final_verdict;
  std::vector<CaseVerdict> stages;  // every check that ran, in order
};

/// Orbit-count criterion first. Pairs of cases (2)-(6), i.e. rows of the
/// table at their listed parameter ranges, then go through the dimension-gap
/// and subregular-partition checks and settle with a subregular witness.
/// Case (1) pairs (B2 in A3, A4) settle with the principal witness from the
/// orbit count; their table-route stages are still recorded. Throws
/// UnsupportedCaseError outside the analysed list.
EmbeddingDecision sl2_witness_verdict(const LieType& g, const LieType& r,
                                      std::optional<int> parameter = std::nullopt);

}  // namespace lietools
