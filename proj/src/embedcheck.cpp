#include "lietools/embedcheck.hpp"

#include "lietools/errors.hpp"
#include "lietools/orbits.hpp"
#include "lietools/partitions.hpp"

namespace lietools {

namespace {

enum class PairKind { B2InA3, B2InA4, G2InB3, G2InD4, G2InA6, BInEvenA, CInOddA, BInD, F4InE6 };

struct IdentifiedPair {
  PairKind kind;
  std::optional<int> l;  // family parameter for the parametrized kinds
};

const LieType kG2{Family::G, 2};
const LieType kF4{Family::F, 4};
const LieType kE6{Family::E, 6};

std::optional<IdentifiedPair> identify(const LieType& g, const LieType& r) {
  if (r == kG2) {
    if (g == LieType(Family::B, 3)) return IdentifiedPair{PairKind::G2InB3, std::nullopt};
    if (g == LieType(Family::D, 4)) return IdentifiedPair{PairKind::G2InD4, std::nullopt};
    if (g == LieType(Family::A, 6)) return IdentifiedPair{PairKind::G2InA6, std::nullopt};
    return std::nullopt;
  }
  if (r == kF4) {
    if (g == kE6) return IdentifiedPair{PairKind::F4InE6, std::nullopt};
    return std::nullopt;
  }
  const int n = g.rank();
  if (g.family() == Family::A) {
    // C2 is stored as B2, so C2 in A3 arrives here as (A3, B2).
    if (n == 3 && r == LieType(Family::B, 2)) return IdentifiedPair{PairKind::B2InA3, 2};
    if (n == 4 && r == LieType(Family::B, 2)) return IdentifiedPair{PairKind::B2InA4, 2};
    if (n % 2 == 0 && r.family() == Family::B && r.rank() == n / 2 && r.rank() >= 3)
      return IdentifiedPair{PairKind::BInEvenA, n / 2};
    if (n % 2 == 1 && r.family() == Family::C && r.rank() == (n + 1) / 2 && r.rank() >= 3)
      return IdentifiedPair{PairKind::CInOddA, (n + 1) / 2};
    return std::nullopt;
  }
  if (g.family() == Family::D && n >= 4 && r.family() == Family::B && r.rank() == n - 1)
    return IdentifiedPair{PairKind::BInD, n};
  return std::nullopt;
}

bool is_case_one(PairKind k) { return k == PairKind::B2InA3 || k == PairKind::B2InA4; }

IdentifiedPair require_pair(const LieType& g, const LieType& r) {
  auto id = identify(g, r);
  if (!id)
    throw UnsupportedCaseError("pair " + r.to_string() + " in " + g.to_string() +
                               " is not among the analysed principal embeddings; supported: " +
                               supported_pairs_description());
  return *id;
}

void check_parameter(const IdentifiedPair& id, std::optional<int> parameter, const EmbeddingCase& c) {
  if (!parameter) return;
  if (!id.l) throw DomainError("pair " + c.to_string() + " is not parametrized; drop the family parameter");
  if (*id.l != *parameter)
    throw DomainError("family parameter l = " + std::to_string(*parameter) + " does not match " + c.to_string() +
                      " (expected l = " + std::to_string(*id.l) + ")");
}

std::int64_t dim(const LieType& t) { return group_dimension(t); }

struct RowSpec {
  const char* g_label;
  const char* r_label;
  const char* rank_column;
  const char* gap_column;
};

constexpr RowSpec kRows[] = {
    {"B_3", "G_2", "6", "7"},
    {"D_4", "G_2", "7", "14"},
    {"A_6", "G_2", "9", "34"},
    {"E_6", "F_4", "9", "26"},
    {"A_{2l-1}", "C_l", "2l+2", "l(2l-1)-1"},
    {"A_{2l}", "B_l", "2l+3", "2l^2+3l"},
    {"D_l", "B_{l-1}", "l+3", "2l-1"},
};

TableInstance make_instance(const LieType& g, const LieType& r, std::optional<int> l, std::int64_t rank3,
                            std::int64_t gap) {
  TableInstance inst{EmbeddingCase{g, r, l}};
  inst.rank_plus_three = rank3;
  inst.gap = gap;
  inst.rank_plus_three_computed = g.rank() + 3;
  inst.gap_computed = dim(g) - dim(r);
  return inst;
}

}  // namespace

std::string EmbeddingCase::to_string() const { return r_type.to_string() + " in " + g_type.to_string(); }

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::OrbitCount: return "orbit-count";
    case Criterion::DimensionGap: return "dimension-gap";
    case Criterion::SubregularPartition: return "subregular-partition";
    case Criterion::CitedOnly: return "cited-only";
  }
  return "?";
}

std::string to_string(Witness w) {
  switch (w) {
    case Witness::Principal: return "principal";
    case Witness::Subregular: return "subregular";
    case Witness::None: return "none";
  }
  return "?";
}

std::optional<std::int64_t> CaseVerdict::number(const std::string& key) const {
  for (const auto& [k, v] : numbers)
    if (k == key) return v;
  return std::nullopt;
}

CaseVerdict orbit_count_criterion(const LieType& g, const LieType& r) {
  const auto count_g = nilpotent_orbit_count(g).count;
  const auto count_r = nilpotent_orbit_count(r).count;
  CaseVerdict v{.embedding = EmbeddingCase{g, r, std::nullopt}, .criterion = Criterion::OrbitCount};
  v.holds = count_r < count_g;
  v.witness = v.holds ? Witness::Principal : Witness::None;
  v.numbers = {{"orbits(G)", static_cast<std::int64_t>(count_g)}, {"orbits(R)", static_cast<std::int64_t>(count_r)}};
  v.anchor = "orbit-count";
  v.note = std::to_string(count_g) + (v.holds ? " > " : " <= ") + std::to_string(count_r);
  return v;
}

std::vector<Rank2Case> evaluate_rank2_cases(int l_max) {
  if (l_max < 4) throw DomainError("l_max must be at least 4, got " + std::to_string(l_max));
  std::vector<Rank2Case> out;
  auto add = [&](int index, const LieType& g, const LieType& r, std::optional<int> l) {
    CaseVerdict v = orbit_count_criterion(g, r);
    v.embedding.family_parameter = l;
    v.anchor = "rank2-case-" + std::to_string(index);
    out.push_back({index, std::move(v)});
  };
  const LieType b2(Family::B, 2);
  add(1, LieType(Family::A, 3), b2, std::nullopt);
  add(1, LieType(Family::A, 4), b2, std::nullopt);
  add(2, LieType(Family::B, 3), kG2, std::nullopt);
  add(2, LieType(Family::D, 4), kG2, std::nullopt);
  add(2, LieType(Family::A, 6), kG2, std::nullopt);
  for (int l = 3; l <= l_max; ++l) add(3, LieType(Family::A, 2 * l), LieType(Family::B, l), l);
  for (int l = 3; l <= l_max; ++l) add(4, LieType(Family::A, 2 * l - 1), LieType(Family::C, l), l);
  for (int l = 4; l <= l_max; ++l) add(5, LieType(Family::D, l), LieType(Family::B, l - 1), l);
  add(6, kE6, kF4, std::nullopt);
  return out;
}

std::vector<Rank2Case> rank2_cases_report(int l_max) {
  auto cases = evaluate_rank2_cases(l_max);
  for (const auto& c : cases)
    if (!c.verdict.holds)
      throw InconsistencyError("case (" + std::to_string(c.case_index) + ") fails for " +
                               c.verdict.embedding.to_string() + ": " + c.verdict.note);
  return cases;
}

std::vector<TableRow> evaluate_principal_table(int l_max) {
  if (l_max < 4) throw DomainError("l_max must be at least 4, got " + std::to_string(l_max));
  std::vector<TableRow> rows;
  for (const auto& spec : kRows)
    rows.push_back(TableRow{spec.g_label, spec.r_label, spec.rank_column, spec.gap_column});

  rows[0].instances.push_back(make_instance(LieType(Family::B, 3), kG2, std::nullopt, 6, 7));
  rows[1].instances.push_back(make_instance(LieType(Family::D, 4), kG2, std::nullopt, 7, 14));
  rows[2].instances.push_back(make_instance(LieType(Family::A, 6), kG2, std::nullopt, 9, 34));
  rows[3].instances.push_back(make_instance(kE6, kF4, std::nullopt, 9, 26));

  rows[4].parametrized = rows[5].parametrized = rows[6].parametrized = true;
  rows[4].l_min = 2;
  rows[5].l_min = 2;
  rows[6].l_min = 4;
  for (std::int64_t l = 2; l <= l_max; ++l) {
    const int li = static_cast<int>(l);
    rows[4].instances.push_back(make_instance(LieType(Family::A, 2 * li - 1), LieType(Family::C, li), li,
                                              2 * l + 2, l * (2 * l - 1) - 1));
    rows[5].instances.push_back(make_instance(LieType(Family::A, 2 * li), LieType(Family::B, li), li, 2 * l + 3,
                                              2 * l * l + 3 * l));
    if (l >= 4)
      rows[6].instances.push_back(
          make_instance(LieType(Family::D, li), LieType(Family::B, li - 1), li, l + 3, 2 * l - 1));
  }
  return rows;
}

std::vector<TableRow> principal_table(int l_max) {
  auto rows = evaluate_principal_table(l_max);
  for (const auto& row : rows)
    for (const auto& inst : row.instances)
      if (!inst.consistent())
        throw InconsistencyError("table row " + row.g_label + " | " + row.r_label + " disagrees with root data at " +
                                 inst.embedding.to_string() + ": closed form (" +
                                 std::to_string(inst.rank_plus_three) + ", " + std::to_string(inst.gap) +
                                 ") vs computed (" + std::to_string(inst.rank_plus_three_computed) + ", " +
                                 std::to_string(inst.gap_computed) + ")");
  return rows;
}

std::vector<EmbeddingCase> dimension_gap_exceptions(int l_max) {
  std::vector<EmbeddingCase> out;
  for (const auto& row : principal_table(l_max))
    for (const auto& inst : row.instances)
      if (!inst.gap_exceeds()) out.push_back(inst.embedding);
  return out;
}

CaseVerdict dimension_gap_check(const LieType& g, const LieType& r, std::optional<int> parameter) {
  const auto id = require_pair(g, r);
  CaseVerdict v{.embedding = EmbeddingCase{g, r, id.l}, .criterion = Criterion::DimensionGap};
  check_parameter(id, parameter, v.embedding);
  const std::int64_t dg = dim(g), dr = dim(r);
  const std::int64_t gap = dg - dr, bound = g.rank() + 3;
  v.holds = gap > bound;
  v.deferred = !v.holds;
  v.witness = v.holds ? Witness::Subregular : Witness::None;
  v.numbers = {{"dim(G)", dg}, {"dim(R)", dr}, {"rank(G)", g.rank()}, {"dim(G)-dim(R)", gap}, {"rank(G)+3", bound}};
  v.anchor = "dimension-gap";
  v.note = std::to_string(gap) + (v.holds ? " > " : " <= ") + std::to_string(bound) +
           (v.holds ? "" : "; deferred to the subregular partition check");
  return v;
}

CaseVerdict subregular_membership_check(const LieType& g, const LieType& r) {
  const auto id = require_pair(g, r);
  CaseVerdict v{.embedding = EmbeddingCase{g, r, id.l}, .criterion = Criterion::SubregularPartition};
  v.anchor = "subregular-partition";
  v.numbers = {{"codim subregular orbit", g.rank() + 2}};

  switch (id.kind) {
    case PairKind::B2InA3:
    case PairKind::CInOddA: {
      const Partition p = subregular_partition(g);
      v.holds = !is_symplectic_partition(p);
      v.numbers.emplace_back("symplectic", is_symplectic_partition(p));
      v.note = "subregular partition " + p.to_string() + " of " + g.to_string() +
               (v.holds ? " is not symplectic" : " is symplectic");
      break;
    }
    case PairKind::B2InA4:
    case PairKind::BInEvenA: {
      const Partition p = subregular_partition(g);
      v.holds = !is_orthogonal_partition(p);
      v.numbers.emplace_back("orthogonal", is_orthogonal_partition(p));
      v.note = "subregular partition " + p.to_string() + " of " + g.to_string() +
               (v.holds ? " is not orthogonal" : " is orthogonal");
      break;
    }
    case PairKind::BInD: {
      const Partition p = subregular_partition(g);
      v.holds = !p.contains(1);
      v.numbers.emplace_back("parts equal to 1", p.multiplicity(1));
      v.note = "subregular partition " + p.to_string() + " of " + g.to_string() +
               (v.holds ? " has no part 1, so the subgroup fixes no line" : " has a part 1");
      break;
    }
    case PairKind::G2InB3:
    case PairKind::G2InD4: {
      const Partition p = subregular_partition(g);
      v.criterion = Criterion::CitedOnly;
      v.holds = true;
      v.anchor = "cited:triality";
      v.note = "G2 is the fixed-point subgroup of triality; the subregular triple " + p.to_string() + " of " +
               g.to_string() + " is not triality-invariant";
      break;
    }
    case PairKind::G2InA6: {
      const Partition p = subregular_partition(g);
      v.criterion = Criterion::CitedOnly;
      v.holds = true;
      v.anchor = "cited:g2-in-b3";
      v.numbers.emplace_back("orthogonal", is_orthogonal_partition(p));
      v.note = "G2 lies in B3 inside A6; the subregular partition " + p.to_string() + " of A6 is not orthogonal";
      break;
    }
    case PairKind::F4InE6:
      v.criterion = Criterion::CitedOnly;
      v.holds = true;
      v.anchor = "cited:sl2-lifting";
      v.numbers.emplace_back("codim largest non-principal orbit meeting F4", 10);
      v.note = "sl2 triples of F4 lift uniquely to E6 and the largest non-principal E6 orbit meeting F4 has "
               "codimension 10, not rank + 2 = 8";
      break;
  }
  v.witness = v.holds ? Witness::Subregular : Witness::None;
  return v;
}

std::int64_t regular_case_dimension(const LieType& g, const LieType& r) {
  return dim(g) - g.rank() + r.rank() - 2;
}

bool is_supported_pair(const LieType& g, const LieType& r) { return identify(g, r).has_value(); }

std::string supported_pairs_description() {
  return "B2 in A3, B2 in A4, G2 in B3, G2 in D4, G2 in A6, B_l in A_2l (l >= 3), C_l in A_2l-1 (l >= 3), "
         "B_l-1 in D_l (l >= 4), F4 in E6";
}

EmbeddingDecision sl2_witness_verdict(const LieType& g, const LieType& r, std::optional<int> parameter) {
  const auto id = require_pair(g, r);
  EmbeddingDecision out;
  CaseVerdict counts = orbit_count_criterion(g, r);
  counts.embedding.family_parameter = id.l;
  check_parameter(id, parameter, counts.embedding);
  out.stages.push_back(counts);

  const CaseVerdict gap = dimension_gap_check(g, r, parameter);
  const CaseVerdict sub = subregular_membership_check(g, r);
  out.stages.push_back(gap);
  out.stages.push_back(sub);

  if (is_case_one(id.kind) && counts.holds) {
    out.final_verdict = counts;
    return out;
  }

  CaseVerdict final = sub;
  if (sub.criterion != Criterion::CitedOnly) {
    final.criterion = gap.holds ? Criterion::DimensionGap : Criterion::SubregularPartition;
    final.holds = sub.holds;
  }
  final.witness = final.holds ? Witness::Subregular : Witness::None;
  final.anchor = "sl2-witness";
  final.numbers.clear();
  for (const auto& stage : out.stages)
    for (const auto& kv : stage.numbers) final.numbers.push_back(kv);
  final.note = gap.note + "; " + sub.note;
  out.final_verdict = std::move(final);
  return out;
}

}  // namespace lietools
