#include "lietools/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "lietools/embedcheck.hpp"
#include "lietools/errors.hpp"
#include "lietools/lndcalc.hpp"
#include "lietools/orbits.hpp"

namespace lietools {

namespace {

using nlohmann::json;

json numbers_json(const NamedNumbers& numbers) {
  json out = json::object();
  for (const auto& [k, v] : numbers) out[k] = v;
  return out;
}

json case_inputs(const EmbeddingCase& c) {
  json in = {{"G", c.g_type.to_string()}, {"R", c.r_type.to_string()}};
  if (c.family_parameter) in["l"] = *c.family_parameter;
  return in;
}

Record verdict_record(const CaseVerdict& v) {
  Record r{"verdict", v.anchor, case_inputs(v.embedding)};
  r.outputs = {{"criterion", to_string(v.criterion)},
               {"witness", to_string(v.witness)},
               {"holds", v.holds},
               {"deferred", v.deferred},
               {"numbers", numbers_json(v.numbers)},
               {"note", v.note}};
  r.outputs["summary"] = v.embedding.to_string() + ": " + to_string(v.criterion) + " -> " + to_string(v.witness) +
                         " (" + v.note + ")";
  r.pass = v.holds || v.deferred;
  return r;
}

Record orbit_record(const OrbitCount& oc, std::optional<std::uint64_t> expected) {
  Record r{"orbit-count", "nilpotent-orbit-count", {{"type", oc.lie_type.to_string()}}};
  r.outputs = {{"count", oc.count},
               {"method", to_string(oc.method)},
               {"includes_zero_orbit", oc.includes_zero_orbit},
               {"d_formula_verbatim", oc.d_formula_verbatim}};
  std::string summary = oc.lie_type.to_string() + ": " + std::to_string(oc.count) + " nilpotent orbits (" +
                        to_string(oc.method) + ")";
  if (expected) {
    r.inputs["expected"] = *expected;
    summary += oc.count == *expected ? ", matches " : ", expected ";
    summary += std::to_string(*expected);
  }
  r.outputs["summary"] = summary;
  r.pass = !expected || oc.count == *expected;
  return r;
}

Record lnd_record(const std::string& anchor, json inputs, std::string summary, bool pass, json extra = json::object()) {
  Record r{"lnd-check", anchor, std::move(inputs), std::move(extra)};
  r.outputs["summary"] = std::move(summary);
  r.pass = pass;
  return r;
}

}  // namespace

Report cmd_orbits(const std::string& type_text) {
  const LieType t = LieType::parse(type_text);
  Report rep{kToolVersion, "orbits " + type_text};
  rep.results.push_back(orbit_record(nilpotent_orbit_count(t), std::nullopt));
  return rep;
}

Report cmd_embed(const std::string& g_text, const std::string& r_text, std::optional<int> parameter) {
  const LieType g = LieType::parse(g_text);
  const LieType r = LieType::parse(r_text);
  Report rep{kToolVersion, "embed " + g_text + " " + r_text + (parameter ? " --l " + std::to_string(*parameter) : "")};
  const EmbeddingDecision decision = sl2_witness_verdict(g, r, parameter);
  for (const auto& stage : decision.stages) rep.results.push_back(verdict_record(stage));
  Record final = verdict_record(decision.final_verdict);
  final.anchor = "final:" + decision.final_verdict.anchor;
  final.pass = decision.final_verdict.holds && decision.final_verdict.witness != Witness::None;
  rep.results.push_back(std::move(final));
  return rep;
}

Report cmd_report_appendix(int l_max) {
  if (l_max < 4) throw DomainError("--lmax must be at least 4, got " + std::to_string(l_max));
  Report rep{kToolVersion, "report appendix --lmax " + std::to_string(l_max)};

  const std::pair<const char*, std::uint64_t> expected_counts[] = {
      {"A3", 5}, {"B2", 4}, {"G2", 5}, {"F4", 16}, {"E6", 21}, {"E7", 45}, {"E8", 70}};
  for (const auto& [label, count] : expected_counts)
    rep.results.push_back(orbit_record(nilpotent_orbit_count(LieType::parse(label)), count));
  {
    const auto a4 = nilpotent_orbit_count(LieType::parse("A4")).count;
    const auto a3 = nilpotent_orbit_count(LieType::parse("A3")).count;
    Record r{"orbit-count", "a4>a3", {{"types", {"A4", "A3"}}}, {{"A4", a4}, {"A3", a3}}};
    r.outputs["summary"] = "a4 = " + std::to_string(a4) + " > a3 = " + std::to_string(a3);
    r.pass = a4 > a3;
    rep.results.push_back(std::move(r));
  }

  for (const auto& c : evaluate_rank2_cases(l_max)) {
    Record r = verdict_record(c.verdict);
    r.inputs["case"] = c.case_index;
    rep.results.push_back(std::move(r));
  }

  std::vector<EmbeddingCase> exceptions;
  for (const auto& row : evaluate_principal_table(l_max)) {
    for (const auto& inst : row.instances) {
      Record r{"table-row", "principal-table", case_inputs(inst.embedding)};
      r.inputs["row"] = row.g_label + " | " + row.r_label + " | " + row.rank_column + " | " + row.gap_column;
      const bool exception = !inst.gap_exceeds();
      if (exception) exceptions.push_back(inst.embedding);
      r.outputs = {{"rank_plus_3", inst.rank_plus_three},
                   {"rank_plus_3_computed", inst.rank_plus_three_computed},
                   {"gap", inst.gap},
                   {"gap_computed", inst.gap_computed},
                   {"exception", exception}};
      r.outputs["summary"] = inst.embedding.to_string() + ": rank+3 = " + std::to_string(inst.rank_plus_three) +
                             ", dim gap = " + std::to_string(inst.gap) +
                             (exception ? " (exception: gap does not exceed rank+3)" : "") +
                             (inst.consistent() ? "" : " MISMATCH with root data");
      r.pass = inst.consistent();
      rep.results.push_back(std::move(r));

      const CaseVerdict sub = subregular_membership_check(inst.embedding.g_type, inst.embedding.r_type);
      rep.results.push_back(verdict_record(sub));
    }
  }
  {
    const std::vector<EmbeddingCase> expected{
        {LieType(Family::A, 3), LieType(Family::B, 2), 2},
        {LieType(Family::D, 4), LieType(Family::B, 3), 4},
    };
    json listed = json::array();
    for (const auto& e : exceptions) listed.push_back(e.to_string());
    Record r{"table-row", "dimension-gap-exceptions", {{"lmax", l_max}}, {{"exceptions", listed}}};
    r.pass = exceptions.size() == expected.size() &&
             std::all_of(expected.begin(), expected.end(), [&](const EmbeddingCase& e) {
               return std::find(exceptions.begin(), exceptions.end(), e) != exceptions.end();
             });
    r.outputs["summary"] = "exceptions: " + listed.dump() + " (C2 = B2 in A3 and B3 in D4 expected)";
    rep.results.push_back(std::move(r));
  }
  return rep;
}

Report cmd_lnd_verify(unsigned cap) {
  if (cap == 0) throw DomainError("--cap must be positive");
  Report rep{kToolVersion, "lnd verify --cap " + std::to_string(cap)};
  const QuotientRing ring = sl2_coordinate_ring();
  const auto [d1, d2] = sl2_standard_derivations(ring);
  const std::pair<const char*, const Derivation*> derivations[] = {{"d1", &d1}, {"d2", &d2}};

  for (const auto& [name, d] : derivations) {
    const bool ok = preserves_relations(ring, *d);
    rep.results.push_back(lnd_record(std::string("relation-preserved:") + name, {{"derivation", name}},
                                     std::string(name) + "(a1*b2 - a2*b1 - 1) == 0", ok));
  }

  for (const auto& [name, d] : derivations) {
    std::string summary = std::string(name) + " degrees:";
    json degrees = json::object();
    bool ok = true;
    for (const auto& g : ring.generators()) {
      try {
        const unsigned deg = delta_degree(ring, *d, ring.gen(g), cap);
        degrees[g] = deg;
        summary += " " + g + "=" + std::to_string(deg);
      } catch (const NotNilpotentError&) {
        ok = false;
        degrees[g] = nullptr;
        summary += " " + g + "=not nilpotent within cap";
      }
    }
    rep.results.push_back(lnd_record(std::string("locally-nilpotent:") + name,
                                     {{"derivation", name}, {"cap", cap}}, summary, ok, {{"degrees", degrees}}));
  }

  {
    const bool ok = is_in_kernel(ring, d1, ring.gen("a1")) && is_in_kernel(ring, d1, ring.gen("a2")) &&
                    is_in_kernel(ring, d2, ring.gen("b1")) && is_in_kernel(ring, d2, ring.gen("b2")) &&
                    !is_in_kernel(ring, d1, ring.gen("b1")) && !is_in_kernel(ring, d2, ring.gen("a1"));
    rep.results.push_back(
        lnd_record("kernel-membership", json::object(), "a1, a2 in Ker d1; b1, b2 in Ker d2; b1 not in Ker d1", ok));
  }

  {
    const auto witness = verify_semicompatibility_witness(ring, d1, d2, {ring.gen("a1"), ring.gen("a2")},
                                                          {ring.gen("b1"), ring.gen("b2")});
    const std::string text = witness.to_string(ring);
    rep.results.push_back(lnd_record("semi-compatibility-witness",
                                     {{"K1", {"a1", "a2"}}, {"K2", {"b1", "b2"}}, {"max_degree", kDefaultWitnessDegree}},
                                     text, witness.found && text == "1 = a1*b2 - a2*b1",
                                     {{"degree", witness.degree}, {"found", witness.found}}));
  }

  {
    const MultiPoly a = ring.parse("a1*b2");
    bool ok = false;
    std::string summary;
    json degrees = json::object();
    try {
      const unsigned deg1 = delta_degree(ring, d1, a, cap);
      const unsigned deg2 = delta_degree(ring, d2, a, cap);
      ok = verify_compatibility_condition2(ring, d1, d2, a, cap) && deg1 == 1 && deg2 == 1;
      degrees = {{"d1", deg1}, {"d2", deg2}};
      summary = "deg_d1(a1*b2)=" + std::to_string(deg1) + " deg_d2(a1*b2)=" + std::to_string(deg2);
    } catch (const NotNilpotentError& e) {
      summary = e.what();
    }
    rep.results.push_back(lnd_record("compatibility-condition-2", {{"a", "a1*b2"}, {"cap", cap}}, summary, ok,
                                     {{"degrees", degrees}}));
  }

  {
    const HypersurfaceCheck h = verify_invariant_hypersurface();
    const QuotientRing uvz({"u", "v", "z"});
    rep.results.push_back(lnd_record("invariant-hypersurface",
                                     {{"u", "a1*a2"}, {"v", "b1*b2"}, {"z", "a2*b1 + 1/2"}},
                                     h.identity_vanishes ? "u*v - z^2 + 1/4 == 0 in C[SL2]"
                                                         : "u*v - z^2 + 1/4 == " + ring.format(h.reduced) + " in C[SL2]",
                                     h.identity_vanishes, {{"reduced", ring.format(h.reduced)}}));
    rep.results.push_back(lnd_record("z2-sign-flip", {{"map", "(u,v,z) -> (-u,-v,-z)"}},
                                     std::string("(u,v,z) -> (-u,-v,-z) ") +
                                         (h.sign_flip_invariant ? "fixes" : "does not fix") + " u*v - z^2 + 1/4",
                                     h.sign_flip_invariant));
  }
  return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbit counts, principal-embedding case analysis and SL2 derivation checks", "lietools"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto format_check = CLI::IsMember({"text", "json"});

  auto* orbits = app.add_subcommand("orbits", "Number of nilpotent orbits of a simple type");
  std::string type_text;
  orbits->add_option("type", type_text, "Lie type, e.g. B3 or E6")->required();
  orbits->add_option("--format", format, "text or json")->check(format_check);

  auto* embed = app.add_subcommand("embed", "Decide which SL2 subgroup of G has no conjugate inside R");
  std::string g_text, r_text;
  std::optional<int> parameter;
  embed->add_option("G", g_text, "ambient type")->required();
  embed->add_option("R", r_text, "subgroup type")->required();
  embed->add_option("--l", parameter, "family parameter l of the parametrized rows");
  embed->add_option("--format", format, "text or json")->check(format_check);

  auto* report = app.add_subcommand("report", "Reproduce tables");
  report->require_subcommand(1);
  auto* appendix = report->add_subcommand("appendix", "Orbit-count inequalities and the principal-embedding table");
  int l_max = kDefaultLMax;
  appendix->add_option("--lmax", l_max, "largest family parameter l (>= 4)");
  appendix->add_option("--format", format, "text or json")->check(format_check);

  auto* lnd = app.add_subcommand("lnd", "Derivation checks on C[SL2]");
  lnd->require_subcommand(1);
  auto* verify = lnd->add_subcommand("verify", "Run the SL2 derivation suite");
  unsigned cap = kDefaultDegreeCap;
  verify->add_option("--cap", cap, "iteration cap for delta-degrees");
  verify->add_option("--format", format, "text or json")->check(format_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Report rep;
    if (orbits->parsed())
      rep = cmd_orbits(type_text);
    else if (embed->parsed())
      rep = cmd_embed(g_text, r_text, parameter);
    else if (appendix->parsed())
      rep = cmd_report_appendix(l_max);
    else
      rep = cmd_lnd_verify(cap);

    if (format == "json")
      out << rep.to_json().dump(2) << '\n';
    else
      out << rep.to_text();
    return rep.status() == ReportStatus::Pass ? kExitPass : kExitCheckFailure;
  } catch (const UnsupportedCaseError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidTypeError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "check failure: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

}  // namespace lietools
