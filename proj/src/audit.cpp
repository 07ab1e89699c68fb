#include "dglab/audit.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "dglab/examples.hpp"
#include "dglab/normality.hpp"

namespace dglab {

namespace {

const std::vector<ClaimInfo> kRegistry = {
    {ClaimId::LEM24, "CL-LEM24",
     "an inverse product landing on one right identity equals every right identity"},
    {ClaimId::IIR, "CL-IIR", "I_R(g)=I_L(h) and I_L(g)=I_R(h) for every inverse h of g"},
    {ClaimId::P26A, "CL-P26A", "each element has a unique right and left identity"},
    {ClaimId::P26B, "CL-P26B", "every global identity is idempotent"},
    {ClaimId::P26C, "CL-P26C", "each element has a unique inverse"},
    {ClaimId::P26D, "CL-P26D",
     "finite order: identities coincide and g^(n-1) is an inverse of g"},
    {ClaimId::P26E, "CL-P26E", "I_R(g1*g2)=I_R(g2) and I_L(g1*g2)=I_L(g1)"},
    {ClaimId::P26F, "CL-P26F", "a shared unique one-sided identity forces a group"},
    {ClaimId::P26G, "CL-P26G", "one-sided cancellativity forces a group"},
    {ClaimId::R27, "CL-R27", "the structure is regular and inverse (class equality)"},
    {ClaimId::R211, "CL-R211", "subgroups are invariant under their own identities"},
    {ClaimId::P212, "CL-P212", "the S-set statement (parts 1, 2i, 2ii, 2iii)"},
    {ClaimId::L32, "CL-L32", "normal subgroups contain every global identity"},
    {ClaimId::P33, "CL-P33", "the three normality formulations agree"},
    {ClaimId::T34A, "CL-T34A", "abelian implies group"},
    {ClaimId::T34B, "CL-T34B", "cyclic implies group"},
    {ClaimId::T34C, "CL-T34C", "a normal disguised-subgroup forces a group"},
    {ClaimId::T37, "CL-T37", "the quotient by a disguised-normal subgroup is a group"},
    {ClaimId::C38, "CL-C38",
     "a subgroup-free complement makes the quotient a group"},
    {ClaimId::C39, "CL-C39", "coset quotient and relation quotient coincide"},
    {ClaimId::P43, "CL-P43", "homomorphisms send every identity to e"},
    {ClaimId::P45, "CL-P45", "kernels are normal disguised-subgroups"},
    {ClaimId::C46, "CL-C46", "a homomorphism into a group forces a group"},
    {ClaimId::P47, "CL-P47", "images of subgroups are subgroups of the codomain"},
    {ClaimId::P48, "CL-P48", "isomorphic structures have matching quotient groups"},
    {ClaimId::ISO1, "CL-ISO1", "G/Ker(h) is isomorphic to the image of h"},
    {ClaimId::ISO2, "CL-ISO2", "(G/N1)/(N2/N1) is isomorphic to G/N2"},
    {ClaimId::ISO3, "CL-ISO3", "(Q1*Q2)/Q2 is isomorphic to Q1/(Q1 cap Q2)"},
};

CheckMode best_mode(const StructureView& v) {
  return v.report().isDisguisedStrict ? CheckMode::strict : CheckMode::literal;
}

struct Ctx {
  const ClaimInfo& info;
  CheckMode mode;
  const StructureView& view;
  std::string structure;
  std::vector<AuditFinding>* out;

  void emit(std::string params, Verdict verdict, std::string witness) const {
    out->push_back(AuditFinding{info.token, mode, structure,
                                params.empty() ? "-" : std::move(params), verdict,
                                witness.empty() ? "-" : std::move(witness)});
  }
  void emit(std::string params, const CheckResult& r) const {
    emit(std::move(params), r.verdict, r.witness);
  }
  const CayleyTable& t() const { return view.table(); }
  std::string qparam(Subset q) const { return "Q=" + subset_to_string(t(), q); }
};

std::string group_refutation(const StructureView& v) {
  return "not-a-group;" + v.report().witness("group");
}

// ---- element-level claims -------------------------------------------------

void claim_lem24(const Ctx& c) {
  const auto& t = c.t();
  for (int g = 0; g < t.order(); ++g) {
    const auto& p = c.view.profile(g);
    for (int h : p.def21Inverses) {
      int hg = t.at(h, g);
      if (contains(p.rightIdentities, hg))
        for (int id2 : p.rightIdentities)
          if (hg != id2) {
            c.emit("", Verdict::counterexample,
                   "side=right;g=" + t.name(g) + ";h=" + t.name(h) + ";id2=" + t.name(id2));
            return;
          }
      int gh = t.at(g, h);
      if (contains(p.leftIdentities, gh))
        for (int id2 : p.leftIdentities)
          if (gh != id2) {
            c.emit("", Verdict::counterexample,
                   "side=left;g=" + t.name(g) + ";h=" + t.name(h) + ";id2=" + t.name(id2));
            return;
          }
    }
  }
  c.emit("", Verdict::holds, "");
}

void claim_iir(const Ctx& c) {
  const auto& t = c.t();
  for (int g = 0; g < t.order(); ++g) {
    const auto& pg = c.view.profile(g);
    for (int h : pg.def21Inverses) {
      const auto& ph = c.view.profile(h);
      if (pg.rightIdentities != ph.leftIdentities) {
        c.emit("", Verdict::counterexample,
               "side=right;g=" + t.name(g) + ";h=" + t.name(h));
        return;
      }
      if (pg.leftIdentities != ph.rightIdentities) {
        c.emit("", Verdict::counterexample,
               "side=left;g=" + t.name(g) + ";h=" + t.name(h));
        return;
      }
    }
  }
  c.emit("", Verdict::holds, "");
}

void claim_p26a(const Ctx& c) {
  const auto& t = c.t();
  for (int g = 0; g < t.order(); ++g) {
    const auto& p = c.view.profile(g);
    if (p.rightIdentities.size() != 1) {
      c.emit("", Verdict::counterexample,
             "g=" + t.name(g) + ";|I_R|=" + std::to_string(p.rightIdentities.size()));
      return;
    }
    if (p.leftIdentities.size() != 1) {
      c.emit("", Verdict::counterexample,
             "g=" + t.name(g) + ";|I_L|=" + std::to_string(p.leftIdentities.size()));
      return;
    }
  }
  c.emit("", Verdict::holds, "");
}

void claim_p26b(const Ctx& c) {
  const auto& t = c.t();
  for (int id : c.view.globalIdentities())
    if (t.at(id, id) != id) {
      c.emit("", Verdict::counterexample,
             "id=" + t.name(id) + ";id*id=" + t.name(t.at(id, id)));
      return;
    }
  c.emit("", Verdict::holds, "");
}

void claim_p26c(const Ctx& c) {
  const auto& t = c.t();
  for (int g = 0; g < t.order(); ++g) {
    const auto& p = c.view.profile(g);
    if (p.def21Inverses.size() != 1) {
      c.emit("", Verdict::counterexample,
             "g=" + t.name(g) + ";|inv|=" + std::to_string(p.def21Inverses.size()));
      return;
    }
  }
  c.emit("", Verdict::holds, "");
}

void claim_p26d(const Ctx& c) {
  const auto& t = c.t();
  bool applicable = false;
  for (int g = 0; g < t.order(); ++g) {
    const auto& p = c.view.profile(g);
    if (!p.order) continue;
    applicable = true;
    if (p.rightIdentities != p.leftIdentities) {
      c.emit("", Verdict::counterexample, "g=" + t.name(g) + ";part=identities");
      return;
    }
    if (*p.order >= 2) {
      int h = power(t, g, *p.order - 1);
      if (!contains(p.def21Inverses, h)) {
        c.emit("", Verdict::counterexample,
               "g=" + t.name(g) + ";part=inverse;g^(n-1)=" + t.name(h));
        return;
      }
    }
  }
  if (!applicable)
    c.emit("", Verdict::not_applicable, "no-finite-order-element");
  else
    c.emit("", Verdict::holds, "");
}

void claim_p26e(const Ctx& c) {
  const auto& t = c.t();
  for (int g1 = 0; g1 < t.order(); ++g1)
    for (int g2 = 0; g2 < t.order(); ++g2) {
      const auto& pp = c.view.profile(t.at(g1, g2));
      if (pp.rightIdentities != c.view.profile(g2).rightIdentities) {
        c.emit("", Verdict::counterexample,
               "side=right;g1=" + t.name(g1) + ";g2=" + t.name(g2));
        return;
      }
      if (pp.leftIdentities != c.view.profile(g1).leftIdentities) {
        c.emit("", Verdict::counterexample,
               "side=left;g1=" + t.name(g1) + ";g2=" + t.name(g2));
        return;
      }
    }
  c.emit("", Verdict::holds, "");
}

void claim_p26f(const Ctx& c) {
  const auto& r = c.view.report();
  if (!r.hasUniqueGlobalRightIdentity && !r.hasUniqueGlobalLeftIdentity) {
    c.emit("", Verdict::not_applicable, "no-shared-unique-one-sided-identity");
    return;
  }
  std::string side = r.hasUniqueGlobalRightIdentity ? "right" : "left";
  if (r.isGroup)
    c.emit("", Verdict::holds, "");
  else
    c.emit("", Verdict::counterexample, "side=" + side + ";" + group_refutation(c.view));
}

void claim_p26g(const Ctx& c) {
  const auto& r = c.view.report();
  if (!r.isLeftCancellative && !r.isRightCancellative) {
    c.emit("", Verdict::not_applicable, "not-cancellative-on-either-side");
    return;
  }
  std::string side = r.isLeftCancellative ? "left" : "right";
  if (r.isGroup)
    c.emit("", Verdict::holds, "");
  else
    c.emit("", Verdict::counterexample, "side=" + side + ";" + group_refutation(c.view));
}

void claim_r27(const Ctx& c) {
  const auto& r = c.view.report();
  if (!r.isRegularSemigroup)
    c.emit("", Verdict::counterexample,
           "not-regular;" + r.witness("regular-semigroup"));
  else if (!r.isInverseSemigroup)
    c.emit("", Verdict::counterexample,
           "not-inverse;" + r.witness("inverse-semigroup"));
  else
    c.emit("", Verdict::holds, "");
}

// ---- subset-quantified claims ----------------------------------------------

std::vector<Subset> admissible_subgroups(const Ctx& c) {
  return enumerate_disguised_subgroups(c.view, c.mode, c.view.order());
}

std::vector<Subset> explicit_or(const Ctx& c, const ClaimParams* params,
                                std::vector<Subset> (*iter)(const Ctx&)) {
  if (params && params->subset) return {*params->subset};
  return iter(c);
}

void claim_r211(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, admissible_subgroups)) {
    CheckResult sub = is_disguised_subgroup(c.view, q, c.mode);
    if (!sub.ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, "Q-not-subgroup");
      continue;
    }
    Subset ids_in_q{c.view.identitySet().bits & q.bits};
    if (ids_in_q.empty()) {
      if (params) c.emit(c.qparam(q), Verdict::not_applicable, "no-identity-inside-Q");
      continue;
    }
    CheckResult verdict = CheckResult::pass();
    for (int id : ids_in_q.members(c.view.order())) {
      CheckResult r = identity_invariance_check(c.view, q, id);
      if (!r.ok()) {
        verdict = CheckResult::fail("id=" + c.t().name(id) + ";" + r.witness);
        break;
      }
    }
    c.emit(c.qparam(q), verdict);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_p212(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, admissible_subgroups)) {
    SPartitionResult sp = s_partition(c.view, q, c.mode);
    if (!sp.status.ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, sp.status.witness);
      continue;
    }
    c.emit(c.qparam(q) + ";part=1", sp.part1);
    c.emit(c.qparam(q) + ";part=2i", sp.part2i);
    c.emit(c.qparam(q) + ";part=2ii", sp.part2ii);
    c.emit(c.qparam(q) + ";part=2iii", sp.part2iii);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

std::vector<Subset> normal_subgroups(const Ctx& c) {
  std::vector<Subset> out;
  for (Subset q : admissible_subgroups(c))
    if (is_normal_def(c.view, q, c.mode).ok()) out.push_back(q);
  return out;
}

void claim_l32(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, normal_subgroups)) {
    if (params && !is_normal_def(c.view, q, c.mode).ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, "Q-not-normal");
      continue;
    }
    CheckResult verdict = CheckResult::pass();
    for (int id : c.view.globalIdentities())
      if (!q.contains(id)) {
        verdict = CheckResult::fail("id=" + c.t().name(id));
        break;
      }
    c.emit(c.qparam(q), verdict);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_p33(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, admissible_subgroups)) {
    CheckResult sub = is_disguised_subgroup(c.view, q, c.mode);
    if (!sub.ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, "Q-not-subgroup");
      continue;
    }
    CheckResult def = is_normal_def(c.view, q, c.mode);
    CheckResult conj = is_normal_conjugation(c.view, q);
    CheckResult comm = is_normal_commutation(c.view, q, c.mode);
    auto word = [](const CheckResult& r) {
      return r.verdict == Verdict::not_applicable ? std::string("n/a")
             : r.ok()                             ? std::string("yes")
                                                  : std::string("no");
    };
    bool agree = true;
    const CheckResult* first = nullptr;
    for (const CheckResult* r : {&def, &conj, &comm}) {
      if (r->verdict == Verdict::not_applicable) continue;
      if (!first)
        first = r;
      else if (first->ok() != r->ok())
        agree = false;
    }
    std::string detail = "def=" + word(def) + ";conj=" + word(conj) + ";comm=" + word(comm);
    c.emit(c.qparam(q), agree ? Verdict::holds : Verdict::counterexample,
           agree ? "" : detail);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_t34a(const Ctx& c) {
  if (!c.view.report().isCommutative)
    c.emit("", Verdict::not_applicable, "not-abelian");
  else if (c.view.report().isGroup)
    c.emit("", Verdict::holds, "");
  else
    c.emit("", Verdict::counterexample, group_refutation(c.view));
}

void claim_t34b(const Ctx& c) {
  if (!c.view.report().isCyclic)
    c.emit("", Verdict::not_applicable, "not-cyclic");
  else if (c.view.report().isGroup)
    c.emit("", Verdict::holds, "");
  else
    c.emit("", Verdict::counterexample,
           "generator-witness;" + c.view.report().witness("cyclic") + ";" +
               group_refutation(c.view));
}

void claim_t34c(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, normal_subgroups)) {
    CheckResult normal = is_normal_def(c.view, q, c.mode);
    if (!normal.ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable,
             normal.verdict == Verdict::counterexample ? "Q-not-normal" : normal.witness);
      continue;
    }
    if (c.view.report().isGroup)
      c.emit(c.qparam(q), Verdict::holds, "");
    else
      c.emit(c.qparam(q), Verdict::counterexample, group_refutation(c.view));
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void quotient_group_claim(const Ctx& c, Subset q) {
  QuotientResult res = build_quotient(c.view, q, c.mode);
  if (!res.ok()) {
    c.emit(c.qparam(q), Verdict::counterexample, res.violation);
    return;
  }
  if (res.groupReport->isGroup)
    c.emit(c.qparam(q), Verdict::holds, "");
  else
    c.emit(c.qparam(q), Verdict::counterexample,
           "quotient-not-group;" + res.groupReport->witness("group"));
}

void claim_t37(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  std::vector<Subset> qs;
  if (params && params->subset) {
    qs = {*params->subset};
  } else {
    for (Subset q : admissible_subgroups(c))
      if (is_disguised_normal(c.view, q, c.mode).ok()) qs.push_back(q);
  }
  for (Subset q : qs) {
    if (!is_disguised_normal(c.view, q, c.mode).ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, "Q-not-disguised-normal");
      continue;
    }
    quotient_group_claim(c, q);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_c38(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  std::vector<Subset> qs;
  if (params && params->subset) {
    qs = {*params->subset};
  } else {
    for (Subset q : admissible_subgroups(c))
      if (!complement_subgroup_search(c.view, q, c.mode)) qs.push_back(q);
  }
  for (Subset q : qs) {
    if (!is_disguised_subgroup(c.view, q, c.mode).ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, "Q-not-subgroup");
      continue;
    }
    if (auto found = complement_subgroup_search(c.view, q, c.mode)) {
      c.emit(c.qparam(q), Verdict::not_applicable,
             "complement-contains-subgroup;" + subset_to_string(c.t(), *found));
      continue;
    }
    quotient_group_claim(c, q);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_c39(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (Subset q : explicit_or(c, params, normal_subgroups)) {
    RelationQuotient rq = quotient_by_relation(c.view, q);
    if (!rq.status.ok()) {
      c.emit(c.qparam(q), Verdict::not_applicable, rq.status.witness);
      continue;
    }
    if (!rq.equivalence.ok())
      c.emit(c.qparam(q), Verdict::counterexample, "relation;" + rq.equivalence.witness);
    else if (!rq.inducedOpWellDefined)
      c.emit(c.qparam(q), Verdict::counterexample, "box-op;" + rq.violation);
    else if (!rq.partitionsEqual || !rq.tablesEqual)
      c.emit(c.qparam(q), Verdict::counterexample, rq.comparisonWitness);
    else
      c.emit(c.qparam(q), Verdict::holds, "");
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

// ---- morphism-quantified claims ---------------------------------------------

std::vector<std::pair<std::string, Morphism>> admissible_morphisms(const Ctx& c) {
  std::vector<std::pair<std::string, Morphism>> out;
  for (const auto& [name, cod] : codomain_pool(c.view.order()))
    for (auto& h : enumerate_morphisms(c.t(), cod))
      out.emplace_back(name, std::move(h));
  return out;
}

std::vector<std::pair<std::string, Morphism>> morphism_instances(const Ctx& c,
                                                                 const ClaimParams* params) {
  if (params && params->morphism) return {{"given", *params->morphism}};
  return admissible_morphisms(c);
}

std::string hparam(const std::pair<std::string, Morphism>& named) {
  return "cod=" + named.first + ";map=" + morphism_to_string(named.second);
}

void claim_p43(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (const auto& named : morphism_instances(c, params)) {
    MorphismReport rep = check_morphism(named.second);
    if (!rep.isHomomorphism) {
      c.emit(hparam(named), Verdict::not_applicable, "not-a-homomorphism");
      continue;
    }
    c.emit(hparam(named), rep.identityToE);
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_p45(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (const auto& named : morphism_instances(c, params)) {
    MorphismReport rep = check_morphism(named.second);
    if (!rep.isHomomorphism) {
      c.emit(hparam(named), Verdict::not_applicable, "not-a-homomorphism");
      continue;
    }
    if (rep.kernel.empty()) {
      c.emit(hparam(named), Verdict::counterexample, "kernel-empty");
      continue;
    }
    CheckResult sub = is_disguised_subgroup(c.view, rep.kernel, c.mode);
    if (!sub.ok()) {
      c.emit(hparam(named), Verdict::counterexample, "kernel-not-subgroup;" + sub.witness);
      continue;
    }
    CheckResult normal = is_normal_def(c.view, rep.kernel, c.mode);
    c.emit(hparam(named), normal.ok()
                              ? CheckResult::pass()
                              : CheckResult::fail("kernel-not-normal;" + normal.witness));
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_c46(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (const auto& named : morphism_instances(c, params)) {
    MorphismReport rep = check_morphism(named.second);
    if (!rep.isHomomorphism) {
      c.emit(hparam(named), Verdict::not_applicable, "not-a-homomorphism");
      continue;
    }
    if (c.view.report().isGroup)
      c.emit(hparam(named), Verdict::holds, "");
    else
      c.emit(hparam(named), Verdict::counterexample, group_refutation(c.view));
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_p47(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (const auto& named : morphism_instances(c, params)) {
    MorphismReport rep = check_morphism(named.second);
    if (!rep.isHomomorphism) {
      c.emit(hparam(named), Verdict::not_applicable, "not-a-homomorphism");
      continue;
    }
    std::vector<Subset> qs;
    if (params && params->subset)
      qs = {*params->subset};
    else
      qs = admissible_subgroups(c);
    for (Subset q : qs) {
      if (!is_disguised_subgroup(c.view, q, c.mode).ok()) {
        c.emit(hparam(named) + ";" + c.qparam(q), Verdict::not_applicable, "Q-not-subgroup");
        continue;
      }
      TransferReport tr = transfer_subgroup(named.second, q, TransferDirection::forward);
      c.emit(hparam(named) + ";" + c.qparam(q),
             tr.isSubgroup.ok()
                 ? CheckResult::pass()
                 : CheckResult::fail("image-not-subgroup;" + tr.isSubgroup.witness));
    }
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_p48(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  std::vector<std::pair<std::string, CayleyTable>> partners;
  partners.emplace_back("self", c.t());
  for (auto& [name, g2] : codomain_pool(c.view.order())) partners.emplace_back(name, g2);

  for (const auto& [g2name, g2] : partners) {
    auto mediators = codomain_pool(std::max(c.view.order(), g2.order()));
    auto witness = isomorphic_via_group(c.t(), g2, mediators);
    if (!witness) {
      if (params) c.emit("G2=" + g2name, Verdict::not_applicable, "not-isomorphic");
      continue;
    }
    StructureView v2(g2);
    CheckMode mode2 = best_mode(v2);
    if (!v2.report().disguised(mode2)) continue;

    std::vector<Subset> q2s;
    for (Subset q2 : enumerate_disguised_subgroups(v2, mode2, g2.order()))
      if (is_disguised_normal(v2, q2, mode2).ok()) q2s.push_back(q2);

    for (Subset q1 : admissible_subgroups(c)) {
      if (!is_disguised_normal(c.view, q1, c.mode).ok()) continue;
      std::string param = "G2=" + g2name + ";" + c.qparam(q1);
      QuotientResult left = build_quotient(c.view, q1, c.mode);
      if (!left.ok()) {
        c.emit(param, Verdict::counterexample, "left-quotient;" + left.violation);
        continue;
      }
      std::string leftForm = canonical_form(*left.table);
      bool matched = false;
      for (Subset q2 : q2s) {
        QuotientResult right = build_quotient(v2, q2, mode2);
        if (right.ok() && canonical_form(*right.table) == leftForm) {
          matched = true;
          break;
        }
      }
      c.emit(param, matched ? Verdict::holds : Verdict::counterexample,
             matched ? "" : "no-matching-Q2;mediator=" + witness->mediatorName);
    }
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_iso1(const Ctx& c, const ClaimParams* params) {
  size_t emitted = c.out->size();
  for (const auto& named : morphism_instances(c, params)) {
    FirstIsoReport rep = first_isomorphy(named.second);
    if (rep.verdict == Verdict::holds)
      c.emit(hparam(named), Verdict::holds, "");
    else
      c.emit(hparam(named), rep.verdict,
             "stage=" + rep.failedStage + (rep.witness.empty() ? "" : ";" + rep.witness));
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

void claim_iso23(const Ctx& c, const ClaimParams* params, IsoTheorem which) {
  size_t emitted = c.out->size();
  std::vector<std::pair<Subset, Subset>> pairs;
  if (params && params->subset && params->subset2) {
    pairs.emplace_back(*params->subset, *params->subset2);
  } else if (which == IsoTheorem::second) {
    auto normals = normal_subgroups(c);
    for (Subset q1 : normals)
      for (Subset q2 : normals)
        if (q1.subset_of(q2)) pairs.emplace_back(q1, q2);
  } else {
    auto subs = admissible_subgroups(c);
    auto normals = normal_subgroups(c);
    for (Subset q1 : subs)
      for (Subset q2 : normals) pairs.emplace_back(q1, q2);
  }
  for (auto [q1, q2] : pairs) {
    IsoConstructionReport rep = second_third_isomorphy(c.t(), q1, q2, which);
    std::string param = "Q1=" + subset_to_string(c.t(), q1) +
                        ";Q2=" + subset_to_string(c.t(), q2);
    if (rep.verdict == Verdict::holds)
      c.emit(param, Verdict::holds, "");
    else
      c.emit(param, rep.verdict,
             "stage=" + rep.failedStage + (rep.witness.empty() ? "" : ";" + rep.witness));
  }
  if (c.out->size() == emitted)
    c.emit("", Verdict::not_applicable, "no-admissible-parameters");
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() { return kRegistry; }

std::optional<ClaimId> claim_from_token(std::string_view token) {
  for (const auto& info : kRegistry)
    if (token == info.token) return info.id;
  return std::nullopt;
}

const ClaimInfo& claim_info(ClaimId id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return info;
  throw std::logic_error("claim not in registry");
}

std::vector<std::pair<std::string, CayleyTable>> codomain_pool(int maxOrder) {
  std::vector<std::pair<std::string, CayleyTable>> out;
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "S3"}) {
    CayleyTable t = builtin_example(name);
    if (t.order() <= maxOrder) out.emplace_back(name, std::move(t));
  }
  return out;
}

std::vector<AuditFinding> check_claim(ClaimId claim, const CayleyTable& table,
                                      const ClaimParams* params, CheckMode mode) {
  std::vector<int> perm;
  CayleyTable canon = canonicalize(table, &perm);

  // Move explicit parameters into canonical coordinates.
  ClaimParams canon_params;
  if (params) {
    auto remap_subset = [&](Subset s) {
      Subset out;
      for (int i = 0; i < table.order(); ++i)
        if (s.contains(i)) out.add(perm[static_cast<size_t>(i)]);
      return out;
    };
    if (params->subset) canon_params.subset = remap_subset(*params->subset);
    if (params->subset2) canon_params.subset2 = remap_subset(*params->subset2);
    if (params->morphism) {
      std::vector<int> m(params->morphism->map.size());
      for (int g = 0; g < table.order(); ++g)
        m[static_cast<size_t>(perm[static_cast<size_t>(g)])] =
            params->morphism->map[static_cast<size_t>(g)];
      canon_params.morphism = Morphism{canon, params->morphism->codomain, std::move(m)};
    }
    params = &canon_params;
  }

  StructureView view(canon);
  std::vector<AuditFinding> findings;
  Ctx c{claim_info(claim), mode, view, canon.encode(), &findings};

  if (!view.report().disguised(mode)) {
    std::string p;
    if (params && params->subset) p = c.qparam(*params->subset);
    c.emit(p, Verdict::not_applicable,
           std::string("table-not-disguised-") + to_token(mode));
    return findings;
  }

  switch (claim) {
    case ClaimId::LEM24: claim_lem24(c); break;
    case ClaimId::IIR: claim_iir(c); break;
    case ClaimId::P26A: claim_p26a(c); break;
    case ClaimId::P26B: claim_p26b(c); break;
    case ClaimId::P26C: claim_p26c(c); break;
    case ClaimId::P26D: claim_p26d(c); break;
    case ClaimId::P26E: claim_p26e(c); break;
    case ClaimId::P26F: claim_p26f(c); break;
    case ClaimId::P26G: claim_p26g(c); break;
    case ClaimId::R27: claim_r27(c); break;
    case ClaimId::R211: claim_r211(c, params); break;
    case ClaimId::P212: claim_p212(c, params); break;
    case ClaimId::L32: claim_l32(c, params); break;
    case ClaimId::P33: claim_p33(c, params); break;
    case ClaimId::T34A: claim_t34a(c); break;
    case ClaimId::T34B: claim_t34b(c); break;
    case ClaimId::T34C: claim_t34c(c, params); break;
    case ClaimId::T37: claim_t37(c, params); break;
    case ClaimId::C38: claim_c38(c, params); break;
    case ClaimId::C39: claim_c39(c, params); break;
    case ClaimId::P43: claim_p43(c, params); break;
    case ClaimId::P45: claim_p45(c, params); break;
    case ClaimId::C46: claim_c46(c, params); break;
    case ClaimId::P47: claim_p47(c, params); break;
    case ClaimId::P48: claim_p48(c, params); break;
    case ClaimId::ISO1: claim_iso1(c, params); break;
    case ClaimId::ISO2: claim_iso23(c, params, IsoTheorem::second); break;
    case ClaimId::ISO3: claim_iso23(c, params, IsoTheorem::third); break;
  }
  return findings;
}

std::string finding_to_line(const AuditFinding& f) {
  std::string out;
  out += f.claim;
  out += '\t';
  out += to_token(f.mode);
  out += '\t';
  out += f.structure;
  out += '\t';
  out += f.parameters;
  out += '\t';
  out += to_token(f.verdict);
  out += '\t';
  out += f.witness;
  out += '\n';
  return out;
}

std::string findings_to_text(const std::vector<AuditFinding>& findings) {
  std::string out;
  for (const auto& f : findings) out += finding_to_line(f);
  return out;
}

std::string manifest_to_text(const std::map<std::string, std::string>& manifest) {
  std::string out;
  for (const auto& [k, v] : manifest) out += k + "=" + v + "\n";
  return out;
}

AuditResult audit_corpus(const AuditOptions& opts) {
  if (opts.order < 1 || opts.order > 4)
    throw std::invalid_argument("audit supports orders 1..4");
  std::vector<ClaimId> claims = opts.claims;
  if (claims.empty())
    for (const auto& info : kRegistry) claims.push_back(info.id);
  // Normalize to registry order, dropping duplicates.
  std::vector<ClaimId> ordered;
  for (const auto& info : kRegistry)
    if (std::find(claims.begin(), claims.end(), info.id) != claims.end())
      ordered.push_back(info.id);
  claims = ordered;
  bool wants_r27 = std::find(claims.begin(), claims.end(), ClaimId::R27) != claims.end();

  AuditResult result;
  auto& manifest = result.manifest;
  manifest["audit.order"] = std::to_string(opts.order);
  manifest["audit.mode"] = to_token(opts.mode);
  {
    std::string list;
    for (ClaimId id : claims) {
      if (!list.empty()) list += ',';
      list += claim_info(id).token;
    }
    manifest["audit.claims"] = list;
  }

  std::vector<CayleyTable> reps;
  for (int ord = 1; ord <= opts.order; ++ord) {
    std::vector<CayleyTable> tables =
        ord <= 3 ? enumerate_tables_scan(ord, TableClass::all, opts.workers)
                 : enumerate_semigroups_pruned(ord, opts.workers);
    long long n_semi = 0, n_regular = 0, n_inverse = 0, n_literal = 0, n_strict = 0,
              n_group = 0;
    bool dg_eq_regular = true, dg_eq_inverse = true;
    std::set<std::string> classes;
    for (const auto& t : tables) {
      ClassificationReport r = classify(t);
      if (r.isAssociative) ++n_semi;
      if (r.isRegularSemigroup) ++n_regular;
      if (r.isInverseSemigroup) ++n_inverse;
      if (r.isDisguisedLiteral) ++n_literal;
      if (r.isDisguisedStrict) ++n_strict;
      if (r.isGroup) ++n_group;
      bool dg = r.disguised(opts.mode);
      if (dg != r.isRegularSemigroup) dg_eq_regular = false;
      if (dg != r.isInverseSemigroup) dg_eq_inverse = false;
      if (dg) classes.insert(canonical_form(t));
    }
    const std::string prefix = "corpus.order-" + std::to_string(ord) + ".";
    manifest[prefix + "semigroups"] = std::to_string(n_semi);
    manifest[prefix + "regular"] = std::to_string(n_regular);
    manifest[prefix + "inverse"] = std::to_string(n_inverse);
    manifest[prefix + "literal-dg"] = std::to_string(n_literal);
    manifest[prefix + "strict-dg"] = std::to_string(n_strict);
    manifest[prefix + "groups"] = std::to_string(n_group);
    manifest[prefix + "audited-classes"] = std::to_string(classes.size());
    if (wants_r27) {
      const std::string rp = "r27.order-" + std::to_string(ord) + ".";
      manifest[rp + "dg-eq-regular"] = dg_eq_regular ? "yes" : "no";
      manifest[rp + "dg-eq-inverse"] = dg_eq_inverse ? "yes" : "no";
    }
    for (const auto& enc : classes) reps.push_back(table_from_encoding(enc));
  }

  // Claims over the canonical representatives, partitioned by structure.
  std::vector<std::vector<AuditFinding>> per_rep(reps.size());
  auto run_rep = [&](size_t i) {
    for (ClaimId id : claims) {
      auto fs = check_claim(id, reps[i], nullptr, opts.mode);
      per_rep[i].insert(per_rep[i].end(), fs.begin(), fs.end());
    }
  };
  int workers = std::max(1, std::min(opts.workers, 64));
  if (workers == 1 || reps.size() <= 1) {
    for (size_t i = 0; i < reps.size(); ++i) run_rep(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= reps.size()) return;
          run_rep(i);
        }
      });
    for (auto& th : threads) th.join();
  }
  for (auto& chunk : per_rep)
    result.findings.insert(result.findings.end(), chunk.begin(), chunk.end());
  std::sort(result.findings.begin(), result.findings.end(),
            [](const AuditFinding& a, const AuditFinding& b) {
              return std::tie(a.claim, a.structure, a.parameters) <
                     std::tie(b.claim, b.structure, b.parameters);
            });

  for (ClaimId id : claims) {
    const std::string prefix = std::string("claims.") + claim_info(id).token + ".";
    long long holds = 0, cx = 0, na = 0;
    for (const auto& f : result.findings)
      if (f.claim == claim_info(id).token) {
        if (f.verdict == Verdict::holds) ++holds;
        else if (f.verdict == Verdict::counterexample) ++cx;
        else ++na;
      }
    manifest[prefix + "holds"] = std::to_string(holds);
    manifest[prefix + "counterexample"] = std::to_string(cx);
    manifest[prefix + "not-applicable"] = std::to_string(na);
  }
  return result;
}

}  // namespace dglab
