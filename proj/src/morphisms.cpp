#include "dglab/morphisms.hpp"

#include <algorithm>
#include <cmath>

namespace dglab {

namespace {

CheckMode best_mode(const StructureView& view) {
  return view.report().isDisguisedStrict ? CheckMode::strict : CheckMode::literal;
}

int group_identity_index(const CayleyTable& g, const ClassificationReport& r) {
  if (!r.isGroup) throw std::invalid_argument("codomain is not a group");
  const int n = g.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (g.at(e, x) != x || g.at(x, e) != x) ok = false;
    if (ok) return e;
  }
  throw std::logic_error("group without identity");
}

int group_inverse(const CayleyTable& g, int e, int x) {
  for (int y = 0; y < g.order(); ++y)
    if (g.at(x, y) == e && g.at(y, x) == e) return y;
  throw std::logic_error("group element without inverse");
}

bool is_hom_map(const CayleyTable& dom, const CayleyTable& cod, const std::vector<int>& m,
                int* wx = nullptr, int* wy = nullptr) {
  const int n = dom.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m[static_cast<size_t>(dom.at(x, y))] !=
          cod.at(m[static_cast<size_t>(x)], m[static_cast<size_t>(y)])) {
        if (wx) *wx = x;
        if (wy) *wy = y;
        return false;
      }
  return true;
}

}  // namespace

std::string morphism_to_string(const Morphism& h) {
  std::string out;
  for (int g = 0; g < h.domain.order(); ++g) {
    if (g > 0) out += ',';
    out += h.domain.name(g) + "->" + h.codomain.name(h.map[static_cast<size_t>(g)]);
  }
  return out;
}

Morphism morphism_from_string(CayleyTable domain, CayleyTable codomain,
                              std::string_view text) {
  std::vector<int> map(static_cast<size_t>(domain.order()), -1);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = (comma == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (!item.empty()) {
      size_t arrow = item.find("->");
      if (arrow == std::string_view::npos)
        throw std::invalid_argument("expected 'name->name' in map entry '" +
                                    std::string(item) + "'");
      int g = domain.index_of(item.substr(0, arrow));
      int v = codomain.index_of(item.substr(arrow + 2));
      if (g < 0)
        throw std::invalid_argument("unknown domain element in '" + std::string(item) + "'");
      if (v < 0)
        throw std::invalid_argument("unknown codomain element in '" + std::string(item) + "'");
      if (map[static_cast<size_t>(g)] >= 0)
        throw std::invalid_argument("duplicate map entry for '" +
                                    std::string(domain.name(g)) + "'");
      map[static_cast<size_t>(g)] = v;
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (int g = 0; g < domain.order(); ++g)
    if (map[static_cast<size_t>(g)] < 0)
      throw std::invalid_argument("map is missing element '" + domain.name(g) + "'");
  return Morphism{std::move(domain), std::move(codomain), std::move(map)};
}

MorphismReport check_morphism(const Morphism& h) {
  if (h.map.size() != static_cast<size_t>(h.domain.order()))
    throw std::invalid_argument("map length must equal domain order");
  for (int v : h.map)
    if (v < 0 || v >= h.codomain.order())
      throw std::invalid_argument("map entry out of codomain range");
  auto cod_report = classify(h.codomain);
  const int e = group_identity_index(h.codomain, cod_report);

  MorphismReport rep;
  int wx = -1, wy = -1;
  rep.isHomomorphism = is_hom_map(h.domain, h.codomain, h.map, &wx, &wy);
  if (!rep.isHomomorphism)
    rep.homWitness = "x=" + h.domain.name(wx) + ";y=" + h.domain.name(wy);

  for (int g = 0; g < h.domain.order(); ++g)
    if (h.map[static_cast<size_t>(g)] == e) rep.kernel.add(g);
  for (int v : h.map) rep.image.add(v);

  rep.isSurjective = rep.image == Subset::full(h.codomain.order());
  if (!rep.isSurjective) {
    Subset missing = Subset::complement(rep.image, h.codomain.order());
    rep.surWitness = "missing=" + h.codomain.name(missing.members(h.codomain.order()).front());
  }

  rep.isDisguisedInjective = true;
  for (int x = 0; x < h.domain.order() && rep.isDisguisedInjective; ++x)
    for (int y = x + 1; y < h.domain.order(); ++y) {
      if (rep.kernel.contains(x) || rep.kernel.contains(y)) continue;
      if (h.map[static_cast<size_t>(x)] == h.map[static_cast<size_t>(y)]) {
        rep.isDisguisedInjective = false;
        rep.injWitness = "x=" + h.domain.name(x) + ";y=" + h.domain.name(y);
        break;
      }
    }

  rep.identityToE = CheckResult::pass();
  for (int id : global_identities(h.domain))
    if (h.map[static_cast<size_t>(id)] != e) {
      rep.identityToE = CheckResult::fail("id=" + h.domain.name(id) + ";h(id)=" +
                                          h.codomain.name(h.map[static_cast<size_t>(id)]));
      break;
    }

  StructureView dom_view(h.domain);
  if (dom_view.report().isDisguisedStrict) {
    rep.inverseCompat = CheckResult::pass();
    for (int g = 0; g < h.domain.order(); ++g) {
      int lhs = group_inverse(h.codomain, e, h.map[static_cast<size_t>(g)]);
      int rhs = h.map[static_cast<size_t>(dom_view.uniqueInverse(g))];
      if (lhs != rhs) {
        rep.inverseCompat = CheckResult::fail("g=" + h.domain.name(g));
        break;
      }
    }
  } else {
    rep.inverseCompat = CheckResult::na("domain is not disguised-strict");
  }
  return rep;
}

std::vector<Morphism> enumerate_morphisms(const CayleyTable& domain,
                                          const CayleyTable& codomain, long long budget) {
  auto cod_report = classify(codomain);
  if (!cod_report.isGroup) throw std::invalid_argument("codomain is not a group");
  const int n = domain.order();
  const int m = codomain.order();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > budget)
      throw BudgetError("morphism search space " + std::to_string(m) + "^" +
                        std::to_string(n) + " exceeds budget " + std::to_string(budget));
  }
  std::vector<Morphism> out;
  std::vector<int> map(static_cast<size_t>(n), 0);
  for (;;) {
    if (is_hom_map(domain, codomain, map)) out.push_back(Morphism{domain, codomain, map});
    int i = n - 1;
    while (i >= 0 && map[static_cast<size_t>(i)] == m - 1) map[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++map[static_cast<size_t>(i)];
  }
  return out;
}

TransferReport transfer_subgroup(const Morphism& h, Subset q, TransferDirection dir) {
  MorphismReport hrep = check_morphism(h);
  if (!hrep.isHomomorphism)
    throw std::invalid_argument("map is not a homomorphism (" + hrep.homWitness + ")");
  TransferReport out;
  StructureView dom_view(h.domain);
  StructureView cod_view(h.codomain);

  if (dir == TransferDirection::forward) {
    for (int g : q.members(h.domain.order())) out.result.add(h.map[static_cast<size_t>(g)]);
    out.isSubgroup = is_disguised_subgroup(cod_view, out.result, CheckMode::strict);
    CheckResult q_normal = is_normal_def(dom_view, q, best_mode(dom_view));
    if (!q_normal.ok())
      out.normality = CheckResult::na("Q is not normal in the domain");
    else if (!hrep.isSurjective)
      out.normality = CheckResult::na("h is not surjective");
    else
      out.normality = is_normal_def(cod_view, out.result, CheckMode::strict);
  } else {
    for (int g = 0; g < h.domain.order(); ++g)
      if (q.contains(h.map[static_cast<size_t>(g)])) out.result.add(g);
    if (out.result.empty()) {
      out.isSubgroup = CheckResult::fail("preimage-empty");
      out.normality = CheckResult::na("preimage is empty");
      return out;
    }
    out.isSubgroup = is_disguised_subgroup(dom_view, out.result, best_mode(dom_view));
    CheckResult q_normal = is_normal_def(cod_view, q, CheckMode::strict);
    if (!q_normal.ok())
      out.normality = CheckResult::na("Q is not normal in the codomain");
    else
      out.normality = is_normal_def(dom_view, out.result, best_mode(dom_view));
  }
  return out;
}

FirstIsoReport first_isomorphy(const Morphism& h) {
  FirstIsoReport res;
  MorphismReport hrep = check_morphism(h);
  if (!hrep.isHomomorphism) {
    res.verdict = Verdict::not_applicable;
    res.failedStage = "homomorphism";
    res.witness = hrep.homWitness;
    return res;
  }
  if (hrep.kernel.empty()) {
    res.verdict = Verdict::not_applicable;
    res.failedStage = "kernel-empty";
    return res;
  }
  StructureView dom_view(h.domain);
  res.quotient = build_quotient(dom_view, hrep.kernel, best_mode(dom_view));
  if (!res.quotient.partition.status.ok()) {
    res.verdict = Verdict::not_applicable;
    res.failedStage = "kernel-subgroup";
    res.witness = res.quotient.partition.status.witness;
    return res;
  }
  if (!res.quotient.ok()) {
    res.verdict = Verdict::counterexample;
    res.failedStage = "quotient";
    res.witness = res.quotient.violation;
    return res;
  }

  const auto& part = res.quotient.partition;
  for (const auto& block : part.blocks) {
    for (int x : block)
      if (h.map[static_cast<size_t>(x)] != h.map[static_cast<size_t>(block.front())]) {
        res.verdict = Verdict::counterexample;
        res.failedStage = "representative-independence";
        res.witness = "x=" + h.domain.name(block.front()) + ";y=" + h.domain.name(x);
        return res;
      }
  }

  auto img_members = hrep.image.members(h.codomain.order());
  Subset closed = generated_closure(h.codomain, hrep.image);
  if (!(closed == hrep.image)) {
    res.verdict = Verdict::counterexample;
    res.failedStage = "image-closed";
    return res;
  }
  res.imageTable = induced_table(h.codomain, hrep.image);

  for (size_t i = 0; i < part.blocks.size(); ++i) {
    int v = h.map[static_cast<size_t>(part.blocks[i].front())];
    int idx = static_cast<int>(std::find(img_members.begin(), img_members.end(), v) -
                               img_members.begin());
    res.blockImage.push_back(idx);
  }

  const auto& qt = *res.quotient.table;
  const auto& it = *res.imageTable;
  for (int i = 0; i < qt.order(); ++i)
    for (int j = 0; j < qt.order(); ++j) {
      int lhs = res.blockImage[static_cast<size_t>(qt.at(i, j))];
      int rhs = it.at(res.blockImage[static_cast<size_t>(i)],
                      res.blockImage[static_cast<size_t>(j)]);
      if (lhs != rhs) {
        res.verdict = Verdict::counterexample;
        res.failedStage = "homomorphism";
        res.witness = "[" + h.domain.name(part.representatives[static_cast<size_t>(i)]) +
                      "];[" + h.domain.name(part.representatives[static_cast<size_t>(j)]) + "]";
        return res;
      }
    }

  std::vector<bool> hit(static_cast<size_t>(it.order()), false);
  for (int v : res.blockImage) {
    if (hit[static_cast<size_t>(v)]) {
      res.verdict = Verdict::counterexample;
      res.failedStage = "injective";
      return res;
    }
    hit[static_cast<size_t>(v)] = true;
  }
  if (qt.order() != it.order()) {
    res.verdict = Verdict::counterexample;
    res.failedStage = "surjective";
    return res;
  }
  res.verdict = Verdict::holds;
  return res;
}

namespace {

// Maps a subset of parent-table indices into sub-table indices.
Subset remap_into(const std::vector<int>& members, Subset parent) {
  Subset out;
  for (size_t i = 0; i < members.size(); ++i)
    if (parent.contains(members[i])) out.add(static_cast<int>(i));
  return out;
}

struct StageRecorder {
  IsoConstructionReport& rep;
  // Records a stage; hypothesis failures map to not-applicable, construction
  // failures to counterexample.  Returns true when the stage passed.
  bool require(const std::string& stage, const CheckResult& r, bool hypothesis) {
    rep.stages.emplace_back(stage, r);
    if (r.ok()) return true;
    rep.verdict = hypothesis ? Verdict::not_applicable : Verdict::counterexample;
    rep.failedStage = stage;
    rep.witness = r.witness;
    return false;
  }
};

// Verifies that mapping each left-table block through `target_block` is a
// well-defined bijective homomorphism onto the right table.
bool verify_canonical_map(const CayleyTable& left, const CayleyTable& right,
                          const std::vector<int>& target_block, StageRecorder& rec) {
  if (left.order() != right.order())
    return rec.require("iso:size",
                       CheckResult::fail("left=" + std::to_string(left.order()) +
                                         ";right=" + std::to_string(right.order())),
                       false);
  std::vector<bool> hit(static_cast<size_t>(right.order()), false);
  for (int v : target_block) {
    if (v < 0 || hit[static_cast<size_t>(v)])
      return rec.require("iso:bijective", CheckResult::fail("collision"), false);
    hit[static_cast<size_t>(v)] = true;
  }
  for (int i = 0; i < left.order(); ++i)
    for (int j = 0; j < left.order(); ++j) {
      int lhs = target_block[static_cast<size_t>(left.at(i, j))];
      int rhs = right.at(target_block[static_cast<size_t>(i)],
                         target_block[static_cast<size_t>(j)]);
      if (lhs != rhs)
        return rec.require("iso:homomorphism",
                           CheckResult::fail("i=" + left.name(i) + ";j=" + left.name(j)),
                           false);
    }
  return rec.require("iso:verified", CheckResult::pass(), false);
}

}  // namespace

IsoConstructionReport second_third_isomorphy(const CayleyTable& g, Subset q1, Subset q2,
                                             IsoTheorem which) {
  IsoConstructionReport rep;
  StageRecorder rec{rep};
  StructureView view(g);
  if (!rec.require("hypothesis:G-group",
                   view.report().isGroup ? CheckResult::pass()
                                         : CheckResult::fail(view.report().witness("group")),
                   true))
    return rep;

  if (which == IsoTheorem::second) {
    // Inner subgroup is the smaller of the two (the statement's indices are
    // taken nesting-first).
    Subset n1 = q1, n2 = q2;
    if (n2.subset_of(n1)) std::swap(n1, n2);
    if (!rec.require("hypothesis:nested",
                     n1.subset_of(n2) ? CheckResult::pass()
                                      : CheckResult::fail("neither subset contains the other"),
                     true))
      return rep;
    if (!rec.require("hypothesis:N1-normal", is_normal_def(view, n1, CheckMode::strict), true))
      return rep;
    if (!rec.require("hypothesis:N2-normal", is_normal_def(view, n2, CheckMode::strict), true))
      return rep;

    QuotientResult gn1 = build_quotient(view, n1, CheckMode::strict);
    if (!rec.require("construct:G/N1",
                     gn1.ok() ? CheckResult::pass() : CheckResult::fail(gn1.violation), false))
      return rep;

    Subset s2;  // blocks of G/N1 that make up N2
    Subset unioned;
    for (size_t b = 0; b < gn1.partition.blocks.size(); ++b) {
      bool meets = false;
      for (int x : gn1.partition.blocks[b])
        if (n2.contains(x)) meets = true;
      if (meets) {
        s2.add(static_cast<int>(b));
        for (int x : gn1.partition.blocks[b]) unioned.add(x);
      }
    }
    if (!rec.require("construct:N2-block-union",
                     unioned == n2 ? CheckResult::pass()
                                   : CheckResult::fail("N2 is not a union of N1-cosets"),
                     false))
      return rep;

    StructureView qview(*gn1.table);
    if (!rec.require("construct:N2/N1-subgroup",
                     is_disguised_subgroup(qview, s2, CheckMode::strict), false))
      return rep;
    if (!rec.require("construct:N2/N1-normal", is_normal_def(qview, s2, CheckMode::strict),
                     false))
      return rep;

    QuotientResult nested = build_quotient(qview, s2, CheckMode::strict);
    if (!rec.require("construct:(G/N1)/(N2/N1)",
                     nested.ok() ? CheckResult::pass() : CheckResult::fail(nested.violation),
                     false))
      return rep;
    QuotientResult gn2 = build_quotient(view, n2, CheckMode::strict);
    if (!rec.require("construct:G/N2",
                     gn2.ok() ? CheckResult::pass() : CheckResult::fail(gn2.violation), false))
      return rep;
    rep.leftTable = nested.table;
    rep.rightTable = gn2.table;

    // Nested block -> block of G/N2 through any contained G-element.
    std::vector<int> target;
    for (size_t bb = 0; bb < nested.partition.blocks.size(); ++bb) {
      int tgt = -1;
      bool consistent = true;
      for (int inner : nested.partition.blocks[bb])
        for (int x : gn1.partition.blocks[static_cast<size_t>(inner)]) {
          int b2 = gn2.partition.blockOf[static_cast<size_t>(x)];
          if (tgt < 0) tgt = b2;
          if (b2 != tgt) consistent = false;
        }
      if (!consistent)
        return (void)rec.require("iso:representative-independence",
                                 CheckResult::fail("block " + std::to_string(bb)), false),
               rep;
      target.push_back(tgt);
    }
    if (!verify_canonical_map(*nested.table, *gn2.table, target, rec)) return rep;
    rep.verdict = Verdict::holds;
    return rep;
  }

  // Third: (Q1*Q2)/Q2 vs Q1/(Q1 cap Q2), Q2 normal in G.
  if (!rec.require("hypothesis:Q1-subgroup", is_disguised_subgroup(view, q1, CheckMode::strict),
                   true))
    return rep;
  if (!rec.require("hypothesis:Q2-normal", is_normal_def(view, q2, CheckMode::strict), true))
    return rep;

  Subset p = setwise_product(g, q1, q2);
  if (!rec.require("construct:Q1*Q2-subgroup", is_disguised_subgroup(view, p, CheckMode::strict),
                   false))
    return rep;
  auto p_members = p.members(g.order());
  StructureView pview(induced_table(g, p));
  Subset q2_in_p = remap_into(p_members, q2);
  if (!rec.require("construct:Q2-normal-in-Q1Q2", is_normal_def(pview, q2_in_p, CheckMode::strict),
                   false))
    return rep;
  QuotientResult left = build_quotient(pview, q2_in_p, CheckMode::strict);
  if (!rec.require("construct:(Q1*Q2)/Q2",
                   left.ok() ? CheckResult::pass() : CheckResult::fail(left.violation), false))
    return rep;

  Subset inter{q1.bits & q2.bits};
  if (!rec.require("construct:intersection-nonempty",
                   inter.empty() ? CheckResult::fail("empty") : CheckResult::pass(), false))
    return rep;
  auto q1_members = q1.members(g.order());
  StructureView q1view(induced_table(g, q1));
  Subset inter_in_q1 = remap_into(q1_members, inter);
  if (!rec.require("construct:Q1capQ2-normal-in-Q1",
                   is_normal_def(q1view, inter_in_q1, CheckMode::strict), false))
    return rep;
  QuotientResult right = build_quotient(q1view, inter_in_q1, CheckMode::strict);
  if (!rec.require("construct:Q1/(Q1capQ2)",
                   right.ok() ? CheckResult::pass() : CheckResult::fail(right.violation), false))
    return rep;
  rep.leftTable = right.table;   // Q1/(Q1 cap Q2)
  rep.rightTable = left.table;   // (Q1*Q2)/Q2

  // Q1-block -> (Q1*Q2)/Q2 block through any member, within P's index space.
  std::vector<int> pos_in_p(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < p_members.size(); ++i)
    pos_in_p[static_cast<size_t>(p_members[i])] = static_cast<int>(i);
  std::vector<int> target;
  for (size_t bb = 0; bb < right.partition.blocks.size(); ++bb) {
    int tgt = -1;
    bool consistent = true;
    for (int xq : right.partition.blocks[bb]) {
      int gx = q1_members[static_cast<size_t>(xq)];
      int px = pos_in_p[static_cast<size_t>(gx)];
      if (px < 0) {
        consistent = false;
        break;
      }
      int b2 = left.partition.blockOf[static_cast<size_t>(px)];
      if (tgt < 0) tgt = b2;
      if (b2 != tgt) consistent = false;
    }
    if (!consistent)
      return (void)rec.require("iso:representative-independence",
                               CheckResult::fail("block " + std::to_string(bb)), false),
             rep;
    target.push_back(tgt);
  }
  if (!verify_canonical_map(*right.table, *left.table, target, rec)) return rep;
  rep.verdict = Verdict::holds;
  return rep;
}

std::optional<IsoWitness> isomorphic_via_group(
    const CayleyTable& g, const CayleyTable& g2,
    const std::vector<std::pair<std::string, CayleyTable>>& mediators, long long budget) {
  for (const auto& [name, med] : mediators) {
    auto med_report = classify(med);
    if (!med_report.isGroup)
      throw std::invalid_argument("mediator '" + name + "' is not a group");
    const int e = group_identity_index(med, med_report);

    auto find_iso = [&](const CayleyTable& dom) -> std::optional<Morphism> {
      for (auto& h : enumerate_morphisms(dom, med, budget)) {
        Subset kernel, image;
        for (int x = 0; x < dom.order(); ++x) {
          if (h.map[static_cast<size_t>(x)] == e) kernel.add(x);
          image.add(h.map[static_cast<size_t>(x)]);
        }
        if (!(image == Subset::full(med.order()))) continue;
        bool injective = true;
        for (int x = 0; x < dom.order() && injective; ++x)
          for (int y = x + 1; y < dom.order(); ++y) {
            if (kernel.contains(x) || kernel.contains(y)) continue;
            if (h.map[static_cast<size_t>(x)] == h.map[static_cast<size_t>(y)]) {
              injective = false;
              break;
            }
          }
        if (injective) return h;
      }
      return std::nullopt;
    };

    auto left = find_iso(g);
    if (!left) continue;
    auto right = find_iso(g2);
    if (!right) continue;
    return IsoWitness{name, med, std::move(*left), std::move(*right)};
  }
  return std::nullopt;
}

}  // namespace dglab
