#include "dglab/normality.hpp"

#include <algorithm>
#include <map>

namespace dglab {

CheckResult is_normal_def(const StructureView& view, Subset q, CheckMode mode) {
  CheckResult sub = is_disguised_subgroup(view, q, mode);
  if (!sub.ok())
    return CheckResult::na("Q is not a disguised-subgroup: " + sub.witness);
  const auto& t = view.table();
  const int n = t.order();
  auto members = q.members(n);
  for (int g1 = 0; g1 < n; ++g1)
    for (int q1 : members)
      for (int g2 = 0; g2 < n; ++g2)
        for (int q2 : members) {
          int lhs = t.at(t.at(g1, q1), t.at(g2, q2));
          bool found = false;
          for (int q3 : members)
            if (t.at(q3, t.at(g1, g2)) == lhs) {
              found = true;
              break;
            }
          if (!found)
            return CheckResult::fail("g1=" + t.name(g1) + ";q1=" + t.name(q1) +
                                     ";g2=" + t.name(g2) + ";q2=" + t.name(q2));
        }
  return CheckResult::pass();
}

CheckResult is_normal_conjugation(const StructureView& view, Subset q) {
  if (!view.report().isDisguisedStrict)
    return CheckResult::na("table is not disguised-strict");
  CheckResult sub = is_disguised_subgroup(view, q, CheckMode::strict);
  if (!sub.ok())
    return CheckResult::na("Q is not a disguised-subgroup: " + sub.witness);
  const auto& t = view.table();
  const int n = t.order();
  for (int g = 0; g < n; ++g) {
    int ginv = view.uniqueInverse(g);
    for (int qe : q.members(n)) {
      int conj = t.at(t.at(g, qe), ginv);
      if (!q.contains(conj))
        return CheckResult::fail("g=" + t.name(g) + ";q=" + t.name(qe) +
                                 ";conjugate=" + t.name(conj));
    }
  }
  return CheckResult::pass();
}

CheckResult is_normal_commutation(const StructureView& view, Subset q, CheckMode mode) {
  CheckResult sub = is_disguised_subgroup(view, q, mode);
  if (!sub.ok())
    return CheckResult::na("Q is not a disguised-subgroup: " + sub.witness);
  const auto& t = view.table();
  const int n = t.order();
  auto members = q.members(n);
  // One q2 must serve every g (the quantifier order matters).
  for (int q1 : members) {
    bool found = false;
    for (int q2 : members) {
      bool all = true;
      for (int g = 0; g < n && all; ++g)
        if (t.at(g, q1) != t.at(q2, g)) all = false;
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) return CheckResult::fail("clause=left;q1=" + t.name(q1));
  }
  for (int q2 : members) {
    bool found = false;
    for (int q1 : members) {
      bool all = true;
      for (int g = 0; g < n && all; ++g)
        if (t.at(q2, g) != t.at(g, q1)) all = false;
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) return CheckResult::fail("clause=right;q2=" + t.name(q2));
  }
  return CheckResult::pass();
}

CheckResult is_disguised_normal(const StructureView& view, Subset q, CheckMode mode) {
  CheckResult sub = is_disguised_subgroup(view, q, mode);
  if (!sub.ok())
    return CheckResult::na("Q is not a disguised-subgroup: " + sub.witness);
  for (int id : view.globalIdentities())
    if (!q.contains(id))
      return CheckResult::fail("id=" + view.table().name(id));
  return CheckResult::pass();
}

std::optional<Subset> complement_subgroup_search(const StructureView& view, Subset q,
                                                 CheckMode mode) {
  const int n = view.order();
  Subset comp = Subset::complement(q, n);
  if (!view.report().disguised(mode)) return std::nullopt;
  for (std::uint64_t bits = 1; bits <= comp.bits; ++bits) {
    Subset s{bits};
    if (!s.subset_of(comp)) continue;
    if (is_disguised_subgroup(view, s, mode).ok()) return s;
  }
  return std::nullopt;
}

CosetPartition cosets(const StructureView& view, Subset q, CheckMode mode) {
  CosetPartition part;
  part.subgroup = q;
  part.status = is_disguised_subgroup(view, q, mode);
  if (part.status.verdict == Verdict::counterexample)
    part.status = CheckResult::na("Q is not a disguised-subgroup: " + part.status.witness);
  if (!part.status.ok()) return part;

  const auto& t = view.table();
  const int n = t.order();
  std::vector<Subset> coset_of(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) {
    Subset c;
    for (int qe : q.members(n)) c.add(t.at(g, qe));
    coset_of[static_cast<size_t>(g)] = c;
  }
  std::vector<Subset> distinct;
  for (int g = 0; g < n; ++g)
    if (std::find(distinct.begin(), distinct.end(), coset_of[static_cast<size_t>(g)]) ==
        distinct.end())
      distinct.push_back(coset_of[static_cast<size_t>(g)]);
  std::sort(distinct.begin(), distinct.end(),
            [&](Subset a, Subset b) { return a.members(n).front() < b.members(n).front(); });

  part.wellDefined = true;
  Subset covered;
  for (size_t i = 0; i < distinct.size() && part.wellDefined; ++i) {
    if ((covered.bits & distinct[i].bits) != 0) {
      part.wellDefined = false;
      for (size_t j = 0; j < i; ++j)
        if ((distinct[j].bits & distinct[i].bits) != 0) {
          part.violation = "overlap;[" + t.name(distinct[j].members(n).front()) + "];[" +
                           t.name(distinct[i].members(n).front()) + "]";
          break;
        }
    }
    covered.bits |= distinct[i].bits;
  }
  if (part.wellDefined && !(covered == Subset::full(n))) {
    part.wellDefined = false;
    Subset missing = Subset::complement(covered, n);
    part.violation = "uncovered;g=" + t.name(missing.members(n).front());
  }

  part.blockOf.assign(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < distinct.size(); ++i) {
    auto mem = distinct[i].members(n);
    part.blocks.push_back(mem);
    part.representatives.push_back(mem.front());
    if (part.wellDefined)
      for (int x : mem) part.blockOf[static_cast<size_t>(x)] = static_cast<int>(i);
  }
  return part;
}

QuotientResult build_quotient(const StructureView& view, Subset q, CheckMode mode) {
  QuotientResult res;
  res.partition = cosets(view, q, mode);
  if (!res.partition.status.ok()) return res;
  if (!res.partition.wellDefined) {
    res.violation = "cosets;" + res.partition.violation;
    return res;
  }
  const auto& t = view.table();
  const int n = t.order();
  const int m = static_cast<int>(res.partition.blocks.size());
  std::vector<int> products(static_cast<size_t>(m) * m, -1);
  res.inducedOpWellDefined = true;
  for (int bi = 0; bi < m && res.inducedOpWellDefined; ++bi)
    for (int bj = 0; bj < m && res.inducedOpWellDefined; ++bj) {
      int target = -1;
      for (int x : res.partition.blocks[static_cast<size_t>(bi)]) {
        for (int y : res.partition.blocks[static_cast<size_t>(bj)]) {
          int b = res.partition.blockOf[static_cast<size_t>(t.at(x, y))];
          if (target < 0) target = b;
          if (b != target) {
            res.inducedOpWellDefined = false;
            res.violation = "op;x=" + t.name(x) + ";y=" + t.name(y) + ";[" +
                            t.name(res.partition.representatives[static_cast<size_t>(bi)]) +
                            "]*[" +
                            t.name(res.partition.representatives[static_cast<size_t>(bj)]) +
                            "]";
            break;
          }
        }
        if (!res.inducedOpWellDefined) break;
      }
      products[static_cast<size_t>(bi) * m + bj] = target;
    }
  if (!res.inducedOpWellDefined) return res;

  std::vector<std::string> names;
  for (int rep : res.partition.representatives) names.push_back("[" + t.name(rep) + "]");
  res.table = CayleyTable(std::move(names), std::move(products));
  res.groupReport = classify(*res.table);
  return res;
}

RelationQuotient quotient_by_relation(const StructureView& view, Subset q) {
  RelationQuotient res;
  if (!view.report().isDisguisedStrict) {
    res.status = CheckResult::na("table is not disguised-strict");
    return res;
  }
  CheckResult normal = is_normal_def(view, q, CheckMode::strict);
  if (!normal.ok()) {
    res.status = CheckResult::na(normal.verdict == Verdict::counterexample
                                     ? "Q is not normal: " + normal.witness
                                     : normal.witness);
    return res;
  }
  res.status = CheckResult::pass();

  const auto& t = view.table();
  const int n = t.order();
  auto related = [&](int a, int b) { return q.contains(t.at(a, view.uniqueInverse(b))); };

  res.equivalence = CheckResult::pass();
  for (int a = 0; a < n && res.equivalence.ok(); ++a)
    if (!related(a, a))
      res.equivalence = CheckResult::fail("reflexive;g=" + t.name(a));
  for (int a = 0; a < n && res.equivalence.ok(); ++a)
    for (int b = 0; b < n; ++b)
      if (related(a, b) != related(b, a)) {
        res.equivalence =
            CheckResult::fail("symmetric;g1=" + t.name(a) + ";g2=" + t.name(b));
        break;
      }
  for (int a = 0; a < n && res.equivalence.ok(); ++a)
    for (int b = 0; b < n && res.equivalence.ok(); ++b)
      for (int c = 0; c < n; ++c)
        if (related(a, b) && related(b, c) && !related(a, c)) {
          res.equivalence = CheckResult::fail("transitive;g1=" + t.name(a) + ";g2=" +
                                              t.name(b) + ";g3=" + t.name(c));
          break;
        }
  if (!res.equivalence.ok()) return res;

  std::vector<int> class_of(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (class_of[static_cast<size_t>(a)] >= 0) continue;
    int id = static_cast<int>(res.classes.size());
    std::vector<int> cls;
    for (int b = a; b < n; ++b)
      if (related(a, b)) {
        class_of[static_cast<size_t>(b)] = id;
        cls.push_back(b);
      }
    res.classes.push_back(std::move(cls));
  }

  const int m = static_cast<int>(res.classes.size());
  std::vector<int> products(static_cast<size_t>(m) * m, -1);
  res.inducedOpWellDefined = true;
  for (int bi = 0; bi < m && res.inducedOpWellDefined; ++bi)
    for (int bj = 0; bj < m && res.inducedOpWellDefined; ++bj) {
      int target = -1;
      for (int x : res.classes[static_cast<size_t>(bi)]) {
        for (int y : res.classes[static_cast<size_t>(bj)]) {
          int b = class_of[static_cast<size_t>(t.at(x, y))];
          if (target < 0) target = b;
          if (b != target) {
            res.inducedOpWellDefined = false;
            res.violation = "op;x=" + t.name(x) + ";y=" + t.name(y);
            break;
          }
        }
        if (!res.inducedOpWellDefined) break;
      }
      products[static_cast<size_t>(bi) * m + bj] = target;
    }
  if (res.inducedOpWellDefined) {
    std::vector<std::string> names;
    for (const auto& cls : res.classes) names.push_back("[" + t.name(cls.front()) + "]");
    res.table = CayleyTable(std::move(names), std::move(products));
  }

  QuotientResult viaCosets = build_quotient(view, q, CheckMode::strict);
  res.partitionsEqual = viaCosets.partition.wellDefined &&
                        viaCosets.partition.blocks == res.classes;
  if (!res.partitionsEqual) {
    res.comparisonWitness = "partitions-differ";
  } else if (viaCosets.table && res.table) {
    res.tablesEqual = viaCosets.table->products() == res.table->products();
    if (!res.tablesEqual) res.comparisonWitness = "tables-differ";
  } else {
    res.comparisonWitness = "induced-table-missing";
  }
  return res;
}

CayleyTable induced_table(const CayleyTable& table, Subset s) {
  auto members = s.members(table.order());
  if (members.empty()) throw std::invalid_argument("subset must be non-empty");
  std::vector<int> pos(static_cast<size_t>(table.order()), -1);
  for (size_t i = 0; i < members.size(); ++i)
    pos[static_cast<size_t>(members[i])] = static_cast<int>(i);
  std::vector<std::string> names;
  for (int x : members) names.push_back(table.name(x));
  const int m = static_cast<int>(members.size());
  std::vector<int> products(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = table.at(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(p)] < 0)
        throw std::invalid_argument("subset is not closed under the operation");
      products[static_cast<size_t>(i) * m + j] = pos[static_cast<size_t>(p)];
    }
  return CayleyTable(std::move(names), std::move(products));
}

}  // namespace dglab
