#include "dglab/subsets.hpp"

#include <algorithm>
#include <sstream>

namespace dglab {

std::vector<int> Subset::members(int order) const {
  std::vector<int> out;
  for (int i = 0; i < order; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

StructureView::StructureView(CayleyTable table)
    : table_(std::move(table)),
      profiles_(all_profiles(table_)),
      report_(classify(table_)),
      global_identities_(global_identities(table_)) {}

Subset StructureView::identitySet() const {
  Subset s;
  for (int x : global_identities_) s.add(x);
  return s;
}

std::string subset_to_string(const CayleyTable& table, Subset s) {
  std::string out = "[";
  bool first = true;
  for (int i : s.members(table.order())) {
    if (!first) out += ' ';
    out += table.name(i);
    first = false;
  }
  out += ']';
  return out;
}

Subset subset_from_csv(const CayleyTable& table, std::string_view csv) {
  Subset s;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view item = (comma == std::string_view::npos)
                                ? csv.substr(pos)
                                : csv.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (!item.empty()) {
      int idx = table.index_of(item);
      if (idx < 0)
        throw std::invalid_argument("unknown element '" + std::string(item) + "'");
      s.add(idx);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

CheckResult is_disguised_subgroup(const StructureView& view, Subset q, CheckMode mode) {
  const auto& t = view.table();
  if (q.empty()) throw std::invalid_argument("subset must be non-empty");
  if (!view.report().disguised(mode))
    return CheckResult::na(std::string("table is not disguised-") + to_token(mode));
  auto members = q.members(t.order());
  for (int a : members)
    for (int b : members)
      if (!q.contains(t.at(a, b)))
        return CheckResult::fail("closure;q1=" + t.name(a) + ";q2=" + t.name(b) +
                                 ";product=" + t.name(t.at(a, b)));
  for (int g : members) {
    const auto& p = view.profile(g);
    for (int id : p.identities)
      if (!q.contains(id))
        return CheckResult::fail("identity;g=" + t.name(g) + ";id=" + t.name(id));
    for (int h : p.def21Inverses)
      if (!q.contains(h))
        return CheckResult::fail("inverse;g=" + t.name(g) + ";h=" + t.name(h));
  }
  return CheckResult::pass();
}

CheckResult subgroup_criterion(const StructureView& view, Subset q) {
  const auto& t = view.table();
  if (q.empty()) throw std::invalid_argument("subset must be non-empty");
  if (!view.report().isDisguisedStrict)
    return CheckResult::na("table is not disguised-strict");
  auto members = q.members(t.order());
  for (int a : members)
    for (int b : members) {
      int prod = t.at(a, view.uniqueInverse(b));
      if (!q.contains(prod))
        return CheckResult::fail("q1=" + t.name(a) + ";q2=" + t.name(b) +
                                 ";q1*inv=" + t.name(prod));
    }
  return CheckResult::pass();
}

std::vector<Subset> enumerate_disguised_subgroups(const StructureView& view,
                                                  CheckMode mode, int maxSize) {
  const int n = view.order();
  if (maxSize > n) throw std::invalid_argument("maxSize exceeds table order");
  std::vector<Subset> out;
  const std::uint64_t limit = Subset::full(n).bits;
  for (std::uint64_t bits = 1; bits <= limit; ++bits) {
    Subset s{bits};
    if (s.size() > maxSize) continue;
    if (is_disguised_subgroup(view, s, mode).ok()) out.push_back(s);
  }
  return out;
}

Subset generated_closure(const CayleyTable& table, Subset seed) {
  Subset cur = seed;
  for (;;) {
    Subset next = cur;
    auto members = cur.members(table.order());
    for (int a : members)
      for (int b : members) next.add(table.at(a, b));
    if (next == cur) return cur;
    cur = next;
  }
}

Subset setwise_product(const CayleyTable& table, Subset a, Subset b) {
  Subset out;
  for (int x : a.members(table.order()))
    for (int y : b.members(table.order())) out.add(table.at(x, y));
  return out;
}

CheckResult identity_invariance_check(const StructureView& view, Subset q, int id) {
  const auto& t = view.table();
  if (!q.contains(id) || !contains(view.globalIdentities(), id))
    return CheckResult::na("id must be a global identity inside Q");
  Subset right, left;
  for (int x : q.members(t.order())) {
    right.add(t.at(x, id));  // q * id
    left.add(t.at(id, x));   // id * q
  }
  for (auto [side, set] : {std::pair{"right", right}, std::pair{"left", left}}) {
    if (!(set == q)) {
      Subset diff{set.bits ^ q.bits};
      int elem = diff.members(t.order()).front();
      return CheckResult::fail(std::string("side=") + side + ";elem=" + t.name(elem));
    }
  }
  return CheckResult::pass();
}

SPartitionResult s_partition(const StructureView& view, Subset q, CheckMode mode) {
  SPartitionResult res;
  res.status = is_disguised_subgroup(view, q, mode);
  if (!res.status.ok()) {
    if (res.status.verdict == Verdict::counterexample)
      res.status = CheckResult::na("Q is not a disguised-subgroup: " + res.status.witness);
    return res;
  }
  const auto& t = view.table();
  const int n = t.order();

  for (int g = 0; g < n; ++g) {
    if (q.contains(g)) continue;
    bool ids_outside = true;
    for (int id : view.profile(g).identities)
      if (q.contains(id)) ids_outside = false;
    if (ids_outside) res.s.add(g);
  }

  bool ids_inside_q = view.identitySet().subset_of(q);
  Subset rest = Subset::complement(Subset{q.bits | res.s.bits}, n);

  if (ids_inside_q) {
    res.part1 = res.s.empty()
                    ? CheckResult::pass()
                    : CheckResult::fail("s-elem=" + t.name(res.s.members(n).front()));
    res.part2i = CheckResult::na("identities lie inside Q");
    res.part2ii = CheckResult::na("identities lie inside Q");
    res.part2iii = CheckResult::na("identities lie inside Q");
    return res;
  }
  res.part1 = CheckResult::na("identities escape Q");

  if (res.s.empty()) {
    res.part2i = CheckResult::fail("S-empty");
  } else {
    CheckResult sub = is_disguised_subgroup(view, res.s, mode);
    res.part2i = sub.ok() ? CheckResult::pass()
                          : CheckResult::fail("S-not-subgroup;" + sub.witness);
  }

  res.part2ii = CheckResult::pass();
  Subset qs = setwise_product(t, q, res.s);
  Subset sq = setwise_product(t, res.s, q);
  if (!qs.subset_of(rest)) {
    Subset bad{qs.bits & ~rest.bits};
    res.part2ii = CheckResult::fail("Q*S;elem=" + t.name(bad.members(n).front()));
  } else if (!sq.subset_of(rest)) {
    Subset bad{sq.bits & ~rest.bits};
    res.part2ii = CheckResult::fail("S*Q;elem=" + t.name(bad.members(n).front()));
  } else {
    for (int g : rest.members(n)) {
      for (int h : view.profile(g).def21Inverses)
        if (!rest.contains(h)) {
          res.part2ii = CheckResult::fail("inverse;g=" + t.name(g) + ";h=" + t.name(h));
          break;
        }
      if (!res.part2ii.ok()) break;
    }
  }

  Subset comp_q = Subset::complement(q, n);
  Subset comp_s = Subset::complement(res.s, n);
  Subset qg = setwise_product(t, q, comp_q);
  Subset gq = setwise_product(t, comp_q, q);
  if (!qg.subset_of(comp_s)) {
    Subset bad{qg.bits & ~comp_s.bits};
    res.part2iii = CheckResult::fail("Q*(G\\Q);elem=" + t.name(bad.members(n).front()));
  } else if (!gq.subset_of(comp_s)) {
    Subset bad{gq.bits & ~comp_s.bits};
    res.part2iii = CheckResult::fail("(G\\Q)*Q;elem=" + t.name(bad.members(n).front()));
  } else {
    res.part2iii = CheckResult::pass();
  }
  return res;
}

}  // namespace dglab
