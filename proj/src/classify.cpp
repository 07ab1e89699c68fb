#include "dglab/classify.hpp"

#include <algorithm>
#include <sstream>

namespace dglab {

namespace {

std::string pair_witness(const CayleyTable& t, int x, int y) {
  return "x=" + t.name(x) + ";y=" + t.name(y);
}

std::string triple_witness(const CayleyTable& t, int x, int y, int z) {
  return "x=" + t.name(x) + ";y=" + t.name(y) + ";z=" + t.name(z);
}

// Least (x,y,z) with (x*y)*z != x*(y*z), if any.
bool find_assoc_witness(const CayleyTable& t, std::string& w) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
          w = triple_witness(t, x, y, z);
          return true;
        }
  return false;
}

// First two-sided identity, or -1.
int two_sided_identity(const CayleyTable& t) {
  const int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (t.at(e, x) != x || t.at(x, e) != x) ok = false;
    if (ok) return e;
  }
  return -1;
}

// For each identity candidate e, the least element refuting it: "e:x,...".
std::string identity_refutations(const CayleyTable& t) {
  const int n = t.order();
  std::string out;
  for (int e = 0; e < n; ++e) {
    for (int x = 0; x < n; ++x)
      if (t.at(e, x) != x || t.at(x, e) != x) {
        if (!out.empty()) out += ',';
        out += t.name(e) + ":" + t.name(x);
        break;
      }
  }
  return out;
}

// Set of powers {g^k : k >= 1}.
std::vector<bool> power_closure(const CayleyTable& t, int g) {
  std::vector<bool> in(static_cast<size_t>(t.order()), false);
  int cur = g;
  while (!in[static_cast<size_t>(cur)]) {
    in[static_cast<size_t>(cur)] = true;
    cur = t.at(cur, g);
  }
  return in;
}

}  // namespace

const char* to_token(CheckMode mode) {
  return mode == CheckMode::literal ? "literal" : "strict";
}

CheckMode mode_from_token(std::string_view s) {
  if (s == "literal") return CheckMode::literal;
  if (s == "strict") return CheckMode::strict;
  throw std::invalid_argument("unknown mode '" + std::string(s) +
                              "' (expected literal or strict)");
}

const char* to_token(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    default: return "not-applicable";
  }
}

const std::string& ClassificationReport::witness(const std::string& flag) const {
  static const std::string empty;
  auto it = witnesses.find(flag);
  return it == witnesses.end() ? empty : it->second;
}

bool flag_value(const ClassificationReport& r, std::string_view token) {
  if (token == "associative") return r.isAssociative;
  if (token == "monoid") return r.isMonoid;
  if (token == "group") return r.isGroup;
  if (token == "commutative") return r.isCommutative;
  if (token == "cyclic") return r.isCyclic;
  if (token == "left-cancellative") return r.isLeftCancellative;
  if (token == "right-cancellative") return r.isRightCancellative;
  if (token == "regular-semigroup") return r.isRegularSemigroup;
  if (token == "inverse-semigroup") return r.isInverseSemigroup;
  if (token == "disguised-literal") return r.isDisguisedLiteral;
  if (token == "disguised-strict") return r.isDisguisedStrict;
  if (token == "unique-global-right-identity") return r.hasUniqueGlobalRightIdentity;
  if (token == "unique-global-left-identity") return r.hasUniqueGlobalLeftIdentity;
  throw std::invalid_argument("unknown flag token '" + std::string(token) + "'");
}

ClassificationReport classify(const CayleyTable& t) {
  const int n = t.order();
  ClassificationReport r;
  auto profiles = all_profiles(t);

  std::string assoc_w;
  r.isAssociative = !find_assoc_witness(t, assoc_w);
  if (!r.isAssociative) r.witnesses["associative"] = assoc_w;

  const int e = two_sided_identity(t);
  r.isMonoid = r.isAssociative && e >= 0;
  if (r.isMonoid)
    r.witnesses["monoid"] = "identity=" + t.name(e);
  else if (!r.isAssociative)
    r.witnesses["monoid"] = "not-associative;" + assoc_w;
  else
    r.witnesses["monoid"] = identity_refutations(t);

  r.isGroup = r.isMonoid;
  if (r.isGroup) {
    for (int x = 0; x < n && r.isGroup; ++x) {
      bool has = false;
      for (int y = 0; y < n && !has; ++y)
        if (t.at(x, y) == e && t.at(y, x) == e) has = true;
      if (!has) {
        r.isGroup = false;
        r.witnesses["group"] = "identity=" + t.name(e) + ";no-inverse=" + t.name(x);
      }
    }
    if (r.isGroup) r.witnesses["group"] = "identity=" + t.name(e);
  } else {
    r.witnesses["group"] =
        r.isAssociative ? ("not-monoid;" + r.witness("monoid")) : assoc_w;
  }

  r.isCommutative = true;
  for (int x = 0; x < n && r.isCommutative; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t.at(x, y) != t.at(y, x)) {
        r.isCommutative = false;
        r.witnesses["commutative"] = pair_witness(t, x, y);
        break;
      }

  r.isCyclic = false;
  {
    std::string refutations;
    for (int g = 0; g < n && !r.isCyclic; ++g) {
      auto in = power_closure(t, g);
      int missing = -1;
      for (int x = 0; x < n; ++x)
        if (!in[static_cast<size_t>(x)]) {
          missing = x;
          break;
        }
      if (missing < 0) {
        r.isCyclic = true;
        r.witnesses["cyclic"] = "generator=" + t.name(g);
      } else {
        if (!refutations.empty()) refutations += ',';
        refutations += t.name(g) + ":" + t.name(missing);
      }
    }
    if (!r.isCyclic) r.witnesses["cyclic"] = refutations;
  }

  r.isLeftCancellative = true;
  for (int x = 0; x < n && r.isLeftCancellative; ++x)
    for (int y = 0; y < n && r.isLeftCancellative; ++y)
      for (int z = y + 1; z < n; ++z)
        if (t.at(x, y) == t.at(x, z)) {
          r.isLeftCancellative = false;
          r.witnesses["left-cancellative"] = triple_witness(t, x, y, z);
          break;
        }
  r.isRightCancellative = true;
  for (int x = 0; x < n && r.isRightCancellative; ++x)
    for (int y = 0; y < n && r.isRightCancellative; ++y)
      for (int z = y + 1; z < n; ++z)
        if (t.at(y, x) == t.at(z, x)) {
          r.isRightCancellative = false;
          r.witnesses["right-cancellative"] = triple_witness(t, x, y, z);
          break;
        }

  // Regular: every x has some x' with x*x'*x = x.
  r.isRegularSemigroup = r.isAssociative;
  if (r.isRegularSemigroup) {
    for (int x = 0; x < n && r.isRegularSemigroup; ++x) {
      bool has = false;
      for (int y = 0; y < n && !has; ++y)
        if (t.at(t.at(x, y), x) == x) has = true;
      if (!has) {
        r.isRegularSemigroup = false;
        r.witnesses["regular-semigroup"] = "x=" + t.name(x);
      }
    }
  } else {
    r.witnesses["regular-semigroup"] = assoc_w;
  }

  // Inverse, route 1: regular and all idempotents commute.
  bool inverse1 = r.isRegularSemigroup;
  std::string inverse_w;
  if (inverse1) {
    std::vector<int> idem;
    for (int x = 0; x < n; ++x)
      if (t.at(x, x) == x) idem.push_back(x);
    for (size_t i = 0; i < idem.size() && inverse1; ++i)
      for (size_t j = i + 1; j < idem.size(); ++j)
        if (t.at(idem[i], idem[j]) != t.at(idem[j], idem[i])) {
          inverse1 = false;
          inverse_w = "e=" + t.name(idem[i]) + ";f=" + t.name(idem[j]);
          break;
        }
  } else {
    inverse_w = r.witness("regular-semigroup");
    if (!r.isRegularSemigroup && r.isAssociative) inverse_w = "not-regular;" + inverse_w;
  }
  // Route 2: every x has exactly one y with x*y*x = x and y*x*y = y.
  bool inverse2 = r.isAssociative;
  for (int x = 0; x < n && inverse2; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (t.at(t.at(x, y), x) == x && t.at(t.at(y, x), y) == y) ++count;
    if (count != 1) inverse2 = false;
  }
  if (r.isAssociative && inverse1 != inverse2)
    throw std::logic_error("inverse-semigroup procedures disagree on " + t.encode());
  r.isInverseSemigroup = inverse1;
  if (!r.isInverseSemigroup) r.witnesses["inverse-semigroup"] = inverse_w;

  // Disguised flags from the profiles.
  r.isDisguisedLiteral = r.isAssociative;
  if (!r.isAssociative) r.witnesses["disguised-literal"] = "axiom=b;" + assoc_w;
  for (int g = 0; g < n && r.isDisguisedLiteral; ++g) {
    const auto& p = profiles[static_cast<size_t>(g)];
    if (p.rightIdentities.empty()) {
      r.isDisguisedLiteral = false;
      r.witnesses["disguised-literal"] = "g=" + t.name(g) + ";axiom=c-right";
    } else if (p.leftIdentities.empty()) {
      r.isDisguisedLiteral = false;
      r.witnesses["disguised-literal"] = "g=" + t.name(g) + ";axiom=c-left";
    } else if (p.def21Inverses.empty()) {
      r.isDisguisedLiteral = false;
      r.witnesses["disguised-literal"] = "g=" + t.name(g) + ";axiom=d-missing";
    } else if (p.dInverses.size() != p.def21Inverses.size()) {
      int bad = -1;
      for (int h : p.def21Inverses)
        if (!contains(p.dInverses, h)) {
          bad = h;
          break;
        }
      r.isDisguisedLiteral = false;
      r.witnesses["disguised-literal"] =
          "g=" + t.name(g) + ";h=" + t.name(bad) + ";axiom=d";
    }
  }

  r.isDisguisedStrict = r.isDisguisedLiteral;
  if (!r.isDisguisedLiteral)
    r.witnesses["disguised-strict"] = "not-literal;" + r.witness("disguised-literal");
  for (int g = 0; g < n && r.isDisguisedStrict; ++g) {
    const auto& p = profiles[static_cast<size_t>(g)];
    if (p.rightIdentities.size() != 1) {
      r.isDisguisedStrict = false;
      r.witnesses["disguised-strict"] =
          "g=" + t.name(g) + ";|I_R|=" + std::to_string(p.rightIdentities.size());
    } else if (p.leftIdentities.size() != 1) {
      r.isDisguisedStrict = false;
      r.witnesses["disguised-strict"] =
          "g=" + t.name(g) + ";|I_L|=" + std::to_string(p.leftIdentities.size());
    } else if (p.def21Inverses.size() != 1) {
      r.isDisguisedStrict = false;
      r.witnesses["disguised-strict"] =
          "g=" + t.name(g) + ";|inv|=" + std::to_string(p.def21Inverses.size());
    }
  }

  // A single element that is the unique right (left) identity of every g.
  r.hasUniqueGlobalRightIdentity = true;
  r.hasUniqueGlobalLeftIdentity = true;
  for (int g = 0; g < n; ++g) {
    const auto& p = profiles[static_cast<size_t>(g)];
    if (r.hasUniqueGlobalRightIdentity &&
        (p.rightIdentities.size() != 1 ||
         p.rightIdentities[0] != profiles[0].rightIdentities.front())) {
      if (p.rightIdentities.size() != 1) {
        r.hasUniqueGlobalRightIdentity = false;
        r.witnesses["unique-global-right-identity"] =
            "g=" + t.name(g) + ";|I_R|=" + std::to_string(p.rightIdentities.size());
      } else {
        r.hasUniqueGlobalRightIdentity = false;
        r.witnesses["unique-global-right-identity"] =
            "g1=" + t.name(0) + ";g2=" + t.name(g);
      }
    }
    if (r.hasUniqueGlobalLeftIdentity &&
        (p.leftIdentities.size() != 1 ||
         p.leftIdentities[0] != profiles[0].leftIdentities.front())) {
      if (p.leftIdentities.size() != 1) {
        r.hasUniqueGlobalLeftIdentity = false;
        r.witnesses["unique-global-left-identity"] =
            "g=" + t.name(g) + ";|I_L|=" + std::to_string(p.leftIdentities.size());
      } else {
        r.hasUniqueGlobalLeftIdentity = false;
        r.witnesses["unique-global-left-identity"] =
            "g1=" + t.name(0) + ";g2=" + t.name(g);
      }
    }
  }
  return r;
}

std::string render_report(const CayleyTable& table, const ClassificationReport& r) {
  std::ostringstream os;
  os << "order: " << table.order() << "\n";
  for (const char* flag : kFlagTokens) {
    bool v = flag_value(r, flag);
    os << flag << ": " << (v ? "yes" : "no");
    const std::string& w = r.witness(flag);
    if (!w.empty()) os << "  (" << w << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace dglab
