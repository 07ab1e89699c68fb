#ifndef DGLAB_SUBSETS_HPP
#define DGLAB_SUBSETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dglab/classify.hpp"
#include "dglab/table.hpp"

namespace dglab {

/// Membership bitmask over element indices of one table (order <= 64).
struct Subset {
  std::uint64_t bits = 0;

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= (std::uint64_t{1} << i); }
  void remove(int i) { bits &= ~(std::uint64_t{1} << i); }
  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend bool operator<(Subset a, Subset b) { return a.bits < b.bits; }

  std::vector<int> members(int order) const;
  static Subset full(int order) {
    return Subset{order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1};
  }
  static Subset single(int i) { return Subset{std::uint64_t{1} << i}; }
  static Subset complement(Subset s, int order) {
    return Subset{full(order).bits & ~s.bits};
  }
};

/// One table together with its element profiles and classification,
/// computed once and shared by the subset/normality/audit layers.
class StructureView {
 public:
  explicit StructureView(CayleyTable table);

  const CayleyTable& table() const { return table_; }
  const std::vector<ElementProfile>& profiles() const { return profiles_; }
  const ElementProfile& profile(int g) const { return profiles_.at(static_cast<size_t>(g)); }
  const ClassificationReport& report() const { return report_; }
  const std::vector<int>& globalIdentities() const { return global_identities_; }
  int order() const { return table_.order(); }
  Subset identitySet() const;

  /// The unique inverse of g; only meaningful on strict tables.
  int uniqueInverse(int g) const { return profiles_[static_cast<size_t>(g)].def21Inverses.at(0); }

 private:
  CayleyTable table_;
  std::vector<ElementProfile> profiles_;
  ClassificationReport report_;
  std::vector<int> global_identities_;
};

/// `[e c2]`: members in index order.
std::string subset_to_string(const CayleyTable& table, Subset s);

/// Parses a comma-separated element-name list ("e,c2").  Throws
/// std::invalid_argument on unknown names.
Subset subset_from_csv(const CayleyTable& table, std::string_view csv);

/// Disguised-subgroup test: closure, identities of members inside Q, inverses
/// of members inside Q.  In literal mode all identities/inverses of each
/// member must lie in Q; strict mode uses the unique ones (and requires the
/// table itself to be strict).  Tables failing the mode's class give
/// not-applicable, an empty subset is a counterexample with reason.
CheckResult is_disguised_subgroup(const StructureView& view, Subset q, CheckMode mode);

/// q1 * q2^-1 in Q for all q1,q2 in Q.  Requires a strict table (unique
/// inverses); otherwise not-applicable.
CheckResult subgroup_criterion(const StructureView& view, Subset q);

/// All subsets of size <= maxSize passing is_disguised_subgroup, ascending
/// bitmask order.
std::vector<Subset> enumerate_disguised_subgroups(const StructureView& view,
                                                  CheckMode mode, int maxSize);

/// Least superset of seed closed under the operation (fixed-point scan).
Subset generated_closure(const CayleyTable& table, Subset seed);

/// Elementwise product {a*b : a in A, b in B}.
Subset setwise_product(const CayleyTable& table, Subset a, Subset b);

/// {q*id : q in Q} == Q and {id*q : q in Q} == Q.  not-applicable when id is
/// not a global identity inside Q.
CheckResult identity_invariance_check(const StructureView& view, Subset q, int id);

/// Verdicts for the four parts of the absorbent/repellent-subset statement
/// built over S = {g outside Q : all identities of g lie outside Q}.
struct SPartitionResult {
  CheckResult status;  // not-applicable when Q is not a disguised-subgroup
  Subset s;
  CheckResult part1;    // identities inside Q  => S empty
  CheckResult part2i;   // identities escape Q  => S nonempty and a disguised-subgroup
  CheckResult part2ii;  // Q*S, S*Q avoid Q and S; inverses outside Q,S stay outside
  CheckResult part2iii; // Q*(G\Q) and (G\Q)*Q avoid S
};

SPartitionResult s_partition(const StructureView& view, Subset q, CheckMode mode);

}  // namespace dglab

#endif  // DGLAB_SUBSETS_HPP
