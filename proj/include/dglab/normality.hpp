#ifndef DGLAB_NORMALITY_HPP
#define DGLAB_NORMALITY_HPP

#include <optional>

#include "dglab/subsets.hpp"

namespace dglab {

/// Quadruple condition: for all g1,g2 in G and q1,q2 in Q some q3 in Q has
/// (g1*q1)*(g2*q2) = q3*(g1*g2).  not-applicable when Q fails the subgroup
/// check in the given mode.
CheckResult is_normal_def(const StructureView& view, Subset q, CheckMode mode);

/// g*q*g^-1 in Q for all g, q.  Needs unique inverses, so not-applicable on
/// non-strict tables.
CheckResult is_normal_conjugation(const StructureView& view, Subset q);

/// The commutation form with its exact quantifier order: for every q1 there
/// is ONE q2 with g*q1 = q2*g for every g (and symmetrically).  This is
/// stronger than the conjugation form on noncommutative tables.
CheckResult is_normal_commutation(const StructureView& view, Subset q, CheckMode mode);

/// I(G) inside Q.
CheckResult is_disguised_normal(const StructureView& view, Subset q, CheckMode mode);

/// First disguised-subgroup contained in the complement of Q, in ascending
/// bitmask order, or nullopt.
std::optional<Subset> complement_subgroup_search(const StructureView& view, Subset q,
                                                 CheckMode mode);

/// The distinct sets [g] = {g*q : q in Q}, as blocks sorted by least member.
/// wellDefined means they are pairwise disjoint and cover the table.
struct CosetPartition {
  CheckResult status;  // not-applicable when Q fails the subgroup check
  Subset subgroup;
  std::vector<std::vector<int>> blocks;
  std::vector<int> representatives;  // least member per block
  std::vector<int> blockOf;          // element -> block, -1 when uncovered
  bool wellDefined = false;
  std::string violation;
};

CosetPartition cosets(const StructureView& view, Subset q, CheckMode mode);

/// Coset partition plus the induced product.  The induced entry for a block
/// pair is the unique block containing every member-pair product; when some
/// pair of representatives lands elsewhere the operation is ill-defined and
/// no table is fabricated.
struct QuotientResult {
  CosetPartition partition;
  bool inducedOpWellDefined = false;
  std::string violation;
  std::optional<CayleyTable> table;  // block names "[rep]"
  std::optional<ClassificationReport> groupReport;

  bool ok() const { return partition.wellDefined && inducedOpWellDefined; }
};

QuotientResult build_quotient(const StructureView& view, Subset q, CheckMode mode);

/// Quotient built from the relation g1 ~ g2 <=> g1 * g2^-1 in Q, compared
/// against the coset construction.  Requires a strict table and Q normal in
/// the quadruple sense; the relation is verified to be an equivalence before
/// classes are formed.
struct RelationQuotient {
  CheckResult status;       // not-applicable when hypotheses unmet
  CheckResult equivalence;  // witness names the failing instance
  std::vector<std::vector<int>> classes;
  bool inducedOpWellDefined = false;
  std::string violation;
  std::optional<CayleyTable> table;
  bool partitionsEqual = false;
  bool tablesEqual = false;
  std::string comparisonWitness;
};

RelationQuotient quotient_by_relation(const StructureView& view, Subset q);

/// Sub-table induced on a closed subset, keeping element names.  Throws
/// std::invalid_argument when the subset is not closed.
CayleyTable induced_table(const CayleyTable& table, Subset s);

}  // namespace dglab

#endif  // DGLAB_NORMALITY_HPP
