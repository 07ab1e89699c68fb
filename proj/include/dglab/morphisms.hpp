#ifndef DGLAB_MORPHISMS_HPP
#define DGLAB_MORPHISMS_HPP

#include <optional>
#include <utility>

#include "dglab/normality.hpp"
#include "dglab/subsets.hpp"

namespace dglab {

/// A map between two tables, one codomain index per domain element.
/// Tables are held by value; everything here is small.
struct Morphism {
  CayleyTable domain;
  CayleyTable codomain;
  std::vector<int> map;
};

/// "e->e,c->a,c2->e,c3->a"
std::string morphism_to_string(const Morphism& h);

/// Parses the serialization above; every domain element must appear exactly
/// once.  Throws std::invalid_argument on malformed input.
Morphism morphism_from_string(CayleyTable domain, CayleyTable codomain,
                              std::string_view text);

struct MorphismReport {
  bool isHomomorphism = false;
  std::string homWitness;  // "x=..;y=.." when not
  /// Injective away from the kernel (preimage of the codomain identity).
  bool isDisguisedInjective = false;
  std::string injWitness;
  bool isSurjective = false;
  std::string surWitness;  // least missed codomain element
  Subset kernel;           // over domain indices
  Subset image;            // over codomain indices
  CheckResult identityToE;    // every global identity of the domain maps to e
  CheckResult inverseCompat;  // h(g)^-1 == h(g^-1); n/a on non-strict domains

  bool isDisguisedIsomorphism() const {
    return isHomomorphism && isDisguisedInjective && isSurjective;
  }
};

/// Full pair scan plus the consequence sub-checks.  Throws
/// std::invalid_argument when the codomain is not a group (the morphisms
/// here always target groups).
MorphismReport check_morphism(const Morphism& h);

inline constexpr long long kDefaultMorphismBudget = 10'000'000;

/// All maps G -> H passing the homomorphism scan, lexicographic in the map
/// vector.  Throws BudgetError when |H|^|G| exceeds the budget, and
/// std::invalid_argument when H is not a group.
std::vector<Morphism> enumerate_morphisms(const CayleyTable& domain,
                                          const CayleyTable& codomain,
                                          long long budget = kDefaultMorphismBudget);

/// Image or preimage of a subgroup along a verified homomorphism, plus the
/// subgroup check on the result and the normality transfer when the input is
/// normal (image direction additionally needs surjectivity).
struct TransferReport {
  Subset result;
  CheckResult isSubgroup;
  CheckResult normality;
};

enum class TransferDirection { forward, backward };

TransferReport transfer_subgroup(const Morphism& h, Subset q, TransferDirection dir);

/// The canonical map [g] -> h(g) from domain/Ker(h) onto the image, with
/// each verification stage reported.  verdict holds only when every stage
/// passed; failedStage names the first failure.
struct FirstIsoReport {
  Verdict verdict = Verdict::not_applicable;
  std::string failedStage;
  std::string witness;
  QuotientResult quotient;
  std::optional<CayleyTable> imageTable;
  std::vector<int> blockImage;  // quotient block -> image-table index
};

FirstIsoReport first_isomorphy(const Morphism& h);

enum class IsoTheorem { second, third };

/// Stage-by-stage construction of the second ((G/N1)/(N2/N1) vs G/N2, N1
/// the smaller normal subgroup) or third ((Q1*Q2)/Q2 vs Q1/(Q1 cap Q2))
/// isomorphism statement.  Hypothesis failures give not-applicable; any
/// construction or canonical-map failure gives a counterexample naming the
/// stage.
struct IsoConstructionReport {
  Verdict verdict = Verdict::not_applicable;
  std::string failedStage;
  std::string witness;
  std::vector<std::pair<std::string, CheckResult>> stages;
  std::optional<CayleyTable> leftTable;   // the nested quotient
  std::optional<CayleyTable> rightTable;  // the direct quotient
};

IsoConstructionReport second_third_isomorphy(const CayleyTable& g, Subset q1, Subset q2,
                                             IsoTheorem which);

/// A pair of surjective, kernel-injective morphisms into one mediating group.
struct IsoWitness {
  std::string mediatorName;
  CayleyTable mediating;
  Morphism left;
  Morphism right;
};

/// First mediator (in list order) admitting disguised-isomorphisms from both
/// tables, with the lexicographically first such morphisms.
std::optional<IsoWitness> isomorphic_via_group(
    const CayleyTable& g, const CayleyTable& g2,
    const std::vector<std::pair<std::string, CayleyTable>>& mediators,
    long long budget = kDefaultMorphismBudget);

}  // namespace dglab

#endif  // DGLAB_MORPHISMS_HPP
