#ifndef DGLAB_AUDIT_HPP
#define DGLAB_AUDIT_HPP

#include <map>
#include <optional>

#include "dglab/enumerate.hpp"
#include "dglab/morphisms.hpp"

namespace dglab {

/// Registry of the audited statements.  Every claim is evaluated by direct
/// quantifier expansion on one structure at a time; none of them is ever
/// assumed by the rest of the library.
enum class ClaimId {
  LEM24,  // an inverse product equal to one right identity equals them all
  IIR,    // I_R(g) = I_L(g^-1) and I_L(g) = I_R(g^-1) for every inverse
  P26A,   // right and left identities are unique per element
  P26B,   // identities are idempotent (hence fixed by all powers)
  P26C,   // the inverse is unique per element
  P26D,   // finite order n: identities coincide and g^(n-1) is an inverse
  P26E,   // I_R(g1*g2) = I_R(g2) and I_L(g1*g2) = I_L(g1)
  P26F,   // a single shared unique one-sided identity forces a group
  P26G,   // one-sided cancellativity forces a group
  R27,    // the structure is both regular and inverse (class equality)
  R211,   // subgroups are invariant under their own global identities
  P212,   // the absorbent/repellent subset statement, parts 1, 2i, 2ii, 2iii
  L32,    // normal subgroups contain every global identity
  P33,    // the three normality formulations agree
  T34A,   // abelian implies group
  T34B,   // cyclic implies group
  T34C,   // a normal disguised-subgroup forces a group
  T37,    // quotient by a disguised-normal subgroup is a group
  C38,    // complement free of subgroups => quotient is a group
  C39,    // coset quotient equals the relation quotient for normal Q
  P43,    // homomorphisms send every identity to e
  P45,    // kernels are normal disguised-subgroups
  C46,    // existence of a homomorphism into a group forces a group
  P47,    // images of subgroups are subgroups of the codomain
  P48,    // isomorphic structures have matching quotients
  ISO1,   // G/Ker(h) is isomorphic to the image
  ISO2,   // (G/N1)/(N2/N1) isomorphic to G/N2
  ISO3,   // (Q1*Q2)/Q2 isomorphic to Q1/(Q1 cap Q2)
};

struct ClaimInfo {
  ClaimId id;
  const char* token;    // e.g. "CL-P26A"
  const char* summary;  // one-line statement of the audited property
};

const std::vector<ClaimInfo>& claim_registry();
std::optional<ClaimId> claim_from_token(std::string_view token);
const ClaimInfo& claim_info(ClaimId id);

/// Explicit parameters for a single check_claim call.  When absent the
/// checker iterates all admissible parameters itself.
struct ClaimParams {
  std::optional<Subset> subset;
  std::optional<Subset> subset2;
  std::optional<Morphism> morphism;
};

/// One claim evaluated on one structure with one parameter choice.
/// `structure` is the canonical encoding; witnesses use the canonical
/// table's element names, so every counterexample replays on the encoded
/// table directly.
struct AuditFinding {
  std::string claim;
  CheckMode mode = CheckMode::literal;
  std::string structure;
  std::string parameters;  // "-" when none
  Verdict verdict = Verdict::holds;
  std::string witness;     // "-" when none
};

std::string finding_to_line(const AuditFinding& f);

/// Evaluates one claim on one table.  The table (and any subset/morphism
/// parameters) are first moved to canonical coordinates.  Claims with
/// parameters iterate every admissible parameter when `params` is null; a
/// claim whose hypotheses fail yields a single not-applicable finding.
std::vector<AuditFinding> check_claim(ClaimId claim, const CayleyTable& table,
                                      const ClaimParams* params, CheckMode mode);

/// Group codomains offered to the morphism-quantified claims: the built-in
/// cyclic/symmetric groups of order <= maxOrder.
std::vector<std::pair<std::string, CayleyTable>> codomain_pool(int maxOrder);

struct AuditOptions {
  int order = 2;                // audit all structures of order <= this
  CheckMode mode = CheckMode::literal;
  std::vector<ClaimId> claims;  // empty = full registry
  int workers = 1;
};

struct AuditResult {
  std::vector<AuditFinding> findings;           // sorted (claim, structure, parameters)
  std::map<std::string, std::string> manifest;  // sorted keys
};

/// Runs every requested claim over every isomorphism class of the mode's
/// disguised tables of order <= opts.order.  Byte-identical output for any
/// worker count.
AuditResult audit_corpus(const AuditOptions& opts);

std::string findings_to_text(const std::vector<AuditFinding>& findings);
std::string manifest_to_text(const std::map<std::string, std::string>& manifest);

}  // namespace dglab

#endif  // DGLAB_AUDIT_HPP
