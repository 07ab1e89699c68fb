#ifndef DGLAB_CLASSIFY_HPP
#define DGLAB_CLASSIFY_HPP

#include <map>
#include <string>

#include "dglab/table.hpp"

namespace dglab {

/// literal: the defining axioms (a)-(d) read exactly as written, so identity
/// and inverse sets may have any size.  strict: literal plus unique right
/// identity, left identity and inverse per element.
enum class CheckMode { literal, strict };

const char* to_token(CheckMode mode);        // "literal" / "strict"
CheckMode mode_from_token(std::string_view); // throws std::invalid_argument

/// Three-valued outcome used by every yes/no question with hypotheses.
enum class Verdict { holds, counterexample, not_applicable };

const char* to_token(Verdict v);  // "holds" / "counterexample" / "not-applicable"

/// Verdict plus a rendered witness (counterexample) or reason (not-applicable).
/// Witness strings are compact `key=value;...` tokens over element names and
/// are stable across runs.
struct CheckResult {
  Verdict verdict = Verdict::holds;
  std::string witness;

  bool ok() const { return verdict == Verdict::holds; }

  static CheckResult pass() { return {Verdict::holds, {}}; }
  static CheckResult fail(std::string w) { return {Verdict::counterexample, std::move(w)}; }
  static CheckResult na(std::string reason) {
    return {Verdict::not_applicable, std::move(reason)};
  }
};

/// Class membership flags for one table.  Every false flag has a witness in
/// `witnesses` (key = the flag token below); existential true flags
/// (monoid/group identity, cyclic generator) record their witness as well.
struct ClassificationReport {
  bool isAssociative = false;
  bool isMonoid = false;
  bool isGroup = false;
  bool isCommutative = false;
  bool isCyclic = false;
  bool isLeftCancellative = false;
  bool isRightCancellative = false;
  bool isRegularSemigroup = false;
  bool isInverseSemigroup = false;
  bool isDisguisedLiteral = false;
  bool isDisguisedStrict = false;
  bool hasUniqueGlobalRightIdentity = false;
  bool hasUniqueGlobalLeftIdentity = false;

  std::map<std::string, std::string> witnesses;

  bool disguised(CheckMode mode) const {
    return mode == CheckMode::literal ? isDisguisedLiteral : isDisguisedStrict;
  }
  const std::string& witness(const std::string& flag) const;
};

/// Flag tokens, in report order.
inline constexpr const char* kFlagTokens[] = {
    "associative",      "monoid",
    "group",            "commutative",
    "cyclic",           "left-cancellative",
    "right-cancellative", "regular-semigroup",
    "inverse-semigroup", "disguised-literal",
    "disguised-strict", "unique-global-right-identity",
    "unique-global-left-identity"};

bool flag_value(const ClassificationReport& r, std::string_view token);

/// Classify by direct definition: associativity by full triple scan, the
/// regular/inverse predicates by their definitions (the inverse-semigroup
/// flag is computed by two independent procedures and cross-checked), the
/// disguised flags from element profiles.
ClassificationReport classify(const CayleyTable& table);

/// Deterministic multi-line rendering used by the CLI.
std::string render_report(const CayleyTable& table, const ClassificationReport& r);

}  // namespace dglab

#endif  // DGLAB_CLASSIFY_HPP
