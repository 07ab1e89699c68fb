#ifndef DGLAB_TABLE_HPP
#define DGLAB_TABLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dglab {

/// Error raised by parse_table, carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when a search would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& message)
      : std::runtime_error(message) {}
};

/// A finite set with a total binary operation, stored as a full
/// multiplication table.  Row = left operand.  Immutable after
/// construction; all operations on it are pure functions.
class CayleyTable {
 public:
  /// `products` is row-major: entry (i, j) is the index of names[i] * names[j].
  /// Validates closure, name distinctness and order >= 1.
  CayleyTable(std::vector<std::string> names, std::vector<int> products);

  int order() const noexcept { return order_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& products() const noexcept { return products_; }

  /// Unchecked product lookup (hot path).
  int at(int i, int j) const { return products_[static_cast<size_t>(i) * order_ + j]; }

  /// Range-checked product lookup.
  int product(int i, int j) const;

  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }

  /// Index of a named element, or -1 when absent.
  int index_of(std::string_view name) const noexcept;

  /// Row-concatenated product matrix as a digit string, e.g. "0011".
  /// Only valid while order <= 10.
  std::string encode() const;

 private:
  int order_;
  std::vector<std::string> names_;
  std::vector<int> products_;
};

/// Per-element identity and inverse structure.
///
/// rightIdentities = {x : g*x = g}, leftIdentities = {x : x*g = g},
/// identities = union of the two, def21Inverses = {h : g*h or h*g lands in
/// identities(g)}, dInverses = those h whose products land on the matching
/// sides (h*g a right identity of g and g*h a left identity of g).
/// order = least k >= 1 with g^k in the global identity set, or nullopt when
/// the power cycle never meets it.
struct ElementProfile {
  int element = 0;
  std::vector<int> rightIdentities;
  std::vector<int> leftIdentities;
  std::vector<int> identities;
  std::vector<int> def21Inverses;
  std::vector<int> dInverses;
  std::optional<int> order;
};

/// Parse the table file format:
///   # comment lines and blank lines are skipped
///   elements: t1 t2 ... tn
///   table:
///   <n rows of n tokens>
/// Errors carry 1-based line/column positions.
CayleyTable parse_table(std::string_view text);

/// Canonical byte-deterministic rendering: header, `table:` line, rows in
/// index order with single-space separators, trailing newline.
/// emit_table(parse_table(f)) == f for every canonical-form file f.
std::string emit_table(const CayleyTable& table);

/// Left-associated k-fold product g * ... * g, k >= 1.  On associative
/// tables the bracketing is irrelevant; on arbitrary tables this is by
/// definition the left-associated value.  Cycle-reduced, so k may be large.
int power(const CayleyTable& table, int g, long long k);

/// I(T): every x that is a one-sided identity of some element.
std::vector<int> global_identities(const CayleyTable& table);

/// Full profile of one element (see ElementProfile).
ElementProfile element_profile(const CayleyTable& table, int g);

/// Profiles of every element, in index order.
std::vector<ElementProfile> all_profiles(const CayleyTable& table);

/// Membership helper for the sorted index vectors used in profiles.
bool contains(const std::vector<int>& sorted, int value);

}  // namespace dglab

#endif  // DGLAB_TABLE_HPP
