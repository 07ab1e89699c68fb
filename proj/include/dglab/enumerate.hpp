#ifndef DGLAB_ENUMERATE_HPP
#define DGLAB_ENUMERATE_HPP

#include <functional>

#include "dglab/classify.hpp"
#include "dglab/table.hpp"

namespace dglab {

enum class TableClass {
  all,
  semigroup,
  monoid,
  regular,
  inverse,
  literal_dg,
  strict_dg,
  group,
};

const char* to_token(TableClass c);
TableClass table_class_from_token(std::string_view token);  // throws std::invalid_argument

bool in_class(const ClassificationReport& r, TableClass c);

/// Exhaustive table generation with generic single-letter element names.
///
/// Orders 1..3 are produced by a full n^(n^2) scan in lexicographic
/// (row-major, value-ascending) order; order 4 requires an
/// associativity-based filter (semigroup or stronger) and runs the pruned
/// backtracking search.  Output order is lexicographic for both paths and
/// independent of the worker count.  Throws std::invalid_argument for
/// out-of-range orders or an unprunable order-4 filter.
std::vector<CayleyTable> enumerate_tables(int order, TableClass filter, int workers = 1);

/// The full scan used for orders <= 3 (any filter).
std::vector<CayleyTable> enumerate_tables_scan(int order, TableClass filter, int workers = 1);

/// Cell-by-cell backtracking over the product matrix, rejecting a prefix as
/// soon as a fully-determined associativity triple fails.  Returns exactly
/// the associative tables, lexicographically.  Valid for orders 1..4.
std::vector<CayleyTable> enumerate_semigroups_pruned(int order, int workers = 1);

/// Lexicographically least row-major product matrix over all relabelings,
/// as a digit string.  Two tables are isomorphic as magmas iff their
/// canonical forms agree.  Order <= 7.
std::string canonical_form(const CayleyTable& table);

/// The canonical table itself (letter names), plus the relabeling that maps
/// the input onto it when requested: newIndex = perm[oldIndex].
CayleyTable canonicalize(const CayleyTable& table, std::vector<int>* perm = nullptr);

/// Builds a table over letter names a, b, ... from a row-major digit string.
CayleyTable table_from_encoding(std::string_view encoding);

}  // namespace dglab

#endif  // DGLAB_ENUMERATE_HPP
