#ifndef DGLAB_EXAMPLES_HPP
#define DGLAB_EXAMPLES_HPP

#include <string_view>
#include <vector>

#include "dglab/table.hpp"

namespace dglab {

/// Named witness tables:
///   Z1 Z2 Z3 Z4 Z6 Z12  cyclic groups (Z2..Z4 on {e,c,c2,...}, Z6/Z12 on 0..n-1)
///   S3                  symmetric group on three letters, names e (12) (13) (23) (123) (132)
///   LZ2, LZ<k>, RZ2     left-zero (x*y = x) and right-zero (x*y = y) tables
///   SL2                 min-semilattice on {0,1}
///   B2                  Brandt table on {e11,e12,e21,e22,0}: (i,j)(k,l) = (i,l) if j=k else 0
///   I2                  the 7 partial injections on two points under composition
/// Throws std::invalid_argument for unknown names.
CayleyTable builtin_example(std::string_view name);

/// Names accepted by builtin_example, in documentation order.
std::vector<std::string> builtin_names();

}  // namespace dglab

#endif  // DGLAB_EXAMPLES_HPP
