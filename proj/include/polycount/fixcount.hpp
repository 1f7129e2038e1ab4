#ifndef POLYCOUNT_FIXCOUNT_HPP
#define POLYCOUNT_FIXCOUNT_HPP

// Closed-form sizes of the sets of good n-tuples (optionally of weight m)
// left unchanged by a dihedral group element, one branch per element class.

#include <cstdint>

#include "polycount/model.hpp"
#include "polycount/numtheory.hpp"

namespace polycount {

/// Number of good n-tuples fixed by any element of class `cls`.
/// Throws std::invalid_argument when n < 3, when the class does not exist
/// for the parity of n, or when a rotation order does not divide n.
Count fix_polygons(std::uint64_t n, const ElementClass& cls);

/// Number of good n-tuples of weight m fixed by any element of class `cls`.
/// Same errors as fix_polygons, plus m outside [3, n].
Count fix_mgons(std::uint64_t n, std::uint64_t m, const ElementClass& cls);

}  // namespace polycount

#endif  // POLYCOUNT_FIXCOUNT_HPP
