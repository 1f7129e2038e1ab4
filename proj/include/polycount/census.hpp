#ifndef POLYCOUNT_CENSUS_HPP
#define POLYCOUNT_CENSUS_HPP

// Counts of inequivalent integer polygons and m-gons with a given perimeter.
//
// Two routes are provided for every dihedral and cyclic count: the
// simplified closed forms, and a direct Burnside average of the per-class
// fix counts from fixcount.hpp. They must agree exactly.

#include <cstdint>
#include <stdexcept>

#include "polycount/numtheory.hpp"

namespace polycount {

/// Raised when a Burnside fix sum is not divisible by the group order.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// p_{m,n}: m-gons with perimeter n up to rotation and reflection.
/// Zero whenever m < 3 or m > n.
Count count_mgons(std::int64_t n, std::int64_t m);

/// p_n: polygons with perimeter n up to rotation and reflection. Requires n >= 3.
Count count_polygons(std::int64_t n);

/// p_n evaluated from the unsimplified intermediate expression (before the
/// totient identity is used to cancel the halves). Requires n >= 3.
Count count_polygons_intermediate(std::int64_t n);

Count count_polygons_via_burnside(std::int64_t n);
Count count_mgons_via_burnside(std::int64_t n, std::int64_t m);

/// p'_{m,n}: m-gons up to rotation only. Zero whenever m < 3 or m > n.
Count count_mgons_cyclic(std::int64_t n, std::int64_t m);
/// p'_n: polygons up to rotation only. Requires n >= 3.
Count count_polygons_cyclic(std::int64_t n);

Count count_polygons_cyclic_via_burnside(std::int64_t n);
Count count_mgons_cyclic_via_burnside(std::int64_t n, std::int64_t m);

/// Nearest integer to n^2/48 (n even) or (n+3)^2/48 (n odd). Requires n >= 1.
Count triangles_nearest(std::int64_t n);

/// Nearest integer to (n^3 - 3n^2 + 20n)/96 (n even) or (n^3 - 7n)/96 (n odd).
/// Requires n >= 1.
Count quadrilaterals_nearest(std::int64_t n);

/// The exact quadrilateral count split by n mod 4:
///   0: (n^3 - 3n^2 + 20n)/96      1: (n^3 - 7n + 6)/96
///   2: (n^3 - 3n^2 + 20n - 36)/96 3: (n^3 - 7n - 6)/96
ExactRational quadrilaterals_piecewise(std::int64_t n);

/// 2^(n-1) / n.
ExactRational asymptotic_polygons(std::int64_t n);

/// (2^(m-1) - m) / (2^m m!), the leading coefficient of p_{m,n} in n.
ExactRational asymptotic_mgons_coefficient(std::int64_t m);

/// asymptotic_mgons_coefficient(m) * n^(m-1).
ExactRational asymptotic_mgons(std::int64_t m, std::int64_t n);

/// sum over d | n of phi(d) * 2^(n/d - 1). Divisible by n for every n >= 3.
Count necklace_half_sum(std::int64_t n);

}  // namespace polycount

#endif  // POLYCOUNT_CENSUS_HPP
