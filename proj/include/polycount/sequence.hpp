#ifndef POLYCOUNT_SEQUENCE_HPP
#define POLYCOUNT_SEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polycount/numtheory.hpp"

namespace polycount {

enum class Family {
  Mgons,                  // p_{m,n}, m fixed
  Polygons,               // p_n
  MgonsCyclic,            // p'_{m,n}, m fixed
  PolygonsCyclic,         // p'_n
  TrianglesNearest,       // [n^2/48] or [(n+3)^2/48]
  QuadrilateralsNearest,  // [(n^3-3n^2+20n)/96] or [(n^3-7n)/96]
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);
bool family_needs_m(Family family);

/// A sequence in n together with the inclusive range of n to emit.
struct SequenceSpec {
  Family family = Family::Polygons;
  std::int64_t m = 0;  // only meaningful when family_needs_m()
  std::int64_t first = 3;
  std::int64_t last = 3;
  /// Index printed for n = first in a b-file; defaults to `first`.
  std::optional<std::int64_t> offset;

  /// Smallest n for which the family is defined.
  std::int64_t natural_first() const;

  /// Throws std::invalid_argument if m or the range is unusable.
  void validate() const;

  Count value(std::int64_t n) const;

  std::int64_t printed_index(std::int64_t n) const { return n - first + offset.value_or(first); }
};

}  // namespace polycount

#endif  // POLYCOUNT_SEQUENCE_HPP
