#include "polycount/sequence.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "polycount/census.hpp"

namespace polycount {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::Mgons, "pmn"},
    {Family::Polygons, "pn"},
    {Family::MgonsCyclic, "pmn-cyclic"},
    {Family::PolygonsCyclic, "pn-cyclic"},
    {Family::TrianglesNearest, "triangles-nearest"},
    {Family::QuadrilateralsNearest, "quadrilaterals-nearest"},
}};

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, text] : kNames) {
    if (text == name) return family;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [f, text] : kNames) {
    if (f == family) return text;
  }
  return "?";
}

bool family_needs_m(Family family) {
  return family == Family::Mgons || family == Family::MgonsCyclic;
}

std::int64_t SequenceSpec::natural_first() const {
  switch (family) {
    case Family::Mgons:
    case Family::MgonsCyclic:
      return m;
    case Family::Polygons:
    case Family::PolygonsCyclic:
      return 3;
    case Family::TrianglesNearest:
    case Family::QuadrilateralsNearest:
      return 1;
  }
  return 3;
}

void SequenceSpec::validate() const {
  if (family_needs_m(family) && m < 3) {
    throw std::invalid_argument("family " + std::string(family_name(family)) +
                                " needs m >= 3, got " + std::to_string(m));
  }
  if (first < natural_first()) {
    throw std::invalid_argument("family " + std::string(family_name(family)) +
                                " starts at n = " + std::to_string(natural_first()) +
                                ", range starts at " + std::to_string(first));
  }
  if (last < first) {
    throw std::invalid_argument("empty range " + std::to_string(first) + ".." +
                                std::to_string(last));
  }
}

Count SequenceSpec::value(std::int64_t n) const {
  switch (family) {
    case Family::Mgons: return count_mgons(n, m);
    case Family::Polygons: return count_polygons(n);
    case Family::MgonsCyclic: return count_mgons_cyclic(n, m);
    case Family::PolygonsCyclic: return count_polygons_cyclic(n);
    case Family::TrianglesNearest: return triangles_nearest(n);
    case Family::QuadrilateralsNearest: return quadrilaterals_nearest(n);
  }
  throw std::logic_error("unknown sequence family");
}

}  // namespace polycount
