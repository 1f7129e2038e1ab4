#ifndef POLYCOUNT_MODEL_HPP
#define POLYCOUNT_MODEL_HPP

// Circular 0/1 tuples, the dihedral action on them, and the correspondence
// between good tuples and integer polygons.
//
// Positions are 0-based throughout: position i is circle point i + 1. A group
// element with parameter q acts on positions by x -> q + x (rotation) or
// x -> q - x (reflection), both taken mod n.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polycount/numtheory.hpp"

namespace polycount {

class NotAPolygonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CircularTuple {
 public:
  /// All-zero tuple of length n.
  explicit CircularTuple(std::size_t n);
  explicit CircularTuple(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, leftmost = position 0.
  static CircularTuple parse(std::string_view text);
  /// Bit i of `word` becomes position i.
  static CircularTuple from_word(std::uint64_t word, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string str() const;

  friend bool operator==(const CircularTuple&, const CircularTuple&) = default;
  friend auto operator<=>(const CircularTuple&, const CircularTuple&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class GroupElement {
 public:
  enum class Kind { Rotation, Reflection };

  static GroupElement rotation(std::uint32_t n, std::int64_t q);
  static GroupElement reflection(std::uint32_t n, std::int64_t q);
  static GroupElement identity(std::uint32_t n) { return rotation(n, 0); }

  std::uint32_t n() const { return n_; }
  Kind kind() const { return kind_; }
  std::uint32_t q() const { return q_; }
  bool is_rotation() const { return kind_ == Kind::Rotation; }

  /// Image of position x.
  std::uint32_t operator()(std::uint32_t x) const;
  GroupElement inverse() const;

  /// Composition (*this after other).
  GroupElement operator*(const GroupElement& other) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// All 2n elements: rotations q = 0..n-1, then reflections q = 0..n-1.
  static std::vector<GroupElement> dihedral(std::uint32_t n);
  /// The n rotations.
  static std::vector<GroupElement> cyclic(std::uint32_t n);

 private:
  GroupElement(std::uint32_t n, Kind kind, std::uint32_t q) : n_(n), kind_(kind), q_(q) {}

  std::uint32_t n_;
  Kind kind_;
  std::uint32_t q_;
};

struct Identity {
  friend bool operator==(Identity, Identity) = default;
};
struct RotationOfOrder {
  std::uint64_t d;
  friend bool operator==(RotationOfOrder, RotationOfOrder) = default;
};
struct ReflectionOdd {
  friend bool operator==(ReflectionOdd, ReflectionOdd) = default;
};
struct ReflectionEvenNoFixedPoint {
  friend bool operator==(ReflectionEvenNoFixedPoint, ReflectionEvenNoFixedPoint) = default;
};
struct ReflectionEvenTwoFixedPoints {
  friend bool operator==(ReflectionEvenTwoFixedPoints, ReflectionEvenTwoFixedPoints) = default;
};

/// Which fix-set formula applies to a group element.
using ElementClass = std::variant<Identity, RotationOfOrder, ReflectionOdd,
                                  ReflectionEvenNoFixedPoint, ReflectionEvenTwoFixedPoints>;

std::string to_string(const ElementClass& cls);

struct SideLengths {
  std::vector<std::uint64_t> sides;

  std::size_t m() const { return sides.size(); }
  std::uint64_t perimeter() const;
  friend bool operator==(const SideLengths&, const SideLengths&) = default;
};

/// sigma . a, i.e. the tuple whose entry at sigma(x) is a[x].
CircularTuple apply(const GroupElement& sigma, const CircularTuple& a);

std::uint64_t element_order(const GroupElement& sigma);

ElementClass classify(const GroupElement& sigma);

/// True when no circular block of 0's reaches the bad length
/// (floor(n/2) - 1 for even n, floor(n/2) for odd n).
bool is_good(const CircularTuple& a);

std::uint64_t weight(const CircularTuple& a);

/// Gaps between consecutive corners, starting at the lowest corner position.
/// Throws NotAPolygonError for bad tuples.
SideLengths to_sides(const CircularTuple& a);

}  // namespace polycount

#endif  // POLYCOUNT_MODEL_HPP
