#include "polycount/model.hpp"

#include <numeric>

namespace polycount {

namespace {

std::uint32_t reduce(std::int64_t q, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((q % m) + m) % m);
}

void require_same_size(const GroupElement& sigma, const CircularTuple& a) {
  if (sigma.n() != a.size()) {
    throw std::invalid_argument("group element acts on " + std::to_string(sigma.n()) +
                                " points, tuple has length " + std::to_string(a.size()));
  }
}

}  // namespace

CircularTuple::CircularTuple(std::size_t n) : bits_(n, 0) {}

CircularTuple::CircularTuple(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("tuple entries must be 0 or 1");
  }
}

CircularTuple CircularTuple::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("tuple text may only contain '0' and '1'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return CircularTuple(std::move(bits));
}

CircularTuple CircularTuple::from_word(std::uint64_t word, std::size_t n) {
  CircularTuple t(n);
  for (std::size_t i = 0; i < n; ++i) t.bits_[i] = (word >> i) & 1U;
  return t;
}

std::string CircularTuple::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

GroupElement GroupElement::rotation(std::uint32_t n, std::int64_t q) {
  if (n == 0) throw std::invalid_argument("group element on zero points");
  return GroupElement(n, Kind::Rotation, reduce(q, n));
}

GroupElement GroupElement::reflection(std::uint32_t n, std::int64_t q) {
  if (n == 0) throw std::invalid_argument("group element on zero points");
  return GroupElement(n, Kind::Reflection, reduce(q, n));
}

std::uint32_t GroupElement::operator()(std::uint32_t x) const {
  const std::int64_t xi = x;
  return kind_ == Kind::Rotation ? reduce(q_ + xi, n_) : reduce(std::int64_t{q_} - xi, n_);
}

GroupElement GroupElement::inverse() const {
  if (kind_ == Kind::Reflection) return *this;
  return rotation(n_, -std::int64_t{q_});
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("composing elements of different groups");
  const std::int64_t a = q_, b = other.q_;
  if (is_rotation()) {
    return other.is_rotation() ? rotation(n_, a + b) : reflection(n_, a + b);
  }
  return other.is_rotation() ? reflection(n_, a - b) : rotation(n_, a - b);
}

std::vector<GroupElement> GroupElement::dihedral(std::uint32_t n) {
  std::vector<GroupElement> out;
  out.reserve(2 * std::size_t{n});
  for (std::uint32_t q = 0; q < n; ++q) out.push_back(rotation(n, q));
  for (std::uint32_t q = 0; q < n; ++q) out.push_back(reflection(n, q));
  return out;
}

std::vector<GroupElement> GroupElement::cyclic(std::uint32_t n) {
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::uint32_t q = 0; q < n; ++q) out.push_back(rotation(n, q));
  return out;
}

std::string to_string(const ElementClass& cls) {
  struct Visitor {
    std::string operator()(Identity) const { return "identity"; }
    std::string operator()(RotationOfOrder r) const {
      return "rotation of order " + std::to_string(r.d);
    }
    std::string operator()(ReflectionOdd) const { return "reflection (odd n)"; }
    std::string operator()(ReflectionEvenNoFixedPoint) const {
      return "reflection (even n, no fixed point)";
    }
    std::string operator()(ReflectionEvenTwoFixedPoints) const {
      return "reflection (even n, two fixed points)";
    }
  };
  return std::visit(Visitor{}, cls);
}

std::uint64_t SideLengths::perimeter() const {
  return std::accumulate(sides.begin(), sides.end(), std::uint64_t{0});
}

CircularTuple apply(const GroupElement& sigma, const CircularTuple& a) {
  require_same_size(sigma, a);
  CircularTuple out(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) out.set(sigma(x), a[x]);
  return out;
}

std::uint64_t element_order(const GroupElement& sigma) {
  if (!sigma.is_rotation()) return 2;
  return sigma.n() / std::gcd(sigma.n(), sigma.q());
}

ElementClass classify(const GroupElement& sigma) {
  if (sigma.is_rotation()) {
    if (sigma.q() == 0) return Identity{};
    return RotationOfOrder{element_order(sigma)};
  }
  if (sigma.n() % 2 == 1) return ReflectionOdd{};
  // 2x = q (mod n) is soluble exactly when q is even.
  if (sigma.q() % 2 == 0) return ReflectionEvenTwoFixedPoints{};
  return ReflectionEvenNoFixedPoint{};
}

bool is_good(const CircularTuple& a) {
  const std::size_t n = a.size();
  const std::size_t k = n / 2;
  const std::size_t bad_length = (n % 2 == 0) ? k - 1 : k;

  std::size_t first_one = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i]) {
      first_one = i;
      break;
    }
  }
  if (first_one == n) return false;

  // Walk once around the circle starting just after a 1, so that the
  // wrap-around block is seen in one piece.
  std::size_t run = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (a[(first_one + step) % n]) {
      run = 0;
    } else if (++run >= bad_length) {
      return false;
    }
  }
  return true;
}

std::uint64_t weight(const CircularTuple& a) {
  std::uint64_t w = 0;
  for (auto b : a.bits()) w += b;
  return w;
}

SideLengths to_sides(const CircularTuple& a) {
  if (a.size() < 3 || weight(a) < 3 || !is_good(a)) {
    throw NotAPolygonError("tuple " + a.str() + " does not correspond to a polygon");
  }
  std::vector<std::size_t> corners;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) corners.push_back(i);
  }
  SideLengths out;
  out.sides.reserve(corners.size());
  for (std::size_t j = 0; j + 1 < corners.size(); ++j) {
    out.sides.push_back(corners[j + 1] - corners[j]);
  }
  out.sides.push_back(a.size() + corners.front() - corners.back());
  return out;
}

}  // namespace polycount
