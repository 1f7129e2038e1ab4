#include "polycount/fixcount.hpp"

#include <string>

namespace polycount {

namespace {

using i64 = std::int64_t;

void check_class(std::uint64_t n, const ElementClass& cls) {
  if (n < 3) throw std::invalid_argument("fix counts need n >= 3, got " + std::to_string(n));
  const bool even = n % 2 == 0;
  if (const auto* r = std::get_if<RotationOfOrder>(&cls)) {
    if (r->d <= 1 || n % r->d != 0) {
      throw std::invalid_argument("rotation order " + std::to_string(r->d) +
                                  " is not a nontrivial divisor of " + std::to_string(n));
    }
  } else if (std::holds_alternative<ReflectionOdd>(cls) && even) {
    throw std::invalid_argument("odd-n reflection class used with even n");
  } else if ((std::holds_alternative<ReflectionEvenNoFixedPoint>(cls) ||
              std::holds_alternative<ReflectionEvenTwoFixedPoints>(cls)) &&
             !even) {
    throw std::invalid_argument("even-n reflection class used with odd n");
  }
}

// Each visitor below mirrors one lemma branch literally; no terms are merged.

struct PolygonFix {
  i64 n;

  Count operator()(Identity) const {
    Count r = pow2(n) - 1 - Count(n) * pow2(n / 2);
    if (n % 2 == 0) r += n / 2;
    return r;
  }
  Count operator()(RotationOfOrder rot) const {
    const i64 d = static_cast<i64>(rot.d);
    Count r = pow2(n / d) - 1;
    if (d == 2) r -= n / 2;
    return r;
  }
  Count operator()(ReflectionOdd) const {
    if (n % 4 == 1) return pow2((n + 1) / 2) - 3 * pow2((n - 1) / 4) + 1;
    return pow2((n + 1) / 2) - pow2((n + 5) / 4) + 1;
  }
  Count operator()(ReflectionEvenNoFixedPoint) const {
    if (n % 4 == 0) return pow2(n / 2) - pow2((n + 4) / 4) + 1;
    return pow2(n / 2) - pow2((n + 6) / 4) + 2;
  }
  Count operator()(ReflectionEvenTwoFixedPoints) const {
    if (n % 4 == 0) return pow2((n + 2) / 2) - pow2((n + 8) / 4) + 1;
    return pow2((n + 2) / 2) - pow2((n + 6) / 4);
  }
};

struct MgonFix {
  i64 n;
  i64 m;

  Count operator()(Identity) const {
    return binomial(n, m) - Count(n) * binomial(n / 2, m - 1);
  }
  Count operator()(RotationOfOrder rot) const {
    const i64 d = static_cast<i64>(rot.d);
    return binomial(n / d, exact_quotient(m, d));
  }
  Count operator()(ReflectionOdd) const {
    return binomial(n / 2, m / 2) - binomial(n / 4, m / 2) -
           binomial((n + 2) / 4, exact_quotient(m, 2));
  }
  Count operator()(ReflectionEvenNoFixedPoint) const {
    return binomial(n / 2, exact_quotient(m, 2)) -
           2 * binomial((n + 2) / 4, exact_quotient(m, 2));
  }
  Count operator()(ReflectionEvenTwoFixedPoints) const {
    if (m % 2 == 0) return binomial(n / 2, m / 2) - 2 * binomial(n / 4, m / 2);
    return 2 * binomial(n / 2 - 1, m / 2) - 2 * binomial(n / 4, m / 2);
  }
};

}  // namespace

Count fix_polygons(std::uint64_t n, const ElementClass& cls) {
  check_class(n, cls);
  return std::visit(PolygonFix{static_cast<i64>(n)}, cls);
}

Count fix_mgons(std::uint64_t n, std::uint64_t m, const ElementClass& cls) {
  check_class(n, cls);
  if (m < 3 || m > n) {
    throw std::invalid_argument("m = " + std::to_string(m) + " outside [3, " +
                                std::to_string(n) + "]");
  }
  return std::visit(MgonFix{static_cast<i64>(n), static_cast<i64>(m)}, cls);
}

}  // namespace polycount
