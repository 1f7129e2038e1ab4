#include "polycount/census.hpp"

#include <numeric>
#include <string>

#include "polycount/fixcount.hpp"
#include "polycount/model.hpp"

namespace polycount {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

void require_perimeter(i64 n, i64 minimum, const char* what) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(minimum) +
                                ", got " + std::to_string(n));
  }
}

Count exact_divide(const Count& numerator, i64 divisor, const char* what) {
  Count q, r;
  const Count den(divisor);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InternalError(std::string(what) + ": sum " + numerator.get_str() +
                        " is not divisible by " + std::to_string(divisor));
  }
  return q;
}

Count to_integer(const ExactRational& x, const char* what) {
  if (x.get_den() != 1) {
    throw InternalError(std::string(what) + " is not an integer: " + x.get_str());
  }
  return x.get_num();
}

// phi(d) * 2^e without materialising 2^e separately.
Count totient_times_pow2(u64 d, u64 e) {
  Count r(static_cast<unsigned long>(totient(d)));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

// sum over d | gcd(m, n) of phi(d) * C(n/d, m/d)
Count rotation_binomial_sum(i64 n, i64 m) {
  Count sum = 0;
  const auto g = static_cast<u64>(std::gcd(n, m));
  for (u64 d : divisors(g)) {
    const auto di = static_cast<i64>(d);
    sum += Count(static_cast<unsigned long>(totient(d))) * binomial(n / di, m / di);
  }
  return sum;
}

// sum over sigma in C_n of fix(sigma), grouped by rotation order.
Count rotation_fix_sum(i64 n, i64 m, bool by_weight) {
  Count sum = 0;
  for (u64 d : divisors(static_cast<u64>(n))) {
    const ElementClass cls = d == 1 ? ElementClass{Identity{}} : ElementClass{RotationOfOrder{d}};
    Count fix = by_weight ? fix_mgons(n, m, cls) : fix_polygons(n, cls);
    sum += Count(static_cast<unsigned long>(totient(d))) * fix;
  }
  return sum;
}

Count reflection_fix_sum(i64 n, i64 m, bool by_weight) {
  auto fix = [&](const ElementClass& cls) {
    return by_weight ? fix_mgons(n, m, cls) : fix_polygons(n, cls);
  };
  if (n % 2 == 1) return Count(n) * fix(ReflectionOdd{});
  return Count(n / 2) * fix(ReflectionEvenNoFixedPoint{}) +
         Count(n / 2) * fix(ReflectionEvenTwoFixedPoints{});
}

}  // namespace

Count count_mgons(i64 n, i64 m) {
  if (m < 3 || m > n) return 0;
  const Count rotations = rotation_binomial_sum(n, m);
  const std::optional<i64> half_m = exact_quotient(m, 2);
  const Count bracket = binomial(m / 2 + floor_div(n - m, 2), m / 2) - binomial(n / 2, m - 1) -
                        binomial(n / 4, m / 2) - binomial((n + 2) / 4, half_m);
  return exact_divide(rotations + Count(n) * bracket, 2 * n, "count_mgons");
}

Count count_polygons(i64 n) {
  require_perimeter(n, 3, "count_polygons");
  Count p = exact_divide(necklace_half_sum(n), n, "count_polygons");
  p += pow2(static_cast<u64>((n - 3) / 2));
  if (n % 4 == 0 || n % 4 == 1) {
    p -= 3 * pow2(static_cast<u64>((n - 4) / 4));
  } else {
    p -= pow2(static_cast<u64>((n + 2) / 4));
  }
  return p;
}

Count count_polygons_intermediate(i64 n) {
  require_perimeter(n, 3, "count_polygons_intermediate");
  Count weighted = 0;
  for (u64 d : divisors(static_cast<u64>(n))) {
    weighted += Count(static_cast<unsigned long>(totient(d))) *
                (pow2(static_cast<u64>(n) / d) - 1);
  }
  ExactRational p = make_rational(weighted, Count(2 * n));
  p -= pow2(static_cast<u64>(n / 2 - 1));
  const ExactRational half(1, 2);
  switch (n % 4) {
    case 0:
      p += 3 * pow2((n - 4) / 2) - 3 * pow2((n - 4) / 4) + half;
      break;
    case 1:
      p += pow2((n - 1) / 2) - 3 * pow2((n - 5) / 4) + half;
      break;
    case 2:
      p += 3 * pow2((n - 4) / 2) - pow2((n + 2) / 4) + half;
      break;
    default:
      p += pow2((n - 1) / 2) - pow2((n + 1) / 4) + half;
      break;
  }
  return to_integer(p, "count_polygons_intermediate");
}

Count count_polygons_via_burnside(i64 n) {
  require_perimeter(n, 3, "count_polygons_via_burnside");
  const Count total = rotation_fix_sum(n, 0, false) + reflection_fix_sum(n, 0, false);
  return exact_divide(total, 2 * n, "dihedral Burnside sum");
}

Count count_mgons_via_burnside(i64 n, i64 m) {
  require_perimeter(n, 3, "count_mgons_via_burnside");
  if (m < 3 || m > n) return 0;
  const Count total = rotation_fix_sum(n, m, true) + reflection_fix_sum(n, m, true);
  return exact_divide(total, 2 * n, "dihedral Burnside sum");
}

Count count_mgons_cyclic(i64 n, i64 m) {
  if (m < 3 || m > n) return 0;
  return exact_divide(rotation_binomial_sum(n, m), n, "count_mgons_cyclic") -
         binomial(n / 2, m - 1);
}

Count count_polygons_cyclic(i64 n) {
  require_perimeter(n, 3, "count_polygons_cyclic");
  Count sum = 0;
  for (u64 d : divisors(static_cast<u64>(n))) {
    sum += totient_times_pow2(d, static_cast<u64>(n) / d);
  }
  return exact_divide(sum, n, "count_polygons_cyclic") - 1 - pow2(static_cast<u64>(n / 2));
}

Count count_polygons_cyclic_via_burnside(i64 n) {
  require_perimeter(n, 3, "count_polygons_cyclic_via_burnside");
  return exact_divide(rotation_fix_sum(n, 0, false), n, "cyclic Burnside sum");
}

Count count_mgons_cyclic_via_burnside(i64 n, i64 m) {
  require_perimeter(n, 3, "count_mgons_cyclic_via_burnside");
  if (m < 3 || m > n) return 0;
  return exact_divide(rotation_fix_sum(n, m, true), n, "cyclic Burnside sum");
}

Count triangles_nearest(i64 n) {
  require_perimeter(n, 1, "triangles_nearest");
  const Count base = n % 2 == 0 ? Count(n) : Count(n + 3);
  return nearest_integer(make_rational(base * base, Count(48)));
}

Count quadrilaterals_nearest(i64 n) {
  require_perimeter(n, 1, "quadrilaterals_nearest");
  const Count x(n);
  Count numerator;
  if (n % 2 == 0) {
    numerator = x * x * x - 3 * x * x + 20 * x;
  } else {
    numerator = x * x * x - 7 * x;
  }
  return nearest_integer(make_rational(numerator, Count(96)));
}

ExactRational quadrilaterals_piecewise(i64 n) {
  const Count x(n);
  const Count cube = x * x * x;
  Count numerator;
  switch (n % 4) {
    case 0: numerator = cube - 3 * x * x + 20 * x; break;
    case 1: numerator = cube - 7 * x + 6; break;
    case 2: numerator = cube - 3 * x * x + 20 * x - 36; break;
    default: numerator = cube - 7 * x - 6; break;
  }
  return make_rational(numerator, Count(96));
}

ExactRational asymptotic_polygons(i64 n) {
  require_perimeter(n, 3, "asymptotic_polygons");
  return make_rational(pow2(static_cast<u64>(n - 1)), Count(n));
}

ExactRational asymptotic_mgons_coefficient(i64 m) {
  if (m < 3) throw std::invalid_argument("asymptotic_mgons_coefficient requires m >= 3");
  Count factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(m));
  return make_rational(pow2(static_cast<u64>(m - 1)) - m, pow2(static_cast<u64>(m)) * factorial);
}

ExactRational asymptotic_mgons(i64 m, i64 n) {
  require_perimeter(n, 3, "asymptotic_mgons");
  Count power;
  const Count base(n);
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m - 1));
  return asymptotic_mgons_coefficient(m) * ExactRational(power);
}

Count necklace_half_sum(i64 n) {
  if (n < 1) throw std::invalid_argument("necklace_half_sum requires n >= 1");
  Count sum = 0;
  for (u64 d : divisors(static_cast<u64>(n))) {
    sum += totient_times_pow2(d, static_cast<u64>(n) / d - 1);
  }
  return sum;
}

}  // namespace polycount
