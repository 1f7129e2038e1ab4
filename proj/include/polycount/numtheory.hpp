#ifndef POLYCOUNT_NUMTHEORY_HPP
#define POLYCOUNT_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace polycount {

/// Arbitrary-precision integer holding every enumeration result.
/// Results produced by the counting routines are never negative.
using Count = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using ExactRational = mpq_class;

/// Raised by nearest_integer() when its argument is exactly k + 1/2.
class HalfIntegerError : public std::domain_error {
 public:
  explicit HalfIntegerError(const ExactRational& x);
};

/// Ascending list of the positive divisors of n. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient. Throws std::invalid_argument for n == 0.
std::uint64_t totient(std::uint64_t n);

/// Binomial coefficient with the convention that it vanishes whenever k < 0 or k > x.
Count binomial(std::int64_t x, std::int64_t k);

/// Same convention, extended to lower arguments that are not integers: an
/// empty optional stands for a fractional argument such as m/2 with m odd,
/// and the coefficient is zero.
Count binomial(std::int64_t x, std::optional<std::int64_t> k);

/// a / b when b divides a, otherwise empty.
std::optional<std::int64_t> exact_quotient(std::int64_t a, std::int64_t b);

/// 2^e as a Count.
Count pow2(std::uint64_t e);

/// num / den in lowest terms. Throws std::invalid_argument for den == 0.
ExactRational make_rational(const mpz_class& num, const mpz_class& den);

/// The integer nearest to x. Throws HalfIntegerError when x is a half-integer.
mpz_class nearest_integer(const ExactRational& x);

/// Floor division for possibly negative numerators, positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace polycount

#endif  // POLYCOUNT_NUMTHEORY_HPP
