#include "polycount/numtheory.hpp"

#include <algorithm>
#include <string>

namespace polycount {

HalfIntegerError::HalfIntegerError(const ExactRational& x)
    : std::domain_error("no nearest integer to half-integer " + x.get_str()) {}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Count binomial(std::int64_t x, std::int64_t k) {
  if (x < 0 || k < 0 || k > x) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(k));
  return r;
}

Count binomial(std::int64_t x, std::optional<std::int64_t> k) {
  return k ? binomial(x, *k) : Count(0);
}

std::optional<std::int64_t> exact_quotient(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0) return std::nullopt;
  return a / b;
}

Count pow2(std::uint64_t e) {
  Count r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

ExactRational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

mpz_class nearest_integer(const ExactRational& x) {
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (den == 2) throw HalfIntegerError(x);
  // floor(x + 1/2) = floor((2 num + den) / (2 den))
  mpz_class shifted = 2 * num + den;
  mpz_class twice_den = 2 * den;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

}  // namespace polycount
