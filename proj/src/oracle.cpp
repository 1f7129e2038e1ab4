#include "polycount/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace polycount::oracle {

namespace {

void require_scale(std::uint32_t n) {
  if (n < 3 || n > kMaxN) {
    throw OracleBoundError("oracle accepts 3 <= n <= " + std::to_string(kMaxN) + ", got " +
                           std::to_string(n));
  }
}

void require_weight(std::optional<std::uint32_t> m, std::uint32_t n) {
  if (m && *m > n) {
    throw std::invalid_argument("weight " + std::to_string(*m) + " exceeds n = " +
                                std::to_string(n));
  }
}

std::uint32_t mask_of(std::uint32_t n) { return static_cast<std::uint32_t>((1ULL << n) - 1); }

// Moves every entry from position x to position x + q (mod n).
std::uint32_t rotate(std::uint32_t word, std::uint32_t q, std::uint32_t n) {
  if (q == 0) return word;
  const std::uint64_t w = word;
  return static_cast<std::uint32_t>(((w >> q) | (w << (n - q))) & mask_of(n));
}

// Moves every entry from position x to position n - 1 - x.
std::uint32_t reverse(std::uint32_t word, std::uint32_t n) {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    out = (out << 1) | ((word >> i) & 1U);
  }
  return out;
}

bool is_canonical(std::uint32_t word, std::uint32_t n, Group group) {
  for (std::uint32_t q = 1; q < n; ++q) {
    if (rotate(word, q, n) < word) return false;
  }
  if (group == Group::Dihedral) {
    const std::uint32_t rev = reverse(word, n);
    for (std::uint32_t q = 0; q < n; ++q) {
      if (rotate(rev, q, n) < word) return false;
    }
  }
  return true;
}

bool in_set(std::uint32_t word, std::uint32_t n, TupleSet set) {
  switch (set) {
    case TupleSet::All: return true;
    case TupleSet::Good: return is_good_by_sides(word, n);
    case TupleSet::Bad: return !is_good_by_sides(word, n);
  }
  return false;
}

// Splits [0, 2^n) across workers; `visit(word, tally)` adds into a
// per-worker tally indexed by weight. Tallies are summed afterwards, so the
// result does not depend on the number of workers.
template <class Visit>
std::vector<Count> scan_by_weight(std::uint32_t n, Visit visit) {
  const std::uint64_t total = 1ULL << n;
  const unsigned workers =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1U, total >= (1U << 16) ? 64U : 1U);
  std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t word = begin; word < end; ++word) {
      visit(static_cast<std::uint32_t>(word), tallies[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::vector<Count> out(n + 1, 0);
  for (const auto& t : tallies) {
    for (std::uint32_t k = 0; k <= n; ++k) out[k] += static_cast<unsigned long>(t[k]);
  }
  return out;
}

Count select(const std::vector<Count>& by_weight, std::optional<std::uint32_t> m) {
  if (m) return by_weight[*m];
  Count sum = 0;
  for (const auto& c : by_weight) sum += c;
  return sum;
}

}  // namespace

std::uint32_t pack(const CircularTuple& a) {
  if (a.size() > kMaxN) {
    throw OracleBoundError("tuple of length " + std::to_string(a.size()) +
                           " exceeds the oracle bound");
  }
  std::uint32_t word = 0;
  for (std::size_t i = 0; i < a.size(); ++i) word = (word << 1) | a[i];
  return word;
}

CircularTuple unpack(std::uint32_t word, std::uint32_t n) {
  CircularTuple a(n);
  for (std::uint32_t i = 0; i < n; ++i) a.set(i, (word >> (n - 1 - i)) & 1U);
  return a;
}

std::uint32_t act(const GroupElement& sigma, std::uint32_t word) {
  const std::uint32_t n = sigma.n();
  if (sigma.is_rotation()) return rotate(word, sigma.q(), n);
  // x -> q - x is x -> n - 1 - x followed by a shift of q + 1.
  return rotate(reverse(word, n), (sigma.q() + 1) % n, n);
}

bool is_good_by_sides(std::uint32_t word, std::uint32_t n) {
  if (std::popcount(word) < 3) return false;
  // Walking set bits from low to high visits the corners in reverse circular
  // order, which leaves the multiset of side lengths unchanged.
  const std::uint32_t first = std::countr_zero(word);
  std::uint32_t previous = first;
  std::uint32_t rest = word & (word - 1);
  while (rest != 0) {
    const std::uint32_t corner = std::countr_zero(rest);
    if (2 * (corner - previous) >= n) return false;
    previous = corner;
    rest &= rest - 1;
  }
  return 2 * (n - previous + first) < n;
}

CircularTuple canonical_form(const CircularTuple& a, Group group) {
  const auto n = static_cast<std::uint32_t>(a.size());
  if (n == 0) return a;
  const std::uint32_t word = pack(a);
  std::uint32_t best = word;
  for (std::uint32_t q = 1; q < n; ++q) best = std::min(best, rotate(word, q, n));
  if (group == Group::Dihedral) {
    const std::uint32_t rev = reverse(word, n);
    for (std::uint32_t q = 0; q < n; ++q) best = std::min(best, rotate(rev, q, n));
  }
  return unpack(best, n);
}

std::vector<Count> orbit_counts_by_weight(std::uint32_t n, Group group) {
  require_scale(n);
  // Each orbit contributes exactly one tuple equal to its own canonical form.
  return scan_by_weight(n, [n, group](std::uint32_t word, std::vector<std::uint64_t>& tally) {
    if (is_good_by_sides(word, n) && is_canonical(word, n, group)) ++tally[std::popcount(word)];
  });
}

Count orbit_count(std::uint32_t n, Group group, std::optional<std::uint32_t> m) {
  require_scale(n);
  require_weight(m, n);
  return select(orbit_counts_by_weight(n, group), m);
}

std::vector<Count> fix_counts_by_weight(std::uint32_t n, const GroupElement& sigma,
                                        TupleSet set) {
  require_scale(n);
  if (sigma.n() != n) throw std::invalid_argument("group element acts on a different n");
  return scan_by_weight(n, [n, &sigma, set](std::uint32_t word, std::vector<std::uint64_t>& tally) {
    if (act(sigma, word) == word && in_set(word, n, set)) ++tally[std::popcount(word)];
  });
}

Count fix_count_direct(std::uint32_t n, const GroupElement& sigma, TupleSet set,
                       std::optional<std::uint32_t> m) {
  require_scale(n);
  require_weight(m, n);
  return select(fix_counts_by_weight(n, sigma, set), m);
}

}  // namespace polycount::oracle
