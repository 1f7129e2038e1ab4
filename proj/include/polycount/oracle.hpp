#ifndef POLYCOUNT_ORACLE_HPP
#define POLYCOUNT_ORACLE_HPP

// Brute-force ground truth. Every count here comes from scanning all 2^n
// tuples; nothing is derived from the fix-set lemmas or the closed forms.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polycount/model.hpp"
#include "polycount/numtheory.hpp"

namespace polycount::oracle {

/// Largest perimeter the exhaustive scans accept.
inline constexpr std::uint32_t kMaxN = 24;

class OracleBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Group { Dihedral, Cyclic };
enum class TupleSet { Good, Bad, All };

/// Packed form: position i lives in bit n-1-i, so numeric order on words is
/// lexicographic order on tuples.
std::uint32_t pack(const CircularTuple& a);
CircularTuple unpack(std::uint32_t word, std::uint32_t n);

/// sigma . a on packed words.
std::uint32_t act(const GroupElement& sigma, std::uint32_t word);

/// Good means at least three corners and every side shorter than n/2.
bool is_good_by_sides(std::uint32_t word, std::uint32_t n);

/// Lexicographically least tuple in the orbit of `a`. Requires a.size() <= kMaxN.
CircularTuple canonical_form(const CircularTuple& a, Group group);

/// Number of orbits of good tuples (of weight m when given).
Count orbit_count(std::uint32_t n, Group group, std::optional<std::uint32_t> m = std::nullopt);

/// Orbit counts of good tuples for every weight 0..n in one scan.
std::vector<Count> orbit_counts_by_weight(std::uint32_t n, Group group);

/// Number of tuples in `set` (of weight m when given) fixed by sigma.
Count fix_count_direct(std::uint32_t n, const GroupElement& sigma, TupleSet set,
                       std::optional<std::uint32_t> m = std::nullopt);

/// fix_count_direct for every weight 0..n in one scan.
std::vector<Count> fix_counts_by_weight(std::uint32_t n, const GroupElement& sigma,
                                        TupleSet set);

}  // namespace polycount::oracle

#endif  // POLYCOUNT_ORACLE_HPP
