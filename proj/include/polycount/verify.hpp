#ifndef POLYCOUNT_VERIFY_HPP
#define POLYCOUNT_VERIFY_HPP

// Cross-checks the closed forms, the Burnside assembly and the brute-force
// oracle against one another for every perimeter up to a bound.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polycount/census.hpp"
#include "polycount/fixcount.hpp"

namespace polycount {

/// The formulas under test. Tests swap entries out to confirm that a wrong
/// formula is caught.
struct Formulas {
  std::function<Count(std::int64_t, std::int64_t)> mgons = count_mgons;
  std::function<Count(std::int64_t)> polygons = count_polygons;
  std::function<Count(std::int64_t, std::int64_t)> mgons_cyclic = count_mgons_cyclic;
  std::function<Count(std::int64_t)> polygons_cyclic = count_polygons_cyclic;
  std::function<Count(std::uint64_t, const ElementClass&)> fix_polygons = polycount::fix_polygons;
  std::function<Count(std::uint64_t, std::uint64_t, const ElementClass&)> fix_mgons =
      polycount::fix_mgons;
};

struct VerifyOptions {
  std::uint32_t max_n = 14;
  std::uint64_t seed = 20171017;
  std::uint32_t probes = 200;
};

struct CheckRecord {
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::string check;  // e.g. "closed-vs-oracle"
  std::string detail;  // element, or the values on disagreement
  bool agree = true;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> checks;

  bool ok() const;
  const CheckRecord* first_failure() const;
};

/// Throws oracle::OracleBoundError when max_n exceeds the oracle bound.
VerifyReport run_verification(const VerifyOptions& options, const Formulas& formulas = {});

}  // namespace polycount

#endif  // POLYCOUNT_VERIFY_HPP
