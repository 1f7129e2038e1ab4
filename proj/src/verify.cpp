#include "polycount/verify.hpp"

#include <random>

#include "polycount/model.hpp"
#include "polycount/oracle.hpp"

namespace polycount {

namespace {

using i64 = std::int64_t;

std::string describe(const GroupElement& sigma) {
  return std::string(sigma.is_rotation() ? "rotation" : "reflection") +
         " q=" + std::to_string(sigma.q());
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void compare(i64 n, std::optional<i64> m, std::string check, const Count& lhs,
               const Count& rhs, std::string detail = {}) {
    CheckRecord r{n, m, std::move(check), std::move(detail), lhs == rhs};
    if (!r.agree) {
      if (!r.detail.empty()) r.detail += ": ";
      r.detail += lhs.get_str() + " != " + rhs.get_str();
    }
    report_.checks.push_back(std::move(r));
  }

  void expect(i64 n, std::string check, bool holds, std::string detail) {
    report_.checks.push_back(CheckRecord{n, std::nullopt, std::move(check), std::move(detail), holds});
  }

 private:
  VerifyReport& report_;
};

void check_counts(i64 n, const Formulas& f, Recorder& rec) {
  const auto un = static_cast<std::uint32_t>(n);
  const auto dihedral = oracle::orbit_counts_by_weight(un, oracle::Group::Dihedral);
  const auto cyclic = oracle::orbit_counts_by_weight(un, oracle::Group::Cyclic);

  Count row_sum = 0, cyclic_row_sum = 0, oracle_total = 0, oracle_cyclic_total = 0;
  for (i64 m = 3; m <= n; ++m) {
    const Count closed = f.mgons(n, m);
    const Count closed_cyclic = f.mgons_cyclic(n, m);
    rec.compare(n, m, "closed-vs-burnside", closed, count_mgons_via_burnside(n, m));
    rec.compare(n, m, "closed-vs-oracle", closed, dihedral[m]);
    rec.compare(n, m, "cyclic-closed-vs-burnside", closed_cyclic,
                count_mgons_cyclic_via_burnside(n, m));
    rec.compare(n, m, "cyclic-closed-vs-oracle", closed_cyclic, cyclic[m]);
    row_sum += closed;
    cyclic_row_sum += closed_cyclic;
  }
  for (i64 k = 0; k <= n; ++k) {
    oracle_total += dihedral[k];
    oracle_cyclic_total += cyclic[k];
  }

  const Count polygons = f.polygons(n);
  const Count polygons_cyclic = f.polygons_cyclic(n);
  rec.compare(n, std::nullopt, "closed-vs-burnside", polygons, count_polygons_via_burnside(n));
  rec.compare(n, std::nullopt, "closed-vs-intermediate", polygons,
              count_polygons_intermediate(n));
  rec.compare(n, std::nullopt, "closed-vs-oracle", polygons, oracle_total);
  rec.compare(n, std::nullopt, "column-sum", polygons, row_sum);
  rec.compare(n, std::nullopt, "cyclic-closed-vs-burnside", polygons_cyclic,
              count_polygons_cyclic_via_burnside(n));
  rec.compare(n, std::nullopt, "cyclic-closed-vs-oracle", polygons_cyclic, oracle_cyclic_total);
  rec.compare(n, std::nullopt, "cyclic-column-sum", polygons_cyclic, cyclic_row_sum);
}

void check_fix_sets(i64 n, const Formulas& f, Recorder& rec) {
  const auto un = static_cast<std::uint32_t>(n);
  for (const GroupElement& sigma : GroupElement::dihedral(un)) {
    const auto good = oracle::fix_counts_by_weight(un, sigma, oracle::TupleSet::Good);
    const auto bad = oracle::fix_counts_by_weight(un, sigma, oracle::TupleSet::Bad);
    const auto all = oracle::fix_counts_by_weight(un, sigma, oracle::TupleSet::All);
    const ElementClass cls = classify(sigma);
    const std::string what = describe(sigma) + " (" + to_string(cls) + ")";

    Count good_total = 0, bad_total = 0, all_total = 0;
    for (i64 k = 0; k <= n; ++k) {
      good_total += good[k];
      bad_total += bad[k];
      all_total += all[k];
    }
    rec.compare(n, std::nullopt, "good-plus-bad-vs-all", good_total + bad_total, all_total, what);
    rec.compare(n, std::nullopt, "fix-lemma-vs-direct", f.fix_polygons(un, cls), good_total, what);
    for (i64 m = 3; m <= n; ++m) {
      rec.compare(n, m, "good-plus-bad-vs-all", good[m] + bad[m], all[m], what);
      rec.compare(n, m, "fix-lemma-vs-direct", f.fix_mgons(un, m, cls), good[m], what);
    }
  }
}

void run_probes(const VerifyOptions& options, Recorder& rec) {
  std::mt19937_64 rng(options.seed);
  const std::uint32_t top = std::min<std::uint32_t>(options.max_n, 16);
  std::uniform_int_distribution<std::uint32_t> pick_n(3, std::max<std::uint32_t>(3, top));

  for (std::uint32_t probe = 0; probe < options.probes; ++probe) {
    const std::uint32_t n = pick_n(rng);
    std::uniform_int_distribution<std::uint32_t> pick_q(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> pick_word(0, (1U << n) - 1);
    auto random_element = [&] {
      const std::uint32_t q = pick_q(rng);
      return (rng() & 1U) ? GroupElement::rotation(n, q) : GroupElement::reflection(n, q);
    };
    const GroupElement sigma = random_element();
    const GroupElement tau = random_element();
    const CircularTuple a = oracle::unpack(pick_word(rng), n);
    const std::string what = "a=" + a.str() + " sigma=" + describe(sigma) + " tau=" + describe(tau);

    rec.expect(n, "probe-action-law", apply(sigma * tau, a) == apply(sigma, apply(tau, a)), what);
    rec.expect(n, "probe-identity", apply(GroupElement::identity(n), a) == a, what);
    const CircularTuple moved = apply(sigma, a);
    rec.expect(n, "probe-invariants",
               weight(moved) == weight(a) && is_good(moved) == is_good(a) &&
                   is_good(a) == oracle::is_good_by_sides(oracle::pack(a), n),
               what);
    for (auto group : {oracle::Group::Dihedral, oracle::Group::Cyclic}) {
      const CircularTuple canon = oracle::canonical_form(a, group);
      const bool closed_under_group = group == oracle::Group::Dihedral || sigma.is_rotation();
      bool holds = oracle::canonical_form(canon, group) == canon;
      if (closed_under_group) holds = holds && oracle::canonical_form(moved, group) == canon;
      rec.expect(n, group == oracle::Group::Dihedral ? "probe-canonical-dihedral"
                                                    : "probe-canonical-cyclic",
                 holds, what);
    }
  }
}

}  // namespace

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckRecord* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.agree) return &c;
  }
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options, const Formulas& formulas) {
  if (options.max_n > oracle::kMaxN) {
    throw oracle::OracleBoundError("verify --max-n " + std::to_string(options.max_n) +
                                   " exceeds the oracle bound " + std::to_string(oracle::kMaxN));
  }
  VerifyReport report{options, {}};
  Recorder rec(report);
  for (i64 n = 3; n <= static_cast<i64>(options.max_n); ++n) {
    check_counts(n, formulas, rec);
    check_fix_sets(n, formulas, rec);
  }
  if (options.max_n >= 3) run_probes(options, rec);
  return report;
}

}  // namespace polycount
