#include "polycount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycount/census.hpp"
#include "polycount/oracle.hpp"
#include "polycount/sweep.hpp"
#include "polycount/verify.hpp"

namespace polycount::cli {

namespace {

using nlohmann::json;
using i64 = std::int64_t;

constexpr const char* kCensusSchema = "polycount.census/1";
constexpr const char* kVerifySchema = "polycount.verify/1";
constexpr const char* kBenchSchema = "polycount.bench/1";

/// A usage or range problem detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

void require_min_n(i64 n, const std::string& flag) {
  if (n < 3) {
    throw UsageError(flag + " must be at least 3 (polygons need three sides), got " +
                     std::to_string(n));
  }
}

// ---------------------------------------------------------------- count

struct CountArgs {
  i64 n = 0;
  std::optional<i64> m;
  bool cyclic = false;
  std::vector<std::string> methods{"closed"};
  std::string format = "plain";
};

Count evaluate(const std::string& method, const CountArgs& a) {
  const i64 n = a.n;
  if (method == "closed") {
    if (a.m) return a.cyclic ? count_mgons_cyclic(n, *a.m) : count_mgons(n, *a.m);
    return a.cyclic ? count_polygons_cyclic(n) : count_polygons(n);
  }
  if (method == "burnside") {
    if (a.m) {
      return a.cyclic ? count_mgons_cyclic_via_burnside(n, *a.m) : count_mgons_via_burnside(n, *a.m);
    }
    return a.cyclic ? count_polygons_cyclic_via_burnside(n) : count_polygons_via_burnside(n);
  }
  const auto group = a.cyclic ? oracle::Group::Cyclic : oracle::Group::Dihedral;
  if (a.m && (*a.m < 3 || *a.m > n)) return 0;
  std::optional<std::uint32_t> weight;
  if (a.m) weight = static_cast<std::uint32_t>(*a.m);
  return oracle::orbit_count(static_cast<std::uint32_t>(n), group, weight);
}

int cmd_count(const CountArgs& a, std::ostream& out) {
  require_min_n(a.n, "--n");
  const bool uses_oracle =
      std::find(a.methods.begin(), a.methods.end(), "oracle") != a.methods.end();
  if (uses_oracle && a.n > static_cast<i64>(oracle::kMaxN)) {
    throw UsageError("--method oracle supports n <= " + std::to_string(oracle::kMaxN) +
                     ", got " + std::to_string(a.n));
  }

  std::vector<std::pair<std::string, Count>> results;
  for (const auto& method : a.methods) results.emplace_back(method, evaluate(method, a));
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& r) { return r.second == results.front().second; });

  if (a.format == "json") {
    json report;
    report["schema"] = kCensusSchema;
    report["query"] = {{"n", a.n},
                       {"m", a.m ? json(*a.m) : json(nullptr)},
                       {"group", a.cyclic ? "cyclic" : "dihedral"}};
    json rows = json::array();
    for (const auto& [method, value] : results) {
      rows.push_back({{"method", method}, {"value", value.get_str()}});
    }
    report["results"] = rows;
    if (results.size() > 1) report["agree"] = agree;
    out << report.dump(2) << '\n';
  } else if (results.size() == 1) {
    out << results.front().second.get_str() << '\n';
  } else {
    for (const auto& [method, value] : results) out << method << ' ' << value.get_str() << '\n';
    out << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return agree ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------- bfile

struct BfileArgs {
  std::string family;
  std::optional<i64> m;
  std::optional<i64> from;
  i64 to = 0;
  std::optional<i64> offset;
  std::string out_path;
  unsigned jobs = 0;
};

int cmd_bfile(const BfileArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown sequence family '" + a.family + "'");
  SequenceSpec spec;
  spec.family = *family;
  if (family_needs_m(*family)) {
    if (!a.m) throw UsageError("family " + a.family + " needs --m");
    spec.m = *a.m;
  }
  spec.first = a.from.value_or(spec.natural_first());
  spec.last = a.to;
  spec.offset = a.offset;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const unsigned jobs = a.jobs == 0 ? default_jobs() : a.jobs;
  if (a.out_path.empty()) {
    write_bfile(spec, jobs, out);
    return kSuccess;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + a.out_path + " for writing");
  write_bfile(spec, jobs, file);
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  VerifyOptions options;
  std::string format = "plain";
  std::string inject_fault;  // "N,M" or "N"
};

Formulas with_fault(const std::string& spec) {
  Formulas f;
  i64 fault_n = 0;
  std::optional<i64> fault_m;
  std::istringstream in(spec);
  char comma = 0;
  if (!(in >> fault_n)) throw UsageError("--inject-fault expects N or N,M");
  if (in >> comma) {
    i64 m = 0;
    if (comma != ',' || !(in >> m)) throw UsageError("--inject-fault expects N or N,M");
    fault_m = m;
  }
  if (fault_m) {
    f.mgons = [fault_n, fault_m](i64 n, i64 m) {
      Count v = count_mgons(n, m);
      if (n == fault_n && m == *fault_m) v += 1;
      return v;
    };
  } else {
    f.polygons = [fault_n](i64 n) {
      Count v = count_polygons(n);
      if (n == fault_n) v += 1;
      return v;
    };
  }
  return f;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.options.max_n > oracle::kMaxN) {
    throw UsageError("--max-n " + std::to_string(a.options.max_n) + " exceeds the oracle bound " +
                     std::to_string(oracle::kMaxN));
  }
  if (a.options.max_n < 3) throw UsageError("--max-n must be at least 3");
  const Formulas formulas = a.inject_fault.empty() ? Formulas{} : with_fault(a.inject_fault);
  const VerifyReport report = run_verification(a.options, formulas);
  const CheckRecord* failure = report.first_failure();

  if (a.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"n", c.n},
                        {"m", c.m ? json(*c.m) : json(nullptr)},
                        {"check", c.check},
                        {"detail", c.detail},
                        {"agree", c.agree}});
    }
    json doc = {{"schema", kVerifySchema},
                {"max_n", a.options.max_n},
                {"seed", a.options.seed},
                {"probes", a.options.probes},
                {"ok", failure == nullptr},
                {"checks", checks}};
    out << doc.dump(2) << '\n';
  } else if (!failure) {
    out << "verified " << report.checks.size() << " checks for 3 <= n <= " << a.options.max_n
        << " (seed " << a.options.seed << "): all agree\n";
  }
  if (failure) {
    err << "verification failed at n=" << failure->n;
    if (failure->m) err << " m=" << *failure->m;
    err << " [" << failure->check << "] " << failure->detail << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  i64 n = 0;
  unsigned repeat = 1;
  std::string format = "plain";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  require_min_n(a.n, "--n");
  if (a.repeat == 0) throw UsageError("--repeat must be positive");

  std::vector<double> seconds;
  std::vector<std::uint64_t> fingerprints;
  std::size_t digits = 0;
  for (unsigned r = 0; r < a.repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const Count p = count_polygons(a.n);
    const std::string decimal = p.get_str();
    const auto stop = std::chrono::steady_clock::now();
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
    fingerprints.push_back(fnv1a64(decimal));
    digits = decimal.size();
  }
  const bool reproducible = std::all_of(fingerprints.begin(), fingerprints.end(),
                                        [&](auto f) { return f == fingerprints.front(); });
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fingerprints.front();

  if (a.format == "json") {
    json doc = {{"schema", kBenchSchema},      {"n", a.n},
                {"digits", digits},            {"seconds", seconds},
                {"fnv1a64", hex.str()},        {"reproducible", reproducible}};
    out << doc.dump(2) << '\n';
  } else {
    out << "n " << a.n << '\n' << "digits " << digits << '\n';
    for (double s : seconds) out << "seconds " << std::fixed << std::setprecision(6) << s << '\n';
    out << "fnv1a64 " << hex.str() << '\n';
    if (a.repeat > 1) out << "reproducible " << (reproducible ? "yes" : "no") << '\n';
  }
  return reproducible ? kSuccess : kVerificationFailed;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_table(i64 max_n, TableFormat format, unsigned jobs, std::ostream& out) {
  if (max_n < 3) throw std::invalid_argument("table needs max-n >= 3");

  // column n holds p_{3,n}, ..., p_{n,n}, then p_n
  auto columns = ordered_sweep<std::vector<std::string>>(3, max_n, jobs, [](i64 n) {
    std::vector<std::string> col;
    for (i64 m = 3; m <= n; ++m) col.push_back(count_mgons(n, m).get_str());
    col.push_back(count_polygons(n).get_str());
    return col;
  });
  auto cell = [&](i64 m, i64 n) -> const std::string& {
    static const std::string blank;
    return m > n ? blank : columns[n - 3][m - 3];
  };
  auto total = [&](i64 n) -> const std::string& { return columns[n - 3].back(); };

  if (format == TableFormat::Csv) {
    out << "m\\n";
    for (i64 n = 3; n <= max_n; ++n) out << ',' << n;
    out << '\n';
    for (i64 m = 3; m <= max_n; ++m) {
      out << m;
      for (i64 n = 3; n <= max_n; ++n) out << ',' << cell(m, n);
      out << '\n';
    }
    out << "p_n";
    for (i64 n = 3; n <= max_n; ++n) out << ',' << total(n);
    out << '\n';
    return;
  }

  std::size_t width = std::to_string(max_n).size();
  for (i64 n = 3; n <= max_n; ++n) {
    for (const auto& v : columns[n - 3]) width = std::max(width, v.size());
  }
  const int w = static_cast<int>(width) + 1;
  auto row = [&](const std::string& label, auto value_of) {
    std::ostringstream line;
    line << std::left << std::setw(4) << label << std::right;
    for (i64 n = 3; n <= max_n; ++n) line << std::setw(w) << value_of(n);
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  };
  row("m\\n", [](i64 n) { return std::to_string(n); });
  for (i64 m = 3; m <= max_n; ++m) {
    row(std::to_string(m), [&](i64 n) { return cell(m, n); });
  }
  out << '\n';
  row("n", [](i64 n) { return std::to_string(n); });
  row("p_n", [&](i64 n) { return total(n); });
}

void write_bfile(const SequenceSpec& spec, unsigned jobs, std::ostream& out) {
  spec.validate();
  const auto values = ordered_sweep<std::string>(spec.first, spec.last, jobs,
                                                 [&](i64 n) { return spec.value(n).get_str(); });
  for (i64 n = spec.first; n <= spec.last; ++n) {
    out << spec.printed_index(n) << ' ' << values[n - spec.first] << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts inequivalent integer polygons and m-gons of a given perimeter", "polycount"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count polygons (or m-gons) with perimeter n");
  count->add_option("--n", count_args.n, "Perimeter")->required();
  count->add_option("--m", count_args.m, "Number of sides (omit for all polygons)");
  count->add_flag("--cyclic", count_args.cyclic, "Identify rotations only, not reflections");
  count->add_option("--method", count_args.methods,
                    "closed, burnside or oracle; repeat or comma-separate to cross-check")
      ->delimiter(',')
      ->check(CLI::IsMember({"closed", "burnside", "oracle"}))
      ->capture_default_str();
  count->add_option("--format", count_args.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  i64 table_max_n = 0;
  std::string table_format = "plain";
  unsigned table_jobs = 0;
  auto* table = app.add_subcommand("table", "Print the p_{m,n} triangle and the p_n row");
  table->add_option("--max-n", table_max_n, "Largest perimeter")->required();
  table->add_option("--format", table_format, "plain or csv")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  table->add_option("--jobs", table_jobs, "Worker threads (0 = all cores)");

  BfileArgs bfile_args;
  auto* bfile = app.add_subcommand("bfile", "Write an OEIS-style b-file");
  bfile->add_option("--family", bfile_args.family,
                    "pmn, pn, pmn-cyclic, pn-cyclic, triangles-nearest, quadrilaterals-nearest")
      ->required();
  bfile->add_option("--m", bfile_args.m, "Number of sides for pmn families");
  bfile->add_option("--from", bfile_args.from, "First n (default: start of the family)");
  bfile->add_option("--to", bfile_args.to, "Last n")->required();
  bfile->add_option("--offset", bfile_args.offset, "Index printed for the first term");
  bfile->add_option("--out", bfile_args.out_path, "Output path (default: standard output)");
  bfile->add_option("--jobs", bfile_args.jobs, "Worker threads (0 = all cores)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against the brute-force oracle");
  verify->add_option("--max-n", verify_args.options.max_n, "Largest perimeter checked")
      ->capture_default_str();
  verify->add_option("--seed", verify_args.options.seed, "Seed for randomized probes")
      ->capture_default_str();
  verify->add_option("--probes", verify_args.options.probes, "Number of randomized probes")
      ->capture_default_str();
  verify->add_option("--format", verify_args.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
  verify->add_option("--inject-fault", verify_args.inject_fault)->group("");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the computation of p_n");
  bench->add_option("--n", bench_args.n, "Perimeter")->required();
  bench->add_option("--repeat", bench_args.repeat, "Number of runs")->capture_default_str();
  bench->add_option("--format", bench_args.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count) return cmd_count(count_args, out);
    if (*table) {
      if (table_max_n < 3) {
        throw UsageError("--max-n must be at least 3, got " + std::to_string(table_max_n));
      }
      write_table(table_max_n, table_format == "csv" ? TableFormat::Csv : TableFormat::Plain,
                  table_jobs == 0 ? default_jobs() : table_jobs, out);
      return kSuccess;
    }
    if (*bfile) return cmd_bfile(bfile_args, out);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*bench) return cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const oracle::OracleBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace polycount::cli
