#include "mstd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mstd/asymptotics.hpp"
#include "mstd/bbs.hpp"
#include "mstd/construction.hpp"
#include "mstd/density.hpp"
#include "mstd/error.hpp"
#include "mstd/golden.hpp"
#include "mstd/intset.hpp"
#include "mstd/reference.hpp"

namespace mstd::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  int threads = 0;
  int census_limit = kDefaultCensusLimit;

  void emit(const Json& row) const {
    Json tagged = {{"schema", kSchemaVersion}};
    tagged.update(row);
    out << tagged.dump() << '\n';
  }
};

std::string fmt(double x, int precision = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadArgument, "expected N or A..B, got '" + text + "'");
  }
}

// ------------------------------------------------------------------- bbs

int bbs_count(const Context& ctx, const std::string& range_text, const std::string& engine) {
  const Range range = parse_range(range_text);
  if (range.lo < 1 || range.hi < range.lo) {
    throw Error(ErrorCode::kBadArgument, "bbs count: need 1 <= A <= B");
  }
  if (!ctx.json) ctx.out << "n,B_n\n";
  int status = kExitOk;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    BigCount value;
    if (engine == "dp") {
      value = count_bbs_dp(n, ctx.threads);
    } else if (engine == "reflection") {
      value = count_bbs_reflection(n, ctx.threads);
    } else {
      value = count_bbs_reflection(n, ctx.threads);
      const BigCount other = count_bbs_dp(n, ctx.threads);
      if (value != other) {
        ctx.err << "engine mismatch at n=" << n << ": reflection=" << value << " dp=" << other << '\n';
        status = kExitVerification;
      }
    }
    if (ctx.json) ctx.emit({{"n", n}, {"B_n", to_string(value)}});
    else ctx.out << n << ',' << value << '\n';
  }
  return status;
}

int bbs_list(const Context& ctx, int n) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "bbs list: n must be >= 1");
  if (!ctx.json) ctx.out << "sequence\n";
  BbsStream stream(n);
  while (auto s = stream.next()) {
    if (ctx.json) ctx.emit({{"sequence", s->to_string()}});
    else ctx.out << s->to_string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- tables

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<GoldenCount> load_table1(const std::string& path) {
  if (path.empty()) return golden_table1();
  std::vector<GoldenCount> out;
  for (auto& [n, value] : parse_golden_csv(read_file(path))) out.push_back({n, BigCount(value, 10)});
  return out;
}

std::vector<GoldenRatio> load_table2(const std::string& path) {
  if (path.empty()) return golden_table2();
  std::vector<GoldenRatio> out;
  for (auto& [n, value] : parse_golden_csv(read_file(path))) out.push_back({n, value});
  return out;
}

int table1(const Context& ctx, const std::string& golden_path) {
  if (!ctx.json) ctx.out << "n,dp,reflection,golden,match\n";
  int status = kExitOk;
  for (const auto& row : load_table1(golden_path)) {
    const BigCount dp = count_bbs_dp(row.n, ctx.threads);
    const BigCount refl = count_bbs_reflection(row.n, ctx.threads);
    const bool match = dp == row.value && refl == row.value;
    if (!match) status = kExitVerification;
    if (ctx.json) {
      ctx.emit({{"n", row.n}, {"dp", to_string(dp)}, {"reflection", to_string(refl)},
                {"golden", to_string(row.value)}, {"match", match}});
    } else {
      ctx.out << row.n << ',' << dp << ',' << refl << ',' << row.value << ',' << (match ? 1 : 0) << '\n';
    }
  }
  return status;
}

int table2(const Context& ctx, const std::vector<std::int64_t>& ns, int digits,
           const std::string& golden_path) {
  const auto golden = load_table2(golden_path);
  if (digits < 0) throw Error(ErrorCode::kBadArgument, "table2: digits must be >= 0");
  if (!ctx.json) ctx.out << "n,ratio,golden,match\n";
  int status = kExitOk;
  for (auto n : ns) {
    const RatioValue value = ratio_value(n, digits, ctx.threads);
    const auto it = std::find_if(golden.begin(), golden.end(), [n](const auto& g) { return g.n == n; });
    std::string golden_text;
    std::optional<bool> match;
    if (it != golden.end()) {
      golden_text = it->decimal;
      match = render_rounded(value.value, it->digits()) == it->decimal;
      if (!*match) status = kExitVerification;
    }
    if (ctx.json) {
      Json row = {{"n", n}, {"ratio", value.decimal}, {"golden", nullptr}, {"match", nullptr}};
      if (match) {
        row["golden"] = golden_text;
        row["match"] = *match;
      }
      ctx.emit(row);
    } else {
      ctx.out << n << ',' << value.decimal << ',' << golden_text << ',';
      if (match) ctx.out << (*match ? 1 : 0);
      ctx.out << '\n';
    }
  }
  return status;
}

// ------------------------------------------------------------- mstd check

int mstd_check(const Context& ctx, const std::vector<int>& elements) {
  if (elements.empty()) throw Error(ErrorCode::kBadArgument, "mstd check: --set needs at least one element");
  // MSTD status is translation invariant; move the set into [0, max - min].
  const int lo = *std::min_element(elements.begin(), elements.end());
  const int hi = *std::max_element(elements.begin(), elements.end());
  IntSet s(hi - lo + 1);
  for (int x : elements) s.insert(x - lo);
  const SumDiffSizes sizes = sum_diff_sizes(s);
  if (ctx.json) {
    ctx.emit({{"sum", sizes.sums}, {"diff", sizes.diffs}, {"mstd", sizes.mstd()}});
  } else {
    ctx.out << "sum=" << sizes.sums << " diff=" << sizes.diffs << " mstd=" << (sizes.mstd() ? "true" : "false")
            << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- construct

int construct_cmd(const Context& ctx, int n, bool list, bool verify) {
  FamilyStream stream(n);
  std::int64_t family = 0;
  std::int64_t verified = 0;
  std::vector<std::vector<int>> listed;
  while (auto s = stream.next()) {
    ++family;
    const std::vector<int> members = s->members();
    if (verify) {
      const SumDiffSizes sizes = naive_sum_diff_sizes(members);
      const bool ok = sizes.mstd() && sizes.sums == 2 * n - 2 && sizes.diffs <= 2 * n - 3;
      if (ok) ++verified;
      else ctx.err << "verification failed for " << s->to_string() << '\n';
    }
    if (list) listed.push_back(members);
  }
  const bool failed = verify && verified != family;
  if (ctx.json) {
    Json summary = {{"n", n}, {"family", family}};
    if (verify) summary["verified"] = verified;
    ctx.emit(summary);
    for (auto& m : listed) ctx.emit({{"set", m}});
  } else {
    ctx.out << "family=" << family;
    if (verify) ctx.out << " verified=" << verified;
    ctx.out << '\n';
    for (auto& m : listed) {
      for (std::size_t i = 0; i < m.size(); ++i) ctx.out << (i ? " " : "") << m[i];
      ctx.out << '\n';
    }
  }
  return failed ? kExitVerification : kExitOk;
}

// ---------------------------------------------------------------- density

int density_out(const Context& ctx, const DensityEstimate& est) {
  if (ctx.json) {
    ctx.emit(Json::parse(est.to_json()));
  } else {
    ctx.out << DensityEstimate::csv_header() << '\n' << est.to_csv_row() << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------ asymptotics

int asymptotics_cmd(const Context& ctx, const std::string& which, const std::vector<std::int64_t>& grid,
                    double t, std::int64_t samples, std::uint64_t seed) {
  if (which == "normal") {
    if (!ctx.json) ctx.out << "n,t,index,value,limit,rel_error\n";
    for (auto n : grid) {
      const double value = normal_approx_check(n, t);
      const double limit = normal_limit(t);
      const double rel = std::abs(value - limit) / limit;
      if (ctx.json) {
        ctx.emit({{"n", n}, {"t", t}, {"index", normal_index(n, t)}, {"value", value},
                  {"limit", limit}, {"rel_error", rel}});
      } else {
        ctx.out << n << ',' << fmt(t) << ',' << normal_index(n, t) << ',' << fmt(value) << ','
                << fmt(limit) << ',' << fmt(rel) << '\n';
      }
    }
  } else if (which == "conjecture") {
    if (!ctx.json) ctx.out << "n,residual,first_order,second_order\n";
    for (auto n : grid) {
      const Rational frac = bbs_fraction(n, ctx.threads);
      const double first = nearest_double(frac * n);
      const BigCount nn = n;
      const double second = nearest_double((frac - Rational(1, 4 * nn)) * nn * nn);
      const double residual = conjecture_residual(n, ctx.threads);
      if (ctx.json) {
        ctx.emit({{"n", n}, {"residual", residual}, {"first_order", first}, {"second_order", second}});
      } else {
        ctx.out << n << ',' << fmt(residual) << ',' << fmt(first) << ',' << fmt(second) << '\n';
      }
    }
  } else if (which == "pn") {
    if (!ctx.json) ctx.out << "n,p_n,n_p_n\n";
    for (auto n : grid) {
      const Rational p = random_walk_pn(n, ctx.threads);
      const double np = nearest_double(p * n);
      if (ctx.json) ctx.emit({{"n", n}, {"p_n", to_string(p)}, {"n_p_n", np}});
      else ctx.out << n << ',' << render_rounded(p, 20) << ',' << fmt(np) << '\n';
    }
  } else if (which == "pn-mc") {
    if (!ctx.json) ctx.out << "n,samples,hits,estimate,exact,seed\n";
    for (auto n : grid) {
      const WalkSimulation sim = simulate_pn(n, samples, seed, ctx.threads);
      const double exact = nearest_double(random_walk_pn(n, ctx.threads));
      if (ctx.json) {
        ctx.emit({{"n", n}, {"samples", samples}, {"hits", sim.hits}, {"estimate", sim.estimate()},
                  {"exact", exact}, {"seed", seed}});
      } else {
        ctx.out << n << ',' << samples << ',' << sim.hits << ',' << fmt(sim.estimate()) << ','
                << fmt(exact) << ',' << seed << '\n';
      }
    }
  } else if (which == "footnote") {
    if (!ctx.json) ctx.out << "n,value,scaled\n";
    for (auto n : grid) {
      const double value = nearest_double(one_sided_min_prob(n));
      const double scaled = std::sqrt(std::numbers::pi * static_cast<double>(n) / 2) * value;
      if (ctx.json) ctx.emit({{"n", n}, {"value", value}, {"scaled", scaled}});
      else ctx.out << n << ',' << fmt(value) << ',' << fmt(scaled) << '\n';
    }
  } else if (which == "bounded") {
    if (!ctx.json) ctx.out << "n,scaled,limit\n";
    for (auto n : grid) {
      const double scaled = bounded_walk_scaled(n);
      if (ctx.json) ctx.emit({{"n", n}, {"scaled", scaled}, {"limit", bounded_walk_limit()}});
      else ctx.out << n << ',' << fmt(scaled) << ',' << fmt(bounded_walk_limit()) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of MSTD sets and bidirectional ballot sequences", "mstd"};
  app.require_subcommand(1);

  bool json_output = false;
  int threads = 0;
  int census_limit = kDefaultCensusLimit;
  app.add_flag("--json", json_output, "Emit one JSON object per line instead of CSV");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->envname("MSTD_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--census-limit", census_limit, "Largest window for exhaustive census")
      ->envname("MSTD_CENSUS_LIMIT")
      ->check(CLI::Range(1, kMaxCensusWindow));
  app.set_version_flag("--version", "mstd schema " + std::to_string(kSchemaVersion));

  // bbs count / bbs list
  auto* bbs = app.add_subcommand("bbs", "Bidirectional ballot sequences");
  bbs->require_subcommand(1);
  std::string bbs_range;
  std::string engine = "reflection";
  auto* bbs_count_cmd = bbs->add_subcommand("count", "Count B(n) for a range of n");
  bbs_count_cmd->add_option("--n", bbs_range, "N or A..B")->required();
  bbs_count_cmd->add_option("--engine", engine, "dp, reflection or both")
      ->check(CLI::IsMember({"dp", "reflection", "both"}));
  int list_n = 0;
  auto* bbs_list_cmd = bbs->add_subcommand("list", "List every sequence of one length");
  bbs_list_cmd->add_option("--n", list_n, "Sequence length")->required();

  std::string golden_path;
  auto* table1_cmd = app.add_subcommand("table1", "Reproduce B(1..24) and compare with reference values");
  table1_cmd->add_option("--golden", golden_path, "Reference CSV to compare against instead of the built-in one");

  std::vector<std::int64_t> table2_ns{100, 1000};
  int digits = 12;
  auto* table2_cmd = app.add_subcommand("table2", "n B(n) / 2^(n-2) for selected n");
  table2_cmd->add_option("--n", table2_ns, "Comma-separated list of n")->delimiter(',');
  table2_cmd->add_option("--digits", digits, "Digits after the decimal point");
  table2_cmd->add_option("--golden", golden_path, "Reference CSV to compare against instead of the built-in one");

  auto* mstd_cmd = app.add_subcommand("mstd", "Sum and difference set sizes");
  mstd_cmd->require_subcommand(1);
  std::vector<int> set_elements;
  auto* check_cmd = mstd_cmd->add_subcommand("check", "Test one set");
  check_cmd->add_option("--set", set_elements, "Comma-separated elements")->delimiter(',')->required();

  int construct_n = 0;
  bool construct_list = false;
  bool construct_verify = false;
  auto* construct_cmd_ = app.add_subcommand("construct", "Enumerate the explicit MSTD family on [0, n-1]");
  construct_cmd_->add_option("--n", construct_n, "Window size (>= 24)")->required();
  construct_cmd_->add_flag("--list", construct_list, "Print every member");
  construct_cmd_->add_flag("--verify", construct_verify, "Re-check every member with a naive double loop");

  auto* density = app.add_subcommand("density", "MSTD density");
  density->require_subcommand(1);
  int density_n = 0;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 20240601;
  auto* census_cmd = density->add_subcommand("census", "Exhaustive count over all subsets");
  census_cmd->add_option("--n", density_n, "Window size")->required();
  auto* mc_cmd = density->add_subcommand("mc", "Monte Carlo estimate");
  mc_cmd->add_option("--n", density_n, "Window size")->required();
  mc_cmd->add_option("--samples", samples, "Number of random subsets")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", seed, "64-bit seed");

  std::string which;
  std::vector<std::int64_t> grid;
  double t = 0;
  auto* asym = app.add_subcommand("asymptotics", "Numerical checks of asymptotic statements");
  asym->add_option("--which", which, "normal, conjecture, pn, pn-mc, footnote or bounded")
      ->required()
      ->check(CLI::IsMember({"normal", "conjecture", "pn", "pn-mc", "footnote", "bounded"}));
  asym->add_option("--grid", grid, "Comma-separated list of n")->delimiter(',')->required();
  asym->add_option("--t", t, "Offset in standard deviations (normal only)");
  asym->add_option("--samples", samples, "Walks to simulate (pn-mc only)")->check(CLI::PositiveNumber);
  asym->add_option("--seed", seed, "64-bit seed (pn-mc only)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Context ctx{out, err, json_output, threads, census_limit};
  try {
    if (bbs_count_cmd->parsed()) return bbs_count(ctx, bbs_range, engine);
    if (bbs_list_cmd->parsed()) return bbs_list(ctx, list_n);
    if (table1_cmd->parsed()) return table1(ctx, golden_path);
    if (table2_cmd->parsed()) return table2(ctx, table2_ns, digits, golden_path);
    if (check_cmd->parsed()) return mstd_check(ctx, set_elements);
    if (construct_cmd_->parsed()) return construct_cmd(ctx, construct_n, construct_list, construct_verify);
    if (census_cmd->parsed()) {
      return density_out(ctx, census(density_n, {ctx.census_limit, ctx.threads}));
    }
    if (mc_cmd->parsed()) return density_out(ctx, monte_carlo(density_n, samples, seed, ctx.threads));
    if (asym->parsed()) return asymptotics_cmd(ctx, which, grid, t, samples, seed);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace mstd::cli
