#include "inthull/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "inthull/cli/bench.hpp"
#include "inthull/cli/engines.hpp"
#include "inthull/cli/generate.hpp"
#include "inthull/cli/instance.hpp"
#include "inthull/cli/svg.hpp"
#include "inthull/oracle.hpp"

namespace inthull::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Unbounded:
    case Errc::UnboundedInput:
    case Errc::BudgetExceeded:
    case Errc::SweepLimitExceeded:
      return kExitLimit;
    default:
      return kExitInvalid;
  }
}

struct EngineFlags {
  std::optional<std::uint64_t> max_sweep;
  std::uint64_t brute_threshold = RefineConfig{}.brute_force_cell_threshold;
  unsigned max_depth = RefineConfig{}.max_depth;

  void attach(CLI::App& app) {
    app.add_option("--max-sweep", max_sweep, "Cap on offsets examined per sweep");
    app.add_option("--brute-threshold", brute_threshold, "Regions with at most this many cells are enumerated")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-depth", max_depth, "Refinement depth of the new engine")->check(CLI::PositiveNumber);
  }

  EngineSettings settings() const {
    EngineSettings s;
    s.refine.brute_force_cell_threshold = brute_threshold;
    s.refine.max_depth = max_depth;
    s.refine.sweep.max_steps = max_sweep;
    s.baseline.sweep.max_steps = max_sweep;
    return s;
  }
};

Engine engine_or_throw(const std::string& name) {
  auto e = parse_engine(name);
  if (!e) throw Error(Errc::Parse, "unknown engine '" + name + "'");
  return *e;
}

// Writes to the file, or to out when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::Parse, "cannot write '" + path + "'");
  file << text;
}

}  // namespace

std::string hull_json(const HullResult& hull) {
  std::string s = "[";
  for (std::size_t i = 0; i < hull.points.size(); ++i) {
    if (i) s += ',';
    s += "[" + to_string(hull.points[i].x) + "," + to_string(hull.points[i].y) + "]";
  }
  return s + "]";
}

int report_hull(const std::optional<PolySet2>& set, const HullResult& result, bool check,
                std::ostream& out, std::ostream& err) {
  out << hull_json(result) << '\n';
  if (!check) return kExitOk;
  const HullResult expected = set ? oracle::integer_hull_oracle(*set) : HullResult{};
  if (!(expected == result)) {
    err << "check failed: oracle hull is " << hull_json(expected) << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer hulls of bounded rational polygons", "inthull"};
  app.require_subcommand(1);

  std::string file;
  std::string engine_name_arg = "new";
  bool check = false;
  EngineFlags hull_flags;
  CLI::App* hull = app.add_subcommand("hull", "Print the integer hull of an instance");
  hull->add_option("file", file, "Instance JSON")->required();
  hull->add_option("--engine", engine_name_arg, "new, baseline or oracle");
  hull->add_flag("--check", check, "Compare with the oracle");
  hull_flags.attach(*hull);

  std::string kind = "random";
  int n = 0;
  std::string scale_text = "10";
  std::uint64_t seed = 0;
  std::string output;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind, "random or edgecase")->check(CLI::IsMember({"random", "edgecase"}));
  gen->add_option("--n", n, "Number of vertices")->required();
  gen->add_option("--scale", scale_text, "Rational size parameter");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  std::string suite;
  unsigned reps = 5;
  std::vector<std::string> engines{"new", "baseline"};
  bool no_timing = false;
  EngineFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark a directory of instances");
  bench->add_option("--suite", suite, "Directory of instance files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--reps", reps, "Repetitions per engine")->check(CLI::PositiveNumber);
  bench->add_option("--engines", engines, "Engines to run")->delimiter(',');
  bench->add_flag("--no-timing", no_timing, "Leave wall_time_ns empty");
  bench->add_option("-o,--output", output, "CSV file (default stdout)");
  bench_flags.attach(*bench);

  std::string plot_engine = "oracle";
  EngineFlags plot_flags;
  CLI::App* plot = app.add_subcommand("plot", "Render an instance and its hull as SVG");
  plot->add_option("file", file, "Instance JSON")->required();
  plot->add_option("--engine", plot_engine, "Engine for the hull; new and baseline also draw their trace");
  plot->add_option("-o,--output", output, "SVG file (default stdout)");
  plot_flags.attach(*plot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream ignored;
    app.exit(e, ignored, err);
    return kExitInvalid;
  }

  try {
    if (hull->parsed()) {
      const Engine engine = engine_or_throw(engine_name_arg);
      const InstanceFile instance = read_instance(file);
      const std::optional<PolySet2> set = to_polyset(instance);
      HullResult result;
      if (set) result = run_engine(engine, *set, hull_flags.settings()).hull;
      return report_hull(set, result, check, out, err);
    }
    if (gen->parsed()) {
      const Rational scale = parse_rational(scale_text);
      InstanceFile instance = kind == "random" ? generate_random(n, scale, seed) : generate_edgecase(n, scale, seed);
      emit(output, emit_instance(instance), out);
      return kExitOk;
    }
    if (bench->parsed()) {
      BenchOptions options;
      options.reps = reps;
      options.engines.clear();
      for (const std::string& e : engines) options.engines.push_back(engine_or_throw(e));
      options.settings = bench_flags.settings();
      options.timing = !no_timing;
      std::ostringstream csv;
      write_csv(csv, run_bench(load_suite(suite), options));
      emit(output, csv.str(), out);
      return kExitOk;
    }
    if (plot->parsed()) {
      const Engine engine = engine_or_throw(plot_engine);
      const InstanceFile instance = read_instance(file);
      const std::optional<PolySet2> set = to_polyset(instance);
      Trace trace;
      HullResult result;
      if (set) result = run_engine(engine, *set, plot_flags.settings(), &trace).hull;
      emit(output, render_svg(set, result, engine == Engine::Oracle ? nullptr : &trace), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace inthull::cli
