// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "inthull/cli/bench.hpp"
#include "inthull/cli/generate.hpp"
#include "inthull/cli/instance.hpp"
#include "inthull/oracle.hpp"
#include "support/properties.hpp"

namespace fs = std::filesystem;
using namespace inthull;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

HullResult hull_of(std::initializer_list<std::pair<long, long>> pts) {
  HullResult h;
  for (auto [x, y] : pts) h.points.push_back({x, y});
  return h;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  int agree = 0;
  std::string first_failure;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    if (auto f = props::engines_agree(seed)) {
      if (first_failure.empty()) first_failure = *f;
    } else {
      ++agree;
    }
  }
  const double t = seconds_since(start);
  std::string detail = std::to_string(agree) + "/1000 polygons agree in " + fixed(t, 1) + " s";
  if (!first_failure.empty()) detail += "; first failure: " + first_failure;
  return {agree == 1000 && t < 120, detail};
}

Outcome figure_golden(const std::string& data_dir, const std::string& file, const HullResult& expected) {
  const auto set = cli::to_polyset(cli::read_instance(data_dir + "/" + file));
  std::string detail;
  bool ok = true;
  for (cli::Engine e : {cli::Engine::New, cli::Engine::Baseline, cli::Engine::Oracle}) {
    const HullResult got = cli::run_engine(e, *set).hull;
    const bool match = got == expected;
    ok = ok && match;
    detail += std::string(detail.empty() ? "" : ", ") + std::string(cli::engine_name(e)) + (match ? " ok" : " differs");
  }
  return {ok, detail};
}

std::vector<cli::BenchCase> edgecase_suite() {
  std::vector<cli::BenchCase> cases;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cli::InstanceFile f = cli::generate_edgecase(3 + static_cast<int>(seed % 4), 8, seed);
    cases.push_back({*f.name, std::move(f)});
  }
  return cases;
}

Outcome edgecase_mechanism() {
  cli::BenchOptions options;
  options.reps = 5;
  const std::vector<cli::BenchRecord> rows = cli::run_bench(edgecase_suite(), options);
  std::map<std::string, std::map<cli::Engine, const cli::BenchRecord*>> by_case;
  for (const auto& r : rows) by_case[r.name][r.engine] = &r;
  int wins = 0;
  Integer cells_new = 0, cells_base = 0;
  std::vector<std::uint64_t> t_new, t_base;
  bool all_ok = true;
  for (const auto& [name, rec] : by_case) {
    const auto* n = rec.at(cli::Engine::New);
    const auto* b = rec.at(cli::Engine::Baseline);
    all_ok = all_ok && n->status == "ok" && b->status == "ok";
    if (n->brute_cells < b->brute_cells) ++wins;
    cells_new += n->brute_cells;
    cells_base += b->brute_cells;
    t_new.push_back(*n->wall_time_ns);
    t_base.push_back(*b->wall_time_ns);
  }
  const auto median = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  const std::uint64_t m_new = median(t_new);
  const std::uint64_t m_base = median(t_base);
  const int cases = static_cast<int>(by_case.size());
  const bool pass = all_ok && wins * 10 >= cases * 9 && m_new <= m_base;
  return {pass, "brute_cells(new) < brute_cells(baseline) on " + std::to_string(wins) + "/" +
                    std::to_string(cases) + " (totals " + cells_new.get_str() + " vs " + cells_base.get_str() +
                    "); median wall time new " + fixed(m_new / 1e3, 1) + " us vs baseline " +
                    fixed(m_base / 1e3, 1) + " us"};
}

Outcome scale_smoke() {
  const PolySet2 set = *cli::to_polyset(cli::generate_random(1000, 156, 1));
  const double a = to_double(area(set));
  std::string detail = std::to_string(set.vertices().size()) + " vertices, area " + fixed(a, 2);
  bool ok = set.vertices().size() == 1000 && std::abs(a - 69829.26) <= 0.25 * 69829.26;
  std::optional<HullResult> first;
  for (cli::Engine e : {cli::Engine::New, cli::Engine::Baseline}) {
    const auto start = std::chrono::steady_clock::now();
    const HullResult h = cli::run_engine(e, set).hull;
    const double t = seconds_since(start);
    detail += std::string("; ") + std::string(cli::engine_name(e)) + " " + fixed(t, 2) + " s";
    ok = ok && t < 10;
    if (!first) first = h;
    else ok = ok && h == *first;
  }
  try {
    const HullResult o = oracle::integer_hull_oracle(set);
    const bool match = o == *first;
    ok = ok && match;
    detail += match ? "; oracle agrees" : "; oracle differs";
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    detail += "; oracle skipped (over budget)";
  }
  detail += "; hull has " + std::to_string(first->size()) + " points";
  return {ok, detail};
}

Outcome invariant_suites() {
  constexpr std::uint64_t kSeeds = 1000;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  for (const auto& prop : props::invariant_properties()) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      ++cases;
      if (auto f = prop.check(seed)) {
        ++failures;
        if (first_failure.empty()) first_failure = prop.name + ": " + *f;
      }
    }
  }
  std::string detail = std::to_string(cases - failures) + "/" + std::to_string(cases) + " cases over " +
                       std::to_string(props::invariant_properties().size()) + " properties";
  if (!first_failure.empty()) detail += "; first failure: " + first_failure;
  return {failures == 0 && cases >= 10000, detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the same command list in two scratch directories and compares every
// produced file byte for byte.
Outcome cli_determinism(const std::string& cli, const std::string& data_dir) {
  const fs::path root = fs::temp_directory_path() / ("inthull-determinism-" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::vector<std::string> commands{
      "gen --kind random --n 12 --scale 9 --seed 3 -o suite/random.json",
      "gen --kind edgecase --n 4 --scale 6 --seed 5 -o suite/edge.json",
      "hull suite/random.json --engine new > hull-random.json",
      "hull " + data_dir + "/fig7.json --engine baseline > hull-fig7.json",
      "bench --suite suite --reps 2 --engines new,baseline,oracle --no-timing -o bench.csv",
      "plot suite/random.json --engine new -o random.svg",
      "plot " + data_dir + "/fig5.json -o fig5.svg",
  };
  std::vector<std::map<std::string, std::string>> outputs;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / ("run" + std::to_string(run));
    fs::create_directories(dir / "suite");
    for (const std::string& cmd : commands) {
      const std::string line = "cd \"" + dir.string() + "\" && \"" + cli + "\" " + cmd;
      if (std::system(line.c_str()) != 0) return {false, "command failed: " + cmd};
    }
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (entry.is_regular_file()) files[fs::relative(entry.path(), dir).string()] = slurp(entry.path());
    }
    outputs.push_back(std::move(files));
  }
  fs::remove_all(root);
  std::vector<std::string> differing;
  for (const auto& [name, text] : outputs[0]) {
    auto it = outputs[1].find(name);
    if (it == outputs[1].end() || it->second != text || text.empty()) differing.push_back(name);
  }
  if (outputs[0].size() != outputs[1].size()) differing.push_back("(file sets differ)");
  std::string detail = std::to_string(outputs[0].size()) + " JSON/CSV/SVG files compared";
  for (const auto& d : differing) detail += "; differs: " + d;
  return {differing.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  std::string cli = "inthull";
  std::string data_dir = "tests/data";
  app.add_option("--criterion", selected, "Criteria to run (default all)");
  app.add_option("--cli", cli, "Path of the inthull binary");
  app.add_option("--data", data_dir, "Directory of the golden instances");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence on 1000 random polygons", oracle_equivalence},
      {"figure 5 triangle", [&] { return figure_golden(data_dir, "fig5.json", hull_of({{-1, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}})); }},
      {"figure 7 triangle", [&] { return figure_golden(data_dir, "fig7.json", hull_of({{-2, 0}, {2, 0}, {3, 2}, {3, 3}, {1, 2}})); }},
      {"edge-case brute-force cost", edgecase_mechanism},
      {"1000-vertex scale smoke test", scale_smoke},
      {"invariant suites", invariant_suites},
      {"CLI determinism", [&] { return cli_determinism(fs::absolute(cli).string(), fs::absolute(data_dir).string()); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
