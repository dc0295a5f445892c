#include "inthull/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

namespace inthull::cli {

namespace {

struct Measured {
  EngineRun run;
  std::uint64_t median_ns = 0;
};

Measured measure(Engine engine, const PolySet2& set, const BenchOptions& options) {
  Measured m;
  std::vector<std::uint64_t> times;
  for (unsigned r = 0; r < std::max(options.reps, 1u); ++r) {
    const auto start = std::chrono::steady_clock::now();
    EngineRun run = run_engine(engine, set, options.settings);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    if (r == 0) m.run = std::move(run);
  }
  std::sort(times.begin(), times.end());
  m.median_ns = times[times.size() / 2];
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchCase> load_suite(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchCase> cases;
  for (const auto& path : files) {
    InstanceFile instance = read_instance(path.string());
    std::string name = display_name(instance, path.stem().string());
    cases.push_back(BenchCase{std::move(name), std::move(instance)});
  }
  return cases;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& cases, const BenchOptions& options) {
  std::vector<BenchRecord> records;
  for (const BenchCase& bc : cases) {
    std::optional<PolySet2> set;
    std::string load_status;
    try {
      set = to_polyset(bc.instance);
    } catch (const Error& e) {
      load_status = std::string(errc_name(e.code()));
    }

    const std::size_t first = records.size();
    std::optional<HullResult> reference;
    bool mismatch = false;
    for (Engine engine : options.engines) {
      BenchRecord rec;
      rec.name = bc.name;
      rec.engine = engine;
      if (set) {
        rec.n_vertices = set->vertices().size();
        rec.area = area(*set);
      }
      if (!load_status.empty()) {
        rec.status = load_status;
      } else if (!set) {
        rec.wall_time_ns = options.timing ? std::optional<std::uint64_t>(0) : std::nullopt;
      } else {
        try {
          Measured m = measure(engine, *set, options);
          rec.hull_size = m.run.hull.size();
          rec.brute_cells = m.run.stats.brute_cells;
          if (options.timing) rec.wall_time_ns = m.median_ns;
          if (!reference) reference = m.run.hull;
          else if (!(*reference == m.run.hull)) mismatch = true;
        } catch (const Error& e) {
          rec.status = e.code() == Errc::BudgetExceeded && engine == Engine::Oracle
                           ? "skipped"
                           : std::string(errc_name(e.code()));
        }
      }
      records.push_back(std::move(rec));
    }
    if (mismatch) {
      for (std::size_t i = first; i < records.size(); ++i) {
        if (records[i].status == "ok") records[i].status = "mismatch";
      }
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "name,n_vertices,area,area_decimal,engine,wall_time_ns,hull_size,brute_cells,status\n";
  for (const BenchRecord& r : records) {
    out << csv_field(r.name) << ',' << r.n_vertices << ',' << to_string(r.area) << ','
        << to_decimal(r.area, 2) << ',' << engine_name(r.engine) << ','
        << (r.wall_time_ns ? std::to_string(*r.wall_time_ns) : std::string()) << ',' << r.hull_size << ','
        << to_string(r.brute_cells) << ',' << csv_field(r.status) << '\n';
  }
}

}  // namespace inthull::cli
