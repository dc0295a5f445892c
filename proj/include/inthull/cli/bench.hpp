#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "inthull/cli/engines.hpp"
#include "inthull/cli/instance.hpp"

namespace inthull::cli {

// One CSV row. Columns, in order:
//   name,n_vertices,area,area_decimal,engine,wall_time_ns,hull_size,brute_cells,status
// status is "ok", "skipped" (oracle over its cell budget), "mismatch"
// (hull differs from another engine on the same instance) or an error code.
struct BenchRecord {
  std::string name;
  std::size_t n_vertices = 0;
  Rational area;
  Engine engine = Engine::New;
  std::optional<std::uint64_t> wall_time_ns;  // empty when timing is off
  std::size_t hull_size = 0;
  Integer brute_cells = 0;
  std::string status = "ok";
};

struct BenchCase {
  std::string name;
  InstanceFile instance;
};

struct BenchOptions {
  unsigned reps = 5;
  std::vector<Engine> engines{Engine::New, Engine::Baseline};
  EngineSettings settings;
  // Off: wall_time_ns is left empty so the CSV is reproducible byte for byte.
  bool timing = true;
};

// Every *.json file of the directory, sorted by file name. The case name is
// the instance name, or the file stem when the instance has none.
std::vector<BenchCase> load_suite(const std::string& dir);

// One record per (case, engine) with the median wall time of options.reps runs.
std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& cases, const BenchOptions& options);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace inthull::cli
