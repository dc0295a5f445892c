#include "inthull/cli/engines.hpp"

#include "inthull/oracle.hpp"

namespace inthull::cli {

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "new") return Engine::New;
  if (name == "baseline") return Engine::Baseline;
  if (name == "oracle") return Engine::Oracle;
  return std::nullopt;
}

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::New:
      return "new";
    case Engine::Baseline:
      return "baseline";
    case Engine::Oracle:
      return "oracle";
  }
  return "?";
}

EngineRun run_engine(Engine engine, const PolySet2& set, const EngineSettings& settings, Trace* trace) {
  EngineRun run;
  switch (engine) {
    case Engine::New:
      run.hull = integer_hull_new(set, settings.refine, &run.stats, trace);
      break;
    case Engine::Baseline:
      run.hull = integer_hull_baseline(set, settings.baseline, &run.stats, trace);
      break;
    case Engine::Oracle:
      run.hull = oracle::integer_hull_oracle(set);
      run.stats.brute_cells = bbox_cells(set);
      run.stats.brute_regions = 1;
      break;
  }
  return run;
}

}  // namespace inthull::cli
