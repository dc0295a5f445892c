#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "inthull/hull_baseline.hpp"
#include "inthull/hull_new.hpp"

namespace inthull::cli {

enum class Engine { New, Baseline, Oracle };

std::optional<Engine> parse_engine(std::string_view name);
std::string_view engine_name(Engine engine);

struct EngineSettings {
  RefineConfig refine;
  BaselineConfig baseline;
};

struct EngineRun {
  HullResult hull;
  EngineStats stats;
};

// The oracle reports its whole bounding box as brute_cells.
EngineRun run_engine(Engine engine, const PolySet2& set, const EngineSettings& settings = {},
                     Trace* trace = nullptr);

}  // namespace inthull::cli
