#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inthull/geom.hpp"

namespace inthull::cli {

// a*x + c*y <= b, stored with the rationals as written.
using Inequality = std::array<Rational, 3>;

// JSON instance:
//   {"name": "...", "vertices": [["x", "y"], ...]}
//   {"name": "...", "inequalities": [["a", "c", "b"], ...]}   (a*x + c*y <= b)
// Exactly one of the two keys; "name" is optional. Every number is a string
// "p", "-p" or "p/q" (JSON integers are also accepted); decimals are rejected.
struct InstanceFile {
  std::optional<std::string> name;
  std::variant<std::vector<Point2>, std::vector<Inequality>> body;

  bool has_vertices() const { return std::holds_alternative<std::vector<Point2>>(body); }
};

InstanceFile parse_instance(const std::string& text);
InstanceFile read_instance(const std::string& path);
// Canonical JSON (reduced rationals, fixed key order, two-space indent,
// trailing newline).
std::string emit_instance(const InstanceFile& instance);
void write_instance(const std::string& path, const InstanceFile& instance);

// nullopt when the inequalities have an empty intersection. Throws
// Errc::Unbounded for unbounded inequality systems.
std::optional<PolySet2> to_polyset(const InstanceFile& instance);

std::string display_name(const InstanceFile& instance, const std::string& fallback);

}  // namespace inthull::cli
