#include "inthull/cli/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inthull::cli {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw Error(Errc::Parse, "expected a rational string, got " + value.dump());
}

std::vector<Rational> tuple_from_json(const json& value, std::size_t arity) {
  if (!value.is_array() || value.size() != arity) {
    throw Error(Errc::Parse, "expected an array of " + std::to_string(arity) + " rationals, got " + value.dump());
  }
  std::vector<Rational> out;
  for (const json& v : value) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "instance must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "vertices" && key != "inequalities") {
      throw Error(Errc::Parse, "unknown key '" + key + "'");
    }
  }
  const bool has_v = doc.contains("vertices");
  const bool has_h = doc.contains("inequalities");
  if (has_v == has_h) throw Error(Errc::Parse, "exactly one of 'vertices' or 'inequalities' is required");

  InstanceFile out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(Errc::Parse, "'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }
  const json& list = has_v ? doc["vertices"] : doc["inequalities"];
  if (!list.is_array()) throw Error(Errc::Parse, "expected an array");
  if (has_v) {
    std::vector<Point2> vs;
    for (const json& item : list) {
      auto t = tuple_from_json(item, 2);
      vs.push_back(Point2{t[0], t[1]});
    }
    out.body = std::move(vs);
  } else {
    std::vector<Inequality> hs;
    for (const json& item : list) {
      auto t = tuple_from_json(item, 3);
      if (sgn(t[0]) == 0 && sgn(t[1]) == 0) throw Error(Errc::Parse, "inequality with zero normal");
      hs.push_back(Inequality{t[0], t[1], t[2]});
    }
    out.body = std::move(hs);
  }
  return out;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string emit_instance(const InstanceFile& instance) {
  // Built by hand so the key order and layout are stable.
  std::ostringstream os;
  os << "{\n";
  if (instance.name) os << "  \"name\": " << json(*instance.name).dump() << ",\n";
  auto quoted = [](const Rational& q) { return "\"" + to_string(q) + "\""; };
  if (const auto* vs = std::get_if<std::vector<Point2>>(&instance.body)) {
    os << "  \"vertices\": [";
    for (std::size_t i = 0; i < vs->size(); ++i) {
      os << (i ? ",\n    " : "\n    ") << "[" << quoted((*vs)[i].x) << ", " << quoted((*vs)[i].y) << "]";
    }
    os << (vs->empty() ? "]\n" : "\n  ]\n");
  } else {
    const auto& hs = std::get<std::vector<Inequality>>(instance.body);
    os << "  \"inequalities\": [";
    for (std::size_t i = 0; i < hs.size(); ++i) {
      os << (i ? ",\n    " : "\n    ") << "[" << quoted(hs[i][0]) << ", " << quoted(hs[i][1]) << ", "
         << quoted(hs[i][2]) << "]";
    }
    os << (hs.empty() ? "]\n" : "\n  ]\n");
  }
  os << "}\n";
  return os.str();
}

void write_instance(const std::string& path, const InstanceFile& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  out << emit_instance(instance);
}

std::optional<PolySet2> to_polyset(const InstanceFile& instance) {
  if (const auto* vs = std::get_if<std::vector<Point2>>(&instance.body)) {
    if (vs->empty()) throw Error(Errc::Parse, "'vertices' is empty");
    return polyset_from_points(*vs);
  }
  std::vector<HalfPlane> hs;
  for (const Inequality& row : std::get<std::vector<Inequality>>(instance.body)) {
    hs.push_back(HalfPlane::make(row[0], row[1], row[2]));
  }
  return PolySet2::intersect(hs);
}

std::string display_name(const InstanceFile& instance, const std::string& fallback) {
  return instance.name.value_or(fallback);
}

}  // namespace inthull::cli
