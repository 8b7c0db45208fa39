#include "explorer/config.hpp"

#include <set>

#include "json.hpp"

namespace explorer {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& scope) {
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      throw Error(ErrorKind::UnknownKey, "unknown key '" + scope + key + "'");
    }
  }
}

template <typename T>
T get_field(const json& object, const std::string& key, T fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  const bool ok = std::is_integral_v<T>    ? value.is_number_integer()
                  : std::is_same_v<T, double> ? value.is_number()
                                              : value.is_string();
  if (!ok) {
    throw Error(ErrorKind::ValidationError,
                "key '" + key + "' has the wrong type: " + value.dump());
  }
  return value.get<T>();
}

int require_int(const json& object, const std::string& key) {
  if (!object.contains(key)) {
    throw Error(ErrorKind::ValidationError, "missing required key '" + key + "'");
  }
  return get_field<int>(object, key, 0);
}

}  // namespace

SimConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& error) {
    throw Error(ErrorKind::ParseError, std::string("config is not valid JSON: ") + error.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::ParseError, "config must be a JSON object");
  }

  reject_unknown_keys(doc,
                      {"width", "height", "refuge", "start", "fear_initial", "fear_decay",
                       "w_explore", "w_fear", "mode", "bin_width", "max_ticks", "seed"},
                      "");

  const int width = require_int(doc, "width");
  const int height = require_int(doc, "height");

  RefugeRect refuge{0, 0, 4, 4};
  if (doc.contains("refuge")) {
    const json& r = doc.at("refuge");
    if (!r.is_object()) {
      throw Error(ErrorKind::ValidationError, "key 'refuge' must be an object {x,y,w,h}");
    }
    reject_unknown_keys(r, {"x", "y", "w", "h"}, "refuge.");
    refuge.x = get_field<int>(r, "x", refuge.x);
    refuge.y = get_field<int>(r, "y", refuge.y);
    refuge.w = get_field<int>(r, "w", refuge.w);
    refuge.h = get_field<int>(r, "h", refuge.h);
  }

  Position start{1, 1};
  if (doc.contains("start")) {
    const json& s = doc.at("start");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer()) {
      throw Error(ErrorKind::ValidationError, "key 'start' must be an array [x, y]");
    }
    start.x = s[0].get<int>();
    start.y = s[1].get<int>();
  }

  AgentParams agent;
  agent.fear_initial = get_field<double>(doc, "fear_initial", 0.9);
  agent.fear_decay = get_field<double>(doc, "fear_decay", 0.02);
  agent.w_explore = get_field<double>(doc, "w_explore", 1.0);
  agent.w_fear = get_field<double>(doc, "w_fear", 1.0);

  const std::string mode = get_field<std::string>(doc, "mode", "stochastic");
  if (mode == "stochastic") {
    agent.mode = PolicyMode::Stochastic;
  } else if (mode == "deterministic") {
    agent.mode = PolicyMode::Deterministic;
  } else {
    throw Error(ErrorKind::ValidationError,
                "key 'mode' must be \"stochastic\" or \"deterministic\", got \"" + mode + "\"");
  }

  validate_params(agent);  // names the offending field in its message

  const int bin_width = get_field<int>(doc, "bin_width", 100);
  if (bin_width < 1) {
    throw Error(ErrorKind::ValidationError,
                "key 'bin_width' must be >= 1, got " + std::to_string(bin_width));
  }
  const std::int64_t max_ticks = get_field<std::int64_t>(doc, "max_ticks", 200000);
  if (max_ticks < 1) {
    throw Error(ErrorKind::ValidationError,
                "key 'max_ticks' must be >= 1, got " + std::to_string(max_ticks));
  }
  std::uint64_t seed = 42;
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned()) {  // covers every non-negative JSON integer
      throw Error(ErrorKind::ValidationError,
                  "key 'seed' must be a non-negative integer, got " + s.dump());
    }
    seed = s.get<std::uint64_t>();
  }

  // GridWorld construction enforces the spatial invariants and throws
  // RefugeOutOfBounds / NoArena / StartOutsideRefuge with cell coordinates.
  SimConfig config{GridWorld(width, height, refuge, start), agent, bin_width, max_ticks, seed};
  return config;
}

}  // namespace explorer
