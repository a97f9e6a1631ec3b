#include "oppnet/config.hpp"

#include <charconv>
#include <string>
#include <utility>

namespace oppnet {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_double(const std::string& key, std::string_view v) {
  double out;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(key, "expected a number, got '" + std::string(v) + "'");
  return out;
}

std::uint64_t to_u64(const std::string& key, std::string_view v) {
  std::uint64_t out;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(key, "expected an unsigned integer, got '" + std::string(v) + "'");
  return out;
}

bool to_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + std::string(v) + "'");
}

std::vector<NodeId> to_id_list(const std::string& key, std::string_view v) {
  std::vector<NodeId> out;
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && (v[i] == ',' || v[i] == ' ' || v[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < v.size() && v[i] != ',' && v[i] != ' ' && v[i] != '\t') ++i;
    if (i > start) out.push_back(static_cast<NodeId>(to_u64(key, v.substr(start, i - start))));
  }
  if (out.empty()) throw ConfigError(key, "expected at least one node id");
  return out;
}

}  // namespace

SimConfig default_config() { return SimConfig{}; }

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(std::string(line), "expected `key = value`, got '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(key, "empty key or value");

    auto& p = cfg.params;
    if (key == "sim.strategy") {
      if (value == "controlled")
        cfg.strategy.type = StrategyKind::Type::Controlled;
      else if (value == "epidemic")
        cfg.strategy.type = StrategyKind::Type::Epidemic;
      else if (value == "spray")
        cfg.strategy.type = StrategyKind::Type::StaticSpray;
      else
        throw ConfigError(key, "expected controlled, epidemic, or spray");
    } else if (key == "sim.spray_limit") {
      cfg.strategy.spray_limit = static_cast<std::uint32_t>(to_u64(key, value));
    } else if (key == "sim.seed") {
      cfg.seed = to_u64(key, value);
    } else if (key == "engine.bandwidth_bytes_per_s") {
      p.bandwidth_bytes_per_s = to_double(key, value);
    } else if (key == "engine.buffer_bytes") {
      p.buffer_bytes = to_u64(key, value);
    } else if (key == "engine.drop_policy") {
      if (value == "drop_oldest")
        p.drop_policy = DropPolicy::DropOldest;
      else if (value == "reject_incoming")
        p.drop_policy = DropPolicy::RejectIncoming;
      else
        throw ConfigError(key, "expected drop_oldest or reject_incoming");
    } else if (key == "data.size_min") {
      p.data_size_min = to_u64(key, value);
    } else if (key == "data.size_max") {
      p.data_size_max = to_u64(key, value);
    } else if (key == "data.gen_interval_min_s") {
      p.gen_interval_min_s = to_double(key, value);
    } else if (key == "data.gen_interval_max_s") {
      p.gen_interval_max_s = to_double(key, value);
    } else if (key == "data.ttl_s") {
      p.data_ttl_s = to_double(key, value);
    } else if (key == "data.gen_stop_s") {
      p.gen_stop_s = to_double(key, value);
    } else if (key == "control.metric_interval") {
      p.metric_interval_s = to_double(key, value);
    } else if (key == "control.directive_interval") {
      p.directive_interval_s = to_double(key, value);
    } else if (key == "control.metric_size") {
      p.metric_size_bytes = to_u64(key, value);
    } else if (key == "control.directive_size") {
      p.directive_size_bytes = to_u64(key, value);
    } else if (key == "control.k") {
      p.control.k = to_double(key, value);
    } else if (key == "control.alpha") {
      p.control.alpha = to_double(key, value);
    } else if (key == "control.threshold") {
      p.control.congestion_threshold = to_double(key, value);
    } else if (key == "control.rd_default") {
      p.control.rd_default = to_double(key, value);
    } else if (key == "control.rd_max") {
      p.control.rd_max = to_double(key, value);
    } else if (key == "control.update_mode") {
      if (value == "algorithm")
        p.control.mode = RdUpdateMode::Algorithm;
      else if (value == "equation")
        p.control.mode = RdUpdateMode::Equation;
      else
        throw ConfigError(key, "expected algorithm or equation");
    } else if (key == "control.count_control_drops") {
      p.count_control_drops = to_bool(key, value);
    } else if (key == "control.controllers") {
      cfg.controllers = to_id_list(key, value);
    } else if (key == "control.forced_congestion") {
      p.forced_congestion = to_u64(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return cfg;
}

Scenario make_scenario(const SimConfig& config, ContactTrace trace,
                       std::optional<std::uint64_t> seed_override,
                       std::optional<StrategyKind> strategy_override) {
  Scenario sc;
  sc.trace = std::move(trace);
  sc.controller_ids = config.controllers;
  sc.strategy = strategy_override.value_or(config.strategy);
  sc.params = config.params;
  sc.seed = seed_override.value_or(config.seed);
  return sc;
}

}  // namespace oppnet
