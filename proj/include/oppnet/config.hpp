#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "oppnet/engine.hpp"
#include "oppnet/routing.hpp"
#include "oppnet/types.hpp"

namespace oppnet {

struct SimConfig {
  ScenarioParams params;
  StrategyKind strategy;
  std::vector<NodeId> controllers{0};
  std::uint64_t seed = 1;
};

// `section.key = value` lines, '#' comments, blank lines ignored. Unknown
// keys and unparseable values raise ConfigError naming the key.
SimConfig parse_config(std::string_view text);

SimConfig default_config();

Scenario make_scenario(const SimConfig& config, ContactTrace trace,
                       std::optional<std::uint64_t> seed_override = std::nullopt,
                       std::optional<StrategyKind> strategy_override = std::nullopt);

}  // namespace oppnet
