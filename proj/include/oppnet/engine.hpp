#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oppnet/buffer.hpp"
#include "oppnet/control.hpp"
#include "oppnet/report.hpp"
#include "oppnet/routing.hpp"
#include "oppnet/trace.hpp"
#include "oppnet/types.hpp"

namespace oppnet {

struct ScenarioParams {
  double bandwidth_bytes_per_s = 104857600.0;
  std::uint64_t buffer_bytes = 31457280;
  DropPolicy drop_policy = DropPolicy::DropOldest;

  std::uint64_t data_size_min = 600;
  std::uint64_t data_size_max = 1048576;
  double gen_interval_min_s = 25.0;
  double gen_interval_max_s = 35.0;
  std::optional<double> data_ttl_s;
  std::optional<double> gen_stop_s;  // stop creating data after this time

  double metric_interval_s = 60.0;
  double directive_interval_s = 90.0;
  std::uint64_t metric_size_bytes = 21;
  std::uint64_t directive_size_bytes = 5;

  ControllerParams control;
  bool count_control_drops = false;  // sensors normally count only data drops
  std::optional<std::uint64_t> forced_congestion;  // overrides sensed drops in metrics
};

struct Scenario {
  ContactTrace trace;
  std::vector<NodeId> controller_ids;
  StrategyKind strategy;
  ScenarioParams params;
  std::uint64_t seed = 1;
  bool collect_event_log = false;
};

// Throws ConfigError on out-of-range parameters, unknown controller ids, or
// an empty node set.
void validate_scenario(const Scenario& scenario);

// Deterministic discrete-event run over the contact trace. Same scenario,
// same report, bit for bit.
RunReport run(const Scenario& scenario);

}  // namespace oppnet
