#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_set>

#include "oppnet/types.hpp"

namespace oppnet {

// (1 - alpha) * acc + alpha * reading; a null accumulator takes the reading.
// alpha must be in (0, 1].
double ewma(std::optional<double> acc, double reading, double alpha);

enum class RdUpdateMode { Algorithm, Equation };

struct ControllerParams {
  double k = 0.2;
  double alpha = 0.8;
  double congestion_threshold = 10.0;
  double rd_default = 10.0;
  double rd_max = 64.0;
  RdUpdateMode mode = RdUpdateMode::Algorithm;
};

// Replication-degree step for one controller window.
// Algorithm mode: congestion >= threshold shrinks rd to rd*k, otherwise grows
// it to rd + rd*k. Equation mode: rd -+ k*congestion (decrease when at or
// above threshold). Result is clamped to [1, rd_max].
double rd_update(const ControllerParams& params, double rd, double congestion);

// Ordering key for directive staleness: later window first, controller id as
// tiebreaker. A directive is applied only if its key is strictly greater than
// the last applied one.
struct DirectiveKey {
  SimTime issued_at = 0.0;
  NodeId controller = 0;
  auto operator<=>(const DirectiveKey&) const = default;
};

inline DirectiveKey key_of(const DirectivePayload& d) { return {d.issued_at, d.controller}; }

// Per-controller accumulator state between window closes.
struct ControllerState {
  ControllerParams params;
  double rd_current;
  std::optional<double> congestion;
  std::optional<double> rd_from_other_ctrls_avg;
  std::unordered_set<MessageId> folded;

  explicit ControllerState(const ControllerParams& p) : params(p), rd_current(p.rd_default) {}

  // Folds one metric reading into the congestion EWMA. Each message id is
  // folded at most once (the EWMA is not idempotent). Returns false on a
  // duplicate.
  bool fold_metric(MessageId id, double drop_count);

  // Folds a peer controller's advertised rd. Same dedup rule.
  bool fold_peer_directive(MessageId id, double rd);
};

// Window close: computes the step from accumulated congestion (0 when no
// metrics arrived), blends in the peer average if any, clamps, commits the
// result to rd_current, and resets the accumulators for the next window.
double close_controller_window(ControllerState& state);

// Per-node crowdsensing accumulator: buffer-congestion drops in the current
// sensor window.
struct SensorState {
  std::uint64_t drop_count = 0;
};

}  // namespace oppnet
