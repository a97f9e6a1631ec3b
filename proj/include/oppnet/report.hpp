#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oppnet/types.hpp"

namespace oppnet {

struct Quantiles {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

// Linear-interpolation quantiles at rank p*(n-1). Throws std::invalid_argument
// on an empty sample.
Quantiles quantiles(std::vector<double> samples);

struct RdEvent {
  SimTime time = 0.0;
  NodeId node = 0;
  double rd = 0.0;
};

struct SimLogEvent {
  enum class Kind {
    Create,
    Store,
    Deliver,
    Drop,
    Expire,
    Consume,
    TransferStart,
    TransferComplete,
    TransferAbort,
    DirectiveApply,
  };
  SimTime time = 0.0;
  Kind kind = Kind::Create;
  MessageId msg = 0;
  NodeId node = 0;
  std::uint32_t copies = 0;
};

struct RunReport {
  std::uint64_t created_data = 0;
  std::uint64_t delivered_data = 0;
  double delivery_ratio = 0.0;
  std::vector<double> latencies_s;
  std::optional<Quantiles> latency_summary;
  std::uint64_t dropped_data = 0;
  std::uint64_t dropped_control = 0;
  std::uint64_t data_bytes = 0;
  std::uint64_t control_bytes = 0;
  double control_overhead = 0.0;  // control_bytes / data_bytes, 0 when no data
  std::vector<RdEvent> rd_timeline;
  std::uint64_t scenario_digest = 0;
  std::uint64_t family_digest = 0;  // digest minus strategy/control/seed; groups comparable runs
  std::vector<SimLogEvent> event_log;  // populated only when requested
};

// CSV with a fixed header; reals use %.6g, missing latency fields are empty.
std::string emit_csv(const RunReport& report);

// JSON mirror of the CSV fields (null where CSV is empty) plus the latency
// sample list.
std::string emit_json(const RunReport& report);

// time_s,node,rd rows; numbers round-trip exactly.
std::string emit_rd_timeline_csv(const RunReport& report);

struct ComparisonRow {
  std::string label;
  std::size_t runs = 0;
  double median_delivery_ratio = 0.0;
  std::optional<double> median_latency_s;
  double median_overhead = 0.0;
  std::optional<double> improvement_pct;  // vs the control label's delivery ratio
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

// Medians per label with delivery improvement relative to control_label.
// All runs must share a family digest, otherwise std::invalid_argument.
ComparisonTable compare(const std::map<std::string, std::vector<RunReport>>& by_label,
                        const std::string& control_label);

std::string emit_comparison_csv(const ComparisonTable& table);

}  // namespace oppnet
