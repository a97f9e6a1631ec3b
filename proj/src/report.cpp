#include "oppnet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace oppnet {
namespace {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_exact(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double interpolate(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double median_of(std::vector<double> samples) { return quantiles(std::move(samples)).median; }

}  // namespace

Quantiles quantiles(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("quantiles of an empty sample");
  std::sort(samples.begin(), samples.end());
  Quantiles q;
  q.min = samples.front();
  q.q1 = interpolate(samples, 0.25);
  q.median = interpolate(samples, 0.5);
  q.q3 = interpolate(samples, 0.75);
  q.max = samples.back();
  return q;
}

std::string emit_csv(const RunReport& r) {
  std::string out =
      "created_data,delivered_data,delivery_ratio,lat_min,lat_q1,lat_median,lat_q3,lat_max,"
      "dropped_data,dropped_control,data_bytes,control_bytes,control_overhead,scenario_digest\n";
  out += std::to_string(r.created_data);
  out += ',';
  out += std::to_string(r.delivered_data);
  out += ',';
  out += fmt_g(r.delivery_ratio);
  out += ',';
  if (r.latency_summary) {
    const auto& q = *r.latency_summary;
    out += fmt_g(q.min);
    out += ',';
    out += fmt_g(q.q1);
    out += ',';
    out += fmt_g(q.median);
    out += ',';
    out += fmt_g(q.q3);
    out += ',';
    out += fmt_g(q.max);
  } else {
    out += ",,,,";
  }
  out += ',';
  out += std::to_string(r.dropped_data);
  out += ',';
  out += std::to_string(r.dropped_control);
  out += ',';
  out += std::to_string(r.data_bytes);
  out += ',';
  out += std::to_string(r.control_bytes);
  out += ',';
  out += fmt_g(r.control_overhead);
  out += ',';
  out += std::to_string(r.scenario_digest);
  out += '\n';
  return out;
}

std::string emit_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["created_data"] = r.created_data;
  j["delivered_data"] = r.delivered_data;
  j["delivery_ratio"] = r.delivery_ratio;
  if (r.latency_summary) {
    const auto& q = *r.latency_summary;
    j["lat_min"] = q.min;
    j["lat_q1"] = q.q1;
    j["lat_median"] = q.median;
    j["lat_q3"] = q.q3;
    j["lat_max"] = q.max;
  } else {
    j["lat_min"] = nullptr;
    j["lat_q1"] = nullptr;
    j["lat_median"] = nullptr;
    j["lat_q3"] = nullptr;
    j["lat_max"] = nullptr;
  }
  j["dropped_data"] = r.dropped_data;
  j["dropped_control"] = r.dropped_control;
  j["data_bytes"] = r.data_bytes;
  j["control_bytes"] = r.control_bytes;
  j["control_overhead"] = r.control_overhead;
  j["scenario_digest"] = r.scenario_digest;
  j["latencies_s"] = r.latencies_s;
  return j.dump(2) + "\n";
}

std::string emit_rd_timeline_csv(const RunReport& r) {
  std::string out = "time_s,node,rd\n";
  for (const auto& ev : r.rd_timeline) {
    out += fmt_exact(ev.time);
    out += ',';
    out += std::to_string(ev.node);
    out += ',';
    out += fmt_exact(ev.rd);
    out += '\n';
  }
  return out;
}

ComparisonTable compare(const std::map<std::string, std::vector<RunReport>>& by_label,
                        const std::string& control_label) {
  if (by_label.empty()) throw std::invalid_argument("compare needs at least one label");
  auto ctrl_it = by_label.find(control_label);
  if (ctrl_it == by_label.end() || ctrl_it->second.empty())
    throw std::invalid_argument("control label '" + control_label + "' has no runs");

  const std::uint64_t family = ctrl_it->second.front().family_digest;
  for (const auto& [label, runs] : by_label)
    for (const auto& r : runs)
      if (r.family_digest != family)
        throw std::invalid_argument("label '" + label + "' ran a different scenario family");

  auto summarize = [](const std::vector<RunReport>& runs) {
    ComparisonRow row;
    row.runs = runs.size();
    std::vector<double> ratios, latencies, overheads;
    for (const auto& r : runs) {
      ratios.push_back(r.delivery_ratio);
      overheads.push_back(r.control_overhead);
      if (r.latency_summary) latencies.push_back(r.latency_summary->median);
    }
    row.median_delivery_ratio = median_of(ratios);
    row.median_overhead = median_of(overheads);
    if (!latencies.empty()) row.median_latency_s = median_of(latencies);
    return row;
  };

  const double ctrl_ratio = summarize(ctrl_it->second).median_delivery_ratio;

  ComparisonTable table;
  for (const auto& [label, runs] : by_label) {
    if (runs.empty()) throw std::invalid_argument("label '" + label + "' has no runs");
    ComparisonRow row = summarize(runs);
    row.label = label;
    if (label != control_label && row.median_delivery_ratio > 0.0)
      row.improvement_pct =
          100.0 * (ctrl_ratio - row.median_delivery_ratio) / row.median_delivery_ratio;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string emit_comparison_csv(const ComparisonTable& table) {
  std::string out = "label,runs,median_delivery_ratio,median_latency_s,median_overhead,improvement_pct\n";
  for (const auto& row : table.rows) {
    out += row.label;
    out += ',';
    out += std::to_string(row.runs);
    out += ',';
    out += fmt_g(row.median_delivery_ratio);
    out += ',';
    if (row.median_latency_s) out += fmt_g(*row.median_latency_s);
    out += ',';
    out += fmt_g(row.median_overhead);
    out += ',';
    if (row.improvement_pct) out += fmt_g(*row.improvement_pct);
    out += '\n';
  }
  return out;
}

}  // namespace oppnet
