#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "oppnet/config.hpp"
#include "oppnet/engine.hpp"
#include "oppnet/report.hpp"
#include "oppnet/trace.hpp"

namespace fs = std::filesystem;
using namespace oppnet;

namespace {

// Exit codes: 0 ok, 2 missing input file, 3 configuration error, 4 trace
// violation, 1 anything else.
enum : int { kOk = 0, kOther = 1, kMissingFile = 2, kConfigError = 3, kTraceError = 4 };

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int load_config(const std::string& path, SimConfig& cfg) {
  if (path.empty()) {
    cfg = default_config();
    return kOk;
  }
  std::string text;
  if (!read_file(path, text)) {
    std::fprintf(stderr, "error: cannot read config file '%s'\n", path.c_str());
    return kMissingFile;
  }
  try {
    cfg = parse_config(text);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s: %s\n", e.key().c_str(), e.what());
    return kConfigError;
  }
  return kOk;
}

int load_trace(const std::string& path, ContactTrace& trace) {
  std::string text;
  if (!read_file(path, text)) {
    std::fprintf(stderr, "error: cannot read trace file '%s'\n", path.c_str());
    return kMissingFile;
  }
  try {
    trace = parse_contact_trace(text);
  } catch (const TraceError& e) {
    std::fprintf(stderr, "trace error: %s\n", e.what());
    return kTraceError;
  }
  return kOk;
}

bool parse_strategy(const std::string& name, std::uint32_t spray_limit, StrategyKind& out) {
  if (name == "controlled")
    out.type = StrategyKind::Type::Controlled;
  else if (name == "epidemic")
    out.type = StrategyKind::Type::Epidemic;
  else if (name == "spray")
    out.type = StrategyKind::Type::StaticSpray;
  else
    return false;
  out.spray_limit = spray_limit;
  return true;
}

struct SizeRange {
  std::uint64_t min = 0, max = 0;
};

bool parse_size_range(const std::string& text, SizeRange& out) {
  const auto dash = text.find('-');
  auto num = [](std::string_view v, std::uint64_t& n) {
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    return ec == std::errc{} && ptr == v.data() + v.size();
  };
  if (dash == std::string::npos) {
    if (!num(text, out.min)) return false;
    out.max = out.min;
    return true;
  }
  return num(std::string_view(text).substr(0, dash), out.min) &&
         num(std::string_view(text).substr(dash + 1), out.max) && out.min <= out.max;
}

int cmd_run(const std::string& config_path, const std::string& trace_path,
            std::optional<std::uint64_t> seed, const std::string& strategy_name,
            const std::string& out_dir) {
  SimConfig cfg;
  if (int rc = load_config(config_path, cfg); rc != kOk) return rc;
  ContactTrace trace;
  if (int rc = load_trace(trace_path, trace); rc != kOk) return rc;

  std::optional<StrategyKind> strategy;
  if (!strategy_name.empty()) {
    StrategyKind s;
    if (!parse_strategy(strategy_name, cfg.strategy.spray_limit, s)) {
      std::fprintf(stderr, "config error: sim.strategy: unknown strategy '%s'\n",
                   strategy_name.c_str());
      return kConfigError;
    }
    strategy = s;
  }

  Scenario sc = make_scenario(cfg, std::move(trace), seed, strategy);
  try {
    validate_scenario(sc);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s: %s\n", e.key().c_str(), e.what());
    return kConfigError;
  }

  RunReport rep = run(sc);
  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "report.csv", emit_csv(rep));
  write_file(fs::path(out_dir) / "report.json", emit_json(rep));
  write_file(fs::path(out_dir) / "rd_timeline.csv", emit_rd_timeline_csv(rep));
  std::printf("created=%llu delivered=%llu delivery_ratio=%s out=%s\n",
              static_cast<unsigned long long>(rep.created_data),
              static_cast<unsigned long long>(rep.delivered_data),
              fmt_g(rep.delivery_ratio).c_str(), out_dir.c_str());
  return kOk;
}

int cmd_compare(const std::string& config_path, const std::string& trace_path,
                std::vector<std::uint64_t> seeds, const std::vector<std::string>& size_args,
                const std::string& out_dir, unsigned jobs) {
  SimConfig cfg;
  if (int rc = load_config(config_path, cfg); rc != kOk) return rc;
  ContactTrace trace;
  if (int rc = load_trace(trace_path, trace); rc != kOk) return rc;

  if (seeds.empty()) seeds.push_back(cfg.seed);
  std::vector<SizeRange> sizes;
  for (const auto& s : size_args) {
    SizeRange r;
    if (!parse_size_range(s, r)) {
      std::fprintf(stderr, "error: bad size range '%s' (expected bytes or min-max)\n", s.c_str());
      return kConfigError;
    }
    sizes.push_back(r);
  }
  if (sizes.empty()) sizes.push_back({cfg.params.data_size_min, cfg.params.data_size_max});

  const std::vector<std::pair<std::string, StrategyKind::Type>> labels = {
      {"controlled", StrategyKind::Type::Controlled},
      {"epidemic", StrategyKind::Type::Epidemic},
      {"spray", StrategyKind::Type::StaticSpray},
  };

  struct Cell {
    std::size_t size_idx;
    std::string label;
    Scenario sc;
  };
  std::vector<Cell> cells;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    for (const auto& [label, type] : labels) {
      for (std::uint64_t seed : seeds) {
        StrategyKind strat{type, cfg.strategy.spray_limit};
        Scenario sc = make_scenario(cfg, trace, seed, strat);
        sc.params.data_size_min = sizes[si].min;
        sc.params.data_size_max = sizes[si].max;
        try {
          validate_scenario(sc);
        } catch (const ConfigError& e) {
          std::fprintf(stderr, "config error: %s: %s\n", e.key().c_str(), e.what());
          return kConfigError;
        }
        cells.push_back({si, label, std::move(sc)});
      }
    }
  }

  std::vector<RunReport> results(cells.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run(cells[i].sc);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) results[i] = run(cells[i].sc);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, cells.size()); ++t)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::string csv =
      "size_min,size_max,label,runs,median_delivery_ratio,median_latency_s,median_overhead,"
      "improvement_pct\n";
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::map<std::string, std::vector<RunReport>> by_label;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size_idx == si) by_label[cells[i].label].push_back(results[i]);
    ComparisonTable table = compare(by_label, "controlled");
    for (const auto& row : table.rows) {
      csv += std::to_string(sizes[si].min);
      csv += ',';
      csv += std::to_string(sizes[si].max);
      csv += ',';
      csv += row.label;
      csv += ',';
      csv += std::to_string(row.runs);
      csv += ',';
      csv += fmt_g(row.median_delivery_ratio);
      csv += ',';
      if (row.median_latency_s) csv += fmt_g(*row.median_latency_s);
      csv += ',';
      csv += fmt_g(row.median_overhead);
      csv += ',';
      if (row.improvement_pct) csv += fmt_g(*row.improvement_pct);
      csv += '\n';
    }
  }

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "comparison.csv", csv);
  std::printf("runs=%zu out=%s\n", cells.size(), out_dir.c_str());
  return kOk;
}

int cmd_gen_trace(const CommunityParams& params, const std::string& out_path) {
  ContactTrace trace;
  try {
    trace = generate_community_trace(params);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  }
  write_file(out_path, write_contact_trace(trace));
  char dur[32];
  auto [ptr, ec] = std::to_chars(dur, dur + sizeof dur, trace.duration);
  std::printf("events=%zu nodes=%u duration=%.*s\n", trace.events.size(), trace.node_count,
              static_cast<int>(ptr - dur), dur);
  return kOk;
}

int cmd_validate_trace(const std::string& path) {
  ContactTrace trace;
  if (int rc = load_trace(path, trace); rc != kOk) return rc;
  char dur[32];
  auto [ptr, ec] = std::to_chars(dur, dur + sizeof dur, trace.duration);
  std::printf("events=%zu nodes=%u duration=%.*s\n", trace.events.size(), trace.node_count,
              static_cast<int>(ptr - dur), dur);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opportunistic-network simulator with a congestion-feedback control plane"};
  app.require_subcommand(1);

  std::string config_path, trace_path, out_dir = ".", strategy_name, gen_out;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> sizes;
  unsigned jobs = 1;
  CommunityParams community;

  auto* run_cmd = app.add_subcommand("run", "Run one scenario and write reports");
  run_cmd->add_option("--config", config_path, "Config file (section.key = value lines)");
  run_cmd->add_option("--trace", trace_path, "Contact trace file")->required();
  run_cmd->add_option("--seed", seed, "Override the config seed");
  run_cmd->add_option("--strategy", strategy_name, "controlled | epidemic | spray");
  run_cmd->add_option("--out", out_dir, "Output directory");

  auto* cmp_cmd = app.add_subcommand("compare", "Sweep sizes x strategies x seeds");
  cmp_cmd->add_option("--config", config_path, "Config file");
  cmp_cmd->add_option("--trace", trace_path, "Contact trace file")->required();
  cmp_cmd->add_option("--seeds", seeds, "Seeds to run per cell")->delimiter(',');
  cmp_cmd->add_option("--sizes", sizes, "Data size ranges, bytes or min-max")->delimiter(',');
  cmp_cmd->add_option("--out", out_dir, "Output directory");
  cmp_cmd->add_option("--jobs", jobs, "Parallel simulations");

  auto* gen_cmd = app.add_subcommand("gen-trace", "Generate a community contact trace");
  gen_cmd->add_option("--out", gen_out, "Output trace path")->required();
  gen_cmd->add_option("--groups", community.groups, "Number of communities");
  gen_cmd->add_option("--nodes-per-group", community.nodes_per_group, "Nodes per community");
  gen_cmd->add_option("--intra-rate", community.intra_rate_per_hour,
                      "Same-group contacts per pair per hour");
  gen_cmd->add_option("--inter-rate", community.inter_rate_per_hour,
                      "Cross-group contacts per pair per hour");
  gen_cmd->add_option("--mean-contact", community.mean_contact_duration_s,
                      "Mean contact duration, seconds");
  gen_cmd->add_option("--duration", community.duration_s, "Trace duration, seconds");
  gen_cmd->add_option("--seed", community.seed, "Generator seed");

  auto* val_cmd = app.add_subcommand("validate-trace", "Parse a trace and report its shape");
  val_cmd->add_option("--trace", trace_path, "Contact trace file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(config_path, trace_path, seed, strategy_name, out_dir);
    if (*cmp_cmd) return cmd_compare(config_path, trace_path, seeds, sizes, out_dir, jobs);
    if (*gen_cmd) return cmd_gen_trace(community, gen_out);
    if (*val_cmd) return cmd_validate_trace(trace_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOther;
  }
  return kOther;
}
