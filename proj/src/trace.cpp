#include "oppnet/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <utility>

#include "oppnet/rng.hpp"

namespace oppnet {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_time(std::string_view tok, std::size_t line) {
  double v;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw TraceError(line, "bad time '" + std::string(tok) + "'");
  return v;
}

std::uint32_t parse_id(std::string_view tok, std::size_t line) {
  std::uint32_t v;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw TraceError(line, "bad node id '" + std::string(tok) + "'");
  return v;
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

ContactTrace parse_contact_trace(std::string_view text) {
  ContactTrace trace;
  // Open contacts: pair -> line the up came from.
  std::map<std::pair<NodeId, NodeId>, std::size_t> open;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks.size() != 5) throw TraceError(line_no, "expected 5 fields, got " + std::to_string(toks.size()));
    if (toks[1] != "CONN") throw TraceError(line_no, "expected CONN, got '" + std::string(toks[1]) + "'");

    ContactEvent ev;
    ev.time = parse_time(toks[0], line_no);
    if (ev.time < 0.0) throw TraceError(line_no, "negative time");
    ev.a = parse_id(toks[2], line_no);
    ev.b = parse_id(toks[3], line_no);
    if (ev.a == ev.b) throw TraceError(line_no, "self-contact on node " + std::to_string(ev.a));
    if (toks[4] == "up")
      ev.direction = LinkDirection::Up;
    else if (toks[4] == "down")
      ev.direction = LinkDirection::Down;
    else
      throw TraceError(line_no, "expected up or down, got '" + std::string(toks[4]) + "'");

    auto key = std::minmax(ev.a, ev.b);
    if (ev.direction == LinkDirection::Up) {
      auto [it, inserted] = open.emplace(key, line_no);
      if (!inserted)
        throw TraceError(line_no, "duplicate up for pair " + std::to_string(key.first) + " " +
                                      std::to_string(key.second));
    } else {
      if (open.erase(key) == 0)
        throw TraceError(line_no, "down without up for pair " + std::to_string(key.first) + " " +
                                      std::to_string(key.second));
    }

    trace.events.push_back(ev);
    trace.node_count = std::max(trace.node_count, std::max(ev.a, ev.b) + 1);
  }
  // Stable so same-time events keep file order.
  std::stable_sort(trace.events.begin(), trace.events.end(),
                   [](const ContactEvent& x, const ContactEvent& y) { return x.time < y.time; });
  trace.duration = trace.events.empty() ? 0.0 : trace.events.back().time;
  return trace;
}

std::string write_contact_trace(const ContactTrace& trace) {
  std::string out;
  out.reserve(trace.events.size() * 24);
  for (const auto& ev : trace.events) {
    append_double(out, ev.time);
    out += " CONN ";
    out += std::to_string(ev.a);
    out += ' ';
    out += std::to_string(ev.b);
    out += ev.direction == LinkDirection::Up ? " up\n" : " down\n";
  }
  return out;
}

ContactTrace generate_community_trace(const CommunityParams& params) {
  if (params.groups == 0 || params.nodes_per_group == 0)
    throw std::invalid_argument("community trace needs at least one node");
  if (params.inter_rate_per_hour < 0.0 || params.intra_rate_per_hour < params.inter_rate_per_hour)
    throw std::invalid_argument("rates must satisfy intra >= inter >= 0");
  if (params.mean_contact_duration_s <= 0.0 || params.duration_s <= 0.0)
    throw std::invalid_argument("durations must be positive");

  ContactTrace trace;
  const std::uint32_t n = params.groups * params.nodes_per_group;
  trace.node_count = n;
  trace.duration = params.duration_s;

  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const bool same_group = a / params.nodes_per_group == b / params.nodes_per_group;
      const double rate = same_group ? params.intra_rate_per_hour : params.inter_rate_per_hour;
      if (rate <= 0.0) continue;
      const double mean_gap = 3600.0 / rate;
      Rng rng(derive_seed(params.seed, a, b));
      double t = 0.0;
      while (true) {
        t += rng.exponential(mean_gap);
        if (t >= params.duration_s) break;
        double end = t + rng.exponential(params.mean_contact_duration_s);
        if (end > params.duration_s) end = params.duration_s;
        trace.events.push_back({t, a, b, LinkDirection::Up});
        trace.events.push_back({end, a, b, LinkDirection::Down});
        t = end;
      }
    }
  }
  std::stable_sort(trace.events.begin(), trace.events.end(),
                   [](const ContactEvent& x, const ContactEvent& y) { return x.time < y.time; });
  return trace;
}

}  // namespace oppnet
