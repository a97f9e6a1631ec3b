#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "oppnet/engine.hpp"
#include "oppnet/report.hpp"
#include "oppnet/rng.hpp"
#include "oppnet/trace.hpp"

using namespace oppnet;

namespace {

// 1 MB messages over 1 MB/s: every data transfer takes exactly 1 s, so
// completion times stay exactly representable.
Scenario two_node_scenario(const std::string& trace_text) {
  Scenario sc;
  sc.trace = parse_contact_trace(trace_text);
  sc.strategy = {StrategyKind::Type::Epidemic, 10};
  sc.params.bandwidth_bytes_per_s = 1048576.0;
  sc.params.data_size_min = sc.params.data_size_max = 1048576;
  sc.params.gen_stop_s = 45.0;
  sc.seed = 1;
  sc.collect_event_log = true;
  return sc;
}

std::vector<SimLogEvent> events_of(const RunReport& rep, SimLogEvent::Kind kind) {
  std::vector<SimLogEvent> out;
  for (const auto& ev : rep.event_log)
    if (ev.kind == kind) out.push_back(ev);
  return out;
}

bool same_log(const std::vector<SimLogEvent>& x, const std::vector<SimLogEvent>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].time != y[i].time || x[i].kind != y[i].kind || x[i].msg != y[i].msg ||
        x[i].node != y[i].node || x[i].copies != y[i].copies)
      return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("empty trace produces an all-zero report") {
  Scenario sc;
  sc.strategy = {StrategyKind::Type::Epidemic, 10};
  auto rep = run(sc);
  CHECK(rep.created_data == 0);
  CHECK(rep.delivered_data == 0);
  CHECK(rep.delivery_ratio == 0.0);
  CHECK(rep.latencies_s.empty());
  CHECK_FALSE(rep.latency_summary.has_value());
  CHECK(rep.data_bytes == 0);
  CHECK(rep.control_overhead == 0.0);
}

TEST_CASE("one long contact delivers both messages over a serialized link") {
  auto rep = run(two_node_scenario("40 CONN 0 1 up\n100 CONN 0 1 down"));
  CHECK(rep.created_data == 2);
  CHECK(rep.delivered_data == 2);
  CHECK(rep.delivery_ratio == 1.0);
  CHECK(rep.data_bytes == 2 * 1048576);
  CHECK(rep.control_bytes == 0);
  CHECK(rep.control_overhead == 0.0);
  CHECK(rep.dropped_data == 0);

  auto starts = events_of(rep, SimLogEvent::Kind::TransferStart);
  REQUIRE(starts.size() == 2);
  CHECK(starts[0].time == 40.0);
  CHECK(starts[1].time == 41.0);  // half duplex: second transfer waits

  auto delivers = events_of(rep, SimLogEvent::Kind::Deliver);
  auto creates = events_of(rep, SimLogEvent::Kind::Create);
  REQUIRE(delivers.size() == 2);
  REQUIRE(creates.size() == 2);
  CHECK(delivers[0].time == 41.0);
  CHECK(delivers[1].time == 42.0);
  std::map<MessageId, SimTime> created_at;
  for (const auto& ev : creates) created_at[ev.msg] = ev.time;
  std::vector<double> expect;
  for (const auto& ev : delivers) expect.push_back(ev.time - created_at.at(ev.msg));
  std::sort(expect.begin(), expect.end());
  auto got = rep.latencies_s;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("equal scenarios give byte-identical reports and event logs") {
  CommunityParams cp;
  cp.groups = 2;
  cp.nodes_per_group = 3;
  cp.duration_s = 3600.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cp.seed = seed;
    Scenario sc;
    sc.trace = generate_community_trace(cp);
    sc.strategy = {StrategyKind::Type::Controlled, 10};
    sc.controller_ids = {0};
    sc.seed = seed * 11;
    sc.collect_event_log = true;
    auto a = run(sc);
    auto b = run(sc);
    CHECK(emit_csv(a) == emit_csv(b));
    CHECK(same_log(a.event_log, b.event_log));
  }
}

TEST_CASE("an interrupted transfer leaves the receiver empty and refunds the budget") {
  auto sc = two_node_scenario("40 CONN 0 1 up\n40.5 CONN 0 1 down\n50 CONN 0 1 up\n100 CONN 0 1 down");
  sc.strategy = {StrategyKind::Type::StaticSpray, 10};
  auto rep = run(sc);

  auto aborts = events_of(rep, SimLogEvent::Kind::TransferAbort);
  REQUIRE(aborts.size() == 1);
  CHECK(aborts[0].time == 40.5);

  // Both the aborted in-flight transfer and the discarded queued one were
  // refunded, so the retry still halves a budget of 10.
  auto delivers = events_of(rep, SimLogEvent::Kind::Deliver);
  REQUIRE(delivers.size() == 2);
  CHECK(delivers[0].time == 51.0);
  CHECK(delivers[1].time == 52.0);
  CHECK(delivers[0].copies == 5);
  CHECK(delivers[1].copies == 5);
  CHECK(rep.data_bytes == 2 * 1048576);  // aborted bytes are not counted
}

TEST_CASE("link drop exactly at the completion instant counts as completed") {
  auto rep = run(two_node_scenario("40 CONN 0 1 up\n41 CONN 0 1 down"));
  CHECK(rep.created_data == 2);
  CHECK(rep.delivered_data == 1);
  CHECK(rep.data_bytes == 1048576);
  auto aborts = events_of(rep, SimLogEvent::Kind::TransferAbort);
  REQUIRE(aborts.size() == 1);  // the follow-up transfer dies at birth
  CHECK(aborts[0].time == 41.0);
}

TEST_CASE("spray budget bounds the distinct holders of every message") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CommunityParams cp;
    cp.groups = 1;
    cp.nodes_per_group = 5;
    cp.intra_rate_per_hour = 20.0;
    cp.inter_rate_per_hour = 0.0;
    cp.mean_contact_duration_s = 30.0;
    cp.duration_s = 900.0;
    cp.seed = seed;

    Scenario sc;
    sc.trace = generate_community_trace(cp);
    sc.strategy = {StrategyKind::Type::StaticSpray, 3};
    sc.params.data_size_min = 1000;
    sc.params.data_size_max = 5000;
    sc.params.buffer_bytes = 8000;
    sc.params.gen_stop_s = 300.0;
    sc.seed = seed;
    sc.collect_event_log = true;
    auto rep = run(sc);

    CHECK(rep.delivered_data <= rep.created_data);
    CHECK(rep.delivery_ratio >= 0.0);
    CHECK(rep.delivery_ratio <= 1.0);
    for (double lat : rep.latencies_s) CHECK(lat >= 0.0);

    std::map<MessageId, std::set<NodeId>> holders;
    for (const auto& ev : rep.event_log)
      if (ev.kind == SimLogEvent::Kind::Create || ev.kind == SimLogEvent::Kind::Store)
        holders[ev.msg].insert(ev.node);
    for (const auto& [msg, nodes] : holders) CHECK(nodes.size() <= 3);
  }
}

TEST_CASE("expired data never rides a later contact") {
  auto sc = two_node_scenario("50 CONN 0 1 up\n60 CONN 0 1 down");
  sc.params.data_ttl_s = 10.0;
  sc.params.gen_stop_s = 40.0;
  auto rep = run(sc);
  CHECK(rep.created_data == 2);
  CHECK(rep.delivered_data == 0);
  CHECK(rep.dropped_data == 2);
  CHECK(rep.data_bytes == 0);
  CHECK(events_of(rep, SimLogEvent::Kind::Expire).size() == 2);
  CHECK(events_of(rep, SimLogEvent::Kind::TransferStart).empty());
}

TEST_CASE("constant sensed congestion walks the degree monotonically to a clamp") {
  CommunityParams cp;
  cp.groups = 1;
  cp.nodes_per_group = 2;
  cp.intra_rate_per_hour = 30.0;
  cp.inter_rate_per_hour = 0.0;
  cp.duration_s = 2000.0;
  cp.seed = 4;

  Scenario sc;
  sc.trace = generate_community_trace(cp);
  sc.strategy = {StrategyKind::Type::Controlled, 10};
  sc.controller_ids = {0};
  sc.params.gen_stop_s = 0.0;  // control plane only

  SUBCASE("above threshold: non-increasing down to 1") {
    sc.params.forced_congestion = 50;
    auto rep = run(sc);
    REQUIRE(!rep.rd_timeline.empty());
    std::map<NodeId, double> last;
    double ctrl_final = 0.0;
    for (const auto& ev : rep.rd_timeline) {
      auto it = last.find(ev.node);
      if (it != last.end()) CHECK(ev.rd <= it->second);
      last[ev.node] = ev.rd;
      if (ev.node == 0) ctrl_final = ev.rd;
    }
    CHECK(ctrl_final == 1.0);
  }
  SUBCASE("zero congestion: non-decreasing up to the cap") {
    sc.params.forced_congestion = 0;
    auto rep = run(sc);
    REQUIRE(!rep.rd_timeline.empty());
    std::map<NodeId, double> last;
    double ctrl_final = 0.0;
    for (const auto& ev : rep.rd_timeline) {
      auto it = last.find(ev.node);
      if (it != last.end()) CHECK(ev.rd >= it->second);
      last[ev.node] = ev.rd;
      if (ev.node == 0) ctrl_final = ev.rd;
    }
    CHECK(ctrl_final == 64.0);
  }
}

TEST_CASE("control messages take the link before data and metrics feed the controller") {
  Scenario sc = two_node_scenario("65 CONN 0 1 up\n80 CONN 0 1 down");
  sc.strategy = {StrategyKind::Type::Controlled, 10};
  sc.controller_ids = {0};
  auto rep = run(sc);

  // ids: 1,2 data (created ~25-35 s), 3 the controller's own reading
  // (consumed in place), 4 the plain node's metric.
  auto consumes = events_of(rep, SimLogEvent::Kind::Consume);
  REQUIRE(consumes.size() == 2);
  CHECK(consumes[0].time == 60.0);
  CHECK(consumes[0].msg == 3);
  CHECK(consumes[0].node == 0);
  CHECK(consumes[1].msg == 4);
  CHECK(consumes[1].node == 0);

  auto starts = events_of(rep, SimLogEvent::Kind::TransferStart);
  REQUIRE(starts.size() == 3);
  CHECK(starts[0].msg == 4);  // the metric beats both data messages
  CHECK(starts[0].time == 65.0);
  std::set<MessageId> data_ids{starts[1].msg, starts[2].msg};
  CHECK(data_ids == std::set<MessageId>{1, 2});

  CHECK(rep.delivered_data == 2);
  CHECK(rep.control_bytes == 21);
  CHECK(rep.data_bytes == 2 * 1048576);
  CHECK(rep.control_overhead == doctest::Approx(21.0 / 2097152.0).epsilon(1e-12));
}

TEST_CASE("directives retune only messages created after application") {
  Scenario sc;
  sc.trace = parse_contact_trace(
      "0.5 CONN 1 2 up\n1 CONN 1 2 down\n100 CONN 0 1 up\n101 CONN 0 1 down\n150 CONN 2 0 up");
  sc.strategy = {StrategyKind::Type::Controlled, 10};
  sc.controller_ids = {0};
  sc.params.bandwidth_bytes_per_s = 1048576.0;
  sc.params.data_size_min = sc.params.data_size_max = 1048576;
  sc.seed = 2;
  sc.collect_event_log = true;
  auto rep = run(sc);

  // The controller steps 10 -> 12 at its 90 s window close and applies it to
  // itself; node 1 applies it when the directive arrives on the 100 s contact.
  std::map<NodeId, std::vector<double>> applied;
  for (const auto& ev : rep.rd_timeline) applied[ev.node].push_back(ev.rd);
  REQUIRE(applied.count(0));
  CHECK(applied[0] == std::vector<double>{12.0});
  REQUIRE(applied.count(1));
  CHECK(applied[1] == std::vector<double>{12.0});
  CHECK_FALSE(applied.count(2));

  // Data creations carry round(current_rd) copies: 10 before the node saw the
  // directive, 12 after.
  std::map<NodeId, SimTime> applied_at;
  for (const auto& ev : rep.rd_timeline) applied_at.emplace(ev.node, ev.time);
  for (const auto& ev : events_of(rep, SimLogEvent::Kind::Create)) {
    auto it = applied_at.find(ev.node);
    const bool after = it != applied_at.end() && ev.time >= it->second;
    CHECK(ev.copies == (after ? 12u : 10u));
  }
}

TEST_CASE("drop policies differ in which message survives creation pressure") {
  auto build = [](DropPolicy policy) {
    Scenario sc;
    sc.trace = parse_contact_trace("0.5 CONN 2 3 up\n75 CONN 2 3 down");
    sc.strategy = {StrategyKind::Type::Epidemic, 10};
    sc.params.bandwidth_bytes_per_s = 1048576.0;
    sc.params.data_size_min = sc.params.data_size_max = 1048576;
    sc.params.buffer_bytes = 1572864;  // room for one and a half messages
    sc.params.gen_stop_s = 70.0;
    sc.params.drop_policy = policy;
    sc.seed = 6;
    sc.collect_event_log = true;
    return run(sc);
  };
  auto oldest = build(DropPolicy::DropOldest);
  CHECK(oldest.created_data == 8);
  CHECK(oldest.dropped_data == 4);
  CHECK(events_of(oldest, SimLogEvent::Kind::Store).size() == 8);

  auto reject = build(DropPolicy::RejectIncoming);
  CHECK(reject.created_data == 8);
  CHECK(reject.dropped_data == 4);
  CHECK(events_of(reject, SimLogEvent::Kind::Store).size() == 4);
}

TEST_CASE("scenario digests separate runs and families") {
  CommunityParams cp;
  cp.groups = 1;
  cp.nodes_per_group = 3;
  cp.duration_s = 1800.0;
  cp.seed = 9;
  auto trace = generate_community_trace(cp);

  Scenario a;
  a.trace = trace;
  a.strategy = {StrategyKind::Type::Epidemic, 10};
  a.seed = 1;
  auto ra = run(a);

  auto ra2 = run(a);
  CHECK(ra.scenario_digest == ra2.scenario_digest);

  Scenario b = a;
  b.seed = 2;
  auto rb = run(b);
  CHECK(rb.scenario_digest != ra.scenario_digest);
  CHECK(rb.family_digest == ra.family_digest);

  Scenario c = a;
  c.strategy = {StrategyKind::Type::StaticSpray, 10};
  auto rc = run(c);
  CHECK(rc.scenario_digest != ra.scenario_digest);
  CHECK(rc.family_digest == ra.family_digest);

  Scenario d = a;
  d.params.buffer_bytes /= 2;
  auto rd = run(d);
  CHECK(rd.family_digest != ra.family_digest);
}

TEST_CASE("scenario validation names the offending knob") {
  Scenario sc = two_node_scenario("1 CONN 0 1 up\n2 CONN 0 1 down");

  SUBCASE("alpha range") {
    sc.params.control.alpha = 1.5;
    try {
      validate_scenario(sc);
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "control.alpha");
    }
  }
  SUBCASE("controlled runs need controllers") {
    sc.strategy.type = StrategyKind::Type::Controlled;
    sc.controller_ids.clear();
    try {
      validate_scenario(sc);
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "control.controllers");
    }
  }
  SUBCASE("controller must exist in the trace") {
    sc.strategy.type = StrategyKind::Type::Controlled;
    sc.controller_ids = {9};
    try {
      validate_scenario(sc);
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "control.controllers");
    }
  }
  SUBCASE("zero buffer") {
    sc.params.buffer_bytes = 0;
    try {
      validate_scenario(sc);
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "engine.buffer_bytes");
    }
  }
  SUBCASE("inverted size range") {
    sc.params.data_size_min = 10;
    sc.params.data_size_max = 5;
    try {
      validate_scenario(sc);
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "data.size_max");
    }
  }
}

// A one-message buffer on the controller with generation every 11 s turns the
// eviction pattern into readable sensor payloads: three drops land in the
// first 45.5 s window (generations at 22, 33, 44), five in the second (55,
// 66, 77, 88, plus the 90 s directive squeezing out the newest data), none in
// the third. With threshold 4 the closes fold 3, then ewma(5, 0) = 1, both
// under threshold, so the degree climbs 10 -> 12 -> 14.4. A sensor that kept
// accumulating would fold 8 at the second close and cut the degree to 2.4;
// skipping the zero-drop reading would fold 5 with the same decrease. Either
// failure changes the timeline, so the two entries below pin both behaviors.
TEST_CASE("sensor windows report per-window drop counts") {
  Scenario sc;
  sc.trace = parse_contact_trace("200 CONN 0 1 up\n201 CONN 0 1 down");
  sc.strategy = {StrategyKind::Type::Controlled, 10};
  sc.controller_ids = {0};
  sc.params.data_size_min = sc.params.data_size_max = 1048576;
  sc.params.buffer_bytes = 1048580;
  sc.params.gen_interval_min_s = sc.params.gen_interval_max_s = 11.0;
  sc.params.gen_stop_s = 100.0;
  sc.params.metric_interval_s = 45.5;
  sc.params.control.congestion_threshold = 4.0;
  sc.seed = 3;

  RunReport rep = run(sc);

  std::vector<RdEvent> mine;
  for (const RdEvent& ev : rep.rd_timeline)
    if (ev.node == 0) mine.push_back(ev);
  REQUIRE(mine.size() == 2);
  CHECK(mine[0].time == 90.0);
  CHECK(std::abs(mine[0].rd - 12.0) < 1e-12);
  CHECK(mine[1].time == 180.0);
  CHECK(std::abs(mine[1].rd - 14.4) < 1e-12);
}

TEST_CASE("data sizes draw inclusively from the configured range") {
  Rng rng(2026);
  std::uint64_t lo_seen = std::uint64_t(-1), hi_seen = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng.uniform_int(600, 1048576);
    REQUIRE(v >= 600);
    REQUIRE(v <= 1048576);
    lo_seen = std::min(lo_seen, v);
    hi_seen = std::max(hi_seen, v);
  }
  // Ten thousand draws over a million-wide range land within 1% of both ends.
  CHECK(lo_seen < 600 + 10486);
  CHECK(hi_seen > 1048576 - 10486);
}

}  // TEST_SUITE
