#include "doctest.h"

#include <cmath>

#include "oppnet/trace.hpp"

using namespace oppnet;

TEST_SUITE("trace") {

TEST_CASE("minimal well-formed trace") {
  auto t = parse_contact_trace("10.0 CONN 0 1 up\n25.0 CONN 0 1 down");
  REQUIRE(t.events.size() == 2);
  CHECK(t.node_count == 2);
  CHECK(t.duration == 25.0);
  CHECK(t.events[0].time == 10.0);
  CHECK(t.events[0].a == 0);
  CHECK(t.events[0].b == 1);
  CHECK(t.events[0].direction == LinkDirection::Up);
  CHECK(t.events[1].direction == LinkDirection::Down);
}

TEST_CASE("comments and blank lines are skipped; node count is one past the max id") {
  auto t = parse_contact_trace("# comment\n\n5 CONN 2 0 up");
  REQUIRE(t.events.size() == 1);
  CHECK(t.node_count == 3);
  CHECK(t.duration == 5.0);
}

TEST_CASE("crlf input is accepted") {
  auto t = parse_contact_trace("10 CONN 0 1 up\r\n20 CONN 0 1 down\r\n");
  CHECK(t.events.size() == 2);
}

TEST_CASE("violations carry 1-based line numbers") {
  SUBCASE("down without up") {
    try {
      parse_contact_trace("10.0 CONN 0 1 down");
      FAIL("expected a trace error");
    } catch (const TraceError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("duplicate up") {
    try {
      parse_contact_trace("1 CONN 0 1 up\n2 CONN 1 0 up");
      FAIL("expected a trace error");
    } catch (const TraceError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("negative time") { CHECK_THROWS_AS(parse_contact_trace("-1 CONN 0 1 up"), TraceError); }
  SUBCASE("self contact") { CHECK_THROWS_AS(parse_contact_trace("1 CONN 2 2 up"), TraceError); }
  SUBCASE("wrong field count") { CHECK_THROWS_AS(parse_contact_trace("1 CONN 0 1"), TraceError); }
  SUBCASE("wrong keyword") { CHECK_THROWS_AS(parse_contact_trace("1 LINK 0 1 up"), TraceError); }
  SUBCASE("bad id") { CHECK_THROWS_AS(parse_contact_trace("1 CONN x 1 up"), TraceError); }
  SUBCASE("bad direction") { CHECK_THROWS_AS(parse_contact_trace("1 CONN 0 1 open"), TraceError); }
  SUBCASE("bad time") { CHECK_THROWS_AS(parse_contact_trace("ten CONN 0 1 up"), TraceError); }
  SUBCASE("line numbers skip comments") {
    try {
      parse_contact_trace("# header\n1 CONN 0 1 up\n\n2 CONN 0 1 up");
      FAIL("expected a trace error");
    } catch (const TraceError& e) {
      CHECK(e.line() == 4);
    }
  }
}

TEST_CASE("same-time events keep input order") {
  auto t = parse_contact_trace("5 CONN 0 1 up\n5 CONN 2 3 up\n6 CONN 0 1 down\n6 CONN 2 3 down");
  CHECK(t.events[0].a == 0);
  CHECK(t.events[1].a == 2);
  CHECK(t.events[2].a == 0);
  CHECK(t.events[3].a == 2);
}

TEST_CASE("write then parse reproduces events exactly") {
  auto t = parse_contact_trace("0.1 CONN 0 1 up\n7.25 CONN 0 1 down\n7.25 CONN 1 2 up\n9 CONN 1 2 down");
  auto round = parse_contact_trace(write_contact_trace(t));
  CHECK(round.events == t.events);
  CHECK(round.node_count == t.node_count);
  CHECK(round.duration == t.duration);
}

TEST_CASE("empty trace writes empty text") {
  ContactTrace t;
  CHECK(write_contact_trace(t).empty());
}

TEST_CASE("generator round-trips through the text format for many seeds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CommunityParams p;
    p.groups = 2;
    p.nodes_per_group = 4;
    p.intra_rate_per_hour = 6.0;
    p.inter_rate_per_hour = 1.0;
    p.mean_contact_duration_s = 60.0;
    p.duration_s = 3600.0;
    p.seed = seed;
    auto t = generate_community_trace(p);
    auto round = parse_contact_trace(write_contact_trace(t));
    CHECK(round.events == t.events);
  }
}

TEST_CASE("generator is deterministic in params and seed") {
  CommunityParams p;
  p.seed = 77;
  auto a = generate_community_trace(p);
  auto b = generate_community_trace(p);
  CHECK(a.events == b.events);
  p.seed = 78;
  auto c = generate_community_trace(p);
  CHECK(a.events != c.events);
}

TEST_CASE("zero inter-group rate yields no cross-group contacts") {
  CommunityParams p;
  p.groups = 2;
  p.nodes_per_group = 5;
  p.inter_rate_per_hour = 0.0;
  p.duration_s = 7200.0;
  auto t = generate_community_trace(p);
  CHECK(!t.events.empty());
  for (const auto& ev : t.events) {
    CHECK(ev.a / p.nodes_per_group == ev.b / p.nodes_per_group);
    CHECK(ev.a < t.node_count);
    CHECK(ev.b < t.node_count);
    CHECK(ev.time <= t.duration);
  }
}

TEST_CASE("contact volume tracks the configured rate") {
  // 45 pairs at 2 contacts/hour over 10 h: about 900 contact starts, less the
  // time spent inside contacts. The average over seeds must land within 20%.
  CommunityParams p;
  p.groups = 1;
  p.nodes_per_group = 10;
  p.intra_rate_per_hour = 2.0;
  p.inter_rate_per_hour = 0.0;
  p.mean_contact_duration_s = 120.0;
  p.duration_s = 36000.0;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    p.seed = seed;
    total += static_cast<double>(generate_community_trace(p).events.size()) / 2.0;
  }
  const double mean = total / 100.0;
  CHECK(mean > 720.0);
  CHECK(mean < 1080.0);
}

TEST_CASE("generator rejects invalid parameters") {
  CommunityParams p;
  p.groups = 0;
  CHECK_THROWS_AS(generate_community_trace(p), std::invalid_argument);
  p = CommunityParams{};
  p.intra_rate_per_hour = 0.1;
  p.inter_rate_per_hour = 0.5;
  CHECK_THROWS_AS(generate_community_trace(p), std::invalid_argument);
  p = CommunityParams{};
  p.mean_contact_duration_s = 0.0;
  CHECK_THROWS_AS(generate_community_trace(p), std::invalid_argument);
}

}  // TEST_SUITE
