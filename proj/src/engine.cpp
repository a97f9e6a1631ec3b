#include "oppnet/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <map>
#include <queue>
#include <unordered_set>
#include <utility>
#include <vector>

#include "oppnet/rng.hpp"

namespace oppnet {
namespace {

// FNV-1a over the raw bytes of everything fed in.
struct Digest {
  std::uint64_t h = 0xcbf29ce484222325ull;

  void bytes(const void* p, std::size_t n) {
    auto* c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= c[i];
      h *= 0x100000001b3ull;
    }
  }
  void u64(std::uint64_t v) { bytes(&v, sizeof v); }
  void u32(std::uint32_t v) { bytes(&v, sizeof v); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void opt_f64(const std::optional<double>& v) {
    u32(v.has_value());
    f64(v.value_or(0.0));
  }
};

void digest_trace(Digest& d, const ContactTrace& trace) {
  d.u64(trace.events.size());
  for (const auto& ev : trace.events) {
    d.f64(ev.time);
    d.u32(ev.a);
    d.u32(ev.b);
    d.u32(ev.direction == LinkDirection::Up ? 1 : 0);
  }
  d.u32(trace.node_count);
  d.f64(trace.duration);
}

void digest_traffic(Digest& d, const ScenarioParams& p) {
  d.f64(p.bandwidth_bytes_per_s);
  d.u64(p.buffer_bytes);
  d.u32(p.drop_policy == DropPolicy::DropOldest ? 0 : 1);
  d.u64(p.data_size_min);
  d.u64(p.data_size_max);
  d.f64(p.gen_interval_min_s);
  d.f64(p.gen_interval_max_s);
  d.opt_f64(p.data_ttl_s);
  d.opt_f64(p.gen_stop_s);
}

std::uint64_t family_digest(const Scenario& s) {
  Digest d;
  digest_trace(d, s.trace);
  digest_traffic(d, s.params);
  return d.h;
}

std::uint64_t scenario_digest(const Scenario& s) {
  Digest d;
  digest_trace(d, s.trace);
  digest_traffic(d, s.params);
  d.f64(s.params.metric_interval_s);
  d.f64(s.params.directive_interval_s);
  d.u64(s.params.metric_size_bytes);
  d.u64(s.params.directive_size_bytes);
  d.f64(s.params.control.k);
  d.f64(s.params.control.alpha);
  d.f64(s.params.control.congestion_threshold);
  d.f64(s.params.control.rd_default);
  d.f64(s.params.control.rd_max);
  d.u32(s.params.control.mode == RdUpdateMode::Algorithm ? 0 : 1);
  d.u32(s.params.count_control_drops);
  d.u32(s.params.forced_congestion.has_value());
  d.u64(s.params.forced_congestion.value_or(0));
  d.u32(static_cast<std::uint32_t>(s.strategy.type));
  d.u32(s.strategy.spray_limit);
  auto ctrls = s.controller_ids;
  std::sort(ctrls.begin(), ctrls.end());
  d.u64(ctrls.size());
  for (NodeId c : ctrls) d.u32(c);
  d.u64(s.seed);
  return d.h;
}

// Event categories in tie-break order: same-time events resolve contact,
// completion, data generation, sensor window, controller window; then by key
// (trace position for contacts, node id otherwise), then by insertion order.
enum : int { kContact = 0, kCompletion = 1, kDataGen = 2, kSensor = 3, kController = 4 };

struct Ev {
  SimTime time = 0;
  int cat = 0;
  std::uint64_t key = 0;
  std::uint64_t seq = 0;
  NodeId a = 0, b = 0;        // contact / completion link pair
  std::uint64_t xfer = 0;     // completion: transfer sequence on that link
  LinkDirection dir = LinkDirection::Up;
};

struct EvAfter {
  bool operator()(const Ev& x, const Ev& y) const {
    if (x.time != y.time) return x.time > y.time;
    if (x.cat != y.cat) return x.cat > y.cat;
    if (x.key != y.key) return x.key > y.key;
    return x.seq > y.seq;
  }
};

struct NodeSim {
  NodeId id = 0;
  Buffer buffer;
  bool is_controller = false;
  double current_rd = 1.0;
  std::optional<DirectiveKey> last_applied;
  SensorState sensor;
  std::optional<ControllerState> controller;
  std::unordered_set<MessageId> delivered;
  Rng rng;

  NodeSim(NodeId n, std::uint64_t cap, std::uint64_t stream_seed)
      : id(n), buffer(cap), rng(stream_seed) {}
};

struct PendingTransfer {
  Message snapshot;  // copies_left already set to the carried budget
  NodeId from = 0, to = 0;
  TransferKind kind = TransferKind::Copy;
  std::uint32_t carry = 0;
};

struct LinkSim {
  bool up = false;
  std::deque<PendingTransfer> queue;
  std::optional<PendingTransfer> in_flight;
  SimTime completes_at = 0;
  std::uint64_t transfer_seq = 0;  // increments when a transfer starts
};

enum class DropWhy { Congestion, Expiry };

struct Sim {
  const Scenario& sc;
  std::vector<NodeSim> nodes;
  std::map<std::pair<NodeId, NodeId>, LinkSim> links;
  std::priority_queue<Ev, std::vector<Ev>, EvAfter> pq;
  std::uint64_t next_seq = 0;
  MessageId next_msg_id = 0;
  RunReport rep;

  explicit Sim(const Scenario& scenario) : sc(scenario) {}

  const ScenarioParams& par() const { return sc.params; }
  bool controlled() const { return sc.strategy.type == StrategyKind::Type::Controlled; }

  void push(Ev ev) {
    ev.seq = next_seq++;
    pq.push(ev);
  }

  void log(SimLogEvent::Kind kind, SimTime t, MessageId m, NodeId n, std::uint32_t copies = 0) {
    if (sc.collect_event_log) rep.event_log.push_back({t, kind, m, n, copies});
  }

  void count_drop(NodeSim& node, const Message& msg, SimTime now, DropWhy why) {
    if (msg.kind == MessageKind::Data)
      ++rep.dropped_data;
    else
      ++rep.dropped_control;
    if (why == DropWhy::Congestion &&
        (msg.kind == MessageKind::Data || par().count_control_drops))
      ++node.sensor.drop_count;
    log(why == DropWhy::Congestion ? SimLogEvent::Kind::Drop : SimLogEvent::Kind::Expire, now,
        msg.id, node.id);
  }

  void purge_expired(NodeSim& node, SimTime now) {
    std::vector<MessageId> dead;
    for (const Message& m : node.buffer)
      if (m.expired(now)) dead.push_back(m.id);
    for (MessageId id : dead) {
      auto victim = node.buffer.remove(id);
      count_drop(node, *victim, now, DropWhy::Expiry);
    }
  }

  void apply_directive(NodeSim& node, const DirectivePayload& d, SimTime now) {
    node.current_rd = d.new_rd;
    node.last_applied = key_of(d);
    rep.rd_timeline.push_back({now, node.id, d.new_rd});
    log(SimLogEvent::Kind::DirectiveApply, now, 0, node.id);
  }

  LinkSim& link_for(NodeId a, NodeId b) {
    auto key = std::minmax(a, b);
    return links[{key.first, key.second}];
  }

  // Splits the live copy's budget and enqueues the snapshot. Returns false if
  // nothing can be sent (message gone or no budget left).
  bool enqueue_transfer(LinkSim& link, NodeSim& from, NodeId to, const Offer& offer) {
    Message* live = from.buffer.find(offer.id);
    if (!live) return false;
    PendingTransfer t;
    t.from = from.id;
    t.to = to;
    t.kind = offer.kind;
    if (offer.kind == TransferKind::Handoff) {
      t.carry = 1;
      t.snapshot = *live;
    } else if (live->copies_left == kUnlimitedCopies) {
      t.carry = kUnlimitedCopies;
      t.snapshot = *live;
    } else {
      std::uint32_t carry = live->copies_left / 2;
      if (carry == 0) return false;
      live->copies_left -= carry;
      t.carry = carry;
      t.snapshot = *live;
      t.snapshot.copies_left = carry;
    }
    link.queue.push_back(std::move(t));
    return true;
  }

  void refund(const PendingTransfer& t) {
    if (t.kind != TransferKind::Copy || t.carry == kUnlimitedCopies) return;
    Message* live = nodes[t.from].buffer.find(t.snapshot.id);
    if (live && live->copies_left != kUnlimitedCopies) live->copies_left += t.carry;
  }

  void start_next_transfer(NodeId a, NodeId b, LinkSim& link, SimTime now) {
    if (link.in_flight) return;
    while (!link.queue.empty()) {
      PendingTransfer t = std::move(link.queue.front());
      link.queue.pop_front();
      // Sender must still hold the message when its slot comes up.
      if (!nodes[t.from].buffer.contains(t.snapshot.id)) continue;
      const double secs =
          static_cast<double>(t.snapshot.size_bytes) / par().bandwidth_bytes_per_s;
      link.completes_at = now + secs;
      ++link.transfer_seq;
      log(SimLogEvent::Kind::TransferStart, now, t.snapshot.id, t.from);
      Ev ev;
      ev.time = link.completes_at;
      ev.cat = kCompletion;
      ev.key = t.to;
      ev.a = a;
      ev.b = b;
      ev.xfer = link.transfer_seq;
      link.in_flight = std::move(t);
      push(ev);
      return;
    }
  }

  void complete_transfer(NodeId a, NodeId b, LinkSim& link, SimTime now) {
    PendingTransfer t = std::move(*link.in_flight);
    link.in_flight.reset();
    log(SimLogEvent::Kind::TransferComplete, now, t.snapshot.id, t.to);

    if (t.snapshot.kind == MessageKind::Data)
      rep.data_bytes += t.snapshot.size_bytes;
    else
      rep.control_bytes += t.snapshot.size_bytes;

    if (t.kind == TransferKind::Handoff) nodes[t.from].buffer.remove(t.snapshot.id);

    NodeSim& recv = nodes[t.to];
    purge_expired(recv, now);
    if (!t.snapshot.expired(now)) deliver_to(recv, std::move(t.snapshot), now);

    start_next_transfer(a, b, link, now);
  }

  void deliver_to(NodeSim& recv, Message msg, SimTime now) {
    // Controllers fold peer directives into their window average on first
    // sight of each message id, independently of node-level staleness.
    if (msg.kind == MessageKind::Directive && recv.controller) {
      const auto& d = *msg.directive();
      if (d.controller != recv.id) recv.controller->fold_peer_directive(msg.id, d.new_rd);
    }

    ReceiverView view;
    view.id = recv.id;
    view.is_controller = recv.is_controller;
    view.duplicate_in_buffer = recv.buffer.contains(msg.id);
    view.already_delivered = recv.delivered.count(msg.id) != 0;
    view.last_applied_directive = recv.last_applied;

    switch (classify_receive(msg, view)) {
      case ReceiveAction::Deliver: {
        recv.delivered.insert(msg.id);
        ++rep.delivered_data;
        rep.latencies_s.push_back(now - msg.created_at);
        log(SimLogEvent::Kind::Deliver, now, msg.id, recv.id, msg.copies_left);
        break;
      }
      case ReceiveAction::ConsumeControl: {
        recv.controller->fold_metric(msg.id, static_cast<double>(msg.metric()->drop_count));
        log(SimLogEvent::Kind::Consume, now, msg.id, recv.id);
        break;
      }
      case ReceiveAction::Store: {
        if (msg.kind == MessageKind::Directive) apply_directive(recv, *msg.directive(), now);
        insert_counting(recv, std::move(msg), now);
        break;
      }
      case ReceiveAction::Discard:
        break;
    }
  }

  void insert_counting(NodeSim& node, Message msg, SimTime now) {
    MessageId id = msg.id;
    std::uint32_t copies = msg.copies_left;
    auto outcome = node.buffer.insert(std::move(msg), par().drop_policy);
    for (const Message& victim : outcome.dropped)
      count_drop(node, victim, now, DropWhy::Congestion);
    if (outcome.accepted) log(SimLogEvent::Kind::Store, now, id, node.id, copies);
  }

  void on_contact_up(const Ev& ev, SimTime now) {
    NodeSim& na = nodes[ev.a];
    NodeSim& nb = nodes[ev.b];
    LinkSim& link = link_for(ev.a, ev.b);
    link.up = true;

    purge_expired(na, now);
    purge_expired(nb, now);

    SummaryVector sum_a, sum_b;
    for (const Message& m : na.buffer) sum_a.insert(m.id);
    for (const Message& m : nb.buffer) sum_b.insert(m.id);

    auto offers_a = plan_offers(na.buffer, sc.strategy, sum_b, {nb.id, nb.is_controller});
    auto offers_b = plan_offers(nb.buffer, sc.strategy, sum_a, {na.id, na.is_controller});

    // Classwise priority on the shared link, interleaving the two senders
    // within each class.
    auto kind_of = [&](NodeSim& n, const Offer& o) { return n.buffer.find(o.id)->kind; };
    for (MessageKind k : {MessageKind::Directive, MessageKind::Metric, MessageKind::Data}) {
      std::size_t ia = 0, ib = 0;
      bool turn_a = true;
      while (true) {
        while (ia < offers_a.size() && kind_of(na, offers_a[ia]) != k) ++ia;
        while (ib < offers_b.size() && kind_of(nb, offers_b[ib]) != k) ++ib;
        const bool has_a = ia < offers_a.size();
        const bool has_b = ib < offers_b.size();
        if (!has_a && !has_b) break;
        if (turn_a ? has_a : !has_b) {
          enqueue_transfer(link, na, nb.id, offers_a[ia++]);
        } else {
          enqueue_transfer(link, nb, na.id, offers_b[ib++]);
        }
        turn_a = !turn_a;
      }
    }
    start_next_transfer(ev.a, ev.b, link, now);
  }

  void on_contact_down(const Ev& ev, SimTime now) {
    LinkSim& link = link_for(ev.a, ev.b);
    if (link.in_flight) {
      // A transfer finishing exactly when the link drops still counts; its
      // queued completion event will be skipped as stale.
      if (link.completes_at <= now) {
        complete_transfer(ev.a, ev.b, link, now);
        if (link.in_flight) {  // a follow-up transfer started just now
          refund(*link.in_flight);
          log(SimLogEvent::Kind::TransferAbort, now, link.in_flight->snapshot.id,
              link.in_flight->from);
          link.in_flight.reset();
        }
      } else {
        refund(*link.in_flight);
        log(SimLogEvent::Kind::TransferAbort, now, link.in_flight->snapshot.id,
            link.in_flight->from);
        link.in_flight.reset();
      }
    }
    for (const PendingTransfer& t : link.queue) refund(t);
    link.queue.clear();
    link.up = false;
  }

  void on_completion(const Ev& ev, SimTime now) {
    LinkSim& link = link_for(ev.a, ev.b);
    if (!link.up || !link.in_flight || link.transfer_seq != ev.xfer) return;  // stale
    complete_transfer(ev.a, ev.b, link, now);
  }

  void on_data_gen(NodeSim& node, SimTime now) {
    purge_expired(node, now);
    const auto& p = par();
    if (p.gen_stop_s && now > *p.gen_stop_s) return;

    const std::uint64_t size = node.rng.uniform_int(p.data_size_min, p.data_size_max);
    const std::uint64_t pick = node.rng.uniform_int(std::uint64_t{nodes.size()} - 1);
    const NodeId dest = pick >= node.id ? static_cast<NodeId>(pick + 1)
                                        : static_cast<NodeId>(pick);
    const SimTime next = now + node.rng.uniform(p.gen_interval_min_s, p.gen_interval_max_s);

    Message msg;
    msg.id = ++next_msg_id;
    msg.kind = MessageKind::Data;
    msg.source = node.id;
    msg.destination = Destination::unicast(dest);
    msg.size_bytes = size;
    msg.created_at = now;
    msg.ttl_s = p.data_ttl_s;
    msg.copies_left = sc.strategy.type == StrategyKind::Type::Epidemic
                          ? kUnlimitedCopies
                          : copies_from_rd(node.current_rd);
    ++rep.created_data;
    log(SimLogEvent::Kind::Create, now, msg.id, node.id, msg.copies_left);
    insert_counting(node, std::move(msg), now);

    if (next <= sc.trace.duration && (!p.gen_stop_s || next <= *p.gen_stop_s)) {
      Ev ev;
      ev.time = next;
      ev.cat = kDataGen;
      ev.key = node.id;
      push(ev);
    }
  }

  void on_sensor_window(NodeSim& node, SimTime now) {
    purge_expired(node, now);
    const auto& p = par();
    const std::uint64_t sensed =
        p.forced_congestion ? *p.forced_congestion : node.sensor.drop_count;
    node.sensor.drop_count = 0;

    Message msg;
    msg.id = ++next_msg_id;
    msg.kind = MessageKind::Metric;
    msg.source = node.id;
    msg.destination = Destination::controller_group();
    msg.size_bytes = p.metric_size_bytes;
    msg.created_at = now;
    msg.ttl_s = 2.0 * p.metric_interval_s;
    msg.copies_left = copies_from_rd(node.current_rd);
    msg.payload = MetricPayload{sensed, now, node.id};

    if (node.controller) {
      // A controller's own reading feeds its accumulator directly; no
      // message rides the network.
      node.controller->fold_metric(msg.id, static_cast<double>(sensed));
      log(SimLogEvent::Kind::Consume, now, msg.id, node.id);
    } else {
      log(SimLogEvent::Kind::Create, now, msg.id, node.id, msg.copies_left);
      insert_counting(node, std::move(msg), now);
    }

    const SimTime next = now + p.metric_interval_s;
    if (next <= sc.trace.duration) {
      Ev ev;
      ev.time = next;
      ev.cat = kSensor;
      ev.key = node.id;
      push(ev);
    }
  }

  void on_controller_window(NodeSim& node, SimTime now) {
    purge_expired(node, now);
    const auto& p = par();
    const double new_rd = close_controller_window(*node.controller);

    Message msg;
    msg.id = ++next_msg_id;
    msg.kind = MessageKind::Directive;
    msg.source = node.id;
    msg.destination = Destination::broadcast();
    msg.size_bytes = p.directive_size_bytes;
    msg.created_at = now;
    msg.ttl_s = 2.0 * p.directive_interval_s;
    msg.copies_left = copies_from_rd(new_rd);
    msg.payload = DirectivePayload{new_rd, now, node.id};

    apply_directive(node, *msg.directive(), now);
    log(SimLogEvent::Kind::Create, now, msg.id, node.id, msg.copies_left);
    insert_counting(node, std::move(msg), now);

    const SimTime next = now + p.directive_interval_s;
    if (next <= sc.trace.duration) {
      Ev ev;
      ev.time = next;
      ev.cat = kController;
      ev.key = node.id;
      push(ev);
    }
  }

  RunReport run() {
    const std::uint32_t n = sc.trace.node_count;
    nodes.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
      nodes.emplace_back(i, par().buffer_bytes, derive_seed(sc.seed, i));
      NodeSim& node = nodes.back();
      switch (sc.strategy.type) {
        case StrategyKind::Type::Epidemic: node.current_rd = par().control.rd_default; break;
        case StrategyKind::Type::StaticSpray:
          node.current_rd = static_cast<double>(sc.strategy.spray_limit);
          break;
        case StrategyKind::Type::Controlled: node.current_rd = par().control.rd_default; break;
      }
      if (controlled() &&
          std::find(sc.controller_ids.begin(), sc.controller_ids.end(), i) !=
              sc.controller_ids.end()) {
        node.is_controller = true;
        node.controller.emplace(par().control);
      }
    }

    for (std::size_t i = 0; i < sc.trace.events.size(); ++i) {
      const ContactEvent& c = sc.trace.events[i];
      Ev ev;
      ev.time = c.time;
      ev.cat = kContact;
      ev.key = i;
      ev.a = c.a;
      ev.b = c.b;
      ev.dir = c.direction;
      push(ev);
    }

    if (n >= 2) {
      for (NodeId i = 0; i < n; ++i) {
        const SimTime first =
            nodes[i].rng.uniform(par().gen_interval_min_s, par().gen_interval_max_s);
        if (first > sc.trace.duration || (par().gen_stop_s && first > *par().gen_stop_s))
          continue;
        Ev ev;
        ev.time = first;
        ev.cat = kDataGen;
        ev.key = i;
        push(ev);
      }
    }

    if (controlled()) {
      for (NodeId i = 0; i < n; ++i) {
        if (par().metric_interval_s <= sc.trace.duration) {
          Ev ev;
          ev.time = par().metric_interval_s;
          ev.cat = kSensor;
          ev.key = i;
          push(ev);
        }
        if (nodes[i].is_controller && par().directive_interval_s <= sc.trace.duration) {
          Ev ev;
          ev.time = par().directive_interval_s;
          ev.cat = kController;
          ev.key = i;
          push(ev);
        }
      }
    }

    while (!pq.empty()) {
      Ev ev = pq.top();
      if (ev.time > sc.trace.duration) break;
      pq.pop();
      switch (ev.cat) {
        case kContact:
          if (ev.dir == LinkDirection::Up)
            on_contact_up(ev, ev.time);
          else
            on_contact_down(ev, ev.time);
          break;
        case kCompletion: on_completion(ev, ev.time); break;
        case kDataGen: on_data_gen(nodes[ev.key], ev.time); break;
        case kSensor: on_sensor_window(nodes[ev.key], ev.time); break;
        case kController: on_controller_window(nodes[ev.key], ev.time); break;
      }
    }

    rep.delivery_ratio =
        rep.created_data == 0
            ? 0.0
            : static_cast<double>(rep.delivered_data) / static_cast<double>(rep.created_data);
    if (!rep.latencies_s.empty()) rep.latency_summary = quantiles(rep.latencies_s);
    rep.control_overhead = rep.data_bytes == 0 ? 0.0
                                               : static_cast<double>(rep.control_bytes) /
                                                     static_cast<double>(rep.data_bytes);
    rep.scenario_digest = scenario_digest(sc);
    rep.family_digest = family_digest(sc);
    return std::move(rep);
  }
};

}  // namespace

void validate_scenario(const Scenario& sc) {
  const auto& p = sc.params;
  if (p.bandwidth_bytes_per_s <= 0.0) throw ConfigError("engine.bandwidth_bytes_per_s", "must be positive");
  if (p.buffer_bytes == 0) throw ConfigError("engine.buffer_bytes", "must be positive");
  if (p.data_size_min == 0) throw ConfigError("data.size_min", "must be positive");
  if (p.data_size_max < p.data_size_min) throw ConfigError("data.size_max", "range is empty");
  if (p.gen_interval_min_s <= 0.0) throw ConfigError("data.gen_interval_min_s", "must be positive");
  if (p.gen_interval_max_s < p.gen_interval_min_s)
    throw ConfigError("data.gen_interval_max_s", "range is empty");
  if (p.data_ttl_s && *p.data_ttl_s <= 0.0) throw ConfigError("data.ttl_s", "must be positive");
  if (p.gen_stop_s && *p.gen_stop_s < 0.0) throw ConfigError("data.gen_stop_s", "must be non-negative");
  if (p.metric_interval_s <= 0.0) throw ConfigError("control.metric_interval", "must be positive");
  if (p.directive_interval_s <= 0.0)
    throw ConfigError("control.directive_interval", "must be positive");
  if (p.metric_size_bytes == 0) throw ConfigError("control.metric_size", "must be positive");
  if (p.directive_size_bytes == 0) throw ConfigError("control.directive_size", "must be positive");
  const auto& c = p.control;
  if (!(c.k > 0.0 && c.k <= 1.0)) throw ConfigError("control.k", "must be in (0, 1]");
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) throw ConfigError("control.alpha", "must be in (0, 1]");
  if (c.congestion_threshold < 0.0) throw ConfigError("control.threshold", "must be non-negative");
  if (c.rd_max < 1.0) throw ConfigError("control.rd_max", "must be at least 1");
  if (!(c.rd_default >= 1.0 && c.rd_default <= c.rd_max))
    throw ConfigError("control.rd_default", "must be in [1, rd_max]");
  if (sc.strategy.type == StrategyKind::Type::StaticSpray && sc.strategy.spray_limit == 0)
    throw ConfigError("sim.spray_limit", "must be at least 1");
  if (sc.strategy.type == StrategyKind::Type::Controlled) {
    if (sc.controller_ids.empty())
      throw ConfigError("control.controllers", "at least one controller required");
    if (sc.trace.node_count > 0)
      for (NodeId c_id : sc.controller_ids)
        if (c_id >= sc.trace.node_count)
          throw ConfigError("control.controllers",
                            "controller " + std::to_string(c_id) + " not in trace");
  }
}

RunReport run(const Scenario& scenario) {
  validate_scenario(scenario);
  Sim sim(scenario);
  return sim.run();
}

}  // namespace oppnet
