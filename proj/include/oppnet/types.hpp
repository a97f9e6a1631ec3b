#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace oppnet {

using SimTime = double;  // seconds since simulation start
using NodeId = std::uint32_t;
using MessageId = std::uint64_t;

// copies_left value marking messages replicated without a budget (epidemic).
inline constexpr std::uint32_t kUnlimitedCopies = UINT32_MAX;

enum class MessageKind { Data, Metric, Directive };

struct Destination {
  enum class Kind { Unicast, ControllerGroup, Broadcast };

  Kind kind = Kind::Unicast;
  NodeId node = 0;  // meaningful only for Unicast

  static Destination unicast(NodeId n) { return {Kind::Unicast, n}; }
  static Destination controller_group() { return {Kind::ControllerGroup, 0}; }
  static Destination broadcast() { return {Kind::Broadcast, 0}; }

  friend bool operator==(const Destination&, const Destination&) = default;
};

struct MetricPayload {
  std::uint64_t drop_count = 0;  // data drops sensed in the closing window
  SimTime window_end = 0;
  NodeId sensor = 0;
};

struct DirectivePayload {
  double new_rd = 1.0;  // replication degree to apply, >= 1
  SimTime issued_at = 0;
  NodeId controller = 0;
};

struct Message {
  MessageId id = 0;
  MessageKind kind = MessageKind::Data;
  NodeId source = 0;
  Destination destination;
  std::uint64_t size_bytes = 0;
  SimTime created_at = 0;
  std::optional<double> ttl_s;    // absent = never expires
  std::uint32_t copies_left = 1;  // spray budget carried by this copy
  std::variant<std::monostate, MetricPayload, DirectivePayload> payload;

  bool expired(SimTime now) const { return ttl_s && now - created_at >= *ttl_s; }
  bool is_control() const { return kind != MessageKind::Data; }
  const MetricPayload* metric() const { return std::get_if<MetricPayload>(&payload); }
  const DirectivePayload* directive() const { return std::get_if<DirectivePayload>(&payload); }
};

enum class LinkDirection { Up, Down };

struct ContactEvent {
  SimTime time = 0;
  NodeId a = 0;
  NodeId b = 0;
  LinkDirection direction = LinkDirection::Up;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

// Replication degree is a real number; it becomes an integer copy budget only
// when a message is created. Round half to even, clamp to at least one copy.
inline std::uint32_t copies_from_rd(double rd) {
  const double r = std::nearbyint(rd);
  if (r <= 1.0) return 1;
  if (r >= static_cast<double>(kUnlimitedCopies)) return kUnlimitedCopies - 1;
  return static_cast<std::uint32_t>(r);
}

// Invalid configuration value or key; `key` names the offending config entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace oppnet
