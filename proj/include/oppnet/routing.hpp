#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "oppnet/buffer.hpp"
#include "oppnet/control.hpp"
#include "oppnet/types.hpp"

namespace oppnet {

struct StrategyKind {
  enum class Type { Epidemic, StaticSpray, Controlled };
  Type type = Type::Controlled;
  std::uint32_t spray_limit = 10;  // initial copies for StaticSpray

  bool is_spray() const { return type != Type::Epidemic; }
};

using SummaryVector = std::unordered_set<MessageId>;

enum class TransferKind { Copy, Handoff };

struct Offer {
  MessageId id = 0;
  TransferKind kind = TransferKind::Copy;
  std::uint32_t carry = 0;  // copies the receiver's replica gets
};

struct PeerInfo {
  NodeId id = 0;
  bool is_controller = false;
};

bool peer_is_destination(const Message& msg, const PeerInfo& peer);

// Plans what one side of a fresh contact offers the other. Epidemic offers
// everything the peer lacks. Spray offers a Copy carrying floor(cl/2) while
// copies_left > 1, and with the last copy only a Handoff directly to the
// destination. Control messages go first (directives, then metrics), then
// data, oldest created first; ties break on message id.
std::vector<Offer> plan_offers(const Buffer& buf, const StrategyKind& strategy,
                               const SummaryVector& peer_summary, const PeerInfo& peer);

enum class ReceiveAction { Deliver, Store, ConsumeControl, Discard };

struct ReceiverView {
  NodeId id = 0;
  bool is_controller = false;
  bool duplicate_in_buffer = false;
  bool already_delivered = false;
  std::optional<DirectiveKey> last_applied_directive;
};

// Decides what a receiving node does with an arriving message: deliver data
// addressed to it, consume metrics at a controller, discard duplicates and
// stale directives, store everything else for carriage.
ReceiveAction classify_receive(const Message& msg, const ReceiverView& view);

}  // namespace oppnet
