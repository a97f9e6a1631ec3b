#include "oppnet/routing.hpp"

#include <algorithm>

namespace oppnet {
namespace {

int kind_rank(MessageKind k) {
  switch (k) {
    case MessageKind::Directive: return 0;
    case MessageKind::Metric: return 1;
    case MessageKind::Data: return 2;
  }
  return 3;
}

}  // namespace

bool peer_is_destination(const Message& msg, const PeerInfo& peer) {
  switch (msg.destination.kind) {
    case Destination::Kind::Unicast: return msg.destination.node == peer.id;
    case Destination::Kind::ControllerGroup: return peer.is_controller;
    case Destination::Kind::Broadcast: return true;
  }
  return false;
}

std::vector<Offer> plan_offers(const Buffer& buf, const StrategyKind& strategy,
                               const SummaryVector& peer_summary, const PeerInfo& peer) {
  struct Candidate {
    const Message* msg;
    Offer offer;
  };
  std::vector<Candidate> picks;
  for (const Message& msg : buf) {
    if (peer_summary.count(msg.id)) continue;
    if (!strategy.is_spray() || msg.copies_left == kUnlimitedCopies) {
      picks.push_back({&msg, {msg.id, TransferKind::Copy, kUnlimitedCopies}});
    } else if (msg.copies_left > 1) {
      picks.push_back({&msg, {msg.id, TransferKind::Copy, msg.copies_left / 2}});
    } else if (peer_is_destination(msg, peer)) {
      picks.push_back({&msg, {msg.id, TransferKind::Handoff, 1}});
    }
  }
  std::sort(picks.begin(), picks.end(), [](const Candidate& x, const Candidate& y) {
    int rx = kind_rank(x.msg->kind), ry = kind_rank(y.msg->kind);
    if (rx != ry) return rx < ry;
    if (x.msg->created_at != y.msg->created_at) return x.msg->created_at < y.msg->created_at;
    return x.msg->id < y.msg->id;
  });
  std::vector<Offer> out;
  out.reserve(picks.size());
  for (auto& c : picks) out.push_back(c.offer);
  return out;
}

ReceiveAction classify_receive(const Message& msg, const ReceiverView& view) {
  PeerInfo self{view.id, view.is_controller};
  switch (msg.kind) {
    case MessageKind::Data:
      if (peer_is_destination(msg, self))
        return view.already_delivered ? ReceiveAction::Discard : ReceiveAction::Deliver;
      return view.duplicate_in_buffer ? ReceiveAction::Discard : ReceiveAction::Store;
    case MessageKind::Metric:
      if (view.is_controller) return ReceiveAction::ConsumeControl;
      return view.duplicate_in_buffer ? ReceiveAction::Discard : ReceiveAction::Store;
    case MessageKind::Directive: {
      if (view.duplicate_in_buffer) return ReceiveAction::Discard;
      if (view.last_applied_directive && msg.directive() &&
          key_of(*msg.directive()) <= *view.last_applied_directive)
        return ReceiveAction::Discard;
      return ReceiveAction::Store;
    }
  }
  return ReceiveAction::Discard;
}

}  // namespace oppnet
