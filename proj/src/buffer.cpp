#include "oppnet/buffer.hpp"

#include <utility>

namespace oppnet {

InsertOutcome Buffer::insert(Message msg, DropPolicy policy) {
  InsertOutcome out;
  if (index_.count(msg.id)) {
    out.duplicate = true;
    return out;
  }
  if (msg.size_bytes > capacity_) {
    out.dropped.push_back(std::move(msg));
    return out;
  }
  if (occupancy_ + msg.size_bytes > capacity_ && policy == DropPolicy::RejectIncoming) {
    out.dropped.push_back(std::move(msg));
    return out;
  }
  while (occupancy_ + msg.size_bytes > capacity_) {
    Message victim = std::move(stored_.front());
    stored_.pop_front();
    index_.erase(victim.id);
    occupancy_ -= victim.size_bytes;
    out.dropped.push_back(std::move(victim));
  }
  occupancy_ += msg.size_bytes;
  stored_.push_back(std::move(msg));
  index_.emplace(stored_.back().id, std::prev(stored_.end()));
  out.accepted = true;
  return out;
}

std::optional<Message> Buffer::remove(MessageId id) {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  Message msg = std::move(*it->second);
  occupancy_ -= msg.size_bytes;
  stored_.erase(it->second);
  index_.erase(it);
  return msg;
}

Message* Buffer::find(MessageId id) {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &*it->second;
}

const Message* Buffer::find(MessageId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &*it->second;
}

}  // namespace oppnet
