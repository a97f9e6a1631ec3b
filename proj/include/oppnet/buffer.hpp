#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <unordered_map>
#include <vector>

#include "oppnet/types.hpp"

namespace oppnet {

enum class DropPolicy {
  DropOldest,      // evict stored messages in arrival order until the new one fits
  RejectIncoming,  // never evict; refuse the arriving message instead
};

struct InsertOutcome {
  bool accepted = false;
  bool duplicate = false;        // id already stored; not counted as a drop
  std::vector<Message> dropped;  // evicted messages, or the rejected incoming one
};

// Arrival-ordered message store with a byte budget. occupancy() always equals
// the sum of stored sizes and never exceeds capacity().
class Buffer {
 public:
  explicit Buffer(std::uint64_t capacity_bytes) : capacity_(capacity_bytes) {}

  InsertOutcome insert(Message msg, DropPolicy policy);
  std::optional<Message> remove(MessageId id);

  Message* find(MessageId id);
  const Message* find(MessageId id) const;
  bool contains(MessageId id) const { return index_.count(id) != 0; }

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t occupancy() const { return occupancy_; }
  std::size_t count() const { return stored_.size(); }

  // Iteration is in arrival order.
  auto begin() const { return stored_.cbegin(); }
  auto end() const { return stored_.cend(); }

 private:
  std::uint64_t capacity_;
  std::uint64_t occupancy_ = 0;
  std::list<Message> stored_;
  std::unordered_map<MessageId, std::list<Message>::iterator> index_;
};

}  // namespace oppnet
