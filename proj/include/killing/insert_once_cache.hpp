#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace killing {

/// Map whose values are computed once and never replaced. Concurrent
/// lookups of distinct keys build in parallel; insertion is serialized and
/// the first inserted value wins.
template <typename Key, typename Value>
class InsertOnceCache {
 public:
  template <typename Build>
  std::shared_ptr<const Value> get(const Key& key, Build&& build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(build());
    std::lock_guard lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace killing
