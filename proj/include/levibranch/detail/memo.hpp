#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace levibranch::detail {

// Keyed cache with concurrent readers. Values are computed outside the lock,
// so two threads may race to compute the same entry; the first insert wins.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  std::shared_ptr<const Value> get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace levibranch::detail
