#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace qcat {

/// Thread-safe memo table with stable references. Values are computed outside
/// the lock; if two threads race on the same key the first insert wins.
template <typename Key, typename Value>
class MemoTable {
public:
  template <typename Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return *it->second;
    }
    auto value = std::make_unique<Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return *it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<const Value>> table_;
};

}  // namespace qcat
