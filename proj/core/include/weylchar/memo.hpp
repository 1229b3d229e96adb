#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace weylchar {

// Content-addressed memo table shared between threads. Values are pure
// functions of their keys, so a lost race only costs a recomputation.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    Value value = compute();
    insert(key, value);
    return value;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace weylchar
