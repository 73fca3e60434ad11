#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>

namespace unicrit::detail {

/// Process-wide cache for pure functions. Values are computed outside the lock,
/// so two racing callers may both compute; both produce the same value.
template <class Key, class Value>
class Memo {
 public:
  Value get(const Key& key, const std::function<Value()>& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

}  // namespace unicrit::detail
