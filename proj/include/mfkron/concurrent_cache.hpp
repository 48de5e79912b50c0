#ifndef MFKRON_CONCURRENT_CACHE_HPP_
#define MFKRON_CONCURRENT_CACHE_HPP_

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace mfkron {

  //! Memo table with concurrent readers and atomic insert-if-absent.
  //!
  //! Values are computed outside the lock, so two threads may both compute
  //! the same key; the first insertion wins and both observe the same value.
  template <typename Key, typename Value, typename Hash = std::hash<Key>>
  class ConcurrentCache {
   public:
    std::optional<Value> find(Key const& key) const {
      std::shared_lock lock(_mutex);
      auto it = _map.find(key);
      if (it == _map.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    //! Inserts unless present; returns the value now stored for \p key.
    Value insert(Key const& key, Value value) {
      std::unique_lock lock(_mutex);
      auto [it, inserted] = _map.try_emplace(key, std::move(value));
      return it->second;
    }

    template <typename Fn>
    Value get_or_compute(Key const& key, Fn&& compute) {
      if (auto hit = find(key)) {
        return *std::move(hit);
      }
      return insert(key, compute());
    }

    std::size_t size() const {
      std::shared_lock lock(_mutex);
      return _map.size();
    }

    void clear() {
      std::unique_lock lock(_mutex);
      _map.clear();
    }

   private:
    mutable std::shared_mutex             _mutex;
    std::unordered_map<Key, Value, Hash> _map;
  };

}  // namespace mfkron

#endif  // MFKRON_CONCURRENT_CACHE_HPP_
