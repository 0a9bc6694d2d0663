#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "../exactmath.hpp"
#include "../transforms.hpp"

namespace t0enum::catalog {

// Which version of a formula to evaluate: the one as printed, or the
// oracle-consistent correction registered for it.
enum class Reading { printed, corrected };

namespace detail {

// Memo table safe for concurrent readers; values are computed outside the lock.
template <class Key>
class Memo {
public:
    template <class F>
    Count get(const Key& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        Count v = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        map_.emplace(key, v);
        return v;
    }

private:
    std::mutex mutex_;
    std::map<Key, Count> map_;
};

inline Count signed_term(int i, Count v) { return (i % 2) ? Count(-v) : v; }

inline int reading_index(Reading r) { return r == Reading::printed ? 0 : 1; }

}  // namespace detail
}  // namespace t0enum::catalog
