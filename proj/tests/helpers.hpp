#pragma once

#include <map>

#include "radgps/collocation.hpp"

namespace radgps::testing {

// Collocation construction is the one genuinely expensive shared fixture
// (the second-derivative table is O(N^3)); cache it per order.
inline const CollocationSet& shared_set(int N) {
    static std::map<int, CollocationSet> cache;
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build_collocation(N)).first;
    return it->second;
}

} // namespace radgps::testing
