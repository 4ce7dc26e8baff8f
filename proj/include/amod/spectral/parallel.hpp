#pragma once

#include <cstddef>
#include <functional>

namespace amod::parallel {

// Worker count used by for_each_index. 0 selects hardware concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

// Calls body(i) for i in [0, count), possibly concurrently. Each index runs
// exactly once; callers write results into per-index slots and reduce
// afterwards in index order, so results do not depend on the thread count.
// The first exception thrown by any body is rethrown.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace amod::parallel
