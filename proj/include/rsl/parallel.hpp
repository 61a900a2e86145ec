#pragma once

#include <cstddef>
#include <functional>

namespace rsl {

// Worker cap shared by all parallel loops; 0 means hardware concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

// Runs body(i) for i in [0, count). Each index is handled by exactly one
// worker and results are expected to be written by index, so output does not
// depend on the number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rsl
