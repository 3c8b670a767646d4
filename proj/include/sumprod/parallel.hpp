#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sumprod {

// Default worker count: SUMPROD_PARALLELISM env var, else 1.
unsigned default_parallelism();

// Runs f(i) for i in [0, n). Work items must be independent; results must not
// depend on which worker executes which index.
void parallel_for(uint64_t n, unsigned workers, const std::function<void(uint64_t)>& f);

}  // namespace sumprod
