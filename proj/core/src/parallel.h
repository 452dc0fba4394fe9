#ifndef SEPCODE_SRC_PARALLEL_H_
#define SEPCODE_SRC_PARALLEL_H_

#include <algorithm>
#include <thread>
#include <vector>

namespace sepcode::internal {

// Calls fn(w) for w in [0, workers); inline when there is one worker.
template <typename F>
void run_workers(unsigned workers, F&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    fn(0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
}

}  // namespace sepcode::internal

#endif  // SEPCODE_SRC_PARALLEL_H_
