#include "polynoise/cli/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polynoise::cli {

void parallelBlocks(std::size_t blockCount, int threads,
                    const std::function<void(std::size_t)>& work) {
  const std::size_t workers =
      std::min<std::size_t>(blockCount, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t block = 0; block < blockCount; ++block) work(block);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto run = [&] {
    try {
      for (std::size_t block = next++; block < blockCount; block = next++) work(block);
    } catch (...) {
      std::lock_guard lock(failureMutex);
      if (!failure) failure = std::current_exception();
      next = blockCount;
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace polynoise::cli
