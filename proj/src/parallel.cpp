#include "vortex/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace vortex {

namespace {
std::atomic<int> g_thread_count{0};
}

void set_thread_count(int count) { g_thread_count.store(count < 0 ? 0 : count); }

int thread_count() {
  int c = g_thread_count.load();
  if (c > 0) return c;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int begin, int end,
                  const std::function<void(int, int, int)>& fn) {
  const int total = end - begin;
  if (total <= 0) return;
  const int workers = std::min(thread_count(), total);
  if (workers <= 1) {
    fn(begin, end, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto chunk = [&](int w) {
    int lo = begin + static_cast<int>(static_cast<long long>(total) * w / workers);
    int hi = begin + static_cast<int>(static_cast<long long>(total) * (w + 1) / workers);
    try {
      fn(lo, hi, w);
    } catch (...) {
      if (!failed.exchange(true)) first_error = std::current_exception();
    }
  };
  for (int w = 1; w < workers; ++w) pool.emplace_back(chunk, w);
  chunk(0);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace vortex
