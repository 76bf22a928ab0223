#ifndef TORIC_PARALLEL_HPP
#define TORIC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric {

// Applies fn to 0..count-1 on up to `jobs` threads and returns results in
// index order, so output never depends on scheduling.  fn must be pure.
template <typename Result, typename Fn>
std::vector<Result> parallel_index_map(std::size_t count, unsigned jobs,
                                       Fn&& fn) {
  std::vector<Result> out(count);
  if (count == 0) return out;
  if (jobs <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(first_error);
  return out;
}

}  // namespace toric

#endif
