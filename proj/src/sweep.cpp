#include "sl3/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace sl3 {

std::vector<Weight> box_weights(Int bound) {
  std::vector<Weight> out;
  for (Int r = -bound; r <= bound; ++r)
    for (Int s = -bound; s <= bound; ++s) out.push_back({r, s});
  return out;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sl3
