#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tmc {

// Splits [0, n) into contiguous chunks and sums f(begin, end) over them.
// Sums are integers, so any worker count produces the same total.
template <class F>
std::uint64_t parallel_sum(std::size_t n, unsigned workers, F&& f) {
  if (workers <= 1 || n < 2) return f(std::size_t{0}, n);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::uint64_t> part(workers, 0);
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(n, b + chunk);
      try {
        if (b < e) part[w] = f(b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  std::uint64_t total = 0;
  for (std::uint64_t v : part) total += v;
  return total;
}

}  // namespace tmc
