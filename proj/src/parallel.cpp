// SPDX-License-Identifier: Apache-2.0

#include "shk/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace shk {

namespace {

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::atomic<int>& configured() {
  static std::atomic<int> n{0};
  return n;
}

}  // namespace

void set_worker_threads(int n) {
  if (n < 0) throw std::invalid_argument("thread count must be nonnegative");
  configured() = n;
}

int worker_threads() {
  const int n = configured();
  return n > 0 ? n : default_threads();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace shk
