#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace paving {

/// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
/// results in index order, so output never depends on scheduling. The first
/// exception (lowest index) is rethrown.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace paving
