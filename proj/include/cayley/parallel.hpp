#ifndef CAYLEY_PARALLEL_HPP
#define CAYLEY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace cayley::parallel {

// Runs fn(i) for every i in [0, count) on up to `threads` workers. Callers
// write results into index-addressed slots, so the assembled output does not
// depend on scheduling. Exceptions escaping fn are rethrown after all workers
// join (first worker's exception wins).
template <typename F>
void for_each_index(long count, int threads, F&& fn) {
  if (count <= 0) return;
  long limit = std::max(1, threads);
  int workers = static_cast<int>(std::min(limit, count));
  if (workers == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cayley::parallel

#endif  // CAYLEY_PARALLEL_HPP
