#pragma once

#include <future>
#include <vector>

namespace cdl {

// Worker count: `requested` if nonzero, else hardware concurrency, both
// capped by the CDL_THREADS environment variable when set.
unsigned effective_threads(unsigned requested);

// Runs fn(begin, end) over contiguous blocks of [0, total) and returns the
// per-block results in block order, so merges are order-independent of the
// actual scheduling.
template <class R, class F>
std::vector<R> parallel_blocks(size_t total, unsigned threads, F&& fn) {
  std::vector<R> results;
  if (total == 0) return results;
  size_t workers = std::min<size_t>(effective_threads(threads), total);
  if (workers <= 1) {
    results.push_back(fn(0, total));
    return results;
  }
  std::vector<std::future<R>> futs;
  size_t chunk = (total + workers - 1) / workers;
  for (size_t begin = 0; begin < total; begin += chunk) {
    size_t end = std::min(total, begin + chunk);
    futs.push_back(std::async(std::launch::async, fn, begin, end));
  }
  results.reserve(futs.size());
  for (auto& f : futs) results.push_back(f.get());
  return results;
}

}  // namespace cdl
