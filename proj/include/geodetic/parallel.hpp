#pragma once

#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace geodetic {

// Pulls items from a single producer, maps them on up to `jobs` workers and
// feeds results to the sink in input order: output is identical no matter
// how the work is scheduled. Processing happens in chunks so streams never
// have to fit in memory.
template <class Item, class Result>
void scan_ordered(const std::function<std::optional<Item>()>& pull,
                  const std::function<Result(const Item&)>& work,
                  const std::function<void(Result)>& sink, int jobs) {
  if (jobs < 1) jobs = 1;
  const size_t chunk_size = static_cast<size_t>(jobs) * 64;
  std::vector<Item> chunk;
  chunk.reserve(chunk_size);
  bool done = false;
  while (!done) {
    chunk.clear();
    while (chunk.size() < chunk_size) {
      std::optional<Item> item = pull();
      if (!item) {
        done = true;
        break;
      }
      chunk.push_back(std::move(*item));
    }
    if (chunk.empty()) break;
    std::vector<Result> results(chunk.size());
    if (jobs == 1 || chunk.size() == 1) {
      for (size_t i = 0; i < chunk.size(); ++i) results[i] = work(chunk[i]);
    } else {
      std::vector<std::thread> pool;
      size_t per = (chunk.size() + jobs - 1) / jobs;
      for (int t = 0; t < jobs; ++t) {
        size_t lo = t * per;
        size_t hi = std::min(chunk.size(), lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (size_t i = lo; i < hi; ++i) results[i] = work(chunk[i]);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& r : results) sink(std::move(r));
  }
}

}  // namespace geodetic
