#ifndef XHERM_PARALLEL_HPP
#define XHERM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace xherm {

// Applies fn to every item on up to `workers` threads. Results come back in
// input order whatever the completion order; the first exception is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, int workers, Fn fn) {
  using Out = decltype(fn(items.front()));
  std::vector<std::optional<Out>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(items.size());
      }
    }
  };
  const std::size_t w = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                                                std::max<std::size_t>(items.size(), 1));
  if (w == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < w; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace xherm

#endif  // XHERM_PARALLEL_HPP
