#ifndef HERONIAN_SWEEP_HPP
#define HERONIAN_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace heronian {

/// Worker count used when the caller passes 0.
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates task(i) for i in [0, count) on up to `threads` workers and
/// returns the results in index order. Workers take a strided share of the
/// indices; the output does not depend on how many there are. The first
/// exception by index is rethrown.
template <typename Task>
auto parallel_map(std::size_t count, unsigned threads, Task task)
    -> std::vector<std::invoke_result_t<Task&, std::size_t>> {
  using Result = std::invoke_result_t<Task&, std::size_t>;
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += threads) {
      try {
        slots[i].emplace(task(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace heronian

#endif  // HERONIAN_SWEEP_HPP
