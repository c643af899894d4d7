#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace engelrad {

/// Reusable membership scratch with O(1) clear via epoch stamping.
class IndexStamp {
public:
  explicit IndexStamp(std::size_t n = 0) : stamp_(n, 0) {}
  void resize(std::size_t n) { stamp_.assign(n, 0); epoch_ = 0; }
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  /// Returns true if already present; marks otherwise.
  bool test_and_set(std::uint32_t i) {
    if (stamp_[i] == epoch_) return true;
    stamp_[i] = epoch_;
    return false;
  }
  bool test(std::uint32_t i) const { return stamp_[i] == epoch_; }

private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// Runs fn(begin, end) over disjoint chunks of [0, n). Results must be
/// written to per-index slots so the outcome is independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  constexpr std::size_t kChunk = 256;
  if (threads <= 1 || n <= kChunk) {
    if (n) fn(std::size_t{0}, n);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, (n + kChunk - 1) / kChunk);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        std::size_t begin = next.fetch_add(kChunk);
        if (begin >= n) return;
        try {
          fn(begin, std::min(n, begin + kChunk));
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace engelrad
