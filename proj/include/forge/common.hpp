#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace forge {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;

inline constexpr const char* kVersion = "0.2.0";

/// Raised when a request exceeds a documented implementation cap.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a proven theorem fails on computed data. This signals a bug
/// in the implementation, never new mathematics; callers must not continue.
class TheoremViolation : public std::logic_error {
public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a closed form evaluates to a non-integer, i.e. the adopted
/// reading of an ambiguous formula is wrong for the given input.
class InterpretationError : public std::logic_error {
public:
  explicit InterpretationError(const std::string& what) : std::logic_error(what) {}
};

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs fn(i) for i in [begin, end) on `threads` workers, dynamic chunking.
/// fn must be safe to call concurrently for distinct i.
inline void parallel_for(u64 begin, u64 end, unsigned threads,
                         const std::function<void(u64)>& fn) {
  if (begin >= end) return;
  if (threads <= 1 || end - begin == 1) {
    for (u64 i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<u64> next{begin};
  auto worker = [&] {
    for (;;) {
      u64 i = next.fetch_add(1);
      if (i >= end) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<u64>(threads, end - begin);
  pool.reserve(n - 1);
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace forge
