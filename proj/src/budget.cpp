#include "germcat/budget.hpp"

#include <chrono>
#include <string>

#include "germcat/error.hpp"

namespace germcat::budget {
namespace {

thread_local std::int64_t deadline_ns = 0;  // steady_clock epoch nanoseconds, 0 = none
thread_local std::size_t size_cap = 0;
thread_local std::uint32_t ticks = 0;

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

void tick() {
  if (deadline_ns == 0 || (++ticks & 0xfffu) != 0) return;
  if (now_ns() > deadline_ns) fail(ErrorKind::Budget, "exhaustive search exceeded its time budget");
}

void check_size(std::size_t n, const char* what) {
  if (size_cap != 0 && n > size_cap)
    fail(ErrorKind::MaxSize, std::string(what) + " of size " + std::to_string(n) +
                                 " exceeds --max-size " + std::to_string(size_cap));
}

std::size_t max_size() noexcept { return size_cap; }

Scope::Scope(std::uint64_t millis, std::size_t max_size)
    : saved_deadline_(deadline_ns), saved_max_size_(size_cap) {
  deadline_ns = millis == 0 ? 0 : now_ns() + static_cast<std::int64_t>(millis) * 1'000'000;
  size_cap = max_size;
}

Scope::~Scope() {
  deadline_ns = saved_deadline_;
  size_cap = saved_max_size_;
}

}  // namespace germcat::budget
