#pragma once

#include <cstddef>
#include <cstdint>

// Wall-clock and size caps for exhaustive searches. Both are thread-local and
// unlimited unless a Scope is active.
namespace germcat::budget {

/// Throws Error(Budget) once the active deadline has passed. Cheap: the clock is
/// only read every few thousand calls.
void tick();

/// Throws Error(MaxSize) if `n` exceeds the active size cap.
void check_size(std::size_t n, const char* what);

std::size_t max_size() noexcept;

class Scope {
 public:
  /// `millis == 0` means no deadline, `max_size == 0` means no size cap.
  Scope(std::uint64_t millis, std::size_t max_size);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::int64_t saved_deadline_;
  std::size_t saved_max_size_;
};

}  // namespace germcat::budget
