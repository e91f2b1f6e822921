#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "primegb/errors.hpp"

namespace primegb {

/// Optional wall-clock limit polled from long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline after(Clock::duration budget) { return Deadline(Clock::now() + budget); }

  bool enabled() const noexcept { return at_.has_value(); }

  /// Throws Timeout once the limit has passed. Reads the clock only every
  /// 64th call.
  void poll() const {
    if (!at_ || (++calls_ & 63u) != 0) return;
    if (Clock::now() > *at_) throw Timeout();
  }

 private:
  std::optional<Clock::time_point> at_;
  mutable std::uint32_t calls_ = 0;
};

}  // namespace primegb
