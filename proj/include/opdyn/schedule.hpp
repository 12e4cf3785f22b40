#pragma once

#include <cstdint>
#include <vector>

namespace opdyn {

/// Per-agent update instants on a finite horizon [0, horizon].
///
/// Every agent updates at t = 0 and then repeatedly with gaps of at
/// most h steps, so any window of h consecutive instants contains at
/// least one update of every agent (including the tail of the horizon).
/// h = 1 is the synchronous special case where everybody updates at
/// every step.
class Schedule {
 public:
  /// Everybody updates at every t in [0, horizon].
  static Schedule synchronous(int n, int horizon);

  /// Independent per-agent gaps drawn uniformly from {1, ..., h} with a
  /// deterministic generator seeded per agent from `seed`.
  static Schedule random(int n, int h, int horizon, std::uint64_t seed);

  /// Use caller-provided instants; validates the gap discipline.
  static Schedule explicit_times(std::vector<std::vector<int>> times, int h,
                                 int horizon);

  bool active(int agent, int t) const;
  const std::vector<int>& times(int agent) const { return times_[agent]; }

  int n() const { return static_cast<int>(times_.size()); }
  int h() const { return h_; }
  int horizon() const { return horizon_; }

 private:
  Schedule(std::vector<std::vector<int>> times, int h, int horizon);

  std::vector<std::vector<int>> times_;
  int h_ = 1;
  int horizon_ = 0;
};

}  // namespace opdyn
