#include <opdyn/schedule.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace opdyn {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("schedule: " + msg);
}

// Stateless 64-bit mixer; gives every agent an independent stream that
// does not shift when other agents are added or removed.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Schedule::Schedule(std::vector<std::vector<int>> times, int h, int horizon)
    : times_(std::move(times)), h_(h), horizon_(horizon) {}

Schedule Schedule::synchronous(int n, int horizon) {
  if (n < 1) fail("need at least one agent");
  if (horizon < 0) fail("negative horizon");
  std::vector<int> all(horizon + 1);
  for (int t = 0; t <= horizon; ++t) all[t] = t;
  return Schedule(std::vector<std::vector<int>>(n, all), 1, horizon);
}

Schedule Schedule::random(int n, int h, int horizon, std::uint64_t seed) {
  if (n < 1) fail("need at least one agent");
  if (h < 1) fail("gap bound must be at least 1");
  if (horizon < 0) fail("negative horizon");
  std::vector<std::vector<int>> times(n);
  for (int i = 0; i < n; ++i) {
    std::mt19937_64 rng(mix(seed) ^ mix(static_cast<std::uint64_t>(i) + 1));
    int t = 0;
    while (t <= horizon) {
      times[i].push_back(t);
      t += 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(h));
    }
  }
  return Schedule(std::move(times), h, horizon);
}

Schedule Schedule::explicit_times(std::vector<std::vector<int>> times, int h,
                                  int horizon) {
  if (times.empty()) fail("need at least one agent");
  if (h < 1) fail("gap bound must be at least 1");
  if (horizon < 0) fail("negative horizon");
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& ts = times[i];
    const std::string who = "agent " + std::to_string(i + 1);
    if (ts.empty() || ts.front() != 0) fail(who + " must update at t = 0");
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      const int gap = ts[k + 1] - ts[k];
      if (gap < 1) fail(who + ": instants must strictly increase");
      if (gap > h) fail(who + ": gap " + std::to_string(gap) +
                        " exceeds the bound " + std::to_string(h));
    }
    if (ts.back() > horizon) fail(who + ": instant beyond the horizon");
    if (horizon - ts.back() >= h)
      fail(who + ": gap bound violated at the end of the horizon");
  }
  return Schedule(std::move(times), h, horizon);
}

bool Schedule::active(int agent, int t) const {
  const auto& ts = times_[agent];
  return std::binary_search(ts.begin(), ts.end(), t);
}

}  // namespace opdyn
