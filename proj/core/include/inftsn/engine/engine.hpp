#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inftsn/engine/rng.hpp"
#include "inftsn/engine/time.hpp"

namespace inftsn {

using EventHandle = std::uint64_t;

// Deterministic discrete-event core. Events fire in (fire_at, sequence)
// order; ties in fire time resolve in scheduling order (FIFO). The clock
// never decreases, and scheduling into the past is a hard error.
class Engine {
 public:
  explicit Engine(std::uint64_t master_seed);

  SimTime now() const { return now_; }
  std::uint64_t master_seed() const { return master_seed_; }

  // Schedules fn at `at`. Throws std::logic_error if `at` < now().
  EventHandle schedule(SimTime at, std::function<void()> fn);

  // Fires every event with fire_at <= t_end, then advances the clock to
  // t_end. Returns the number of events fired. t_end must be >= now().
  std::size_t run_until(SimTime t_end);

  // Keeps firing events until the queue is empty or the next event lies
  // beyond `limit` (which is left pending). Returns the number fired.
  std::size_t run_until_idle(SimTime limit);

  bool queue_empty() const { return heap_.empty(); }
  std::size_t queue_size() const { return heap_.size(); }
  std::uint64_t events_fired() const { return fired_; }

  // Named reproducible substream; repeated calls with the same name return
  // the same stream (its draw sequence continues).
  RngStream& rng_stream(std::string_view name);

  // Optional (fire_at ns, sequence) log of fired events, for determinism
  // checks. Off by default.
  void enable_event_log() { log_enabled_ = true; }
  const std::vector<std::pair<std::int64_t, std::uint64_t>>& event_log() const {
    return log_;
  }

 private:
  struct Event {
    SimTime at;
    EventHandle seq;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  Event pop_next();

  SimTime now_{};
  std::uint64_t master_seed_;
  EventHandle next_seq_ = 0;
  std::uint64_t fired_ = 0;
  std::vector<Event> heap_;
  std::unordered_map<std::string, std::unique_ptr<RngStream>> streams_;
  bool log_enabled_ = false;
  std::vector<std::pair<std::int64_t, std::uint64_t>> log_;
};

}  // namespace inftsn
