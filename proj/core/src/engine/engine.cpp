#include "inftsn/engine/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace inftsn {

Engine::Engine(std::uint64_t master_seed) : master_seed_(master_seed) {}

EventHandle Engine::schedule(SimTime at, std::function<void()> fn) {
  if (at < now_) {
    throw std::logic_error("Engine::schedule: event in the past (at=" +
                           std::to_string(at.ns()) +
                           " ns, now=" + std::to_string(now_.ns()) + " ns)");
  }
  EventHandle h = next_seq_++;
  heap_.push_back(Event{at, h, std::move(fn)});
  std::push_heap(heap_.begin(), heap_.end(), Later{});
  return h;
}

Engine::Event Engine::pop_next() {
  std::pop_heap(heap_.begin(), heap_.end(), Later{});
  Event ev = std::move(heap_.back());
  heap_.pop_back();
  return ev;
}

std::size_t Engine::run_until(SimTime t_end) {
  if (t_end < now_) {
    throw std::logic_error("Engine::run_until: t_end before current clock");
  }
  std::size_t fired = 0;
  while (!heap_.empty() && heap_.front().at <= t_end) {
    Event ev = pop_next();
    now_ = ev.at;
    ++fired;
    ++fired_;
    if (log_enabled_) log_.emplace_back(ev.at.ns(), ev.seq);
    ev.fn();
  }
  now_ = t_end;
  return fired;
}

std::size_t Engine::run_until_idle(SimTime limit) {
  if (limit < now_) {
    throw std::logic_error("Engine::run_until_idle: limit before current clock");
  }
  std::size_t fired = 0;
  while (!heap_.empty() && heap_.front().at <= limit) {
    Event ev = pop_next();
    now_ = ev.at;
    ++fired;
    ++fired_;
    if (log_enabled_) log_.emplace_back(ev.at.ns(), ev.seq);
    ev.fn();
  }
  return fired;
}

RngStream& Engine::rng_stream(std::string_view name) {
  auto it = streams_.find(std::string(name));
  if (it == streams_.end()) {
    it = streams_
             .emplace(std::string(name),
                      std::make_unique<RngStream>(master_seed_, name))
             .first;
  }
  return *it->second;
}

}  // namespace inftsn
