#include "picksim/des_engine.hpp"

#include <ostream>
#include <sstream>

#include "picksim/format.hpp"

namespace picksim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::start_pick_order: return "SPO";
    case EventKind::partial_pick: return "PP";
    case EventKind::replenish: return "RP";
  }
  return "?";
}

void EventList::push(Event e) { events_.insert(std::move(e)); }

Event EventList::pop() {
  if (events_.empty()) throw std::out_of_range("pop from empty event list");
  auto node = events_.extract(events_.begin());
  return std::move(node.value());
}

const Event& EventList::peek() const {
  if (events_.empty()) throw std::out_of_range("peek on empty event list");
  return *events_.begin();
}

std::optional<Event> EventList::next_of(EventKind kind) const {
  for (const auto& e : events_) {
    if (e.kind() == kind) return e;
  }
  return std::nullopt;
}

void Engine::set_handler(EventKind kind, Handler handler) {
  handlers_[static_cast<std::size_t>(kind)] = std::move(handler);
}

std::uint64_t Engine::schedule(Seconds time, EventPayload payload) {
  if (!(time >= now_)) {
    std::ostringstream msg;
    msg << "event scheduled in the past: time=" << format_real(time) << " now=" << format_real(now_);
    throw ScheduleError(msg.str());
  }
  const std::uint64_t seq = next_seq_++;
  list_.push(Event{time, seq, std::move(payload)});
  return seq;
}

const EventTrace& Engine::run(Seconds horizon, const std::function<bool()>& stop) {
  while (!list_.empty()) {
    if (list_.peek().time > horizon) break;
    Event e = list_.pop();
    now_ = e.time;
    ++executed_;
    if (record_trace_) trace_.push_back(e);

    const auto& handler = handlers_[static_cast<std::size_t>(e.kind())];
    if (handler) {
      for (auto& p : handler(e, *this)) schedule(p.time, std::move(p.payload));
    }
    if (observer_) observer_(e);
    if (stop && stop()) break;
  }
  return trace_;
}

void write_trace_csv(std::ostream& out, const EventTrace& trace) {
  out << "time,seq,kind,payload\n";
  for (const auto& e : trace) {
    out << format_real(e.time) << ',' << e.seq << ',' << to_string(e.kind()) << ',';
    std::visit(
        [&out](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, StartPickOrder>) {
            out << "order=" << p.order;
          } else if constexpr (std::is_same_v<T, PartialPick>) {
            out << "order=" << p.order << ";line=" << p.line << ";location=" << p.location;
          }
        },
        e.payload);
    out << '\n';
  }
}

}  // namespace picksim
