#pragma once

// Three-phase discrete-event kernel. The kernel knows nothing about
// warehouses: it keeps a (time, seq)-ordered event list and a clock, pops the
// earliest event, hands it to the handler registered for its kind and
// schedules whatever the handler returns.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace picksim {

using Seconds = double;

/// Start picking one entry of the pick plan.
struct StartPickOrder {
  std::size_t order;
  friend bool operator==(const StartPickOrder&, const StartPickOrder&) = default;
};

/// Re-check a stock-out line once the picker has (estimated) reached it.
struct PartialPick {
  std::size_t order;
  std::size_t line;
  std::size_t location;
  friend bool operator==(const PartialPick&, const PartialPick&) = default;
};

struct Replenish {
  friend bool operator==(const Replenish&, const Replenish&) = default;
};

using EventPayload = std::variant<StartPickOrder, PartialPick, Replenish>;

enum class EventKind : std::uint8_t { start_pick_order = 0, partial_pick = 1, replenish = 2 };
inline constexpr std::size_t kEventKindCount = 3;

const char* to_string(EventKind kind);

struct Event {
  Seconds time = 0.0;
  std::uint64_t seq = 0;
  EventPayload payload;

  EventKind kind() const { return static_cast<EventKind>(payload.index()); }
  friend bool operator==(const Event&, const Event&) = default;
};

/// What a handler hands back: the kernel stamps the sequence number.
struct PendingEvent {
  Seconds time = 0.0;
  EventPayload payload;
};

/// Raised when a handler tries to schedule before the current clock.
class ScheduleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EventList {
 public:
  void push(Event e);
  Event pop();
  const Event& peek() const;
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }

  /// Earliest pending event of the given kind, if any.
  std::optional<Event> next_of(EventKind kind) const;

 private:
  struct Earlier {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time < b.time;
      return a.seq < b.seq;
    }
  };
  std::set<Event, Earlier> events_;
};

using EventTrace = std::vector<Event>;

/// CSV with header `time,seq,kind,payload`, one row per executed event.
void write_trace_csv(std::ostream& out, const EventTrace& trace);

class Engine {
 public:
  using Handler = std::function<std::vector<PendingEvent>(const Event&, const Engine&)>;
  using Observer = std::function<void(const Event&)>;

  void set_handler(EventKind kind, Handler handler);
  void set_observer(Observer observer) { observer_ = std::move(observer); }
  void set_record_trace(bool on) { record_trace_ = on; }

  /// Insert an event; throws ScheduleError if `time` lies before now().
  std::uint64_t schedule(Seconds time, EventPayload payload);

  /// Executes events in (time, seq) order until the list is empty, the next
  /// event lies beyond `horizon`, or `stop` returns true after an event.
  const EventTrace& run(Seconds horizon, const std::function<bool()>& stop = {});

  Seconds now() const { return now_; }
  const EventList& events() const { return list_; }
  const EventTrace& trace() const { return trace_; }

  std::uint64_t scheduled_count() const { return next_seq_; }
  std::uint64_t executed_count() const { return executed_; }

 private:
  EventList list_;
  Seconds now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t executed_ = 0;
  bool record_trace_ = true;
  Handler handlers_[kEventKindCount];
  Observer observer_;
  EventTrace trace_;
};

}  // namespace picksim
