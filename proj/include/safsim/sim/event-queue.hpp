#ifndef SAFSIM_SIM_EVENT_QUEUE_HPP
#define SAFSIM_SIM_EVENT_QUEUE_HPP

#include "safsim/core/common.hpp"

#include <cstdint>
#include <queue>
#include <vector>

namespace safsim::sim {

/** \brief Min-heap of timed actions. Equal times run in scheduling order.
 */
template<typename Action>
class EventQueue
{
public:
  struct Event
  {
    Time time;
    std::uint64_t sequence;
    Action action;
  };

  void
  schedule(Time time, Action action)
  {
    m_heap.push(Event{time, m_nextSequence++, std::move(action)});
  }

  bool
  empty() const noexcept
  {
    return m_heap.empty();
  }

  Time
  nextTime() const
  {
    return m_heap.top().time;
  }

  Event
  pop()
  {
    // top() is const; the element is discarded right after the move
    Event e = std::move(const_cast<Event&>(m_heap.top()));
    m_heap.pop();
    return e;
  }

  std::size_t
  size() const noexcept
  {
    return m_heap.size();
  }

private:
  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const noexcept
    {
      return a.time != b.time ? a.time > b.time : a.sequence > b.sequence;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> m_heap;
  std::uint64_t m_nextSequence = 0;
};

} // namespace safsim::sim

#endif // SAFSIM_SIM_EVENT_QUEUE_HPP
