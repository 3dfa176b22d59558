#include "crgs/pattern.hpp"

namespace crgs {

Pattern Pattern::extended(EventId e) const {
  std::vector<EventId> out;
  out.reserve(events_.size() + 1);
  out.assign(events_.begin(), events_.end());
  out.push_back(e);
  return Pattern(std::move(out));
}

Pattern Pattern::inserted(std::size_t gap, EventId e) const {
  std::vector<EventId> out;
  out.reserve(events_.size() + 1);
  out.insert(out.end(), events_.begin(), events_.begin() + static_cast<std::ptrdiff_t>(gap));
  out.push_back(e);
  out.insert(out.end(), events_.begin() + static_cast<std::ptrdiff_t>(gap), events_.end());
  return Pattern(std::move(out));
}

Pattern Pattern::suffix() const {
  if (events_.empty()) return {};
  return Pattern(std::vector<EventId>(events_.begin() + 1, events_.end()));
}

std::size_t PatternHash::operator()(const Pattern& p) const noexcept {
  // FNV-1a over the event ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (EventId e : p) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  h ^= p.size();
  return static_cast<std::size_t>(h);
}

}  // namespace crgs
