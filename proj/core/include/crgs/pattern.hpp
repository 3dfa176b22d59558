#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace crgs {

/// Interned event token; ids are dense in [0, alphabet size).
using EventId = std::uint32_t;
/// Zero-based index of a sequence within its database.
using SeqId = std::uint32_t;
/// One-based position within a sequence.
using Position = std::uint32_t;
using Count = std::uint64_t;

/// Ordered list of events. Repeats are allowed (e.g. ABB).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<EventId> events) : events_(std::move(events)) {}
  Pattern(std::initializer_list<EventId> events) : events_(events) {}

  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  EventId operator[](std::size_t i) const { return events_[i]; }
  EventId back() const { return events_.back(); }

  std::span<const EventId> events() const noexcept { return events_; }
  auto begin() const noexcept { return events_.begin(); }
  auto end() const noexcept { return events_.end(); }

  /// Concatenation P o e.
  Pattern extended(EventId e) const;
  /// Pattern with `e` inserted before index `gap` (gap == size() appends).
  Pattern inserted(std::size_t gap, EventId e) const;
  /// Drops the first event.
  Pattern suffix() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  /// Lexicographic by event id; use `LengthThenLex` for output ordering.
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<EventId> events_;
};

/// Canonical output order: shorter patterns first, then event-id lexicographic.
struct LengthThenLex {
  bool operator()(const Pattern& a, const Pattern& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept;
};

}  // namespace crgs
