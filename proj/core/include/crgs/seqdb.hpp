#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crgs/pattern.hpp"
#include "crgs/rational.hpp"

namespace crgs {

/// Bidirectional token <-> EventId map. Ids are assigned densely in
/// first-seen order.
class Dictionary {
 public:
  EventId intern(std::string_view token);
  std::optional<EventId> find(std::string_view token) const;
  const std::string& name(EventId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const Dictionary& a, const Dictionary& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, EventId> ids_;
};

class Sequence {
 public:
  explicit Sequence(std::vector<EventId> events) : events_(std::move(events)) {}

  std::size_t size() const noexcept { return events_.size(); }
  /// One-based access, S[i].
  EventId at(Position pos) const { return events_.at(pos - 1); }
  std::span<const EventId> events() const noexcept { return events_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<EventId> events_;
};

/// Immutable event-sequence database with a per-sequence occurrence index.
/// Safe to share across threads once constructed.
class SequenceDB {
 public:
  /// Throws Error(EmptyDatabase) when `sequences` is empty or any sequence is
  /// empty, Error(InvalidParams) when an id is outside the dictionary.
  SequenceDB(std::vector<std::vector<EventId>> sequences, Dictionary dictionary);

  std::size_t size() const noexcept { return sequences_.size(); }
  const Sequence& operator[](SeqId id) const { return sequences_.at(id); }
  const std::vector<Sequence>& sequences() const noexcept { return sequences_; }
  const Dictionary& dictionary() const noexcept { return dictionary_; }
  std::size_t alphabet_size() const noexcept { return dictionary_.size(); }
  std::size_t max_length() const noexcept;

  /// Ascending one-based positions of `event` in sequence `seq`.
  std::span<const Position> occurrences(SeqId seq, EventId event) const;
  /// Number of positions holding `event` across the whole database.
  Count event_count(EventId event) const { return event_counts_.at(event); }

  /// Looks up each token; nullopt if any is unknown.
  std::optional<Pattern> pattern_of(std::span<const std::string> tokens) const;
  /// Whitespace-separated tokens, e.g. "A B C".
  std::optional<Pattern> pattern_of(std::string_view text) const;
  std::vector<std::string> names_of(const Pattern& p) const;

  friend bool operator==(const SequenceDB& a, const SequenceDB& b) {
    return a.sequences_ == b.sequences_ && a.dictionary_ == b.dictionary_;
  }

 private:
  struct OccurrenceIndex {
    // Events present in the sequence, ascending, with the start offset of
    // their positions in `positions`.
    std::vector<EventId> events;
    std::vector<std::uint32_t> offsets;
    std::vector<Position> positions;
  };

  std::vector<Sequence> sequences_;
  Dictionary dictionary_;
  std::vector<OccurrenceIndex> index_;
  std::vector<Count> event_counts_;
};

/// Text format: one sequence per line, whitespace-separated tokens; blank
/// lines and lines whose first non-space character is '#' are skipped.
SequenceDB parse_db(std::string_view text);
std::string write_db(const SequenceDB& db);

SequenceDB load_db(const std::string& path);
void save_db(const SequenceDB& db, const std::string& path);

/// Synthetic generator parameters (D, C, N, S).
struct GenParams {
  std::uint64_t num_sequences = 0;
  std::uint64_t avg_length = 0;
  std::uint64_t num_items = 0;
  std::uint64_t max_length = 0;
  std::uint64_t seed = 0;
};

/// Lengths ~ Poisson(C) clipped to [1, S]; events uniform over N items named
/// "item<k>". Output depends only on `params`, not on the standard library.
SequenceDB generate_synthetic(const GenParams& params);

struct DBStats {
  std::uint64_t num_sequences = 0;
  std::uint64_t num_items = 0;
  Rational avg_length;
  std::uint64_t max_length = 0;

  friend bool operator==(const DBStats&, const DBStats&) = default;
};

DBStats db_stats(const SequenceDB& db);

}  // namespace crgs
