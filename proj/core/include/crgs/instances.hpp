#pragma once

#include <map>
#include <vector>

#include "crgs/pattern.hpp"
#include "crgs/seqdb.hpp"

namespace crgs {

/// Strictly increasing one-based positions l1 < ... < lm.
using Landmark = std::vector<Position>;

struct Instance {
  SeqId seq = 0;
  Landmark landmark;

  Position last() const { return landmark.back(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Pairwise non-overlapping instances of one pattern, kept in total
/// right-shift order.
struct SupportSet {
  std::vector<Instance> instances;

  Count size() const noexcept { return instances.size(); }
  bool empty() const noexcept { return instances.empty(); }
};

/// True iff `sub` embeds into `super` by an increasing index map.
bool is_subsequence(const Pattern& sub, const Pattern& super);
bool is_subsequence(const Pattern& sub, std::span<const EventId> super);

/// All landmarks of `p` in `s`, in lexicographic position order.
std::vector<Landmark> landmarks_of(const Pattern& p, const Sequence& s);

/// Same sequence and equal position at some pattern index. Sharing a
/// position at *different* indices is not an overlap.
/// Throws Error(PatternLengthMismatch) when landmark lengths differ.
bool instances_overlap(const Instance& a, const Instance& b);

/// The partial right-shift order: a.seq < b.seq, or same sequence with a
/// strictly smaller last position.
bool right_shift_precedes(const Instance& a, const Instance& b);

/// Total completion of the right-shift order: (seq, last position, full
/// landmark lexicographic).
bool right_shift_less(const Instance& a, const Instance& b);

/// All length-1 instances of `e`, in right-shift order.
SupportSet initial_support_set(EventId e, const SequenceDB& db);

/// Greedy leftmost extension: walks `set` in right-shift order and extends
/// each instance with the earliest occurrence of `e` that lies after both its
/// last position and the position most recently consumed in the same
/// sequence. Instances that cannot extend are dropped.
SupportSet extend_support_set(const SupportSet& set, EventId e, const SequenceDB& db);

struct SupportResult {
  Count support = 0;
  SupportSet set;
};

/// Repetitive support sup(P) together with the leftmost support set.
/// Empty patterns and absent patterns yield support 0.
SupportResult repetitive_support(const Pattern& p, const SequenceDB& db);

using PerSeqSupport = std::map<SeqId, Count>;

/// Per-sequence support counts; only sequences with count >= 1 appear.
PerSeqSupport per_sequence_supports(const Pattern& p, const SequenceDB& db);
PerSeqSupport per_sequence_counts(const SupportSet& set);

}  // namespace crgs
