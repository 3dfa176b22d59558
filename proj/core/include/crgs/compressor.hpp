#pragma once

#include <vector>

#include "crgs/miner.hpp"
#include "crgs/rational.hpp"

namespace crgs {

// Distances between repetitive patterns are Jaccard-style ratios over
// per-sequence supports:
//
//   D(P1, P2) = 1 - sum_{s in S(P1) & S(P2)} min(n1_s, n2_s)
//                 / sum_{s in S(P1) | S(P2)} max(n1_s, n2_s)
//
// and, when P ⊆ RP, per-sequence anti-monotonicity collapses this to
// 1 - sup(RP) / sup(P). All values are exact rationals.

/// Throws Error(UndefinedDistance) when neither pattern occurs anywhere.
Distance pattern_distance(const PatternRecord& p1, const PatternRecord& p2);

/// 1 - sup(rp)/sup(p). Throws Error(NotSubsequence) unless p ⊆ rp.
Distance cover_distance(const PatternRecord& p, const PatternRecord& rp);

/// p ⊆ rp and cover_distance(p, rp) <= delta (the boundary counts).
bool delta_covers(const PatternRecord& rp, const PatternRecord& p, const Rational& delta);

/// Minimum cover distance from `p` to any proper super-pattern in `set`,
/// or +infinity when there is none.
CoverBound min_sequence_cover(const PatternRecord& p, const std::vector<PatternRecord>& set);

/// Marks `dominate` on every record of `closed` and returns those whose min
/// sequence cover within `closed` exceeds delta.
std::vector<PatternRecord> dominate_set(std::vector<PatternRecord>& closed, const Rational& delta);

struct CoverAssignment {
  Pattern representative;
  std::vector<Pattern> covered;

  friend bool operator==(const CoverAssignment&, const CoverAssignment&) = default;
};

struct CompressionCounters {
  /// Exact distance computations between contained pattern pairs.
  Count distance_evals = 0;
  /// Calls to the delta-cover predicate.
  Count cover_checks = 0;

  friend bool operator==(const CompressionCounters&, const CompressionCounters&) = default;
};

struct CompressionResult {
  /// Sorted by LengthThenLex; `dominate` is set on members of dominate_set.
  std::vector<PatternRecord> representatives;
  /// One entry per representative, in the same order. Each covered list is
  /// sorted by LengthThenLex and includes the representative itself.
  std::vector<CoverAssignment> assignments;
  std::vector<PatternRecord> dominate_set;
  CompressionCounters counters;
  /// Mining output the compression ran on (closed and dominate flags set).
  /// Empty when produced by greedy_compress directly.
  MiningResult mining;

  /// Representative assigned to `p`, or nullptr.
  const Pattern* covered_by(const Pattern& p) const;
};

/// Greedy Compress step. `cover` holds the delta-dominate patterns and
/// `covered` all closed patterns (cover ⊆ covered). Patterns of covered that
/// no dominate pattern covers are handed to a greedy set cover over the
/// non-dominate candidates; ties prefer the longer pattern, then the higher
/// support, then the lexicographically smaller one.
/// Throws Error(InvariantViolation) if a pattern ends up unassigned.
CompressionResult greedy_compress(const std::vector<PatternRecord>& cover,
                                  const std::vector<PatternRecord>& covered,
                                  const Rational& delta);

/// Full pipeline: shared-scan mining, delta-dominate classification of the
/// closed set, greedy compression, then assignment of every non-closed
/// frequent pattern to a representative that delta-covers it.
/// Throws Error(InvalidDelta) unless 0 <= delta <= 1.
CompressionResult crgsgrow(const SequenceDB& db, Count min_sup, const Rational& delta);

/// Global baseline: reference mining, the full pairwise cover matrix over the
/// closed set, and plain greedy set cover with no dominate shortcut.
CompressionResult baseline_compress(const SequenceDB& db, Count min_sup, const Rational& delta);

}  // namespace crgs
