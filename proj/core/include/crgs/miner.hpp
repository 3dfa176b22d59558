#pragma once

#include <vector>

#include "crgs/instances.hpp"
#include "crgs/pattern.hpp"
#include "crgs/seqdb.hpp"

namespace crgs {

struct PatternRecord {
  Pattern pattern;
  Count support = 0;
  PerSeqSupport per_seq;
  bool closed = false;
  bool dominate = false;  // set by the compressor

  friend bool operator==(const PatternRecord&, const PatternRecord&) = default;
};

struct MiningCounters {
  /// Support-set computations; one shared scan extending a prefix and its
  /// co-grown suffix pattern counts once.
  Count support_scans = 0;
  Count instances_extended = 0;
  Count nodes_visited = 0;

  MiningCounters& operator+=(const MiningCounters& o) {
    support_scans += o.support_scans;
    instances_extended += o.instances_extended;
    nodes_visited += o.nodes_visited;
    return *this;
  }
  friend bool operator==(const MiningCounters&, const MiningCounters&) = default;
};

struct MiningResult {
  Count min_sup = 1;
  /// Sorted by LengthThenLex on the pattern.
  std::vector<PatternRecord> frequent;
  MiningCounters counters;

  std::vector<PatternRecord> closed() const;
  /// Binary search on the sorted record list.
  const PatternRecord* find(const Pattern& p) const;
};

struct Extension {
  Pattern pattern;
  SupportSet set;
};

/// (P, leftmost set of P, e) -> (P o e, leftmost set of P o e).
Extension extend(const Pattern& p, const SupportSet& set, EventId e, const SequenceDB& db);

/// Reference depth-first miner: every pattern with sup >= min_sup, grown by
/// forward extension with Apriori pruning. Closed flags are left unset.
/// Roots are distributed over `threads` workers; output does not depend on
/// the thread count. Throws Error(InvalidMinSup) when min_sup < 1.
MiningResult mine_frequent(const SequenceDB& db, Count min_sup, unsigned threads = 1);

/// Sets the closed flag on every record of `result` and returns the closed
/// ones. A pattern is closed when no single-event insertion (front, middle or
/// back) has equal support; along any chain of super-patterns support never
/// increases, so checking immediate super-patterns suffices. Every
/// equal-support super-pattern is itself frequent, so lookups into the
/// complete frequent set decide each insertion.
std::vector<PatternRecord> closed_patterns(MiningResult& result);

/// Records with no frequent proper super-pattern in `result`.
std::vector<PatternRecord> maximal_patterns(const MiningResult& result);

/// Shared-scan miner. When a length-2 pattern e1 e2 is grown and every
/// occurrence of e2 lies in a sequence containing e1 e2, the e2-rooted subtree
/// is co-grown alongside it: each child extension of the pair is computed in
/// one pass over the occurrence index, and root e2 is not revisited later.
/// Output (records and closed flags) is identical to mine_frequent followed by
/// closed_patterns.
MiningResult sync_scan_mine(const SequenceDB& db, Count min_sup);

}  // namespace crgs
