#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crgs/compressor.hpp"
#include "crgs/miner.hpp"
#include "crgs/seqdb.hpp"

// Exhaustive reference computations. Nothing here calls into the miner or
// the compressor; the only shared code is the data model.
namespace crgs::testkit {

inline constexpr std::size_t kDefaultLandmarkCap = 5000;

/// Number of landmarks of `p` in `s`, by dynamic programming over positions.
Count count_landmarks(const Pattern& p, const Sequence& s);

/// Exact maximum number of pairwise non-overlapping instances of `p` in `s`:
/// maximum independent set of the per-index overlap graph over all
/// landmarks, by branch and bound. Throws Error(OracleTooLarge) when `p` has
/// more than `cap` landmarks in `s`.
Count oracle_max_support(const Pattern& p, const Sequence& s,
                         std::size_t cap = kDefaultLandmarkCap);

/// Sum of oracle_max_support over every sequence.
Count oracle_support(const Pattern& p, const SequenceDB& db,
                     std::size_t cap = kDefaultLandmarkCap);

PerSeqSupport oracle_per_seq(const Pattern& p, const SequenceDB& db,
                             std::size_t cap = kDefaultLandmarkCap);

struct OracleResult {
  std::vector<PatternRecord> frequent;  // LengthThenLex order, closed flags set
  std::vector<PatternRecord> closed;
  std::vector<PatternRecord> maximal;
};

/// Ground truth by enumeration: every pattern up to the longest sequence
/// length (extending only patterns whose oracle support reaches min_sup),
/// with closed/maximal decided by pairwise containment. Throws
/// Error(OracleTooLarge) past `cap` landmarks or `max_patterns` frequent
/// patterns.
OracleResult brute_force_frequent(const SequenceDB& db, Count min_sup,
                                  std::size_t cap = kDefaultLandmarkCap,
                                  std::size_t max_patterns = 200000);

struct CoverViolation {
  enum class Kind { Uncovered, BadAssignment, MissingDominate };
  Kind kind;
  Pattern pattern;
};

struct CoverReport {
  bool ok = true;
  std::vector<CoverViolation> violations;
};

/// Every frequent pattern must be delta-covered by some representative (and
/// by the one it is assigned to, when assigned), and every delta-dominate
/// closed pattern must be a representative. Closedness and dominance are
/// recomputed here from `frequent` by exhaustive comparison.
CoverReport verify_cover(const CompressionResult& result,
                         const std::vector<PatternRecord>& frequent, const Rational& delta);

struct OracleConfig {
  std::uint64_t seed = 1;
  std::size_t num_dbs = 200;
  std::size_t alphabet_max = 4;
  std::size_t seqs_max = 4;
  std::size_t len_max = 12;
  std::size_t pattern_len_max = 4;
  std::size_t landmark_cap = kDefaultLandmarkCap;
};

/// Deterministic small database for (config.seed, index). Tokens are the
/// letters A, B, C, ...
SequenceDB random_db(const OracleConfig& config, std::size_t index);

/// Every pattern over the database alphabet with length in [1, max_len].
std::vector<Pattern> all_patterns(std::size_t alphabet, std::size_t max_len);

/// The two-sequence example database (ABBCBACB / BACBACBC).
SequenceDB sample_db();
inline constexpr const char* kSampleText = "A B B C B A C B\nB A C B A C B C\n";

}  // namespace crgs::testkit
