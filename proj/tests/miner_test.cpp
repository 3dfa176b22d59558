#include <gtest/gtest.h>

#include <set>

#include "crgs/error.hpp"
#include "crgs/miner.hpp"
#include "crgs/testkit/oracle.hpp"

namespace crgs {
namespace {

using Summary = std::vector<std::pair<std::string, Count>>;

Summary summarize(const SequenceDB& db, const std::vector<PatternRecord>& records) {
  Summary out;
  for (const auto& r : records) {
    std::string name;
    for (const auto& t : db.names_of(r.pattern)) name += t;
    out.emplace_back(name, r.support);
  }
  return out;
}

const Summary kSampleFrequent4 = {{"A", 4},   {"B", 7},   {"C", 5}, {"AB", 4},
                                  {"AC", 4},  {"BB", 5},  {"BC", 5},    {"CB", 4},
                                  {"ACB", 4}, {"BBC", 4}, {"BCB", 4}};

TEST(MineFrequent, SampleMinSup4) {
  const SequenceDB db = testkit::sample_db();
  const MiningResult r = mine_frequent(db, 4);
  EXPECT_EQ(summarize(db, r.frequent), kSampleFrequent4);
  // Frozen list above agrees with exhaustive enumeration.
  EXPECT_EQ(summarize(db, testkit::brute_force_frequent(db, 4).frequent), kSampleFrequent4);
  for (const auto& rec : r.frequent) {
    Count sum = 0;
    for (const auto& [s, c] : rec.per_seq) sum += c;
    EXPECT_EQ(sum, rec.support);
  }
}

TEST(MineFrequent, NothingAboveMaxSupport) {
  const SequenceDB db = testkit::sample_db();
  const MiningResult r = mine_frequent(db, 8);
  EXPECT_TRUE(r.frequent.empty());
  EXPECT_EQ(r.counters.support_scans, 0u);
}

TEST(MineFrequent, SingleEvent) {
  const SequenceDB db = parse_db("A");
  const MiningResult r = mine_frequent(db, 1);
  ASSERT_EQ(r.frequent.size(), 1u);
  EXPECT_EQ(r.frequent[0].support, 1u);
}

TEST(MineFrequent, RejectsZeroMinSup) {
  const SequenceDB db = parse_db("A");
  for (auto fn : {+[](const SequenceDB& d) { (void)mine_frequent(d, 0); },
                  +[](const SequenceDB& d) { (void)sync_scan_mine(d, 0); }}) {
    try {
      fn(db);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidMinSup);
    }
  }
}

TEST(MineFrequent, ThreadCountDoesNotChangeOutput) {
  const SequenceDB db = generate_synthetic({5, 20, 10, 20, 1});
  const MiningResult one = mine_frequent(db, 3, 1);
  const MiningResult four = mine_frequent(db, 3, 4);
  EXPECT_EQ(one.frequent, four.frequent);
  EXPECT_EQ(one.counters, four.counters);
}

TEST(Extend, SampleExamples) {
  const SequenceDB db = testkit::sample_db();
  const Pattern a = db.pattern_of("A").value();
  const EventId b = db.pattern_of("B").value()[0];
  const Extension ab = extend(a, repetitive_support(a, db).set, b, db);
  EXPECT_EQ(ab.pattern, db.pattern_of("A B").value());
  EXPECT_EQ(ab.set.size(), 4u);
  const Extension abb = extend(ab.pattern, ab.set, b, db);
  EXPECT_EQ(abb.set.size(), 2u);
  // an event id that never occurs
  const Extension abd = extend(ab.pattern, ab.set, 3, db);
  EXPECT_TRUE(abd.set.empty());
}

TEST(ClosedPatterns, SampleMinSup4) {
  const SequenceDB db = testkit::sample_db();
  MiningResult r = mine_frequent(db, 4);
  const Summary expected = {{"B", 7}, {"BB", 5}, {"BC", 5}, {"ACB", 4}, {"BBC", 4}, {"BCB", 4}};
  EXPECT_EQ(summarize(db, closed_patterns(r)), expected);
  EXPECT_EQ(summarize(db, testkit::brute_force_frequent(db, 4).closed), expected);
  // AB:4 is absorbed by ACB:4
  EXPECT_FALSE(r.find(db.pattern_of("A B").value())->closed);
  EXPECT_TRUE(r.find(db.pattern_of("A C B").value())->closed);
}

TEST(ClosedPatterns, StrictlyLargerSupportIsClosed) {
  const SequenceDB db = parse_db("A A B");
  MiningResult r = mine_frequent(db, 1);
  closed_patterns(r);
  // sup(A)=2 beats every extension (AA, AB, AAB all 1)
  EXPECT_TRUE(r.find(db.pattern_of("A").value())->closed);
  EXPECT_FALSE(r.find(db.pattern_of("B").value())->closed);
}

TEST(MaximalPatterns, SampleMinSup4) {
  const SequenceDB db = testkit::sample_db();
  MiningResult r = mine_frequent(db, 4);
  const Summary expected = {{"ACB", 4}, {"BBC", 4}, {"BCB", 4}};
  EXPECT_EQ(summarize(db, maximal_patterns(r)), expected);
  EXPECT_EQ(summarize(db, testkit::brute_force_frequent(db, 4).maximal), expected);

  const SequenceDB single = parse_db("A");
  EXPECT_EQ(maximal_patterns(mine_frequent(single, 1)).size(), 1u);
}

TEST(SyncScan, SampleMinSup3) {
  const SequenceDB db = testkit::sample_db();
  MiningResult naive = mine_frequent(db, 3);
  closed_patterns(naive);
  const MiningResult sync = sync_scan_mine(db, 3);
  EXPECT_EQ(sync.frequent, naive.frequent);
  EXPECT_EQ(sync.find(db.pattern_of("A B C").value())->support, 3u);
  EXPECT_EQ(sync.find(db.pattern_of("B C").value())->support, 5u);
  EXPECT_LE(sync.counters.support_scans, naive.counters.support_scans);
}

TEST(SyncScan, SampleMinSup4SharesScans) {
  const SequenceDB db = testkit::sample_db();
  MiningResult naive = mine_frequent(db, 4);
  closed_patterns(naive);
  const MiningResult sync = sync_scan_mine(db, 4);
  EXPECT_EQ(sync.frequent, naive.frequent);
  EXPECT_EQ(sync.frequent.size(), 11u);
  EXPECT_LT(sync.counters.support_scans, naive.counters.support_scans);
  EXPECT_EQ(sync.counters.nodes_visited, naive.counters.nodes_visited);
}

TEST(SyncScan, EmptyAboveMaxSupport) {
  const SequenceDB db = testkit::sample_db();
  const MiningResult sync = sync_scan_mine(db, 8);
  EXPECT_TRUE(sync.frequent.empty());
  EXPECT_EQ(sync.counters.instances_extended, 0u);
  EXPECT_EQ(sync.counters.support_scans, 0u);
}

TEST(MinerProperties, EquivalenceWithOracleAndEachOther) {
  testkit::OracleConfig cfg;
  for (std::size_t i = 0; i < 60; ++i) {
    const SequenceDB db = testkit::random_db(cfg, i);
    for (Count min_sup : {1, 2, 3}) {
      MiningResult naive = mine_frequent(db, min_sup);
      closed_patterns(naive);
      const MiningResult sync = sync_scan_mine(db, min_sup);
      ASSERT_EQ(sync.frequent, naive.frequent) << "db " << i << " min_sup " << min_sup;
      EXPECT_LE(sync.counters.support_scans, naive.counters.support_scans);

      const auto oracle = testkit::brute_force_frequent(db, min_sup);
      ASSERT_EQ(naive.frequent, oracle.frequent) << "db " << i << " min_sup " << min_sup;

      std::set<Pattern> maximal;
      for (const auto& m : maximal_patterns(naive)) maximal.insert(m.pattern);
      std::set<Pattern> oracle_max;
      for (const auto& m : oracle.maximal) oracle_max.insert(m.pattern);
      EXPECT_EQ(maximal, oracle_max);
      for (const auto& m : maximal) EXPECT_TRUE(naive.find(m)->closed);
    }
  }
}

TEST(MinerProperties, AprioriSoundnessAndClosedLosslessness) {
  testkit::OracleConfig cfg;
  for (std::size_t i = 0; i < 60; ++i) {
    const SequenceDB db = testkit::random_db(cfg, i);
    MiningResult r = mine_frequent(db, 2);
    closed_patterns(r);
    for (const auto& rec : r.frequent) {
      // any frequent extension must have been visited
      for (EventId e = 0; e < db.alphabet_size(); ++e) {
        const Pattern q = rec.pattern.extended(e);
        if (repetitive_support(q, db).support >= 2) {
          EXPECT_NE(r.find(q), nullptr);
        }
      }
      // some closed super-pattern (possibly itself) carries the same support
      const bool has_closure = std::any_of(r.frequent.begin(), r.frequent.end(), [&](const auto& q) {
        return q.closed && q.support == rec.support && is_subsequence(rec.pattern, q.pattern);
      });
      EXPECT_TRUE(has_closure);
    }
  }
}

}  // namespace
}  // namespace crgs
