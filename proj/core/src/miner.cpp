#include "crgs/miner.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "crgs/error.hpp"

namespace crgs {

namespace {

// Greedy extension only looks at the last position of each instance, so the
// miners carry (sequence, last position) pairs instead of full landmarks.
struct Tip {
  SeqId seq;
  Position last;
};
using Frontier = std::vector<Tip>;

// Extends the tips of one sequence against that sequence's occurrence list.
void grow_run(std::span<const Tip> run, std::span<const Position> occ, Frontier& out) {
  Position consumed = 0;
  for (const Tip& t : run) {
    auto it = std::upper_bound(occ.begin(), occ.end(), std::max(t.last, consumed));
    if (it == occ.end()) break;  // later tips have larger last positions
    consumed = *it;
    out.push_back(Tip{t.seq, *it});
  }
}

std::size_t run_end(const Frontier& f, std::size_t begin) {
  std::size_t end = begin;
  while (end < f.size() && f[end].seq == f[begin].seq) ++end;
  return end;
}

Frontier grow(const Frontier& f, EventId e, const SequenceDB& db) {
  Frontier out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size();) {
    const std::size_t j = run_end(f, i);
    grow_run(std::span<const Tip>(f).subspan(i, j - i), db.occurrences(f[i].seq, e), out);
    i = j;
  }
  return out;
}

// One pass over the sequences touched by either frontier; each sequence's
// occurrence list for `e` is looked up once and shared by both walks.
void grow_pair(const Frontier& a, const Frontier& b, EventId e, const SequenceDB& db,
               Frontier& out_a, Frontier& out_b) {
  out_a.reserve(a.size());
  out_b.reserve(b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    SeqId seq;
    if (i < a.size() && (j >= b.size() || a[i].seq <= b[j].seq)) {
      seq = a[i].seq;
    } else {
      seq = b[j].seq;
    }
    const auto occ = db.occurrences(seq, e);
    if (i < a.size() && a[i].seq == seq) {
      const std::size_t end = run_end(a, i);
      grow_run(std::span<const Tip>(a).subspan(i, end - i), occ, out_a);
      i = end;
    }
    if (j < b.size() && b[j].seq == seq) {
      const std::size_t end = run_end(b, j);
      grow_run(std::span<const Tip>(b).subspan(j, end - j), occ, out_b);
      j = end;
    }
  }
}

Frontier root_frontier(EventId e, const SequenceDB& db) {
  Frontier f;
  for (SeqId s = 0; s < db.size(); ++s) {
    for (Position pos : db.occurrences(s, e)) f.push_back(Tip{s, pos});
  }
  return f;
}

PatternRecord make_record(const Pattern& p, const Frontier& f) {
  PatternRecord rec;
  rec.pattern = p;
  rec.support = f.size();
  for (const Tip& t : f) ++rec.per_seq[t.seq];
  return rec;
}

void validate_min_sup(Count min_sup) {
  if (min_sup < 1) throw Error(ErrorCode::InvalidMinSup, "min_sup must be >= 1");
}

std::vector<EventId> frequent_events(const SequenceDB& db, Count min_sup) {
  std::vector<EventId> out;
  for (EventId e = 0; e < db.alphabet_size(); ++e) {
    if (db.event_count(e) >= min_sup) out.push_back(e);
  }
  return out;
}

void sort_records(std::vector<PatternRecord>& records) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return LengthThenLex{}(a.pattern, b.pattern);
  });
}

class NaiveMiner {
 public:
  NaiveMiner(const SequenceDB& db, Count min_sup, const std::vector<EventId>& alphabet)
      : db_(db), min_sup_(min_sup), alphabet_(alphabet) {}

  void mine_root(EventId root) {
    Pattern p{root};
    dfs(p, root_frontier(root, db_));
  }

  std::vector<PatternRecord> records;
  MiningCounters counters;

 private:
  void dfs(const Pattern& p, const Frontier& f) {
    ++counters.nodes_visited;
    records.push_back(make_record(p, f));
    for (EventId e : alphabet_) {
      ++counters.support_scans;
      counters.instances_extended += f.size();
      Frontier g = grow(f, e, db_);
      if (g.size() >= min_sup_) dfs(p.extended(e), g);
    }
  }

  const SequenceDB& db_;
  Count min_sup_;
  const std::vector<EventId>& alphabet_;
};

class SyncMiner {
 public:
  SyncMiner(const SequenceDB& db, Count min_sup, const std::vector<EventId>& alphabet)
      : db_(db), min_sup_(min_sup), alphabet_(alphabet), visited_(db.alphabet_size(), false) {}

  void run() {
    for (EventId root : alphabet_) {
      if (visited_[root]) continue;
      visited_[root] = true;
      node(Pattern{root}, root_frontier(root, db_), nullptr, nullptr);
    }
  }

  std::vector<PatternRecord> records;
  MiningCounters counters;

 private:
  // Every occurrence of `ev` lies in a sequence that contains P.
  bool suffix_confined(const Frontier& f, EventId ev) const {
    Count inside = 0;
    SeqId prev = 0;
    bool first = true;
    for (const Tip& t : f) {
      if (!first && t.seq == prev) continue;
      inside += db_.occurrences(t.seq, ev).size();
      prev = t.seq;
      first = false;
    }
    return inside == db_.event_count(ev);
  }

  void node(const Pattern& p, const Frontier& f, const Pattern* partner,
            const Frontier* partner_f) {
    ++counters.nodes_visited;
    records.push_back(make_record(p, f));

    Pattern adopted;
    Frontier adopted_f;
    if (partner == nullptr && p.size() == 2 && !visited_[p[1]] && suffix_confined(f, p[1])) {
      visited_[p[1]] = true;
      adopted = Pattern{p[1]};
      adopted_f = root_frontier(p[1], db_);
      partner = &adopted;
      partner_f = &adopted_f;
    }
    if (partner != nullptr) {
      ++counters.nodes_visited;
      records.push_back(make_record(*partner, *partner_f));
    }

    for (EventId e : alphabet_) {
      ++counters.support_scans;
      if (partner == nullptr) {
        counters.instances_extended += f.size();
        Frontier g = grow(f, e, db_);
        if (g.size() >= min_sup_) node(p.extended(e), g, nullptr, nullptr);
        continue;
      }
      counters.instances_extended += f.size() + partner_f->size();
      Frontier g, h;
      grow_pair(f, *partner_f, e, db_, g, h);
      if (g.size() >= min_sup_) {
        if (h.size() < g.size()) {
          throw Error(ErrorCode::InvariantViolation,
                      "suffix pattern support below its super-pattern");
        }
        const Pattern next_partner = partner->extended(e);
        node(p.extended(e), g, &next_partner, &h);
      } else if (h.size() >= min_sup_) {
        node(partner->extended(e), h, nullptr, nullptr);
      }
    }
  }

  const SequenceDB& db_;
  Count min_sup_;
  const std::vector<EventId>& alphabet_;
  std::vector<bool> visited_;
};

}  // namespace

std::vector<PatternRecord> MiningResult::closed() const {
  std::vector<PatternRecord> out;
  for (const auto& r : frequent) {
    if (r.closed) out.push_back(r);
  }
  return out;
}

const PatternRecord* MiningResult::find(const Pattern& p) const {
  auto it = std::lower_bound(frequent.begin(), frequent.end(), p,
                             [](const PatternRecord& r, const Pattern& q) {
                               return LengthThenLex{}(r.pattern, q);
                             });
  if (it == frequent.end() || it->pattern != p) return nullptr;
  return &*it;
}

Extension extend(const Pattern& p, const SupportSet& set, EventId e, const SequenceDB& db) {
  return Extension{p.extended(e), extend_support_set(set, e, db)};
}

MiningResult mine_frequent(const SequenceDB& db, Count min_sup, unsigned threads) {
  validate_min_sup(min_sup);
  MiningResult result;
  result.min_sup = min_sup;
  const auto alphabet = frequent_events(db, min_sup);
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(alphabet.size(), 1)));

  std::vector<NaiveMiner> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(db, min_sup, alphabet);

  auto run_worker = [&](unsigned t) {
    for (std::size_t r = t; r < alphabet.size(); r += threads) workers[t].mine_root(alphabet[r]);
  };
  if (threads == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run_worker, t);
  }

  for (auto& w : workers) {
    result.counters += w.counters;
    std::move(w.records.begin(), w.records.end(), std::back_inserter(result.frequent));
  }
  sort_records(result.frequent);
  return result;
}

std::vector<PatternRecord> closed_patterns(MiningResult& result) {
  std::unordered_map<Pattern, Count, PatternHash> support_of;
  support_of.reserve(result.frequent.size());
  std::vector<EventId> alphabet;
  for (const auto& r : result.frequent) {
    support_of.emplace(r.pattern, r.support);
    if (r.pattern.size() == 1) alphabet.push_back(r.pattern[0]);
  }

  std::vector<PatternRecord> closed;
  for (auto& r : result.frequent) {
    r.closed = true;
    for (std::size_t gap = 0; gap <= r.pattern.size() && r.closed; ++gap) {
      for (EventId e : alphabet) {
        auto it = support_of.find(r.pattern.inserted(gap, e));
        if (it != support_of.end() && it->second == r.support) {
          r.closed = false;
          break;
        }
      }
    }
    if (r.closed) closed.push_back(r);
  }
  return closed;
}

std::vector<PatternRecord> maximal_patterns(const MiningResult& result) {
  std::unordered_map<Pattern, Count, PatternHash> present;
  std::vector<EventId> alphabet;
  for (const auto& r : result.frequent) {
    present.emplace(r.pattern, r.support);
    if (r.pattern.size() == 1) alphabet.push_back(r.pattern[0]);
  }
  std::vector<PatternRecord> out;
  for (const auto& r : result.frequent) {
    bool maximal = true;
    for (std::size_t gap = 0; gap <= r.pattern.size() && maximal; ++gap) {
      for (EventId e : alphabet) {
        if (present.contains(r.pattern.inserted(gap, e))) {
          maximal = false;
          break;
        }
      }
    }
    if (maximal) out.push_back(r);
  }
  return out;
}

MiningResult sync_scan_mine(const SequenceDB& db, Count min_sup) {
  validate_min_sup(min_sup);
  MiningResult result;
  result.min_sup = min_sup;
  const auto alphabet = frequent_events(db, min_sup);
  SyncMiner miner(db, min_sup, alphabet);
  miner.run();
  result.frequent = std::move(miner.records);
  result.counters = miner.counters;
  sort_records(result.frequent);
  closed_patterns(result);
  return result;
}

}  // namespace crgs
