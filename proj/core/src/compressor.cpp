#include "crgs/compressor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "crgs/error.hpp"

namespace crgs {

Distance pattern_distance(const PatternRecord& p1, const PatternRecord& p2) {
  Count min_ins = 0;
  Count max_ins = 0;
  auto a = p1.per_seq.begin();
  auto b = p2.per_seq.begin();
  while (a != p1.per_seq.end() || b != p2.per_seq.end()) {
    if (b == p2.per_seq.end() || (a != p1.per_seq.end() && a->first < b->first)) {
      max_ins += a->second;
      ++a;
    } else if (a == p1.per_seq.end() || b->first < a->first) {
      max_ins += b->second;
      ++b;
    } else {
      min_ins += std::min(a->second, b->second);
      max_ins += std::max(a->second, b->second);
      ++a;
      ++b;
    }
  }
  if (max_ins == 0) {
    throw Error(ErrorCode::UndefinedDistance, "distance between two absent patterns");
  }
  return one_minus_ratio(min_ins, max_ins);
}

Distance cover_distance(const PatternRecord& p, const PatternRecord& rp) {
  if (!is_subsequence(p.pattern, rp.pattern)) {
    throw Error(ErrorCode::NotSubsequence, "cover distance needs p ⊆ rp");
  }
  if (p.support == 0) {
    throw Error(ErrorCode::UndefinedDistance, "cover distance of an absent pattern");
  }
  return one_minus_ratio(rp.support, p.support);
}

bool delta_covers(const PatternRecord& rp, const PatternRecord& p, const Rational& delta) {
  if (!is_subsequence(p.pattern, rp.pattern)) return false;
  return cover_distance(p, rp) <= delta;
}

CoverBound min_sequence_cover(const PatternRecord& p, const std::vector<PatternRecord>& set) {
  std::optional<Distance> best;
  for (const auto& q : set) {
    if (q.pattern.size() <= p.pattern.size()) continue;  // proper supers only
    if (!is_subsequence(p.pattern, q.pattern)) continue;
    const Distance d = cover_distance(p, q);
    if (!best || d < *best) best = d;
  }
  return best ? CoverBound::finite(*best) : CoverBound::infinity();
}

const Pattern* CompressionResult::covered_by(const Pattern& p) const {
  for (const auto& a : assignments) {
    if (std::binary_search(a.covered.begin(), a.covered.end(), p, LengthThenLex{})) {
      return &a.representative;
    }
  }
  return nullptr;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void validate_delta(const Rational& delta) {
  if (delta > Rational::integer(1)) {
    throw Error(ErrorCode::InvalidDelta, "delta must lie in [0,1], got " + delta.to_string());
  }
}

// Cover relation over one fixed pattern set, memoized per ordered pair so a
// distance is computed at most once per run.
class CoverEngine {
 public:
  CoverEngine(const std::vector<PatternRecord>& set, CompressionCounters& counters)
      : set_(set), counters_(counters) {}

  std::size_t size() const { return set_.size(); }
  const std::vector<PatternRecord>& records() const { return set_; }
  const PatternRecord& operator[](std::size_t i) const { return set_[i]; }

  // Distance from set[p] to set[rp] when set[p] ⊆ set[rp].
  std::optional<Distance> distance(std::size_t p, std::size_t rp) {
    const auto& sub = set_[p];
    const auto& super = set_[rp];
    if (super.pattern.size() < sub.pattern.size()) return std::nullopt;
    const std::uint64_t key = static_cast<std::uint64_t>(p) * set_.size() + rp;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::optional<Distance> d;
    if (is_subsequence(sub.pattern, super.pattern)) {
      ++counters_.distance_evals;
      d = one_minus_ratio(super.support, sub.support);
    }
    cache_.emplace(key, d);
    return d;
  }

  bool covers(std::size_t rp, std::size_t p, const Rational& delta) {
    ++counters_.cover_checks;
    const auto d = distance(p, rp);
    return d && *d <= delta;
  }

 private:
  const std::vector<PatternRecord>& set_;
  CompressionCounters& counters_;
  std::unordered_map<std::uint64_t, std::optional<Distance>> cache_;
};

// MSC(p) > delta  <=>  no proper super-pattern q has D(p, q) <= delta, i.e.
// sup(q) >= (1 - delta) * sup(p). Only those q need a containment test.
std::vector<bool> classify_dominate(CoverEngine& engine, const Rational& delta) {
  const std::size_t n = engine.size();
  std::vector<bool> dominate(n, true);
  using u128 = unsigned __int128;
  const u128 keep_num = delta.den() - delta.num();  // (1 - delta) = keep_num / den
  for (std::size_t p = 0; p < n; ++p) {
    const auto& rec = engine[p];
    for (std::size_t q = 0; q < n && dominate[p]; ++q) {
      const auto& other = engine[q];
      if (other.pattern.size() <= rec.pattern.size()) continue;
      if (static_cast<u128>(other.support) * delta.den() < keep_num * rec.support) continue;
      if (engine.covers(q, p, delta)) dominate[p] = false;
    }
  }
  return dominate;
}

// Prefers more newly covered patterns, then the longer pattern, then the
// higher support, then the lexicographically smaller pattern.
bool better_candidate(std::size_t gain_a, const PatternRecord& a, std::size_t gain_b,
                      const PatternRecord& b) {
  if (gain_a != gain_b) return gain_a > gain_b;
  if (a.pattern.size() != b.pattern.size()) return a.pattern.size() > b.pattern.size();
  if (a.support != b.support) return a.support > b.support;
  return a.pattern < b.pattern;
}

// Greedy set cover. `sets[c]` lists universe members candidate c covers;
// `open[i]` marks members still uncovered. Returns the chosen candidates and
// writes owner[i] for every member it covers.
std::vector<std::size_t> greedy_set_cover(const std::vector<PatternRecord>& records,
                                          const std::vector<std::size_t>& candidates,
                                          const std::vector<std::vector<std::size_t>>& sets,
                                          std::vector<bool>& open, std::vector<std::size_t>& owner) {
  std::size_t remaining = static_cast<std::size_t>(std::count(open.begin(), open.end(), true));
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = kNone;
    std::size_t best_gain = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::size_t gain = 0;
      for (std::size_t i : sets[k]) gain += open[i] ? 1 : 0;
      if (gain == 0) continue;
      if (best == kNone ||
          better_candidate(gain, records[candidates[k]], best_gain, records[candidates[best]])) {
        best = k;
        best_gain = gain;
      }
    }
    if (best == kNone) {
      throw Error(ErrorCode::InvariantViolation, "greedy cover left patterns uncovered");
    }
    const std::size_t c = candidates[best];
    for (std::size_t i : sets[best]) {
      if (open[i]) {
        open[i] = false;
        owner[i] = c;
        --remaining;
      }
    }
    owner[c] = c;
    chosen.push_back(c);
  }
  return chosen;
}

struct Selection {
  std::vector<bool> representative;
  std::vector<bool> dominate;
  std::vector<std::size_t> owner;  // closed index -> representative index
};

// Compress over closed patterns given the dominate classification.
Selection compress_closed(CoverEngine& engine, std::vector<bool> dominate, const Rational& delta) {
  const std::size_t n = engine.size();
  Selection sel;
  sel.dominate = dominate;
  sel.representative = dominate;
  sel.owner.assign(n, kNone);

  std::vector<std::size_t> cover_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (dominate[i]) {
      cover_idx.push_back(i);
      sel.owner[i] = i;
    }
  }
  // T: closed patterns covered by some dominate pattern.
  for (std::size_t p = 0; p < n; ++p) {
    if (dominate[p]) continue;
    for (std::size_t rp : cover_idx) {
      if (engine.covers(rp, p, delta)) {
        sel.owner[p] = rp;
        break;
      }
    }
  }
  // T-bar = Covered - Cover - T.
  std::vector<bool> open(n, false);
  std::vector<std::size_t> open_idx;
  for (std::size_t p = 0; p < n; ++p) {
    if (!dominate[p] && sel.owner[p] == kNone) {
      open[p] = true;
      open_idx.push_back(p);
    }
  }
  if (open_idx.empty()) return sel;

  std::vector<std::size_t> candidates;
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t c = 0; c < n; ++c) {
    if (dominate[c]) continue;
    std::vector<std::size_t> s;
    for (std::size_t sp : open_idx) {
      if (engine.covers(c, sp, delta)) s.push_back(sp);
    }
    if (s.empty()) continue;
    candidates.push_back(c);
    sets.push_back(std::move(s));
  }
  for (std::size_t c : greedy_set_cover(engine.records(), candidates, sets, open, sel.owner)) {
    sel.representative[c] = true;
  }
  return sel;
}

CompressionResult assemble(const std::vector<PatternRecord>& closed, const Selection& sel) {
  CompressionResult result;
  std::map<Pattern, std::vector<Pattern>, LengthThenLex> groups;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (!sel.representative[i]) continue;
    PatternRecord rec = closed[i];
    rec.dominate = sel.dominate[i];
    if (rec.dominate) result.dominate_set.push_back(rec);
    result.representatives.push_back(std::move(rec));
    groups[closed[i].pattern];
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (sel.owner[i] == kNone) {
      throw Error(ErrorCode::InvariantViolation, "closed pattern left without a representative");
    }
    groups[closed[sel.owner[i]].pattern].push_back(closed[i].pattern);
  }
  auto by_pattern = [](const PatternRecord& a, const PatternRecord& b) {
    return LengthThenLex{}(a.pattern, b.pattern);
  };
  std::sort(result.representatives.begin(), result.representatives.end(), by_pattern);
  std::sort(result.dominate_set.begin(), result.dominate_set.end(), by_pattern);
  for (auto& [rep, members] : groups) {
    std::sort(members.begin(), members.end(), LengthThenLex{});
    result.assignments.push_back(CoverAssignment{rep, std::move(members)});
  }
  return result;
}

// Attaches every non-closed frequent pattern to a representative. The
// representative of the pattern's equal-support closed super-pattern is
// tried first; each choice is confirmed with a direct delta-cover test.
void assign_frequent(CompressionResult& result, const Rational& delta) {
  auto& mining = result.mining;
  std::map<Pattern, std::size_t, LengthThenLex> rep_index;
  std::map<Pattern, const Pattern*, LengthThenLex> owner_of;
  for (std::size_t k = 0; k < result.assignments.size(); ++k) {
    rep_index[result.assignments[k].representative] = k;
    for (const auto& p : result.assignments[k].covered) {
      owner_of[p] = &result.assignments[k].representative;
    }
  }
  std::map<Count, std::vector<const PatternRecord*>> closed_by_support;
  for (const auto& r : mining.frequent) {
    if (r.closed) closed_by_support[r.support].push_back(&r);
  }
  auto rep_record = [&](const Pattern& p) -> const PatternRecord& {
    return *mining.find(p);
  };

  std::vector<std::vector<Pattern>> extra(result.assignments.size());
  for (const auto& r : mining.frequent) {
    if (r.closed) continue;
    std::optional<std::size_t> chosen;
    for (const PatternRecord* c : closed_by_support[r.support]) {
      if (!is_subsequence(r.pattern, c->pattern)) continue;
      const Pattern& rep = *owner_of.at(c->pattern);
      ++result.counters.cover_checks;
      ++result.counters.distance_evals;
      if (delta_covers(rep_record(rep), r, delta)) chosen = rep_index.at(rep);
      break;
    }
    for (std::size_t k = 0; !chosen && k < result.assignments.size(); ++k) {
      ++result.counters.cover_checks;
      const auto& rp = rep_record(result.assignments[k].representative);
      if (is_subsequence(r.pattern, rp.pattern)) ++result.counters.distance_evals;
      if (delta_covers(rp, r, delta)) chosen = k;
    }
    if (!chosen) {
      throw Error(ErrorCode::InvariantViolation, "frequent pattern left without a representative");
    }
    extra[*chosen].push_back(r.pattern);
  }
  for (std::size_t k = 0; k < extra.size(); ++k) {
    auto& covered = result.assignments[k].covered;
    covered.insert(covered.end(), extra[k].begin(), extra[k].end());
    std::sort(covered.begin(), covered.end(), LengthThenLex{});
  }
}

void mark_dominate(MiningResult& mining, const std::vector<PatternRecord>& dominate) {
  for (auto& r : mining.frequent) r.dominate = false;
  for (const auto& d : dominate) {
    auto it = std::lower_bound(mining.frequent.begin(), mining.frequent.end(), d.pattern,
                               [](const PatternRecord& r, const Pattern& q) {
                                 return LengthThenLex{}(r.pattern, q);
                               });
    if (it != mining.frequent.end() && it->pattern == d.pattern) it->dominate = true;
  }
}

}  // namespace

std::vector<PatternRecord> dominate_set(std::vector<PatternRecord>& closed, const Rational& delta) {
  validate_delta(delta);
  CompressionCounters counters;
  CoverEngine engine(closed, counters);
  const auto flags = classify_dominate(engine, delta);
  std::vector<PatternRecord> out;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    closed[i].dominate = flags[i];
    if (flags[i]) out.push_back(closed[i]);
  }
  return out;
}

CompressionResult greedy_compress(const std::vector<PatternRecord>& cover,
                                  const std::vector<PatternRecord>& covered,
                                  const Rational& delta) {
  validate_delta(delta);
  std::vector<bool> dominate(covered.size(), false);
  for (const auto& c : cover) {
    auto it = std::find_if(covered.begin(), covered.end(),
                           [&](const PatternRecord& r) { return r.pattern == c.pattern; });
    if (it == covered.end()) {
      throw Error(ErrorCode::InvariantViolation, "cover pattern missing from covered set");
    }
    dominate[static_cast<std::size_t>(it - covered.begin())] = true;
  }
  CompressionCounters counters;
  CoverEngine engine(covered, counters);
  const Selection sel = compress_closed(engine, dominate, delta);
  CompressionResult result = assemble(covered, sel);
  result.counters = counters;
  return result;
}

CompressionResult crgsgrow(const SequenceDB& db, Count min_sup, const Rational& delta) {
  validate_delta(delta);
  MiningResult mining = sync_scan_mine(db, min_sup);
  const std::vector<PatternRecord> closed = mining.closed();

  CompressionCounters counters;
  CoverEngine engine(closed, counters);
  auto dominate = classify_dominate(engine, delta);
  const Selection sel = compress_closed(engine, std::move(dominate), delta);

  CompressionResult result = assemble(closed, sel);
  result.counters = counters;
  mark_dominate(mining, result.dominate_set);
  result.mining = std::move(mining);
  assign_frequent(result, delta);
  return result;
}

CompressionResult baseline_compress(const SequenceDB& db, Count min_sup, const Rational& delta) {
  validate_delta(delta);
  MiningResult mining = mine_frequent(db, min_sup);
  const std::vector<PatternRecord> closed = closed_patterns(mining);
  const std::size_t n = closed.size();

  CompressionCounters counters;
  CoverEngine engine(closed, counters);
  std::vector<std::vector<std::size_t>> sets(n);
  std::vector<bool> dominate(n, true);
  for (std::size_t rp = 0; rp < n; ++rp) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!engine.covers(rp, p, delta)) continue;
      sets[rp].push_back(p);
      if (rp != p) dominate[p] = false;
    }
  }

  std::vector<std::size_t> candidates(n);
  for (std::size_t i = 0; i < n; ++i) candidates[i] = i;
  std::vector<bool> open(n, true);
  Selection sel;
  sel.dominate = dominate;
  sel.owner.assign(n, kNone);
  sel.representative.assign(n, false);
  for (std::size_t c : greedy_set_cover(closed, candidates, sets, open, sel.owner)) {
    sel.representative[c] = true;
  }

  CompressionResult result = assemble(closed, sel);
  result.counters = counters;
  mark_dominate(mining, result.dominate_set);
  result.mining = std::move(mining);
  assign_frequent(result, delta);
  return result;
}

}  // namespace crgs
