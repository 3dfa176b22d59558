#include "crgs/testkit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "crgs/error.hpp"

namespace crgs::testkit {

namespace {

bool embeds(const Pattern& sub, const Pattern& super) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < super.size() && j < sub.size(); ++i) {
    if (super[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

bool proper_super(const Pattern& sub, const Pattern& super) {
  return super.size() > sub.size() && embeds(sub, super);
}

void enumerate(const Pattern& p, std::span<const EventId> s, std::size_t j, std::size_t from,
               std::vector<Position>& cur, std::vector<std::vector<Position>>& out,
               std::size_t cap) {
  if (j == p.size()) {
    if (out.size() == cap) {
      throw Error(ErrorCode::OracleTooLarge,
                  "more than " + std::to_string(cap) + " landmarks");
    }
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] != p[j]) continue;
    cur.push_back(static_cast<Position>(i + 1));
    enumerate(p, s, j + 1, i + 1, cur, out, cap);
    cur.pop_back();
  }
}

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (1ULL << (i % 64)); }
  void reset(std::size_t i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
    }
    return static_cast<std::size_t>(-1);
  }
  void subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
        f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Maximum independent set over landmarks, where two landmarks conflict when
// they agree at some index. Any independent set holds pairwise distinct
// values at every index, which gives the upper bound used for pruning.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const std::vector<std::vector<Position>>& landmarks, std::size_t seq_len)
      : lm_(landmarks), seq_len_(seq_len) {
    const std::size_t n = lm_.size();
    closed_nbhd_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
      closed_nbhd_[a].set(a);
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t j = 0; j < lm_[a].size(); ++j) {
          if (lm_[a][j] == lm_[b][j]) {
            closed_nbhd_[a].set(b);
            closed_nbhd_[b].set(a);
            break;
          }
        }
      }
    }
    seen_.assign(seq_len_ + 1, 0);
  }

  Count solve() {
    Bitset all(lm_.size());
    for (std::size_t i = 0; i < lm_.size(); ++i) all.set(i);
    search(all, 0);
    return best_;
  }

 private:
  Count bound(const Bitset& cand) {
    Count tightest = static_cast<Count>(-1);
    const std::size_t m = lm_.empty() ? 0 : lm_.front().size();
    for (std::size_t j = 0; j < m; ++j) {
      ++stamp_;
      Count distinct = 0;
      cand.for_each([&](std::size_t v) {
        const Position pos = lm_[v][j];
        if (seen_[pos] != stamp_) {
          seen_[pos] = stamp_;
          ++distinct;
        }
      });
      tightest = std::min(tightest, distinct);
    }
    return tightest;
  }

  void search(Bitset cand, Count size) {
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + bound(cand) <= best_) return;
    const std::size_t v = cand.first();
    Bitset with = cand;
    with.subtract(closed_nbhd_[v]);
    search(std::move(with), size + 1);
    cand.reset(v);
    search(std::move(cand), size);
  }

  const std::vector<std::vector<Position>>& lm_;
  std::size_t seq_len_;
  std::vector<Bitset> closed_nbhd_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  Count best_ = 0;
};

}  // namespace

Count count_landmarks(const Pattern& p, const Sequence& s) {
  if (p.empty()) return 0;
  // ways[j] = number of embeddings of the first j pattern events so far.
  std::vector<Count> ways(p.size() + 1, 0);
  ways[0] = 1;
  for (EventId e : s.events()) {
    for (std::size_t j = p.size(); j >= 1; --j) {
      if (p[j - 1] == e) ways[j] += ways[j - 1];
    }
  }
  return ways[p.size()];
}

Count oracle_max_support(const Pattern& p, const Sequence& s, std::size_t cap) {
  if (p.empty()) return 0;
  std::vector<std::vector<Position>> landmarks;
  std::vector<Position> cur;
  enumerate(p, s.events(), 0, 0, cur, landmarks, cap);
  if (landmarks.empty()) return 0;
  if (p.size() == 1) return landmarks.size();
  return IndependentSetSearch(landmarks, s.size()).solve();
}

Count oracle_support(const Pattern& p, const SequenceDB& db, std::size_t cap) {
  Count total = 0;
  for (const auto& s : db.sequences()) total += oracle_max_support(p, s, cap);
  return total;
}

PerSeqSupport oracle_per_seq(const Pattern& p, const SequenceDB& db, std::size_t cap) {
  PerSeqSupport out;
  for (SeqId i = 0; i < db.size(); ++i) {
    const Count c = oracle_max_support(p, db[i], cap);
    if (c > 0) out[i] = c;
  }
  return out;
}

OracleResult brute_force_frequent(const SequenceDB& db, Count min_sup, std::size_t cap,
                                  std::size_t max_patterns) {
  if (min_sup < 1) throw Error(ErrorCode::InvalidMinSup, "min_sup must be >= 1");
  OracleResult result;
  const std::size_t max_len = db.max_length();
  std::function<void(const Pattern&)> visit = [&](const Pattern& p) {
    PatternRecord rec;
    rec.pattern = p;
    rec.per_seq = oracle_per_seq(p, db, cap);
    for (const auto& [seq, c] : rec.per_seq) rec.support += c;
    if (rec.support < min_sup) return;
    if (result.frequent.size() == max_patterns) {
      throw Error(ErrorCode::OracleTooLarge,
                  "more than " + std::to_string(max_patterns) + " frequent patterns");
    }
    result.frequent.push_back(std::move(rec));
    if (p.size() == max_len) return;
    for (EventId e = 0; e < db.alphabet_size(); ++e) visit(p.extended(e));
  };
  for (EventId e = 0; e < db.alphabet_size(); ++e) visit(Pattern{e});

  std::sort(result.frequent.begin(), result.frequent.end(),
            [](const auto& a, const auto& b) { return LengthThenLex{}(a.pattern, b.pattern); });
  for (auto& p : result.frequent) {
    bool closed = true;
    bool maximal = true;
    for (const auto& q : result.frequent) {
      if (!proper_super(p.pattern, q.pattern)) continue;
      maximal = false;
      if (q.support == p.support) {
        closed = false;
        break;
      }
    }
    p.closed = closed;
    if (closed) result.closed.push_back(p);
    if (maximal) result.maximal.push_back(p);
  }
  return result;
}

CoverReport verify_cover(const CompressionResult& result,
                         const std::vector<PatternRecord>& frequent, const Rational& delta) {
  CoverReport report;
  using u128 = unsigned __int128;
  // 1 - sup(rp)/sup(p) <= num/den  <=>  (sup(p) - sup(rp)) * den <= num * sup(p)
  auto covers = [&](const PatternRecord& rp, const PatternRecord& p) {
    if (!embeds(p.pattern, rp.pattern) || rp.support > p.support) return false;
    return static_cast<u128>(p.support - rp.support) * delta.den() <=
           static_cast<u128>(delta.num()) * p.support;
  };
  auto fail = [&](CoverViolation::Kind kind, const Pattern& p) {
    report.ok = false;
    report.violations.push_back(CoverViolation{kind, p});
  };

  for (const auto& p : frequent) {
    const bool any = std::any_of(result.representatives.begin(), result.representatives.end(),
                                 [&](const PatternRecord& rp) { return covers(rp, p); });
    if (!any) {
      fail(CoverViolation::Kind::Uncovered, p.pattern);
      continue;
    }
    const Pattern* owner = result.covered_by(p.pattern);
    if (owner == nullptr) {
      fail(CoverViolation::Kind::BadAssignment, p.pattern);
      continue;
    }
    auto rp = std::find_if(result.representatives.begin(), result.representatives.end(),
                           [&](const PatternRecord& r) { return r.pattern == *owner; });
    if (rp == result.representatives.end() || !covers(*rp, p)) {
      fail(CoverViolation::Kind::BadAssignment, p.pattern);
    }
  }

  std::vector<const PatternRecord*> closed;
  for (const auto& p : frequent) {
    const bool is_closed = std::none_of(frequent.begin(), frequent.end(), [&](const auto& q) {
      return q.support == p.support && proper_super(p.pattern, q.pattern);
    });
    if (is_closed) closed.push_back(&p);
  }
  for (const PatternRecord* p : closed) {
    const bool dominated = std::none_of(closed.begin(), closed.end(), [&](const PatternRecord* q) {
      return proper_super(p->pattern, q->pattern) && covers(*q, *p);
    });
    if (!dominated) continue;
    const bool present =
        std::any_of(result.representatives.begin(), result.representatives.end(),
                    [&](const PatternRecord& r) { return r.pattern == p->pattern; });
    if (!present) fail(CoverViolation::Kind::MissingDominate, p->pattern);
  }
  return report;
}

}  // namespace crgs::testkit
