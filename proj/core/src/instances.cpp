#include "crgs/instances.hpp"

#include <algorithm>

#include "crgs/error.hpp"

namespace crgs {

bool is_subsequence(const Pattern& sub, const Pattern& super) {
  return is_subsequence(sub, super.events());
}

bool is_subsequence(const Pattern& sub, std::span<const EventId> super) {
  if (sub.size() > super.size()) return false;
  std::size_t j = 0;
  for (EventId e : super) {
    if (j == sub.size()) break;
    if (e == sub[j]) ++j;
  }
  return j == sub.size();
}

namespace {

void collect_landmarks(const Pattern& p, std::span<const EventId> s,
                       std::size_t index, Position from, Landmark& current,
                       std::vector<Landmark>& out) {
  if (index == p.size()) {
    out.push_back(current);
    return;
  }
  // Leave room for the remaining pattern events.
  const std::size_t remaining = p.size() - index - 1;
  for (Position pos = from; pos + remaining <= s.size(); ++pos) {
    if (s[pos - 1] != p[index]) continue;
    current.push_back(pos);
    collect_landmarks(p, s, index + 1, pos + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Landmark> landmarks_of(const Pattern& p, const Sequence& s) {
  std::vector<Landmark> out;
  if (p.empty()) return out;
  Landmark current;
  current.reserve(p.size());
  collect_landmarks(p, s.events(), 0, 1, current, out);
  return out;
}

bool instances_overlap(const Instance& a, const Instance& b) {
  if (a.landmark.size() != b.landmark.size()) {
    throw Error(ErrorCode::PatternLengthMismatch,
                "instances of patterns with different lengths");
  }
  if (a.seq != b.seq) return false;
  for (std::size_t j = 0; j < a.landmark.size(); ++j) {
    if (a.landmark[j] == b.landmark[j]) return true;
  }
  return false;
}

bool right_shift_precedes(const Instance& a, const Instance& b) {
  return a.seq < b.seq || (a.seq == b.seq && a.last() < b.last());
}

bool right_shift_less(const Instance& a, const Instance& b) {
  if (a.seq != b.seq) return a.seq < b.seq;
  if (a.last() != b.last()) return a.last() < b.last();
  return a.landmark < b.landmark;
}

SupportSet initial_support_set(EventId e, const SequenceDB& db) {
  SupportSet set;
  for (SeqId s = 0; s < db.size(); ++s) {
    for (Position pos : db.occurrences(s, e)) {
      set.instances.push_back(Instance{s, Landmark{pos}});
    }
  }
  return set;
}

SupportSet extend_support_set(const SupportSet& set, EventId e, const SequenceDB& db) {
  SupportSet out;
  out.instances.reserve(set.instances.size());
  SeqId current_seq = 0;
  Position consumed = 0;
  std::span<const Position> occ;
  bool first = true;
  for (const Instance& inst : set.instances) {
    if (first || inst.seq != current_seq) {
      current_seq = inst.seq;
      consumed = 0;
      occ = db.occurrences(inst.seq, e);
      first = false;
    }
    const Position after = std::max(inst.last(), consumed);
    auto it = std::upper_bound(occ.begin(), occ.end(), after);
    if (it == occ.end()) continue;
    consumed = *it;
    Instance next{inst.seq, inst.landmark};
    next.landmark.push_back(*it);
    out.instances.push_back(std::move(next));
  }
  return out;
}

SupportResult repetitive_support(const Pattern& p, const SequenceDB& db) {
  SupportResult result;
  if (p.empty()) return result;
  result.set = initial_support_set(p[0], db);
  for (std::size_t j = 1; j < p.size() && !result.set.empty(); ++j) {
    result.set = extend_support_set(result.set, p[j], db);
  }
  result.support = result.set.size();
  return result;
}

PerSeqSupport per_sequence_counts(const SupportSet& set) {
  PerSeqSupport out;
  for (const auto& inst : set.instances) ++out[inst.seq];
  return out;
}

PerSeqSupport per_sequence_supports(const Pattern& p, const SequenceDB& db) {
  return per_sequence_counts(repetitive_support(p, db).set);
}

}  // namespace crgs
