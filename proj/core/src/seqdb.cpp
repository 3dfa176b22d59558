#include "crgs/seqdb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "crgs/error.hpp"

namespace crgs {

EventId Dictionary::intern(std::string_view token) {
  std::string key(token);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<EventId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<EventId> Dictionary::find(std::string_view token) const {
  if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
  return std::nullopt;
}

SequenceDB::SequenceDB(std::vector<std::vector<EventId>> sequences,
                       Dictionary dictionary)
    : dictionary_(std::move(dictionary)) {
  if (sequences.empty()) {
    throw Error(ErrorCode::EmptyDatabase, "database has no sequences");
  }
  event_counts_.assign(dictionary_.size(), 0);
  sequences_.reserve(sequences.size());
  index_.reserve(sequences.size());
  for (auto& events : sequences) {
    if (events.empty()) {
      throw Error(ErrorCode::EmptyDatabase, "database contains an empty sequence");
    }
    std::vector<std::pair<EventId, Position>> pairs;
    pairs.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (events[i] >= dictionary_.size()) {
        throw Error(ErrorCode::InvalidParams,
                    "event id " + std::to_string(events[i]) + " outside dictionary");
      }
      ++event_counts_[events[i]];
      pairs.emplace_back(events[i], static_cast<Position>(i + 1));
    }
    std::sort(pairs.begin(), pairs.end());
    OccurrenceIndex idx;
    idx.positions.reserve(pairs.size());
    for (const auto& [e, pos] : pairs) {
      if (idx.events.empty() || idx.events.back() != e) {
        idx.events.push_back(e);
        idx.offsets.push_back(static_cast<std::uint32_t>(idx.positions.size()));
      }
      idx.positions.push_back(pos);
    }
    idx.offsets.push_back(static_cast<std::uint32_t>(idx.positions.size()));
    index_.push_back(std::move(idx));
    sequences_.emplace_back(std::move(events));
  }
}

std::size_t SequenceDB::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& s : sequences_) m = std::max(m, s.size());
  return m;
}

std::span<const Position> SequenceDB::occurrences(SeqId seq, EventId event) const {
  const auto& idx = index_.at(seq);
  auto it = std::lower_bound(idx.events.begin(), idx.events.end(), event);
  if (it == idx.events.end() || *it != event) return {};
  const auto k = static_cast<std::size_t>(it - idx.events.begin());
  return std::span<const Position>(idx.positions)
      .subspan(idx.offsets[k], idx.offsets[k + 1] - idx.offsets[k]);
}

std::optional<Pattern> SequenceDB::pattern_of(std::span<const std::string> tokens) const {
  std::vector<EventId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto id = dictionary_.find(t);
    if (!id) return std::nullopt;
    ids.push_back(*id);
  }
  return Pattern(std::move(ids));
}

std::optional<Pattern> SequenceDB::pattern_of(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return pattern_of(tokens);
}

std::vector<std::string> SequenceDB::names_of(const Pattern& p) const {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (EventId e : p) out.push_back(dictionary_.name(e));
  return out;
}

SequenceDB parse_db(std::string_view text) {
  Dictionary dict;
  std::vector<std::vector<EventId>> sequences;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::istringstream line{std::string(text.substr(start, end - start))};
    std::vector<EventId> events;
    bool first = true;
    for (std::string tok; line >> tok; first = false) {
      if (first && tok.front() == '#') break;
      events.push_back(dict.intern(tok));
    }
    if (!events.empty()) sequences.push_back(std::move(events));
    start = end + 1;
  }
  return SequenceDB(std::move(sequences), std::move(dict));
}

std::string write_db(const SequenceDB& db) {
  std::string out;
  for (const auto& seq : db.sequences()) {
    bool first = true;
    for (EventId e : seq.events()) {
      if (!first) out.push_back(' ');
      out += db.dictionary().name(e);
      first = false;
    }
    out.push_back('\n');
  }
  return out;
}

SequenceDB load_db(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return parse_db(buf.str());
}

void save_db(const SequenceDB& db, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << write_db(db);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

namespace {

// Portable samplers on top of mt19937_64, whose output sequence is fixed by
// the standard (the std:: distributions are not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_open01(std::mt19937_64& rng) {
  // (0, 1]: never zero, so log() is finite.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

// Counts unit-rate exponential arrivals within [0, mean].
std::uint64_t poisson(std::mt19937_64& rng, double mean) {
  std::uint64_t k = 0;
  double t = -std::log(uniform_open01(rng));
  while (t <= mean) {
    ++k;
    t -= std::log(uniform_open01(rng));
  }
  return k;
}

}  // namespace

SequenceDB generate_synthetic(const GenParams& params) {
  if (params.num_sequences == 0 || params.num_items == 0 || params.avg_length == 0 ||
      params.max_length == 0) {
    throw Error(ErrorCode::InvalidParams, "generator counts must be positive");
  }
  if (params.avg_length > params.max_length) {
    throw Error(ErrorCode::InvalidParams, "average length exceeds maximum length");
  }

  std::mt19937_64 rng(params.seed);
  Dictionary dict;
  std::vector<std::vector<EventId>> sequences;
  sequences.reserve(params.num_sequences);
  for (std::uint64_t s = 0; s < params.num_sequences; ++s) {
    const auto len = std::clamp<std::uint64_t>(
        poisson(rng, static_cast<double>(params.avg_length)), 1, params.max_length);
    std::vector<EventId> events;
    events.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto item = uniform_below(rng, params.num_items);
      events.push_back(dict.intern("item" + std::to_string(item)));
    }
    sequences.push_back(std::move(events));
  }
  return SequenceDB(std::move(sequences), std::move(dict));
}

DBStats db_stats(const SequenceDB& db) {
  DBStats stats;
  stats.num_sequences = db.size();
  stats.num_items = db.alphabet_size();
  std::uint64_t total = 0;
  for (const auto& s : db.sequences()) {
    total += s.size();
    stats.max_length = std::max<std::uint64_t>(stats.max_length, s.size());
  }
  stats.avg_length = Rational(total, stats.num_sequences);
  return stats;
}

}  // namespace crgs
