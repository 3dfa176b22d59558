#include <random>

#include "crgs/testkit/oracle.hpp"

namespace crgs::testkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::string token(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('A' + k));
  return "E" + std::to_string(k);
}

}  // namespace

SequenceDB random_db(const OracleConfig& config, std::size_t index) {
  std::mt19937_64 rng(splitmix64(config.seed) ^ splitmix64(0x5eed0000ULL + index));
  const std::size_t alphabet = draw(rng, 1, config.alphabet_max);
  const std::size_t num_seqs = draw(rng, 1, config.seqs_max);
  Dictionary dict;
  std::vector<std::vector<EventId>> seqs;
  for (std::size_t s = 0; s < num_seqs; ++s) {
    const std::size_t len = draw(rng, 1, config.len_max);
    std::vector<EventId> events;
    for (std::size_t i = 0; i < len; ++i) {
      events.push_back(dict.intern(token(draw(rng, 0, alphabet - 1))));
    }
    seqs.push_back(std::move(events));
  }
  return SequenceDB(std::move(seqs), std::move(dict));
}

std::vector<Pattern> all_patterns(std::size_t alphabet, std::size_t max_len) {
  std::vector<Pattern> out;
  std::vector<Pattern> layer{Pattern{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Pattern> next;
    for (const auto& p : layer) {
      for (EventId e = 0; e < alphabet; ++e) next.push_back(p.extended(e));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

SequenceDB sample_db() { return parse_db(kSampleText); }

}  // namespace crgs::testkit
