#include "crgs/cli/commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "crgs/compressor.hpp"
#include "crgs/error.hpp"
#include "crgs/miner.hpp"
#include "crgs/seqdb.hpp"
#include "crgs/testkit/oracle.hpp"

namespace crgs::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown by command bodies to leave with a specific exit code.
struct Failure {
  int code;
  std::string message;
};

std::optional<Count> parse_count(const std::string& text) {
  Count v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

Count require_min_sup(const std::string& text) {
  auto v = parse_count(text);
  if (!v || *v < 1) throw Failure{kInvalidValue, "invalid --min-sup '" + text + "': need an integer >= 1"};
  return *v;
}

Rational require_delta(const std::string& text) {
  auto d = Rational::parse(text);
  if (!d || *d > Rational::integer(1)) {
    throw Failure{kInvalidValue, "invalid --delta '" + text + "': need a decimal in [0,1]"};
  }
  return *d;
}

SequenceDB read_input(const std::string& path) {
  try {
    return load_db(path);
  } catch (const Error& e) {
    throw Failure{kIoError, e.what()};
  }
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{kIoError, "cannot open " + out_path + " for writing"};
  f << doc;
  if (!f) throw Failure{kIoError, "cannot write " + out_path};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string joined(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// Output ordering: length ascending, then token names lexicographic.
struct NamedRecord {
  std::vector<std::string> tokens;
  const PatternRecord* record;
  const Pattern* covered_by = nullptr;
};

std::vector<NamedRecord> named(const SequenceDB& db, const std::vector<PatternRecord>& recs) {
  std::vector<NamedRecord> out;
  out.reserve(recs.size());
  for (const auto& r : recs) out.push_back(NamedRecord{db.names_of(r.pattern), &r});
  std::sort(out.begin(), out.end(), [](const NamedRecord& a, const NamedRecord& b) {
    if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
    return a.tokens < b.tokens;
  });
  return out;
}

json per_seq_json(const PerSeqSupport& per_seq) {
  json j = json::object();
  for (const auto& [seq, c] : per_seq) j[std::to_string(seq + 1)] = c;
  return j;
}

json record_json(const SequenceDB& db, const NamedRecord& n) {
  json j;
  j["pattern"] = n.tokens;
  j["support"] = n.record->support;
  j["per_seq"] = per_seq_json(n.record->per_seq);
  j["closed"] = n.record->closed;
  j["dominate"] = n.record->dominate;
  if (n.covered_by != nullptr) j["covered_by"] = db.names_of(*n.covered_by);
  return j;
}

json mining_counters_json(const MiningCounters& c) {
  return json{{"support_scans", c.support_scans},
              {"instances_extended", c.instances_extended},
              {"nodes_visited", c.nodes_visited}};
}

std::string mining_csv(const std::vector<NamedRecord>& recs, bool with_cover,
                       const SequenceDB& db) {
  std::string out = with_cover ? "pattern,support,closed,dominate,representative,covered_by\n"
                               : "pattern,support,closed,dominate\n";
  for (const auto& n : recs) {
    out += csv_field(joined(n.tokens)) + "," + std::to_string(n.record->support) + "," +
           (n.record->closed ? "1" : "0") + "," + (n.record->dominate ? "1" : "0");
    if (with_cover) {
      const bool is_rep = n.covered_by != nullptr && *n.covered_by == n.record->pattern;
      out += std::string(",") + (is_rep ? "1" : "0") + "," +
             (n.covered_by ? csv_field(joined(db.names_of(*n.covered_by))) : "");
    }
    out += "\n";
  }
  return out;
}

struct MineArgs {
  std::string input, out, min_sup, format = "json";
  bool closed = false, maximal = false, naive = false;
  unsigned threads = 1;
};

int cmd_mine(const MineArgs& a, std::ostream& out) {
  const Count min_sup = require_min_sup(a.min_sup);
  const SequenceDB db = read_input(a.input);

  MiningResult result;
  if (a.naive) {
    result = mine_frequent(db, min_sup, a.threads);
    closed_patterns(result);
  } else {
    result = sync_scan_mine(db, min_sup);
  }
  std::vector<PatternRecord> selected;
  std::string mode = "frequent";
  if (a.maximal) {
    selected = maximal_patterns(result);
    mode = "maximal";
  } else if (a.closed) {
    selected = result.closed();
    mode = "closed";
  } else {
    selected = result.frequent;
  }
  const auto recs = named(db, selected);

  if (a.format == "csv") {
    emit(mining_csv(recs, false, db), a.out, out);
    return kOk;
  }
  json doc;
  doc["command"] = "mine";
  doc["algorithm"] = a.naive ? "naive" : "syncscan";
  doc["mode"] = mode;
  doc["min_sup"] = min_sup;
  doc["count"] = recs.size();
  doc["patterns"] = json::array();
  for (const auto& n : recs) doc["patterns"].push_back(record_json(db, n));
  doc["counters"] = mining_counters_json(result.counters);
  emit(doc.dump(2) + "\n", a.out, out);
  return kOk;
}

struct CompressArgs {
  std::string input, out, min_sup, delta, format = "json";
  bool baseline = false;
};

int cmd_compress(const CompressArgs& a, std::ostream& out) {
  const Count min_sup = require_min_sup(a.min_sup);
  const Rational delta = require_delta(a.delta);
  const SequenceDB db = read_input(a.input);

  const CompressionResult res =
      a.baseline ? baseline_compress(db, min_sup, delta) : crgsgrow(db, min_sup, delta);

  auto all = named(db, res.mining.frequent);
  for (auto& n : all) n.covered_by = res.covered_by(n.record->pattern);

  if (a.format == "csv") {
    emit(mining_csv(all, true, db), a.out, out);
    return kOk;
  }

  json doc;
  doc["command"] = "compress";
  doc["algorithm"] = a.baseline ? "baseline" : "crgsgrow";
  doc["min_sup"] = min_sup;
  doc["delta"] = delta.to_string();
  doc["frequent"] = res.mining.frequent.size();
  doc["closed"] = res.mining.closed().size();
  doc["dominate"] = res.dominate_set.size();

  std::map<Pattern, const CoverAssignment*> by_rep;
  for (const auto& asg : res.assignments) by_rep[asg.representative] = &asg;
  doc["representatives"] = json::array();
  for (const auto& n : named(db, res.representatives)) {
    json j = record_json(db, n);
    std::vector<std::vector<std::string>> covers;
    for (const auto& p : by_rep.at(n.record->pattern)->covered) covers.push_back(db.names_of(p));
    std::sort(covers.begin(), covers.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    j["covers"] = covers;
    doc["representatives"].push_back(std::move(j));
  }
  doc["patterns"] = json::array();
  for (const auto& n : all) doc["patterns"].push_back(record_json(db, n));
  doc["counters"] = mining_counters_json(res.mining.counters);
  doc["counters"]["distance_evals"] = res.counters.distance_evals;
  doc["counters"]["cover_checks"] = res.counters.cover_checks;
  emit(doc.dump(2) + "\n", a.out, out);
  return kOk;
}

struct GenArgs {
  std::uint64_t sequences = 0, avg_len = 0, items = 0, max_len = 0, seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  SequenceDB db = [&] {
    try {
      return generate_synthetic({a.sequences, a.avg_len, a.items, a.max_len, a.seed});
    } catch (const Error& e) {
      throw Failure{kInvalidValue, e.what()};
    }
  }();
  emit(write_db(db), a.out, out);
  return kOk;
}

struct BenchArgs {
  std::string input, out, delta, min_sup_list;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<Count> min_sups;
  {
    std::stringstream ss(a.min_sup_list);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty()) continue;
      min_sups.push_back(require_min_sup(item));
    }
  }
  if (min_sups.empty()) throw Failure{kBadFlags, "--min-sup-list is empty"};
  const Rational delta = require_delta(a.delta);
  const SequenceDB db = read_input(a.input);

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3)
      << std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return s.str();
  };

  std::string csv = "algo,min_sup,frequent,closed,dominate,representatives,support_scans,distance_evals,ms\n";
  auto row = [&](const char* algo, Count min_sup, std::size_t frequent, std::size_t closed,
                 std::size_t dominate, std::size_t reps, Count scans, Count evals,
                 const std::string& ms) {
    csv += std::string(algo) + "," + std::to_string(min_sup) + "," + std::to_string(frequent) +
           "," + std::to_string(closed) + "," + std::to_string(dominate) + "," +
           std::to_string(reps) + "," + std::to_string(scans) + "," + std::to_string(evals) +
           "," + ms + "\n";
  };
  for (Count min_sup : min_sups) {
    auto t0 = clock::now();
    MiningResult closed_run = mine_frequent(db, min_sup);
    const std::size_t n_closed = closed_patterns(closed_run).size();
    row("mine-closed", min_sup, closed_run.frequent.size(), n_closed, 0, n_closed,
        closed_run.counters.support_scans, 0, ms_since(t0));

    t0 = clock::now();
    const auto fast = crgsgrow(db, min_sup, delta);
    const std::string fast_ms = ms_since(t0);
    row("crgsgrow", min_sup, fast.mining.frequent.size(), fast.mining.closed().size(),
        fast.dominate_set.size(), fast.representatives.size(), fast.mining.counters.support_scans,
        fast.counters.distance_evals, fast_ms);

    t0 = clock::now();
    const auto base = baseline_compress(db, min_sup, delta);
    const std::string base_ms = ms_since(t0);
    row("baseline", min_sup, base.mining.frequent.size(), base.mining.closed().size(),
        base.dominate_set.size(), base.representatives.size(), base.mining.counters.support_scans,
        base.counters.distance_evals, base_ms);
  }
  emit(csv, a.out, out);
  return kOk;
}

struct OracleArgs {
  std::string input, out, min_sup;
  std::size_t cap = testkit::kDefaultLandmarkCap;
  std::size_t max_patterns = 200000;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Count min_sup = require_min_sup(a.min_sup);
  const SequenceDB db = read_input(a.input);
  testkit::OracleResult r;
  try {
    r = testkit::brute_force_frequent(db, min_sup, a.cap, a.max_patterns);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OracleTooLarge) throw Failure{kOracleLimit, e.what()};
    throw;
  }
  auto list = [&](const std::vector<PatternRecord>& recs) {
    json arr = json::array();
    for (const auto& n : named(db, recs)) {
      arr.push_back(json{{"pattern", n.tokens},
                         {"support", n.record->support},
                         {"per_seq", per_seq_json(n.record->per_seq)}});
    }
    return arr;
  };
  json doc;
  doc["command"] = "oracle";
  doc["min_sup"] = min_sup;
  doc["frequent"] = list(r.frequent);
  doc["closed"] = list(r.closed);
  doc["maximal"] = list(r.maximal);
  emit(doc.dump(2) + "\n", a.out, out);
  return kOk;
}

struct StatsArgs {
  std::string input, out;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const DBStats s = db_stats(read_input(a.input));
  json doc;
  doc["sequences"] = s.num_sequences;
  doc["items"] = s.num_items;
  doc["avg_len"] = s.avg_length.to_double();
  doc["max_len"] = s.max_length;
  emit(doc.dump() + "\n", a.out, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine and compress repetitive gapped sequential patterns", "crgs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent, closed or maximal patterns");
  mine_cmd->add_option("--input", mine.input, "Sequence database file")->required();
  mine_cmd->add_option("--min-sup", mine.min_sup, "Absolute support threshold")->required();
  auto* closed_flag = mine_cmd->add_flag("--closed", mine.closed, "Emit closed patterns only");
  mine_cmd->add_flag("--maximal", mine.maximal, "Emit maximal patterns only")->excludes(closed_flag);
  mine_cmd->add_option("--format", mine.format)->check(CLI::IsMember({"json", "csv"}));
  mine_cmd->add_option("--out", mine.out, "Output file (default stdout)");
  mine_cmd->add_flag("--naive", mine.naive, "Use the reference miner instead of SyncScan");
  mine_cmd->add_option("--threads", mine.threads, "Worker threads for --naive")
      ->check(CLI::Range(1u, 256u));

  CompressArgs comp;
  auto* comp_cmd = app.add_subcommand("compress", "Select delta-covering representative patterns");
  comp_cmd->add_option("--input", comp.input)->required();
  comp_cmd->add_option("--min-sup", comp.min_sup)->required();
  comp_cmd->add_option("--delta", comp.delta, "Distance threshold in [0,1]")->required();
  comp_cmd->add_flag("--baseline", comp.baseline, "Full cover matrix + greedy set cover");
  comp_cmd->add_option("--format", comp.format)->check(CLI::IsMember({"json", "csv"}));
  comp_cmd->add_option("--out", comp.out);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic database");
  gen_cmd->add_option("--sequences", gen.sequences, "D: number of sequences")->required();
  gen_cmd->add_option("--avg-len", gen.avg_len, "C: average sequence length")->required();
  gen_cmd->add_option("--items", gen.items, "N: number of distinct items")->required();
  gen_cmd->add_option("--max-len", gen.max_len, "S: maximum sequence length")->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--out", gen.out);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare mine-closed, crgsgrow and baseline");
  bench_cmd->add_option("--input", bench.input)->required();
  bench_cmd->add_option("--delta", bench.delta)->required();
  bench_cmd->add_option("--min-sup-list", bench.min_sup_list, "Comma-separated thresholds")
      ->required();
  bench_cmd->add_option("--out", bench.out);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth for small inputs");
  oracle_cmd->add_option("--input", oracle.input)->required();
  oracle_cmd->add_option("--min-sup", oracle.min_sup)->required();
  oracle_cmd->add_option("--cap", oracle.cap, "Landmark limit per pattern and sequence");
  oracle_cmd->add_option("--max-patterns", oracle.max_patterns, "Frequent pattern limit");
  oracle_cmd->add_option("--out", oracle.out);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Database statistics as JSON");
  stats_cmd->add_option("--input", stats.input)->required();
  stats_cmd->add_option("--out", stats.out);

  std::vector<std::string> argv_store{"crgs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "crgs: " << e.what() << "\n";
    return kBadFlags;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(mine, out);
    if (comp_cmd->parsed()) return cmd_compress(comp, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, out);
    if (stats_cmd->parsed()) return cmd_stats(stats, out);
  } catch (const Failure& f) {
    err << "crgs: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "crgs: " << to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::EmptyDatabase:
      case ErrorCode::IoError: return kIoError;
      case ErrorCode::InvalidMinSup:
      case ErrorCode::InvalidDelta:
      case ErrorCode::InvalidParams: return kInvalidValue;
      case ErrorCode::OracleTooLarge: return kOracleLimit;
      default: return 1;
    }
  }
  return kBadFlags;
}

}  // namespace crgs::cli
