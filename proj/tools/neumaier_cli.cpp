// neumaier: analyze | generate | sweep | refute
//
// Exit codes: 0 success, 1 usage, 2 bad input (parse error or bad
// parameters), 3 internal consistency error, 4 sweep assertion failure.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "neumaier/neumaier.hpp"

namespace {

using namespace neumaier;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitSweepFailed = 4;

struct RunConfig {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json-lines";
  std::string theorems = "all";
  std::size_t n = 0;
  std::size_t workers = 1;
  double tol = kDefaultClusterTolerance;
  std::vector<std::string> family;
  double k = 0, theta = 0, theta2 = 0, e = 0;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::set<std::string> parse_theorems(const std::string& list) {
  const auto& known = theorem::all();
  if (list.empty() || list == "all") return {known.begin(), known.end()};
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    if (std::find(known.begin(), known.end(), id) == known.end()) throw BadInput("unknown theorem id '" + id + "'");
    out.insert(id);
  }
  return out;
}

// Owns an ifstream/ofstream when a path is given, else wraps stdin/stdout.
class Streams {
 public:
  explicit Streams(const RunConfig& cfg) {
    if (cfg.input != "-") {
      in_file_ = std::make_unique<std::ifstream>(cfg.input);
      if (!*in_file_) throw BadInput("cannot open input '" + cfg.input + "'");
    }
    if (cfg.output != "-") {
      out_file_ = std::make_unique<std::ofstream>(cfg.output);
      if (!*out_file_) throw BadInput("cannot open output '" + cfg.output + "'");
    }
  }
  std::istream& in() { return in_file_ ? *in_file_ : std::cin; }
  std::ostream& out() { return out_file_ ? *out_file_ : std::cout; }

 private:
  std::unique_ptr<std::ifstream> in_file_;
  std::unique_ptr<std::ofstream> out_file_;
};

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

struct Graph6Batch {
  std::vector<std::pair<std::size_t, Graph>> graphs;  // (line number, graph)
  std::optional<std::string> error;                   // first bad line; reading stops there
};

// Reads up to max_graphs graph6 lines, skipping blanks.
Graph6Batch read_graph6_lines(std::istream& in, std::size_t max_graphs, std::size_t& line_no) {
  Graph6Batch out;
  std::string line;
  while (out.graphs.size() < max_graphs && std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      out.graphs.emplace_back(line_no, decode_graph6(line));
    } catch (const ParseError& err) {
      out.error = "line " + std::to_string(line_no) + ": " + err.what();
      break;
    }
  }
  return out;
}

template <class F>
void parallel_for(std::size_t count, std::size_t workers, F&& f) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
  };
  if (workers <= 1 || count <= 1) {
    body();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
}

int cmd_analyze(const RunConfig& cfg) {
  if (cfg.format != "json-lines" && cfg.format != "csv" && cfg.format != "human")
    throw BadInput("analyze format must be json-lines, csv or human");
  ClassifyOptions opts;
  opts.cluster_tolerance = cfg.tol;
  opts.theorems = parse_theorems(cfg.theorems);
  Streams io(cfg);
  if (cfg.format == "csv") io.out() << csv_header() << "\n";

  constexpr std::size_t kBatch = 256;
  std::size_t line_no = 0;
  int status = kExitOk;
  for (;;) {
    // Graphs read before a bad line are still reported.
    const Graph6Batch read = read_graph6_lines(io.in(), kBatch, line_no);
    const auto& batch = read.graphs;
    std::vector<std::string> records(batch.size()), errors(batch.size());
    std::vector<bool> violated(batch.size(), false);
    parallel_for(batch.size(), cfg.workers, [&](std::size_t i) {
      const auto& [ln, g] = batch[i];
      const std::string g6 = encode_graph6(g);
      try {
        const ClassReport r = classify(g, opts);
        for (const auto& [id, t] : r.theorems)
          if (t.verdict == Verdict::Violated) violated[i] = true;
        if (cfg.format == "csv")
          records[i] = csv_row(r) + "\n";
        else if (cfg.format == "human")
          records[i] = human_report(r, g6);
        else
          records[i] = to_json(r, g6).dump() + "\n";
      } catch (const std::exception& err) {
        errors[i] = "line " + std::to_string(ln) + ": " + err.what();
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!errors[i].empty()) {
        std::cerr << "consistency error: " << errors[i] << "\n";
        return kExitConsistency;
      }
      io.out() << records[i];
      if (violated[i]) {
        std::cerr << "consistency error: line " << batch[i].first << ": theorem check violated\n";
        status = kExitConsistency;
      }
    }
    if (read.error) {
      io.out().flush();
      std::cerr << "parse error: " << *read.error << "\n";
      return kExitBadInput;
    }
    if (batch.size() < kBatch) break;
  }
  return status;
}

Graph generate_family(const std::vector<std::string>& args) {
  if (args.empty()) throw BadInput("generate needs a family: rook|johnson2|multipartite|complete|cycle|petersen");
  auto num = [&](std::size_t i) -> std::size_t {
    if (i >= args.size()) throw BadInput("family '" + args[0] + "' needs " + std::to_string(i) + " parameter(s)");
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(args[i], &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != args[i].size() || v < 0) throw BadInput("parameter '" + args[i] + "' is not a non-negative integer");
    return static_cast<std::size_t>(v);
  };
  const std::string& f = args[0];
  std::size_t expected = 2;
  Graph g;
  if (f == "rook") {
    g = generate(family::Rook{num(1)});
  } else if (f == "johnson2") {
    g = generate(family::Johnson2{num(1)});
  } else if (f == "multipartite") {
    g = generate(family::CompleteMultipartite{num(1), num(2)});
    expected = 3;
  } else if (f == "complete") {
    g = generate(family::Complete{num(1)});
  } else if (f == "cycle") {
    g = generate(family::Cycle{num(1)});
  } else if (f == "petersen") {
    g = generate(family::Petersen{});
    expected = 1;
  } else {
    throw BadInput("unknown family '" + f + "'");
  }
  if (args.size() != expected) throw BadInput("family '" + f + "' takes " + std::to_string(expected - 1) + " parameter(s)");
  return g;
}

int cmd_generate(const RunConfig& cfg) {
  Graph g;
  try {
    g = generate_family(cfg.family);
  } catch (const ArgumentError& err) {
    throw BadInput(err.what());
  }
  std::string g6;
  try {
    g6 = encode_graph6(g);
  } catch (const UnsupportedSizeError& err) {
    throw BadInput(err.what());
  }
  Streams io(cfg);
  io.out() << g6 << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "json-lines" && cfg.format != "human")
    throw BadInput("sweep format must be json or human");
  SweepOptions opts;
  opts.workers = cfg.workers;
  opts.cluster_tolerance = cfg.tol;
  opts.theorems = parse_theorems(cfg.theorems);
  SweepReport rep;
  const bool from_corpus = cfg.n == 0;
  if (from_corpus) {
    RunConfig in_cfg;
    in_cfg.input = cfg.input;
    Streams in(in_cfg);
    std::size_t line_no = 0;
    const Graph6Batch read = read_graph6_lines(in.in(), static_cast<std::size_t>(-1), line_no);
    if (read.error) throw BadInput(*read.error);
    std::vector<Graph> graphs;
    for (const auto& [ln, g] : read.graphs) graphs.push_back(g);
    opts.strict_is_failure = false;
    rep = sweep_corpus(graphs, opts);
  } else {
    if (cfg.n > kMaxEnumerationOrder) throw BadInput("sweep --n must be at most 8");
    rep = sweep_enumerated(cfg.n, opts);
  }
  RunConfig out_cfg;
  out_cfg.output = cfg.output;
  Streams io(out_cfg);
  if (cfg.format == "human")
    io.out() << human_report(rep);
  else
    io.out() << to_json(rep).dump() << "\n";
  if (!rep.ok()) {
    std::cerr << "sweep failed: " << rep.failures << " graph(s) broke an assertion\n";
    for (const auto& w : rep.witnesses) std::cerr << "  " << w.graph6 << "  " << w.reason << "\n";
    return kExitSweepFailed;
  }
  return kExitOk;
}

int cmd_refute(const RunConfig& cfg) {
  FourEvRefutation r;
  try {
    r = refute_four_eigenvalues(cfg.k, cfg.theta, cfg.theta2, cfg.e);
  } catch (const ArgumentError& err) {
    throw BadInput(err.what());
  }
  RunConfig out_cfg;
  out_cfg.output = cfg.output;
  Streams io(out_cfg);
  if (cfg.format == "human")
    io.out() << human_report(r);
  else
    io.out() << to_json(r).dump() << "\n";
  return r.contradiction ? kExitOk : kExitConsistency;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool io_input, bool theorems) {
  if (io_input)
    sub->add_option("--input", cfg.input, "graph6 input file, one graph per line ('-' for stdin)")
        ->envname("NEUMAIER_INPUT");
  sub->add_option("--output", cfg.output, "output file ('-' for stdout)")->envname("NEUMAIER_OUTPUT");
  sub->add_option("--format", cfg.format, "json-lines | csv | human (sweep and refute: json | human)")
      ->envname("NEUMAIER_FORMAT");
  if (theorems) {
    sub->add_option("--workers", cfg.workers, "worker threads")
        ->envname("NEUMAIER_WORKERS")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    sub->add_option("--tol", cfg.tol, "eigenvalue clustering tolerance")
        ->envname("NEUMAIER_TOL")
        ->check(CLI::PositiveNumber);
    sub->add_option("--theorems", cfg.theorems, "comma-separated theorem ids, or 'all'")
        ->envname("NEUMAIER_THEOREMS");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumaier graph classification and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "classify each graph6 line");
  add_common(analyze, cfg, true, true);

  auto* gen = app.add_subcommand("generate", "emit graph6 for a named family");
  gen->add_option("family", cfg.family, "rook N | johnson2 N | multipartite P M | complete N | cycle N | petersen")
      ->required();
  add_common(gen, cfg, false, false);

  auto* sweep = app.add_subcommand("sweep", "verify every theorem over all graphs on n vertices or a corpus");
  sweep->add_option("--n", cfg.n, "enumerate all labeled graphs on n vertices (n <= 8)")->envname("NEUMAIER_N");
  add_common(sweep, cfg, true, true);

  auto* refute = app.add_subcommand("refute", "four-eigenvalue refutation for a parameter tuple");
  refute->add_option("--k", cfg.k, "valency")->required();
  refute->add_option("--theta", cfg.theta, "eigenvalue s - e")->required();
  refute->add_option("--theta2", cfg.theta2, "smallest eigenvalue")->required();
  refute->add_option("--e", cfg.e, "nexus")->required();
  add_common(refute, cfg, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 1;  // --help exits 0, any usage error 1
  }
  // Defaults differ by subcommand when no format was given.
  const bool format_given = (app.got_subcommand(analyze) && analyze->count("--format")) ||
                            (app.got_subcommand(sweep) && sweep->count("--format")) ||
                            (app.got_subcommand(refute) && refute->count("--format")) ||
                            std::getenv("NEUMAIER_FORMAT");
  if (!format_given) {
    if (app.got_subcommand(sweep)) cfg.format = "human";
    if (app.got_subcommand(refute)) cfg.format = "human";
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
    if (app.got_subcommand(gen)) return cmd_generate(cfg);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg);
    if (app.got_subcommand(refute)) return cmd_refute(cfg);
  } catch (const BadInput& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const ConsistencyError& err) {
    std::cerr << "consistency error: " << err.what() << "\n";
    return kExitConsistency;
  } catch (const SpectralResolutionError& err) {
    std::cerr << "consistency error: " << err.what() << "\n";
    return kExitConsistency;
  }
  return 1;
}
