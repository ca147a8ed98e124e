#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "dawn/analysis.hpp"
#include "dawn/bench.hpp"
#include "dawn/error.hpp"
#include "dawn/io.hpp"
#include "dawn/verify.hpp"

namespace dawn::cli {

namespace {

struct Options {
  std::string graph;
  std::string output;
  std::string input_format;
  std::string variant = "auto";
  std::string unreached = "omit";
  std::string format = "json";
  std::string name;
  std::int64_t source = -1;
  std::vector<unsigned> threads{1};
  std::uint64_t sources = 0;
  std::uint64_t runs = 64;
  std::uint64_t seed = 1;
  double confidence = 0.95;
  std::optional<std::int64_t> eccentricity_node;
  std::optional<std::uint64_t> diameter_sample;
};

std::optional<InputFormat> input_format(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "mtx") return InputFormat::matrix_market;
  if (name == "edgelist") return InputFormat::edge_list;
  return InputFormat::binary_cache;
}

// Writes to --output when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot open " + path + " for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

NodeId checked_node(std::int64_t id, std::uint64_t n, const char* what) {
  if (id < 0 || static_cast<std::uint64_t>(id) >= n) {
    throw ConfigError(std::string(what) + " " + std::to_string(id) + " outside [0," +
                      std::to_string(n) + ")");
  }
  return static_cast<NodeId>(id);
}

void print_memory(std::ostream& os, const CsrGraph& g) {
  const auto mm = memory_model(std::max<std::uint64_t>(g.n(), 1), g.m());
  os << "dawn_bytes: " << mm.dawn_bytes << "\n"
     << "bfs_bytes: " << mm.bfs_bytes << "\n"
     << "eta: " << mm.eta << "\n";
}

int cmd_convert(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph, input_format(o.input_format));
  save_csr_cache(g, o.output);
  out << "n: " << g.n() << "\n"
      << "m: " << g.m() << "\n";
  print_memory(out, g);
  return kOk;
}

void write_distance_row(std::ostream& os, const SsspResult& r, NodeId v, bool with_source,
                        bool mark_inf) {
  if (v == r.source) return;
  if (!r.is_reached(v) && !mark_inf) return;
  if (with_source) os << r.source << ',';
  os << v << ',';
  if (r.is_reached(v)) {
    os << r.distance[v];
  } else {
    os << "inf";
  }
  os << '\n';
}

int cmd_sssp(const Options& o, std::ostream& out, std::ostream& err) {
  const auto variant = parse_variant(o.variant);
  auto g = load_graph(o.graph, input_format(o.input_format));
  const auto source = checked_node(o.source, g.n(), "source");
  std::optional<CscGraph> csc;
  if (variant == Variant::bovm) csc = transpose(g);
  const auto res = sssp(g, csc ? &*csc : nullptr, source, variant);

  Sink sink(o.output, out);
  *sink << "node,distance\n";
  for (NodeId v = 0; v < g.n(); ++v) write_distance_row(*sink, res, v, false, o.unreached == "inf");
  err << "iterations: " << res.iterations << "\n"
      << "edge_inspections: " << res.edge_inspections << "\n"
      << "reached: " << res.reached << "\n";
  return kOk;
}

int cmd_apsp(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, input_format(o.input_format));
  Sink sink(o.output, out);
  *sink << "source,node,distance\n";
  // Sources are solved in fixed-size chunks and written in id order.
  constexpr std::uint64_t kChunk = 256;
  std::uint64_t inspections = 0;
  std::vector<NodeId> chunk;
  for (std::uint64_t first = 0; first < g.n(); first += kChunk) {
    chunk.clear();
    for (auto s = first; s < std::min(g.n(), first + kChunk); ++s) {
      chunk.push_back(static_cast<NodeId>(s));
    }
    for (const auto& r : msssp(g, chunk, o.threads.front())) {
      inspections += r.edge_inspections;
      for (NodeId v = 0; v < g.n(); ++v) {
        write_distance_row(*sink, r, v, true, o.unreached == "inf");
      }
    }
  }
  const auto wcc = weakly_connected_components(g);
  err << "edge_inspections: " << inspections << "\n"
      << "s_wcc_times_e_wcc: " << wcc.s_wcc * wcc.e_wcc << "\n";
  return kOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph, input_format(o.input_format));
  if (o.eccentricity_node) checked_node(*o.eccentricity_node, g.n(), "node");
  if (o.diameter_sample && *o.diameter_sample > g.n()) {
    throw ConfigError("diameter sample exceeds node count");
  }
  const auto wcc = weakly_connected_components(g);
  const auto deg = degree_stats(g);
  out << "n: " << g.n() << "\n"
      << "m: " << g.m() << "\n"
      << "components: " << wcc.component_count() << "\n"
      << "s_wcc: " << wcc.s_wcc << "\n"
      << "e_wcc: " << wcc.e_wcc << "\n"
      << "max_out_degree: " << deg.max_out << "\n"
      << "max_in_degree: " << deg.max_in << "\n"
      << "avg_degree: " << deg.avg << "\n";
  if (g.n() > 0) print_memory(out, g);
  if (o.eccentricity_node) {
    const auto v = static_cast<NodeId>(*o.eccentricity_node);
    out << "eccentricity(" << v << "): " << eccentricity(g, v) << "\n";
  }
  if (o.diameter_sample) {
    std::uint32_t best = 0;
    for (auto s : bench::sample_sources(g.n(), *o.diameter_sample, o.seed)) {
      best = std::max(best, eccentricity(g, s));
    }
    out << "max_eccentricity_lower_bound: " << best << " (from " << *o.diameter_sample
        << " sampled sources)\n";
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  bench::BenchConfig cfg;
  cfg.runs_per_source = o.runs;
  cfg.seed = o.seed;
  cfg.thread_counts = o.threads;
  cfg.variant = parse_variant(o.variant);
  cfg.trim_confidence = o.confidence;
  const auto format = bench::parse_report_format(o.format);
  auto g = load_graph(o.graph, input_format(o.input_format));
  cfg.source_count = o.sources == 0 ? std::min<std::uint64_t>(500, g.n()) : o.sources;
  cfg.validate(g.n());

  const auto name = o.name.empty() ? std::filesystem::path(o.graph).stem().string() : o.name;
  const auto report = bench::run_bench(g, cfg, name);
  Sink sink(o.output, out);
  *sink << bench::emit_report(report, format);
  for (const auto& t : report.threads) {
    err << "threads " << t.threads << ": " << t.batch_mean_s << " s per batch, efficiency "
        << t.efficiency << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  auto g = load_graph(o.graph, input_format(o.input_format));
  VerifyOptions vo;
  if (o.sources > 0) vo.sample = o.sources;
  vo.seed = o.seed;
  vo.tamper = hooks.verify_tamper;
  const auto report = verify_graph(g, vo);
  out << "sources: " << report.sources.size() << " (seed " << report.seed << ")\n";
  for (const auto& c : report.checks) {
    out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << " passed=" << c.passed
        << " failed=" << c.failed << "\n";
  }
  if (const auto& f = report.first_failure) {
    err << "first counterexample: check=" << f->check << " seed=" << report.seed
        << " source=" << f->source;
    if (f->node) err << " node=" << *f->node;
    err << " (" << f->detail << ")\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Unweighted shortest paths with Boolean vector-matrix frontier solvers", "dawn"};
  app.require_subcommand(1, 1);
  Options o;

  const auto variants = CLI::IsMember({"bovm", "sovm", "auto"});
  const auto input_formats = CLI::IsMember({"mtx", "edgelist", "bin"});
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Graph file (.mtx, edge list or binary cache)")
        ->required();
    sub->add_option("--input-format", o.input_format, "Override input format sniffing")
        ->check(input_formats);
  };

  auto* convert = app.add_subcommand("convert", "Write a binary CSR cache");
  add_graph(convert);
  convert->add_option("--output,-o", o.output, "Cache path")->required();

  auto* sssp_cmd = app.add_subcommand("sssp", "Distances from one source as CSV");
  add_graph(sssp_cmd);
  sssp_cmd->add_option("--source", o.source, "Source node")->required();
  sssp_cmd->add_option("--variant", o.variant)->check(variants);
  sssp_cmd->add_option("--unreached", o.unreached, "omit or inf")
      ->check(CLI::IsMember({"omit", "inf"}));
  sssp_cmd->add_option("--output,-o", o.output);

  auto* apsp_cmd = app.add_subcommand("apsp", "All-pairs distances as CSV");
  add_graph(apsp_cmd);
  apsp_cmd->add_option("--threads", o.threads)->delimiter(',')->check(CLI::PositiveNumber);
  apsp_cmd->add_option("--unreached", o.unreached)->check(CLI::IsMember({"omit", "inf"}));
  apsp_cmd->add_option("--output,-o", o.output);

  auto* stats = app.add_subcommand("stats", "Structural statistics");
  add_graph(stats);
  stats->add_option("--eccentricity", o.eccentricity_node, "Print eccentricity of NODE");
  stats->add_option("--diameter-sample", o.diameter_sample,
                    "Lower-bound the max eccentricity from K random sources");
  stats->add_option("--seed", o.seed);

  auto* bench_cmd = app.add_subcommand("bench", "Timing harness");
  add_graph(bench_cmd);
  bench_cmd->add_option("--sources", o.sources, "Random sources (default min(500,n))");
  bench_cmd->add_option("--runs", o.runs, "Runs per source")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", o.threads, "Thread ladder, e.g. 1,2,4")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", o.seed);
  bench_cmd->add_option("--variant", o.variant)->check(variants);
  bench_cmd->add_option("--confidence", o.confidence, "Trim confidence")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("--name", o.name, "Graph label in the report");
  bench_cmd->add_option("--output,-o", o.output);

  auto* verify = app.add_subcommand("verify", "Cross-check solvers against the oracles");
  add_graph(verify);
  verify->add_option("--sources", o.sources, "Sampled sources (default all when small)");
  verify->add_option("--seed", o.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dawn: " << e.what() << "\n";
    return kUsage;
  }

  if (!std::is_sorted(o.threads.begin(), o.threads.end())) {
    err << "dawn: --threads must be ascending\n";
    return kUsage;
  }

  try {
    if (*convert) return cmd_convert(o, out);
    if (*sssp_cmd) return cmd_sssp(o, out, err);
    if (*apsp_cmd) return cmd_apsp(o, out, err);
    if (*stats) return cmd_stats(o, out);
    if (*bench_cmd) return cmd_bench(o, out, err);
    return cmd_verify(o, out, err, hooks);
  } catch (const ConfigError& e) {
    err << "dawn: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "dawn: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "dawn: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace dawn::cli
