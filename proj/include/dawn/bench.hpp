#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dawn/analysis.hpp"
#include "dawn/graph.hpp"
#include "dawn/sssp.hpp"

namespace dawn::bench {

struct BenchConfig {
  std::uint64_t source_count = 500;
  std::uint64_t runs_per_source = 64;
  std::uint64_t seed = 1;
  std::vector<unsigned> thread_counts{1};
  Variant variant = Variant::sovm;
  double trim_confidence = 0.95;

  /// Throws ConfigError when the config cannot run on a graph with `n` nodes.
  void validate(std::uint64_t n) const;
};

struct SourceSamples {
  NodeId source = 0;
  std::vector<double> raw;  ///< seconds per SSSP, one per run
  std::vector<double> retained;

  friend bool operator==(const SourceSamples&, const SourceSamples&) = default;
};

struct ThreadResult {
  unsigned threads = 1;
  /// Wall seconds for one pass over all sampled sources, one per run.
  std::vector<double> batch_raw;
  std::vector<double> batch_retained;
  double batch_mean_s = 0.0;  ///< T_N in the efficiency formula
  double mean_s = 0.0;        ///< trimmed mean seconds per single SSSP
  std::uint64_t samples_retained = 0;
  double efficiency = 1.0;
  std::vector<SourceSamples> per_source;

  friend bool operator==(const ThreadResult&, const ThreadResult&) = default;
};

struct BenchReport {
  std::string graph_name;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string variant = "sovm";
  std::uint64_t seed = 0;
  std::uint64_t runs_per_source = 0;
  double trim_confidence = 0.95;
  unsigned baseline_threads = 1;
  std::vector<NodeId> sources;
  std::vector<ThreadResult> threads;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// k distinct node ids drawn uniformly from [0, n), deterministic in `seed`.
/// `wcc` is accepted for interface symmetry but never filters the draw.
std::vector<NodeId> sample_sources(std::uint64_t n, std::uint64_t k, std::uint64_t seed,
                                   const WccSummary* wcc = nullptr);

/// Two-sided Student t critical value: P(|T| <= t) = confidence, df degrees
/// of freedom.
double t_critical(double confidence, std::uint64_t df);

/// Single-pass outlier trim. Each sample is tested against the mean and
/// standard deviation of the others with a Student t prediction interval;
/// samples outside it are dropped. Order of survivors is preserved.
/// Throws DomainError for fewer than 3 samples or confidence outside (0,1).
std::vector<double> trim_samples(const std::vector<double>& samples, double confidence);

double mean(const std::vector<double>& xs);

/// eta_t = T_B / (T_N * N / N_B) for every entry of `times` (threads -> T_N),
/// with the smallest thread count as the baseline B.
std::map<unsigned, double> efficiency(const std::map<unsigned, double>& times);

/// Measures solver time only; the graph is prebuilt by the caller.
BenchReport run_bench(const CsrGraph& graph, const BenchConfig& cfg,
                      std::string graph_name = "graph");

enum class ReportFormat { json, csv };

/// Throws DomainError for anything but "json" or "csv".
ReportFormat parse_report_format(std::string_view name);

std::string emit_report(const BenchReport& report, ReportFormat format);

/// Inverse of emit_report(..., json).
BenchReport parse_json_report(std::string_view text);

struct CsvRow {
  std::string graph;
  unsigned threads = 0;
  double mean_s = 0.0;
  std::uint64_t samples_retained = 0;
  double efficiency = 0.0;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "graph,threads,mean_s,samples_retained,efficiency";

std::vector<CsvRow> parse_csv_report(std::string_view text);

}  // namespace dawn::bench
