#include "dawn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include <boost/math/distributions/students_t.hpp>

#include "dawn/error.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace dawn::bench {

using nlohmann::json;
using nlohmann::ordered_json;

void BenchConfig::validate(std::uint64_t n) const {
  if (source_count == 0) throw ConfigError("source count must be positive");
  if (source_count > n) {
    throw ConfigError("source count " + std::to_string(source_count) + " exceeds node count " +
                      std::to_string(n));
  }
  if (runs_per_source < 1) throw ConfigError("runs per source must be at least 1");
  if (thread_counts.empty()) throw ConfigError("thread ladder is empty");
  if (!std::is_sorted(thread_counts.begin(), thread_counts.end()) ||
      std::adjacent_find(thread_counts.begin(), thread_counts.end()) != thread_counts.end() ||
      thread_counts.front() == 0) {
    throw ConfigError("thread counts must be positive, distinct and ascending");
  }
  if (!(trim_confidence > 0.0 && trim_confidence < 1.0)) {
    throw ConfigError("trim confidence must lie in (0,1)");
  }
}

std::vector<NodeId> sample_sources(std::uint64_t n, std::uint64_t k, std::uint64_t seed,
                                   const WccSummary* /*wcc*/) {
  if (k > n) {
    throw DomainError("cannot draw " + std::to_string(k) + " distinct sources from " +
                      std::to_string(n) + " nodes");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> out;
  out.reserve(k);
  if (4 * k >= n) {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    std::shuffle(all.begin(), all.end(), rng);
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }
  // Floyd's sampling: k draws, no rejection loop.
  std::unordered_set<NodeId> chosen;
  for (auto j = n - k; j < n; ++j) {
    const auto t = static_cast<NodeId>(std::uniform_int_distribution<std::uint64_t>(0, j)(rng));
    const auto pick = chosen.insert(t).second ? t : static_cast<NodeId>(j);
    if (pick != t) chosen.insert(pick);
    out.push_back(pick);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

double t_critical(double confidence, std::uint64_t df) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw DomainError("confidence outside (0,1)");
  if (df == 0) throw DomainError("t distribution needs df >= 1");
  boost::math::students_t dist(static_cast<double>(df));
  return boost::math::quantile(dist, 1.0 - (1.0 - confidence) / 2.0);
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::vector<double> trim_samples(const std::vector<double>& samples, double confidence) {
  const auto len = samples.size();
  if (len < 3) throw DomainError("trimming needs at least 3 samples");
  if (std::all_of(samples.begin(), samples.end(),
                  [&](double x) { return x == samples.front(); })) {
    return samples;
  }
  const double t = t_critical(confidence, len - 2);
  const double others = static_cast<double>(len - 1);
  const double total = std::accumulate(samples.begin(), samples.end(), 0.0);

  std::vector<double> kept;
  kept.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double m = (total - samples[i]) / others;
    double ss = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      if (k != i) ss += (samples[k] - m) * (samples[k] - m);
    }
    const double sd = std::sqrt(ss / (others - 1.0));
    const double dev = std::abs(samples[i] - m);
    const bool outlier = sd == 0.0 ? dev > 0.0 : dev > t * sd * std::sqrt(1.0 + 1.0 / others);
    if (!outlier) kept.push_back(samples[i]);
  }
  return kept;
}

std::map<unsigned, double> efficiency(const std::map<unsigned, double>& times) {
  std::map<unsigned, double> out;
  if (times.empty()) return out;
  const auto [base_threads, base_time] = *times.begin();
  for (const auto& [threads, time] : times) {
    if (!(time > 0.0)) throw DomainError("timings must be positive");
    if (threads == base_threads) {
      out[threads] = 1.0;
      continue;
    }
    const double scale = static_cast<double>(threads) / static_cast<double>(base_threads);
    out[threads] = base_time / (time * scale);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
static_assert(Clock::is_steady);

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> retain(const std::vector<double>& raw, double confidence) {
  return raw.size() < 3 ? raw : trim_samples(raw, confidence);
}

}  // namespace

BenchReport run_bench(const CsrGraph& graph, const BenchConfig& cfg, std::string graph_name) {
  cfg.validate(graph.n());
  BenchReport report;
  report.graph_name = std::move(graph_name);
  report.n = graph.n();
  report.m = graph.m();
  report.variant = std::string(to_string(cfg.variant));
  report.seed = cfg.seed;
  report.runs_per_source = cfg.runs_per_source;
  report.trim_confidence = cfg.trim_confidence;
  report.baseline_threads = cfg.thread_counts.front();
  report.sources = sample_sources(graph.n(), cfg.source_count, cfg.seed);

  std::optional<CscGraph> csc;
  if (cfg.variant == Variant::bovm) csc = transpose(graph);
  const CscGraph* csc_ptr = csc ? &*csc : nullptr;
  const auto& sources = report.sources;

  std::map<unsigned, double> batch_means;
  for (auto threads : cfg.thread_counts) {
    ThreadResult tr;
    tr.threads = threads;
    tr.per_source.resize(sources.size());
    for (std::size_t k = 0; k < sources.size(); ++k) {
      tr.per_source[k].source = sources[k];
      tr.per_source[k].raw.resize(cfg.runs_per_source);
    }
    for (std::uint64_t run = 0; run < cfg.runs_per_source; ++run) {
      const auto batch_start = Clock::now();
      // A fresh worker set per batch; parallel_for joins before returning.
      detail::parallel_for(sources.size(), threads, [&](std::uint64_t k) {
        const auto start = Clock::now();
        auto res = sssp(graph, csc_ptr, sources[k], cfg.variant);
        tr.per_source[k].raw[run] = seconds_since(start);
        (void)res;
      });
      tr.batch_raw.push_back(seconds_since(batch_start));
    }

    std::vector<double> per_source_means;
    per_source_means.reserve(sources.size());
    for (auto& ss : tr.per_source) {
      ss.retained = retain(ss.raw, cfg.trim_confidence);
      tr.samples_retained += ss.retained.size();
      per_source_means.push_back(mean(ss.retained));
    }
    tr.mean_s = mean(per_source_means);
    tr.batch_retained = retain(tr.batch_raw, cfg.trim_confidence);
    tr.batch_mean_s = mean(tr.batch_retained);
    batch_means[threads] = std::max(tr.batch_mean_s, 1e-12);
    report.threads.push_back(std::move(tr));
  }

  const auto eff = efficiency(batch_means);
  for (auto& tr : report.threads) tr.efficiency = eff.at(tr.threads);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

namespace {

ordered_json to_json(const BenchReport& r) {
  ordered_json threads = ordered_json::array();
  for (const auto& t : r.threads) {
    ordered_json per_source = ordered_json::array();
    for (const auto& s : t.per_source) {
      per_source.push_back(ordered_json{{"source", s.source}, {"raw", s.raw}, {"retained", s.retained}});
    }
    threads.push_back(ordered_json{{"threads", t.threads},
                       {"mean_s", t.mean_s},
                       {"batch_mean_s", t.batch_mean_s},
                       {"samples_retained", t.samples_retained},
                       {"efficiency", t.efficiency},
                       {"batch_raw", t.batch_raw},
                       {"batch_retained", t.batch_retained},
                       {"per_source", per_source}});
  }
  ordered_json out;
  out["graph"] = r.graph_name;
  out["n"] = r.n;
  out["m"] = r.m;
  out["variant"] = r.variant;
  out["seed"] = r.seed;
  out["runs_per_source"] = r.runs_per_source;
  out["trim_confidence"] = r.trim_confidence;
  out["baseline_threads"] = r.baseline_threads;
  out["sources"] = r.sources;
  out["threads"] = threads;
  return out;
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

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(report).dump(2) + "\n";
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& t : report.threads) {
    out += csv_field(report.graph_name) + ',' + std::to_string(t.threads) + ',' +
           format_double(t.mean_s) + ',' + std::to_string(t.samples_retained) + ',' +
           format_double(t.efficiency) + '\n';
  }
  return out;
}

BenchReport parse_json_report(std::string_view text) {
  const auto j = json::parse(text);
  BenchReport r;
  r.graph_name = j.at("graph").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.m = j.at("m").get<std::uint64_t>();
  r.variant = j.at("variant").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.runs_per_source = j.at("runs_per_source").get<std::uint64_t>();
  r.trim_confidence = j.at("trim_confidence").get<double>();
  r.baseline_threads = j.at("baseline_threads").get<unsigned>();
  r.sources = j.at("sources").get<std::vector<NodeId>>();
  for (const auto& jt : j.at("threads")) {
    ThreadResult t;
    t.threads = jt.at("threads").get<unsigned>();
    t.mean_s = jt.at("mean_s").get<double>();
    t.batch_mean_s = jt.at("batch_mean_s").get<double>();
    t.samples_retained = jt.at("samples_retained").get<std::uint64_t>();
    t.efficiency = jt.at("efficiency").get<double>();
    t.batch_raw = jt.at("batch_raw").get<std::vector<double>>();
    t.batch_retained = jt.at("batch_retained").get<std::vector<double>>();
    for (const auto& js : jt.at("per_source")) {
      t.per_source.push_back({js.at("source").get<NodeId>(),
                              js.at("raw").get<std::vector<double>>(),
                              js.at("retained").get<std::vector<double>>()});
    }
    r.threads.push_back(std::move(t));
  }
  return r;
}

std::vector<CsvRow> parse_csv_report(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw FormatError("CSV report header mismatch");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 5) throw FormatError("CSV report row has " + std::to_string(f.size()) + " fields");
    rows.push_back({f[0], static_cast<unsigned>(std::stoul(f[1])), std::stod(f[2]),
                    std::stoull(f[3]), std::stod(f[4])});
  }
  return rows;
}

}  // namespace dawn::bench
