#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "corpus.hpp"
#include "dawn/bench.hpp"
#include "dawn/generate.hpp"
#include "dawn/io.hpp"
#include "dawn/oracle.hpp"
#include "json.hpp"

namespace dawn::cli {
namespace {

using testing::write_temp;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const Hooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::string path_mtx() {
  return write_temp("path4.mtx",
                    "%%MatrixMarket matrix coordinate pattern general\n4 4 3\n1 2\n2 3\n3 4\n")
      .string();
}

std::string two_component_edges() { return write_temp("two.el", "0 1\n1 2\n3 4\n").string(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, ConvertWritesCache) {
  const auto out = std::filesystem::temp_directory_path() / "dawn_tests" / "path4.bin";
  std::filesystem::remove(out);
  auto r = invoke({"convert", path_mtx(), "--output", out.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_NE(r.out.find("n: 4"), std::string::npos);
  EXPECT_NE(r.out.find("eta: "), std::string::npos);
  EXPECT_EQ(load_graph(out), load_graph(path_mtx()));
}

TEST(Cli, ConvertRejectsMalformedBanner) {
  auto bad = write_temp("bad.mtx", "%%MatrixMarket matrix\n1 1 0\n");
  auto r = invoke({"convert", bad.string(), "--output", "/tmp/dawn_tests/never.bin"});
  EXPECT_EQ(r.code, kInput);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SsspOnPath) {
  auto r = invoke({"sssp", path_mtx(), "--source", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "node,distance\n1,1\n2,2\n3,3\n");
  EXPECT_NE(r.err.find("iterations: 3"), std::string::npos);
  EXPECT_NE(r.err.find("edge_inspections: 3"), std::string::npos);
}

TEST(Cli, SsspUnreachableOnlySource) {
  auto r = invoke({"sssp", path_mtx(), "--source", "3"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "node,distance\n");
  auto inf = invoke({"sssp", path_mtx(), "--source", "3", "--unreached", "inf"});
  EXPECT_EQ(inf.out, "node,distance\n0,inf\n1,inf\n2,inf\n");
}

TEST(Cli, SsspBadSourceAndBadFlags) {
  EXPECT_NE(invoke({"sssp", path_mtx(), "--source", "4"}).code, kOk);
  EXPECT_EQ(invoke({"sssp", path_mtx(), "--source", "0", "--variant", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({"sssp", path_mtx()}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  // Flag validation happens before the (missing) file is touched.
  EXPECT_EQ(invoke({"sssp", "/nonexistent", "--source", "0", "--variant", "x"}).code, kUsage);
}

TEST(Cli, SsspCsvMatchesOracle) {
  auto g = gen::erdos_renyi(90, 0.04, 12);
  const auto cache = std::filesystem::temp_directory_path() / "dawn_tests" / "er90.bin";
  save_csr_cache(g, cache);
  for (NodeId s : {0U, 17U, 89U}) {
    for (const char* variant : {"sovm", "bovm", "auto"}) {
      auto r = invoke({"sssp", cache.string(), "--source", std::to_string(s), "--variant", variant});
      ASSERT_EQ(r.code, kOk);
      auto t = oracle::bfs_baseline(g, s);
      std::string want = "node,distance\n";
      for (NodeId v = 0; v < g.n(); ++v) {
        if (v != s && t.distance[v] != 0) {
          want += std::to_string(v) + "," + std::to_string(t.distance[v]) + "\n";
        }
      }
      EXPECT_EQ(r.out, want) << variant << " source " << s;
    }
  }
}

TEST(Cli, ApspOnCycle) {
  auto cyc = write_temp("cycle3.el", "0 1\n1 2\n2 0\n");
  auto r = invoke({"apsp", cyc.string(), "--threads", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "source,node,distance\n0,1,1\n0,2,2\n1,0,2\n1,2,1\n2,0,1\n2,1,2\n");
}

TEST(Cli, StatsTwoComponents) {
  auto r = invoke({"stats", two_component_edges()});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("s_wcc: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("e_wcc: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("components: 2\n"), std::string::npos);
}

TEST(Cli, StatsEccentricity) {
  auto cyc = write_temp("cycle3b.el", "0 1\n1 2\n2 0\n");
  auto r = invoke({"stats", cyc.string(), "--eccentricity", "0"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("eccentricity(0): 2\n"), std::string::npos);
  EXPECT_EQ(invoke({"stats", cyc.string(), "--eccentricity", "3"}).code, kUsage);
}

TEST(Cli, DiameterSampleWithAllNodesIsExact) {
  auto g = gen::erdos_renyi(60, 0.05, 8);
  const auto cache = std::filesystem::temp_directory_path() / "dawn_tests" / "er60.bin";
  save_csr_cache(g, cache);
  std::uint32_t exact = 0;
  for (NodeId s = 0; s < g.n(); ++s) {
    const auto t = oracle::bfs_baseline(g, s);
    exact = std::max(exact, *std::max_element(t.distance.begin(), t.distance.end()));
  }
  auto r = invoke({"stats", cache.string(), "--diameter-sample", "60"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("max_eccentricity_lower_bound: " + std::to_string(exact) + " "),
            std::string::npos)
      << r.out;
}

TEST(Cli, BenchJsonReport) {
  auto r = invoke({"bench", two_component_edges(), "--sources", "4", "--runs", "2", "--threads",
                   "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("sources").size(), 4U);
  EXPECT_EQ(j.at("threads").at(0).at("efficiency").get<double>(), 1.0);
  EXPECT_NO_THROW(bench::parse_json_report(r.out));
}

TEST(Cli, BenchCsvToFile) {
  const auto out = std::filesystem::temp_directory_path() / "dawn_tests" / "bench.csv";
  auto r = invoke({"bench", two_component_edges(), "--sources", "3", "--runs", "3", "--threads",
                   "1,2", "--format", "csv", "--output", out.string(), "--name", "two"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto rows = bench::parse_csv_report(slurp(out));
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].graph, "two");
  EXPECT_EQ(rows[1].threads, 2U);
}

TEST(Cli, BenchConfigErrors) {
  EXPECT_EQ(invoke({"bench", two_component_edges(), "--sources", "6"}).code, kUsage);
  EXPECT_EQ(invoke({"bench", two_component_edges(), "--threads", "4,2"}).code, kUsage);
  EXPECT_EQ(invoke({"bench", two_component_edges(), "--runs", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"bench", two_component_edges(), "--format", "xml"}).code, kUsage);
}

TEST(Cli, BenchSameSeedSameSources) {
  auto g = gen::erdos_renyi(120, 0.03, 1);
  const auto cache = std::filesystem::temp_directory_path() / "dawn_tests" / "er120.bin";
  save_csr_cache(g, cache);
  auto args = std::vector<std::string>{"bench", cache.string(), "--sources", "20", "--runs",
                                       "1",     "--seed",       "5"};
  auto a = nlohmann::json::parse(invoke(args).out);
  auto b = nlohmann::json::parse(invoke(args).out);
  EXPECT_EQ(a.at("sources"), b.at("sources"));
}

TEST(Cli, VerifyFixturesPass) {
  for (const auto& [name, g] : testing::fixture_graphs()) {
    const auto cache = std::filesystem::temp_directory_path() / "dawn_tests" / (name + ".bin");
    save_csr_cache(g, cache);
    auto r = invoke({"verify", cache.string()});
    EXPECT_EQ(r.code, kOk) << name << "\n" << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(Cli, VerifyReportsInjectedFault) {
  Hooks hooks;
  hooks.verify_tamper = [](SsspResult& r) {
    if (r.source == 1) r.distance[3] += 1;
  };
  auto r = invoke({"verify", path_mtx()}, hooks);
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.err.find("source=1"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("node=3"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace dawn::cli
