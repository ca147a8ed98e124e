#include <sstream>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "dawn/error.hpp"
#include "dawn/generate.hpp"
#include "dawn/io.hpp"

namespace dawn {
namespace {

using Edge = std::pair<NodeId, NodeId>;
using testing::write_temp;

EdgeList mm(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in);
}

EdgeList edges(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

TEST(MatrixMarket, PatternGeneral) {
  auto el = mm("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n2 3\n");
  EXPECT_EQ(el.num_nodes, 3U);
  EXPECT_EQ(el.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(MatrixMarket, SymmetricExpands) {
  auto el = mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n");
  EXPECT_EQ(el.num_nodes, 2U);
  EXPECT_EQ(el.edges, (std::vector<Edge>{{0, 1}, {1, 0}}));
}

TEST(MatrixMarket, IndexBeyondDimsIsBoundsError) {
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n4 1\n"), BoundsError);
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n0 1\n"), BoundsError);
}

TEST(MatrixMarket, ValuesAndCommentsIgnored) {
  auto el = mm(
      "%%MatrixMarket matrix coordinate real general\n"
      "% a comment\n"
      "%\n"
      "4 4 4\n"
      "1 2 0.5\n"
      "% mid-body comment\n"
      "2 2 7\n"
      "1 2 1.5\n"
      "4 3 -2\n");
  EXPECT_EQ(el.edges, (std::vector<Edge>{{0, 1}, {3, 2}}));
}

TEST(MatrixMarket, IntegerFieldAccepted) {
  auto el = mm("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 2 9\n");
  EXPECT_EQ(el.edges.size(), 1U);
}

TEST(MatrixMarket, MalformedBannerIsFormatError) {
  EXPECT_THROW(mm("%%MatrixMarket matrix\n2 2 1\n1 2\n"), FormatError);
  EXPECT_THROW(mm("% not a banner\n2 2 1\n1 2\n"), FormatError);
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate fancy general\n2 2 1\n1 2\n"), FormatError);
  EXPECT_THROW(mm(""), FormatError);
}

TEST(MatrixMarket, DenseAndExoticAreUnsupported) {
  EXPECT_THROW(mm("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"),
               UnsupportedError);
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 1 1\n"),
               UnsupportedError);
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 1\n"),
               UnsupportedError);
}

TEST(MatrixMarket, TruncatedBodyIsFormatError) {
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 3\n1 2\n"), FormatError);
}

TEST(MatrixMarket, NonIntegerIndexIsParseError) {
  EXPECT_THROW(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 x\n"), ParseError);
}

TEST(EdgeListFormat, InfersNodeCount) {
  auto el = edges("0 1\n1 2\n");
  EXPECT_EQ(el.num_nodes, 3U);
  EXPECT_EQ(el.edges.size(), 2U);
}

TEST(EdgeListFormat, DropsSelfLoops) {
  auto el = edges("0 0\n0 1\n");
  EXPECT_EQ(el.edges, (std::vector<Edge>{{0, 1}}));
}

TEST(EdgeListFormat, CommentsAndBlankLines) {
  auto el = edges("# header\n% also a comment\n\n3 1\n  1 3  \n");
  EXPECT_EQ(el.num_nodes, 4U);
  EXPECT_EQ(el.edges, (std::vector<Edge>{{1, 3}, {3, 1}}));
}

TEST(EdgeListFormat, Errors) {
  EXPECT_THROW(edges("a b\n"), ParseError);
  EXPECT_THROW(edges("0 1.5\n"), ParseError);
  EXPECT_THROW(edges("0\n"), ParseError);
  EXPECT_THROW(edges("-1 2\n"), BoundsError);
  std::istringstream in("0 5\n");
  EXPECT_THROW(read_edge_list(in, 5), BoundsError);
}

TEST(EdgeListFormat, ExplicitNodeCountKeepsIsolatedNodes) {
  std::istringstream in("0 1\n");
  auto el = read_edge_list(in, 10);
  EXPECT_EQ(el.num_nodes, 10U);
}

TEST(CsrCache, RoundTripPreservesArrays) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = gen::erdos_renyi(100, 0.05, seed);
    std::stringstream buf;
    write_csr_cache(g, buf);
    EXPECT_EQ(read_csr_cache(buf), g);
  }
}

TEST(CsrCache, LayoutIsLittleEndian) {
  auto g = build_csr(EdgeList{2, {{0, 1}}, Directedness::directed});
  std::stringstream buf;
  write_csr_cache(g, buf);
  const auto bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8U + 1 + 8 + 8 + 3 * 8 + 4);
  EXPECT_EQ(bytes.substr(0, 7), "DAWNCSR");
  EXPECT_EQ(bytes[8], static_cast<char>(kCacheVersion));
  EXPECT_EQ(bytes[9], 2);   // n, low byte first
  EXPECT_EQ(bytes[17], 1);  // m
  EXPECT_EQ(bytes[bytes.size() - 4], 1);  // col[0] = 1
}

TEST(CsrCache, RejectsGarbageAndFutureVersions) {
  std::stringstream garbage("not a cache at all");
  EXPECT_THROW(read_csr_cache(garbage), FormatError);

  auto g = gen::directed_path(3);
  std::stringstream buf;
  write_csr_cache(g, buf);
  auto bytes = buf.str();
  bytes[8] = 9;
  std::stringstream future(bytes);
  EXPECT_THROW(read_csr_cache(future), UnsupportedError);

  std::stringstream truncated(buf.str().substr(0, 30));
  EXPECT_THROW(read_csr_cache(truncated), FormatError);
}

TEST(Sniffing, BannerBeatsExtensionAndFlagBeatsBoth) {
  const auto mtx_as_txt =
      write_temp("banner.txt", "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n");
  EXPECT_EQ(sniff_format(mtx_as_txt), InputFormat::matrix_market);
  EXPECT_EQ(sniff_format(mtx_as_txt, InputFormat::edge_list), InputFormat::edge_list);

  const auto plain = write_temp("plain.mtx", "0 1\n");
  EXPECT_EQ(sniff_format(plain), InputFormat::matrix_market);  // by extension
  EXPECT_EQ(sniff_format(write_temp("plain.el", "0 1\n")), InputFormat::edge_list);

  const auto cache = std::filesystem::temp_directory_path() / "dawn_tests" / "g.anything";
  save_csr_cache(gen::directed_path(4), cache);
  EXPECT_EQ(sniff_format(cache), InputFormat::binary_cache);
  EXPECT_EQ(load_graph(cache), gen::directed_path(4));
}

TEST(LoadGraph, FilesOnDisk) {
  const auto p = write_temp("tri.mtx",
                            "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 2\n3 1\n");
  auto g = load_graph(p);
  EXPECT_EQ(g, gen::complete(3));
  EXPECT_THROW(load_graph("/nonexistent/graph.mtx"), Error);
}

}  // namespace
}  // namespace dawn
