#include "dawn/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dawn/error.hpp"

namespace dawn {

namespace {

constexpr std::array<char, 8> kMagic = {'D', 'A', 'W', 'N', 'C', 'S', 'R', '\0'};
constexpr std::uint64_t kMaxNodes = std::numeric_limits<NodeId>::max();

std::ifstream open_input(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, std::ios::in | mode);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
  return out;
}

// Signed parse so that "-3" becomes a bounds problem rather than a parse one.
std::int64_t parse_int(const std::string& tok, std::uint64_t line_no) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
  }
  return value;
}

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '%' || line[pos] == '#';
}

}  // namespace

EdgeList read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty Matrix Market input");
  auto banner = split(line);
  if (banner.size() != 5 || banner[0] != "%%MatrixMarket" || lower(banner[1]) != "matrix") {
    throw FormatError("malformed Matrix Market banner: '" + line + "'");
  }
  const auto layout = lower(banner[2]);
  const auto field = lower(banner[3]);
  const auto symmetry = lower(banner[4]);
  if (layout == "array") throw UnsupportedError("dense Matrix Market arrays are not supported");
  if (layout != "coordinate") throw FormatError("unknown Matrix Market layout '" + banner[2] + "'");
  if (field == "complex") throw UnsupportedError("complex Matrix Market fields are not supported");
  if (field != "pattern" && field != "integer" && field != "real") {
    throw FormatError("unknown Matrix Market field '" + banner[3] + "'");
  }
  if (symmetry == "skew-symmetric" || symmetry == "hermitian") {
    throw UnsupportedError("Matrix Market symmetry '" + banner[4] + "' is not supported");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw FormatError("unknown Matrix Market symmetry '" + banner[4] + "'");
  }

  std::uint64_t line_no = 1;
  std::vector<std::string> dims;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    dims = split(line);
    break;
  }
  if (dims.size() != 3) throw FormatError("missing or malformed dimension line");
  const auto rows = parse_int(dims[0], line_no);
  const auto cols = parse_int(dims[1], line_no);
  const auto nnz = parse_int(dims[2], line_no);
  if (rows < 0 || cols < 0 || nnz < 0) throw FormatError("negative Matrix Market dimension");
  const auto n = static_cast<std::uint64_t>(std::max(rows, cols));
  if (n > kMaxNodes) throw BoundsError("node count exceeds 32-bit ids");

  EdgeList el;
  el.num_nodes = n;
  el.directedness =
      symmetry == "symmetric" ? Directedness::undirected : Directedness::directed;
  el.edges.reserve(static_cast<std::size_t>(nnz));
  std::int64_t seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    auto tok = split(line);
    if (tok.size() < 2) throw FormatError("line " + std::to_string(line_no) + ": short entry");
    const auto i = parse_int(tok[0], line_no);
    const auto j = parse_int(tok[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw BoundsError("line " + std::to_string(line_no) + ": entry (" + tok[0] + "," +
                        tok[1] + ") outside " + dims[0] + "x" + dims[1]);
    }
    el.edges.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(j - 1));
    ++seen;
  }
  if (seen < nnz) {
    throw FormatError("expected " + std::to_string(nnz) + " entries, found " +
                      std::to_string(seen));
  }
  el.normalize();
  return el;
}

EdgeList load_matrix_market(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matrix_market(in);
}

EdgeList read_edge_list(std::istream& in, std::optional<std::uint64_t> num_nodes,
                        Directedness directedness) {
  EdgeList el;
  el.directedness = directedness;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  for (std::uint64_t line_no = 1; std::getline(in, line); ++line_no) {
    if (is_comment(line)) continue;
    auto tok = split(line);
    if (tok.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const auto u = parse_int(tok[0], line_no);
    const auto v = parse_int(tok[1], line_no);
    const auto limit = num_nodes.value_or(kMaxNodes);
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= limit ||
        static_cast<std::uint64_t>(v) >= limit) {
      throw BoundsError("line " + std::to_string(line_no) + ": node id out of range");
    }
    max_id = std::max({max_id, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)});
    any = true;
    el.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  el.num_nodes = num_nodes.value_or(any ? max_id + 1 : 0);
  el.normalize();
  return el;
}

EdgeList load_edge_list(const std::filesystem::path& path, std::optional<std::uint64_t> num_nodes,
                        Directedness directedness) {
  auto in = open_input(path);
  return read_edge_list(in, num_nodes, directedness);
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t k = 0; k < sizeof(T); ++k) {
    bytes[k] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * k)) & 0xFF);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw FormatError("truncated CSR cache");
  }
  std::uint64_t value = 0;
  for (std::size_t k = 0; k < sizeof(T); ++k) value |= std::uint64_t{bytes[k]} << (8 * k);
  return static_cast<T>(value);
}

}  // namespace

void write_csr_cache(const CsrGraph& csr, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint8_t>(out, kCacheVersion);
  put_le<std::uint64_t>(out, csr.n());
  put_le<std::uint64_t>(out, csr.m());
  for (auto p : csr.row_ptr()) put_le<std::uint64_t>(out, p);
  for (auto c : csr.col()) put_le<std::uint32_t>(out, c);
  if (!out) throw Error("failed writing CSR cache");
}

void save_csr_cache(const CsrGraph& csr, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_csr_cache(csr, out);
}

CsrGraph read_csr_cache(std::istream& in) {
  std::array<char, kMagic.size()> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw FormatError("not a DAWN CSR cache");
  }
  const auto version = get_le<std::uint8_t>(in);
  if (version != kCacheVersion) {
    throw UnsupportedError("CSR cache version " + std::to_string(version));
  }
  const auto n = get_le<std::uint64_t>(in);
  const auto m = get_le<std::uint64_t>(in);
  if (n > kMaxNodes) throw FormatError("CSR cache node count exceeds 32-bit ids");
  std::vector<EdgeOffset> row_ptr(n + 1);
  for (auto& p : row_ptr) p = get_le<std::uint64_t>(in);
  if (row_ptr.back() != m) throw FormatError("CSR cache row_ptr does not end at m");
  std::vector<NodeId> col(m);
  for (auto& c : col) c = get_le<std::uint32_t>(in);
  return CsrGraph::from_arrays(n, std::move(row_ptr), std::move(col));
}

CsrGraph load_csr_cache(const std::filesystem::path& path) {
  auto in = open_input(path, std::ios::binary);
  return read_csr_cache(in);
}

InputFormat sniff_format(const std::filesystem::path& path,
                         std::optional<InputFormat> explicit_format) {
  if (explicit_format) return *explicit_format;
  {
    auto in = open_input(path, std::ios::binary);
    std::array<char, 14> head{};
    in.read(head.data(), head.size());
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got >= 14 && std::memcmp(head.data(), "%%MatrixMarket", 14) == 0) {
      return InputFormat::matrix_market;
    }
    if (got >= kMagic.size() && std::memcmp(head.data(), kMagic.data(), kMagic.size()) == 0) {
      return InputFormat::binary_cache;
    }
  }
  const auto ext = lower(path.extension().string());
  if (ext == ".mtx") return InputFormat::matrix_market;
  if (ext == ".bin" || ext == ".csr") return InputFormat::binary_cache;
  return InputFormat::edge_list;
}

CsrGraph load_graph(const std::filesystem::path& path, std::optional<InputFormat> explicit_format) {
  switch (sniff_format(path, explicit_format)) {
    case InputFormat::matrix_market:
      return build_csr(load_matrix_market(path));
    case InputFormat::binary_cache:
      return load_csr_cache(path);
    case InputFormat::edge_list:
      break;
  }
  return build_csr(load_edge_list(path));
}

}  // namespace dawn
