#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "dawn/graph.hpp"

namespace dawn {

/// Reads a Matrix Market coordinate file. Values of `integer`/`real` fields
/// are ignored; `symmetric` entries yield both directions. The returned list
/// is normalized (0-based, no self-loops, no duplicates).
EdgeList load_matrix_market(const std::filesystem::path& path);
EdgeList read_matrix_market(std::istream& in);

/// Reads whitespace-separated `u v` pairs; `#` and `%` lines are comments.
/// Without `num_nodes`, n = 1 + largest id seen.
EdgeList load_edge_list(const std::filesystem::path& path,
                        std::optional<std::uint64_t> num_nodes = std::nullopt,
                        Directedness directedness = Directedness::directed);
EdgeList read_edge_list(std::istream& in,
                        std::optional<std::uint64_t> num_nodes = std::nullopt,
                        Directedness directedness = Directedness::directed);

// Binary CSR cache layout, all integers little-endian:
//   8 bytes  magic "DAWNCSR\0"
//   1 byte   version (kCacheVersion)
//   u64      n
//   u64      m
//   u64[n+1] row_ptr
//   u32[m]   col
inline constexpr std::uint8_t kCacheVersion = 1;

void write_csr_cache(const CsrGraph& csr, std::ostream& out);
void save_csr_cache(const CsrGraph& csr, const std::filesystem::path& path);
CsrGraph read_csr_cache(std::istream& in);
CsrGraph load_csr_cache(const std::filesystem::path& path);

enum class InputFormat { matrix_market, edge_list, binary_cache };

/// Picks the reader for `path`: an explicit format wins, then a
/// `%%MatrixMarket` banner or the cache magic, then the file extension
/// (.mtx, .bin/.csr, anything else is an edge list).
InputFormat sniff_format(const std::filesystem::path& path,
                         std::optional<InputFormat> explicit_format = std::nullopt);

CsrGraph load_graph(const std::filesystem::path& path,
                    std::optional<InputFormat> explicit_format = std::nullopt);

}  // namespace dawn
