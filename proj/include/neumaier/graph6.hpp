#pragma once

// graph6 codec, short header form only (n <= 62).
//
// Layout: one header byte 63+n, then the upper triangle of the adjacency
// matrix in column-major order ((0,1), (0,2), (1,2), (0,3), ...), packed six
// bits per byte, most significant bit first, each byte offset by 63. Unused
// trailing bits of the last byte must be zero.

#include <cstddef>
#include <string>
#include <string_view>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline std::size_t graph6_payload_bytes(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

inline Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("long-form graph6 header is not supported", 0);
  if (header < 63 || header > 126) throw ParseError("graph6 header byte out of range", 0);
  const std::size_t n = header - 63u;
  const std::size_t need = graph6_payload_bytes(n);
  if (text.size() < 1 + need) throw ParseError("short graph6 payload", text.size());
  if (text.size() > 1 + need) throw ParseError("trailing bytes after graph6 payload", 1 + need);

  for (std::size_t i = 1; i <= need; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 payload byte out of range", i);
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const unsigned value = static_cast<unsigned char>(text[1 + bit / 6]) - 63u;
      if ((value >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
    }
  if (need > 0 && bit % 6 != 0) {
    const unsigned last = static_cast<unsigned char>(text[need]) - 63u;
    const unsigned pad_mask = (1U << (6 - bit % 6)) - 1U;
    if ((last & pad_mask) != 0) throw ParseError("nonzero graph6 padding bits", need);
  }
  return std::move(b).build();
}

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedSizeError("graph6 short header supports at most 62 vertices, got " +
                               std::to_string(n));
  std::string out(1 + graph6_payload_bytes(n), '\0');
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] | (1 << (5 - bit % 6)));
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = static_cast<char>(out[i] + 63);
  return out;
}

}  // namespace neumaier
