#pragma once

// graph6 encoding of undirected simple graphs: size prefix in base-64-ish
// printable bytes (offset 63), then the upper triangle of the adjacency
// matrix in column order, packed big-endian six bits per byte.

#include <cstdint>
#include <string>
#include <vector>

#include "escrit/graph.hpp"

namespace escrit {

namespace graph6_detail {

inline constexpr long long kMaxDecodableN = 1 << 20;

inline void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else if (n <= 68719476735LL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw std::invalid_argument("graph6: vertex count too large to encode");
  }
}

}  // namespace graph6_detail

inline std::string to_graph6(const Graph& g) {
  const long long n = g.n();
  std::string out;
  graph6_detail::append_size(out, n);
  const long long bits = n * (n - 1) / 2;
  std::vector<uint8_t> data(static_cast<size_t>((bits + 5) / 6), 0);
  for (auto [u, v] : g.edges()) {
    // bit index of pair (u,v), u < v, in column order
    const long long t = static_cast<long long>(v) * (v - 1) / 2 + u;
    data[static_cast<size_t>(t / 6)] |= static_cast<uint8_t>(1u << (5 - t % 6));
  }
  for (auto b : data) out.push_back(static_cast<char>(b + 63));
  return out;
}

inline Graph parse_graph6(const std::string& input) {
  std::string s = input;
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  auto val = [&s](size_t i) -> int {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte out of range at position " + std::to_string(i));
    return c - 63;
  };

  long long n = 0;
  size_t pos = 0;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') {
      if (s.size() < 8) throw std::invalid_argument("graph6: truncated size prefix");
      for (size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
      pos = 8;
    } else {
      if (s.size() < 4) throw std::invalid_argument("graph6: truncated size prefix");
      for (size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
      pos = 4;
    }
  } else {
    n = val(0);
    pos = 1;
  }
  if (n > graph6_detail::kMaxDecodableN)
    throw std::invalid_argument("graph6: vertex count too large to materialize: " +
                                std::to_string(n));

  const long long bits = n * (n - 1) / 2;
  const long long nbytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
    throw std::invalid_argument("graph6: expected " + std::to_string(nbytes) +
                                " data bytes for n=" + std::to_string(n) + ", found " +
                                std::to_string(s.size() - pos));

  std::vector<edge_t> edges;
  long long t = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++t) {
      const int byte = val(pos + static_cast<size_t>(t / 6));
      if ((byte >> (5 - t % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  for (long long p = bits; p < nbytes * 6; ++p) {
    const int byte = val(pos + static_cast<size_t>(p / 6));
    if ((byte >> (5 - p % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace escrit
