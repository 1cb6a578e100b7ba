#pragma once

// Text encodings for Graph: graph6 (read/write), a plain "n m" edge list
// (read/write) and Graphviz DOT (write only).

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "radgirth/error.hpp"
#include "radgirth/graph.hpp"

namespace radgirth {

namespace graph6_detail {

constexpr int kBias = 63;
constexpr std::size_t kSmallLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

inline void append_size(std::string& out, std::size_t n) {
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumLimit) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace graph6_detail

/// Encodes g in graph6 without header or trailing newline.
inline std::string to_graph6(const Graph& g) {
  using namespace graph6_detail;
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int pending = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      pending = (pending << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(pending + kBias));
        pending = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((pending << (6 - filled)) + kBias));
  return out;
}

/// Decodes one graph6 line. An optional ">>graph6<<" header and surrounding
/// whitespace are accepted; anything else that does not decode exactly
/// (wrong length, bytes outside 63..126, nonzero padding bits) is rejected.
inline Graph from_graph6(std::string_view text) {
  using namespace graph6_detail;
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InputError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&' || text.front() == ';')
    throw InputError("graph6: sparse6/digraph6 data is not supported");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < kBias || b > 126) throw InputError("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  auto value = [&](std::size_t pos) { return static_cast<std::size_t>(static_cast<unsigned char>(text[pos]) - kBias); };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && value(1) < 63) {
    if (text.size() < 4) throw InputError("graph6: truncated size field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw InputError("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  }
  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InputError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t byte = value(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1U) edges.push_back({i, j});
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const std::size_t pad = 6 - bits % 6;
    if ((value(pos + bytes - 1) & ((std::size_t{1} << pad) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return {n, edges};
}

/// "n m" on the first line, then one "u v" line per edge.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw InputError("edge list: missing or invalid \"n m\" header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(is >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0) throw InputError("edge list: negative vertex id");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (is >> extra) throw InputError("edge list: trailing data after " + std::to_string(m) + " edges");
  return {static_cast<std::size_t>(n), edges};
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

/// Edge lists start with a decimal digit, which can never open a graph6
/// string, so the two formats are told apart by the first visible byte.
inline Graph parse_graph_text(std::string_view text) {
  const std::string_view body = graph6_detail::trim(text);
  if (body.empty()) throw InputError("empty graph input");
  if (std::isdigit(static_cast<unsigned char>(body.front()))) return from_edge_list(body);
  const auto eol = body.find('\n');
  if (eol != std::string_view::npos && !graph6_detail::trim(body.substr(eol)).empty())
    throw InputError("graph6 input holds more than one graph");
  return from_graph6(body.substr(0, eol));
}

/// Reads a whole file ("-" for standard input) and parses it with
/// parse_graph_text.
inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph read_graph_file(const std::string& path) { return parse_graph_text(read_text(path)); }

}  // namespace radgirth
