#include "lincomb/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lincomb/errors.hpp"

namespace lincomb {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_bits(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3F) + kBias));
  }
}

std::uint64_t take_bits(std::string_view s, std::size_t pos, int groups) {
  std::uint64_t v = 0;
  for (int i = 0; i < groups; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[pos + i] - kBias);
  return v;
}

bool is_trimmed_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    put_bits(out, n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put_bits(out, n, 6);
  }
  int filled = 0;
  int acc = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        filled = 0;
        acc = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < kBias || c > 126) throw ParseError("graph6 byte out of range [63,126]");
  }
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(text[0] - kBias);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 order field");
    n = take_bits(text, 1, 3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 order field");
    n = take_bits(text, 2, 6);
    pos = 8;
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " +
                     std::to_string(n) + " (expected " + std::to_string(expected) + ")");
  }
  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("non-zero graph6 padding bits");
  }
  return std::move(b).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_trimmed_blank(line) || line.front() == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      long long value = -1;
      if (!(ls >> value) || value < 0) throw ParseError("expected vertex count", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected text after vertex count", lineno);
      n = static_cast<std::size_t>(value);
      have_n = true;
      continue;
    }
    long long u = -1;
    long long v = -1;
    if (!(ls >> u >> v)) throw ParseError("expected 'u v' pair", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected text after edge", lineno);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError("edge endpoint out of range [0," + std::to_string(n) + ")", lineno);
    }
    if (u == v) throw ParseError("loops are not allowed", lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_n) throw ParseError("missing vertex count", lineno == 0 ? 1 : lineno);
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  if (path.ends_with(".g6") || path.ends_with(".graph6")) {
    std::string line;
    std::getline(in, line);
    return from_graph6(line);
  }
  return read_edge_list(in);
}

}  // namespace lincomb
