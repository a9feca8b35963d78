#include <string>
#include <vector>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

namespace {

constexpr int kBias = 63;

void encode_size(std::string& out, long long n) {
  if (n < 63) {
    out += static_cast<char>(n + kBias);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  encode_size(out, n);
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + kBias);
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + kBias);
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte out of range");
    return c - kBias;
  };

  long long n = next6();
  if (n == 63) {
    n = 0;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next6();
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
    }
  }
  if (n < 1) throw ParseError(0, "graph6: graph needs at least one vertex");
  if (n > (1 << 24)) throw ParseError(0, "graph6: graph too large");

  const long long total_bits = n * (n - 1) / 2;
  const long long expected_bytes = (total_bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != expected_bytes) {
    throw ParseError(0, "graph6: expected " + std::to_string(expected_bytes) + " data bytes, got " +
                            std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  int chunk = 0;
  int remaining = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (remaining == 0) {
        chunk = next6();
        remaining = 6;
      }
      --remaining;
      if ((chunk >> remaining) & 1) edges.emplace_back(i, j);
    }
  }
  if (remaining > 0 && (chunk & ((1 << remaining) - 1)) != 0) {
    throw ParseError(0, "graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace fiedler
