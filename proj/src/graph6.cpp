#include "geodetic/graph6.hpp"

#include <vector>

namespace geodetic {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr int kSmallN = 62;
constexpr int kMaxLongN = 258047;

int64_t body_len(int64_t n) { return (n * (n - 1) / 2 + 5) / 6; }
}  // namespace

Graph parse_graph6(std::string_view line) {
  // tolerate the optional nauty header and trailing whitespace
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (char c : line)
    if (static_cast<unsigned char>(c) < kBias || static_cast<unsigned char>(c) > kMaxByte)
      throw Graph6Error("graph6 character out of range [63,126]");

  size_t pos = 0;
  int64_t n;
  if (line[0] != '~') {
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error("graph6 orders above 258047 are not supported");
    if (line.size() < 4) throw Graph6Error("truncated graph6 size field");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kBias);
    if (n > kMaxLongN) throw Graph6Error("graph6 order exceeds 258047");
    pos = 4;
  }
  if (static_cast<int64_t>(line.size()) - static_cast<int64_t>(pos) != body_len(n))
    throw Graph6Error("graph6 length mismatch for n=" + std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 0) {
        cur = line[pos++] - kBias;
        bit = 6;
      }
      --bit;
      if (cur & (1 << bit)) edges.emplace_back(i, j);
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int64_t n = g.vertex_count();
  if (n > kMaxLongN) throw Graph6Error("graph too large for graph6 emitter");
  std::string out;
  if (n <= kSmallN) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int bit = 5;
  int cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= 1 << bit;
      if (bit == 0) {
        out.push_back(static_cast<char>(cur + kBias));
        cur = 0;
        bit = 6;
      }
      --bit;
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + kBias));
  return out;
}

}  // namespace geodetic
