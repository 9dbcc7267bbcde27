#include "bchrome/graph6.hpp"

#include <fstream>

#include "bchrome/errors.hpp"

namespace bchrome {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxVertices = 258047;  // largest n in the 4-byte size encoding

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

int sixbit(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw Graph6Error("graph6: byte outside printable range 0x3F-0x7E");
  }
  return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw Graph6Error("graph6: empty input");

  size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = sixbit(s[0]);
    pos = 1;
  } else if (s.size() >= 2 && s[1] == '~') {
    throw Graph6Error("graph6: vertex counts above 258047 not supported");
  } else {
    if (s.size() < 4) throw Graph6Error("graph6: truncated vertex count");
    n = (static_cast<long long>(sixbit(s[1])) << 12) |
        (sixbit(s[2]) << 6) | sixbit(s[3]);
    if (n < 63) throw Graph6Error("graph6: malformed header (non-minimal n)");
    pos = 4;
  }
  if (n == 0) throw Graph6Error("graph6: zero-vertex graph not supported");

  long long bits = n * (n - 1) / 2;
  size_t bytes = static_cast<size_t>((bits + 5) / 6);
  if (s.size() - pos < bytes) throw Graph6Error("graph6: truncated bit payload");
  if (s.size() - pos > bytes) throw Graph6Error("graph6: trailing characters");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int cur = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (bit % 6 == 0) cur = sixbit(s[pos + bit / 6]);
      if (cur & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
    }
  }
  // Padding bits must be zero in a canonical encoding.
  for (; bit < static_cast<long long>(bytes) * 6; ++bit) {
    if (bit % 6 == 0) cur = sixbit(s[pos + bit / 6]);
    if (cur & (1 << (5 - bit % 6))) {
      throw Graph6Error("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) {
    throw PreconditionError(Precondition::bad_argument,
                            "emit_graph6 requires at least one vertex");
  }
  if (n > kMaxVertices) {
    throw PreconditionError(Precondition::out_of_range,
                            "emit_graph6 supports at most 258047 vertices");
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  int acc = 0;
  int used = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    acc <<= 6 - bits % 6;
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("cannot open file: " + path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty()) continue;
    if (sv[0] == '>' && sv.substr(0, kHeader.size()) != kHeader) {
      throw Graph6Error("graph6: unrecognized header line in " + path);
    }
    graphs.push_back(parse_graph6(sv));
  }
  return graphs;
}

}  // namespace bchrome
