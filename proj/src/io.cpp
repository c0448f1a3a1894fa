// Copyright 2026 The rotsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rotsys/io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "rotsys/error.hpp"

namespace rotsys {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({++number, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

bool is_skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  const char* ws = " \t";
  std::size_t pos = 0;
  while ((pos = s.find_first_not_of(ws, pos)) != std::string_view::npos) {
    std::size_t end = s.find_first_of(ws, pos);
    out.push_back(s.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return out;
}

std::optional<long long> to_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

bool looks_like_rotation_file(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (is_skippable(line.text)) continue;
    auto tok = tokens(line.text);
    return tok.size() == 2 && to_int(tok[0]) && to_int(tok[1]);
  }
  return false;
}

EmbeddedGraph parse_rotation_file(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < lines.size() && is_skippable(lines[i].text)) ++i;
  };
  const int last_line = lines.empty() ? 1 : lines.back().number;

  skip();
  if (i == lines.size()) throw ParseError(last_line, "missing header line \"n m\"");
  const Line header = lines[i++];
  auto head = tokens(header.text);
  std::optional<long long> n, m;
  if (head.size() == 2) {
    n = to_int(head[0]);
    m = to_int(head[1]);
  }
  if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000) {
    throw ParseError(header.number, "header must be two non-negative integers \"n m\"");
  }

  std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(*n));
  std::vector<int> line_of(static_cast<std::size_t>(*n), 0);
  long long degree_sum = 0;
  for (long long seen = 0; seen < *n; ++seen) {
    skip();
    if (i == lines.size()) {
      throw ParseError(last_line, "expected " + std::to_string(*n) + " vertex lines, found " +
                                      std::to_string(seen));
    }
    const Line& line = lines[i++];
    const std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line.number, "expected \"v: u1 u2 ...\"");
    }
    auto label = to_int(trim(line.text.substr(0, colon)));
    if (!label || *label < 0 || *label >= *n) {
      throw ParseError(line.number, "vertex label must be an integer in 0.." +
                                        std::to_string(*n - 1));
    }
    if (line_of[*label] != 0) {
      throw ParseError(line.number, "vertex " + std::to_string(*label) + " already listed on line " +
                                        std::to_string(line_of[*label]));
    }
    line_of[*label] = line.number;
    for (std::string_view tok : tokens(line.text.substr(colon + 1))) {
      auto u = to_int(tok);
      if (!u || *u < std::numeric_limits<Vertex>::min() || *u > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line.number, "bad neighbor token \"" + std::string(tok) + "\"");
      }
      rotations[*label].push_back(static_cast<Vertex>(*u));
      ++degree_sum;
    }
  }
  skip();
  if (i != lines.size()) throw ParseError(lines[i].number, "unexpected content after vertex lines");
  if (degree_sum != 2 * *m) {
    throw ParseError(header.number, "degree sum " + std::to_string(degree_sum) + " is not 2*m = " +
                                        std::to_string(2 * *m));
  }

  try {
    return build_embedding(static_cast<int>(*n), rotations);
  } catch (const EmbeddingError& e) {
    std::vector<Issue> located = e.issues();
    for (Issue& issue : located) {
      if (issue.vertex >= 0) {
        issue.detail = "line " + std::to_string(line_of[issue.vertex]) + ": " + issue.detail;
      }
    }
    throw EmbeddingError(std::move(located));
  }
}

std::string serialize_rotation_file(const EmbeddedGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out += std::to_string(v);
    out += ':';
    for (Vertex u : g.rotation(v)) {
      out += ' ';
      out += std::to_string(u);
    }
    out += '\n';
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError(0, "graph6: empty input");
  for (char c : s) {
    if (c < 63 || c > 126) {
      throw ParseError(0, "graph6: character code " + std::to_string(static_cast<int>(c)) +
                              " outside 63..126");
    }
  }
  auto value = [&](std::size_t k) { return static_cast<std::uint64_t>(s[k] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (s.size() >= 4 && s[1] != 126) {
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else if (s.size() >= 8 && s[1] == 126) {
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | value(k);
    pos = 8;
  } else {
    throw ParseError(0, "graph6: truncated vertex count");
  }
  if (n > 100'000) throw ParseError(0, "graph6: " + std::to_string(n) + " vertices is too many");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (s.size() - pos != expected) {
    throw ParseError(0, "graph6: expected " + std::to_string(expected) + " data bytes for " +
                            std::to_string(n) + " vertices, found " + std::to_string(s.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
  std::string out;
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else if (n < 258048) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.num_vertices(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

}  // namespace rotsys
