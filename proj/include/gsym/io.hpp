#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/graph.hpp"

namespace gsym {

enum class Format { graph6, edgelist };

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw parse_error(std::string("graph6: invalid character '") + c + "'");
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph6: N(n) followed by the upper triangle, column by column, six bits per byte,
// each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw parse_error("graph6: empty input");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = detail::graph6_value(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw parse_error("graph6: truncated size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_value(text[i]);
    if (n < 63) throw parse_error("graph6: non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw parse_error("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::graph6_value(text[i]);
    if (n < 258048) throw parse_error("graph6: non-canonical size field");
    pos = 8;
  }
  if (n > (1u << 20)) throw parse_error("graph6: vertex count " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw parse_error("graph6: expected " + std::to_string(bytes) + " data bytes for " +
                      std::to_string(n) + " vertices, got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = detail::graph6_value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((detail::graph6_value(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw parse_error("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------------------
// Edge list: first line is the vertex count, then one "u v" pair per line.
// '#' starts a comment that runs to the end of the line.

inline Graph parse_edgelist(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw parse_error("edgelist: missing vertex count");

  auto read_number = [](std::string_view& s, const char* what) {
    s = detail::trim(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range) throw parse_error(std::string("edgelist: ") + what + " overflows");
    if (ec != std::errc() || ptr == s.data()) {
      throw parse_error(std::string("edgelist: expected ") + what + ", got '" + std::string(s) + "'");
    }
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
  };

  std::string_view header = lines[0];
  const std::uint64_t n = read_number(header, "vertex count");
  if (!detail::trim(header).empty()) throw parse_error("edgelist: malformed header line");
  if (n > (1u << 20)) throw parse_error("edgelist: vertex count " + std::to_string(n) + " too large");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    const auto u = read_number(line, "vertex index");
    const auto v = read_number(line, "vertex index");
    if (!detail::trim(line).empty()) throw parse_error("edgelist: trailing text on line " + std::to_string(i + 1));
    if (u >= n || v >= n) {
      throw parse_error("edgelist: vertex index " + std::to_string(std::max(u, v)) + " overflows " +
                        std::to_string(n) + " vertices");
    }
    if (u == v) throw parse_error("edgelist: self-loop at vertex " + std::to_string(u));
    edges.push_back(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return Graph(n, edges);
}

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph parse(std::string_view text, Format format) {
  return format == Format::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

inline std::string serialize(const Graph& g, Format format) {
  return format == Format::graph6 ? to_graph6(g) + "\n" : to_edgelist(g);
}

/// Guesses the format: an edge list starts with a decimal vertex count, which graph6 never does.
inline Format detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    return std::isdigit(static_cast<unsigned char>(body.front())) ? Format::edgelist : Format::graph6;
  }
  return Format::graph6;
}

inline Graph read_graph_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + file + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return parse(text, detect_format(text));
}

}  // namespace gsym
