#include "nulldecomp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace nulldecomp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(seps, pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(seps, start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

bool parse_uint(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

constexpr std::size_t kMaxOrder = 1u << 24;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared_n;
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> by_name;
  std::vector<std::pair<Edge, std::size_t>> edges;  // edge, source line
  std::size_t max_id = 0;
  bool any_vertex = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      std::size_t n = 0;
      if (!parse_uint(trim(line.substr(2)), n) || n > kMaxOrder) {
        throw ParseError(ErrorCode::MalformedLine, line_no, "bad vertex count '" + std::string(line) + "'");
      }
      declared_n = n;
      continue;
    }
    if (line.starts_with("names=")) {
      for (auto tok : split(line.substr(6), ", \t")) {
        std::string name(tok);
        if (by_name.contains(name)) {
          throw ParseError(ErrorCode::MalformedLine, line_no, "vertex name '" + name + "' declared twice");
        }
        by_name.emplace(name, static_cast<VertexId>(names.size()));
        names.push_back(std::move(name));
      }
      continue;
    }

    auto tokens = split(line, " \t,");
    if (tokens.size() != 2) {
      throw ParseError(ErrorCode::MalformedLine, line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    VertexId ends[2];
    for (int k = 0; k < 2; ++k) {
      std::size_t id = 0;
      if (auto it = by_name.find(std::string(tokens[k])); it != by_name.end()) {
        id = it->second;
      } else if (!parse_uint(tokens[k], id) || id >= kMaxOrder) {
        throw ParseError(ErrorCode::MalformedLine, line_no, "unknown vertex '" + std::string(tokens[k]) + "'");
      }
      ends[k] = static_cast<VertexId>(id);
      max_id = std::max(max_id, id);
      any_vertex = true;
    }
    if (ends[0] == ends[1]) {
      throw ParseError(ErrorCode::SelfLoop, line_no, "loop at vertex " + std::string(tokens[0]));
    }
    edges.emplace_back(Edge(ends[0], ends[1]), line_no);
  }

  std::size_t n = any_vertex ? max_id + 1 : 0;
  if (!names.empty()) n = std::max(n, names.size());
  if (declared_n) {
    if (*declared_n < n) {
      throw ParseError(ErrorCode::MalformedLine, 0,
                       "n=" + std::to_string(*declared_n) + " but vertex " + std::to_string(n - 1) + " used");
    }
    n = *declared_n;
  }
  if (!names.empty() && names.size() != n) {
    throw ParseError(ErrorCode::MalformedLine, 0,
                     std::to_string(names.size()) + " names for " + std::to_string(n) + " vertices");
  }

  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].first == edges[i - 1].first) {
      const auto [a, b] = std::minmax(edges[i].second, edges[i - 1].second);
      throw ParseError(ErrorCode::DuplicateEdge, b,
                       "edge repeats line " + std::to_string(a));
    }
  }
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (auto& [e, line] : edges) plain.push_back(e);
  return Graph(n, std::move(plain), std::move(names));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  if (g.has_names()) {
    out << "names=";
    for (VertexId v = 0; v < g.order(); ++v) out << (v ? "," : "") << g.name(v);
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);

  std::vector<int> data;
  data.reserve(line.size());
  for (char ch : line) {
    const int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) {
      throw ParseError(ErrorCode::BadChecksumChar, 0, "byte " + std::to_string(c) + " outside 63..126");
    }
    data.push_back(c - 63);
  }

  std::size_t at = 0;
  auto need = [&](std::size_t k) {
    if (data.size() < at + k) throw ParseError(ErrorCode::TruncatedPayload, 0, "graph6 record too short");
  };
  auto read_word = [&](std::size_t bytes) {
    need(bytes);
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bytes; ++i) value = (value << 6) | static_cast<std::uint64_t>(data[at++]);
    return value;
  };

  need(1);
  std::uint64_t n = 0;
  if (data[0] != 63) {
    n = read_word(1);
  } else {
    ++at;
    need(1);
    if (data[1] != 63) {
      n = read_word(3);
    } else {
      ++at;
      n = read_word(6);
    }
  }
  if (n > kMaxOrder) throw ParseError(ErrorCode::TruncatedPayload, 0, "graph6 order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  need(payload);
  if (data.size() > at + payload) {
    throw ParseError(ErrorCode::MalformedLine, 0, "trailing bytes after graph6 payload");
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int byte = data[at + k / 6];
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put_word = [&](std::uint64_t value, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put_word(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put_word(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put_word(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string_view to_string(VertexRole role) {
  switch (role) {
    case VertexRole::Plain: return "plain";
    case VertexRole::Support: return "support";
    case VertexRole::Core: return "core";
    case VertexRole::NVertex: return "n-vertex";
  }
  return "plain";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string_view dot_shape(VertexRole role) {
  switch (role) {
    case VertexRole::Support: return "box";
    case VertexRole::Core: return "doublecircle";
    case VertexRole::NVertex: return "star";
    case VertexRole::Plain: return "circle";
  }
  return "circle";
}

}  // namespace

std::string export_dot(const Graph& g, const std::map<VertexId, VertexRole>& roles) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    auto it = roles.find(v);
    const VertexRole role = it == roles.end() ? VertexRole::Plain : it->second;
    out << "  " << v << " [label=" << dot_quote(g.name(v)) << ", shape=" << dot_shape(role) << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nulldecomp
