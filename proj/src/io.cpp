#include "pivots/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "pivots/errors.hpp"

namespace pivots {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void line_error(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<VertexId> vertices;
  std::set<VertexId> known;
  std::set<std::pair<VertexId, VertexId>> edge_set;
  std::vector<Edge> edges;
  std::vector<VertexId> loops;
  auto declare = [&](const VertexId& v) {
    if (known.insert(v).second) vertices.push_back(v);
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) {
      line_error(lineno, "expected `u v`, `loop v` or `vertex v`, got " +
                             std::to_string(tok.size()) + " tokens");
    }
    if (tok[0] == "vertex") {
      declare(tok[1]);
    } else if (tok[0] == "loop") {
      const VertexId v(tok[1]);
      if (std::find(loops.begin(), loops.end(), v) != loops.end()) {
        line_error(lineno, "duplicate loop at '" + tok[1] + "'");
      }
      declare(v);
      loops.push_back(v);
    } else {
      const VertexId a(tok[0]);
      const VertexId b(tok[1]);
      if (a == b) line_error(lineno, "edge from '" + tok[0] + "' to itself; write `loop " + tok[0] + "`");
      if (!edge_set.insert(std::minmax(a, b)).second) {
        line_error(lineno, "duplicate edge " + tok[0] + " " + tok[1]);
      }
      declare(a);
      declare(b);
      edges.emplace_back(a, b);
    }
  }
  return Graph(std::move(vertices), edges, loops);
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw InputError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&') {
    throw InputError("graph6: sparse6/digraph6 input is not supported; graphs with loops need the edge-list format");
  }
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: byte outside the printable range 63..126");
  }

  std::size_t n = 0;
  std::size_t at = 0;
  auto take = [&](std::size_t count) {
    if (at + count > text.size()) throw InputError("graph6: truncated size field");
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::size_t>(text[at++] - 63);
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    at = 1;
    n = take(3);
  } else {
    at = 2;
    n = take(6);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - at != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " data bytes for " +
                     std::to_string(n) + " vertices, got " + std::to_string(text.size() - at));
  }
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(static_cast<std::int64_t>(i));
  Graph g(std::move(vs));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[at + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.set_edge(i, j, true);
    }
  }
  return g;
}

Graph parse_graph(const GraphDocument& doc) {
  return doc.format == GraphFormat::Graph6 ? parse_graph6(doc.payload) : parse_edge_list(doc.payload);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool isolated = !g.has_loop(i);
    for (std::size_t j = 0; j < g.size() && isolated; ++j) isolated = !g.has_edge(i, j);
    if (isolated) out << "vertex " << g.vertices()[i] << '\n';
  }
  for (const auto& v : g.loops()) out << "loop " << v << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

OpSeq parse_sequence(std::string_view text) {
  OpSeq seq;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '[') {
      throw InputError("sequence: expected '[' at offset " + std::to_string(pos));
    }
    const auto close = text.find(']', pos);
    if (close == std::string_view::npos) throw InputError("sequence: unterminated '['");
    const auto body = text.substr(pos + 1, close - pos - 1);
    if (body.find('[') != std::string_view::npos) throw InputError("sequence: nested '['");
    const auto tok = tokens(body);
    if (tok.size() == 2) {
      seq.push_back(PivotOp{tok[0], tok[1]});
    } else if (tok.size() == 1) {
      seq.push_back(LocalCompOp{tok[0]});
    } else {
      throw InputError("sequence: operation '[" + std::string(body) +
                       "]' must name one or two vertices");
    }
    pos = close + 1;
    skip_space();
  }
  return seq;
}

std::string format_sequence(const OpSeq& seq) {
  std::string out;
  for (const auto& op : seq) {
    if (const auto* p = std::get_if<PivotOp>(&op)) {
      out += "[" + p->u.str() + " " + p->v.str() + "]";
    } else {
      out += "[" + std::get<LocalCompOp>(op).u.str() + "]";
    }
  }
  return out;
}

VertexSet parse_vertex_set(std::string_view text) {
  VertexSet s;
  if (tokens(text).empty()) return s;
  std::size_t pos = 0;
  while (true) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto tok = tokens(text.substr(pos, comma - pos));
    if (tok.size() != 1) throw InputError("vertex set: empty or malformed element in '" + std::string(text) + "'");
    if (s.contains(tok[0])) throw InputError("vertex set: '" + tok[0] + "' listed twice");
    s.insert(tok[0]);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return s;
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ",";
    out += v.str();
  }
  return out;
}

}  // namespace pivots
