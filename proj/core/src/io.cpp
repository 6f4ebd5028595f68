#include "ccp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, comment-stripped line split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      tokens.clear();
      for (std::string w; words >> w;) tokens.push_back(std::move(w));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + message);
  }

  std::uint64_t number(const std::string& token) const {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail("expected a non-negative integer, got '" + token + "'");
    return value;
  }

  std::int64_t signed_number(const std::string& token) const {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail("expected an integer, got '" + token + "'");
    return value;
  }

  void expect_arity(const std::vector<std::string>& tokens, std::size_t n) const {
    if (tokens.size() != n) {
      fail("'" + tokens[0] + "' record takes " + std::to_string(n - 1) + " fields, got " +
           std::to_string(tokens.size() - 1));
    }
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

ColoredGraph read_graph(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t)) throw InputError("empty graph file");
  if (t[0] != "p" || t.size() != 5 || t[1] != "ccg") r.fail("expected header 'p ccg <n> <m> <q>'");
  const std::size_t n = r.number(t[2]);
  const std::size_t m = r.number(t[3]);
  const std::size_t q = r.number(t[4]);
  if (n > 0 && q == 0) r.fail("color count must be positive");

  std::vector<Color> colors(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Edge> edges;
  std::size_t vertex_lines = 0;
  while (r.next(t)) {
    if (t[0] == "v") {
      r.expect_arity(t, 3);
      const auto id = r.number(t[1]);
      const auto color = r.number(t[2]);
      if (id >= n) r.fail("vertex " + std::to_string(id) + " out of range");
      if (seen[id]) r.fail("vertex " + std::to_string(id) + " listed twice");
      if (color >= q) r.fail("color " + std::to_string(color) + " not below q = " + std::to_string(q));
      seen[id] = true;
      colors[id] = static_cast<Color>(color);
      ++vertex_lines;
    } else if (t[0] == "e") {
      r.expect_arity(t, 3);
      const auto u = r.number(t[1]);
      const auto v = r.number(t[2]);
      if (u >= n || v >= n) r.fail("edge endpoint out of range");
      if (u == v) r.fail("self-loop on vertex " + std::to_string(u));
      edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    } else if (t[0] == "p") {
      r.fail("duplicate header");
    } else {
      r.fail("unknown record '" + t[0] + "'");
    }
  }
  if (vertex_lines != n) {
    throw InputError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(vertex_lines));
  }
  if (edges.size() != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return ColoredGraph(n, std::move(colors), std::move(edges), q);
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const ColoredGraph& g) {
  out << "p ccg " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << g.color(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

SolutionFile read_solution(std::istream& in) {
  LineReader r(in);
  SolutionFile s;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (s.objective) r.fail("records after 'obj'");
    if (t[0] == "d") {
      r.expect_arity(t, 3);
      const auto u = r.number(t[1]);
      const auto v = r.number(t[2]);
      if (u == v) r.fail("self-loop in deleted edge list");
      s.deleted.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    } else if (t[0] == "obj") {
      r.expect_arity(t, 2);
      s.objective = r.signed_number(t[1]);
    } else {
      r.fail("unknown record '" + t[0] + "'");
    }
  }
  return s;
}

SolutionFile read_solution_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_solution(in);
}

void write_solution(std::ostream& out, const ColoredGraph& g, const Partition& p, std::int64_t objective) {
  for (EdgeId e : p.deleted_edges()) out << "d " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  out << "obj " << objective << '\n';
}

std::vector<EdgeId> resolve_edges(const ColoredGraph& g, const std::vector<Edge>& pairs) {
  std::vector<EdgeId> ids;
  ids.reserve(pairs.size());
  for (const Edge& e : pairs) {
    if (e.u >= g.vertex_count() || e.v >= g.vertex_count()) {
      throw InputError("deleted edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has an unknown vertex");
    }
    const auto id = g.find_edge(e.u, e.v);
    if (!id) throw InputError("deleted pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    ids.push_back(*id);
  }
  return ids;
}

MulticutInstance read_multicut(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t)) throw InputError("empty multicut file");
  if (t[0] != "p" || t.size() != 4 || t[1] != "mct") r.fail("expected header 'p mct <n> <r>'");
  const std::size_t n = r.number(t[2]);
  const std::size_t requests = r.number(t[3]);
  std::vector<Edge> edges;
  std::vector<Edge> pairs;
  while (r.next(t)) {
    if (t[0] != "e" && t[0] != "q") r.fail("unknown record '" + t[0] + "'");
    r.expect_arity(t, 3);
    const auto u = r.number(t[1]);
    const auto v = r.number(t[2]);
    if (u >= n || v >= n) r.fail("endpoint out of range");
    if (u == v) r.fail(t[0] == "e" ? "self-loop" : "request joins a vertex to itself");
    (t[0] == "e" ? edges : pairs).push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (pairs.size() != requests) {
    throw InputError("header declares " + std::to_string(requests) + " requests, found " + std::to_string(pairs.size()));
  }
  return make_multicut(ColoredGraph(n, std::vector<Color>(n, 0), std::move(edges), n == 0 ? 0 : 1), std::move(pairs));
}

MulticutInstance read_multicut_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_multicut(in);
}

void write_multicut(std::ostream& out, const MulticutInstance& m) {
  out << "p mct " << m.tree.vertex_count() << ' ' << m.requests.size() << '\n';
  for (const Edge& e : m.tree.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const Edge& q : m.requests) out << "q " << q.u << ' ' << q.v << '\n';
}

}  // namespace ccp
