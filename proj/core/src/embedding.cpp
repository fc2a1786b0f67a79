#include "hopdom/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace hopdom {

namespace {

std::string pt(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace

bool validate_embedding(const GridEmbedding& e, std::vector<std::string>* diagnostics) {
  bool ok = true;
  auto fail = [&](const std::string& why) {
    ok = false;
    if (diagnostics) diagnostics->push_back(why);
  };
  const int n = static_cast<int>(e.coords.size());
  std::map<Point, int> vertex_at;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = vertex_at.emplace(e.coords[v], v);
    if (!fresh) fail("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                     " share point " + pt(e.coords[v]));
  }
  std::map<Point, std::string> interior_owner;
  std::set<Edge> seen;
  for (const auto& ee : e.edges) {
    const std::string name = "edge " + std::to_string(ee.edge.u) + "-" + std::to_string(ee.edge.v);
    if (ee.edge.u < 0 || ee.edge.v >= n || ee.edge.u >= ee.edge.v) {
      fail(name + " has invalid endpoints");
      continue;
    }
    if (!seen.insert(ee.edge).second) fail(name + " appears twice");
    if (ee.path.size() < 2) {
      fail(name + " has an empty path");
      continue;
    }
    if (ee.path.front() != e.coords[ee.edge.u] || ee.path.back() != e.coords[ee.edge.v])
      fail(name + " does not start and end at its endpoints");
    if (ee.length() < 2) fail(name + " has grid length " + std::to_string(ee.length()) + " < 2");
    std::set<Point> own;
    for (std::size_t i = 0; i < ee.path.size(); ++i) {
      if (!own.insert(ee.path[i]).second) fail(name + " revisits " + pt(ee.path[i]));
      if (i > 0) {
        long long dx = std::llabs(ee.path[i].x - ee.path[i - 1].x);
        long long dy = std::llabs(ee.path[i].y - ee.path[i - 1].y);
        if (dx + dy != 1) fail(name + " has a non-unit step at " + pt(ee.path[i]));
      }
      if (i == 0 || i + 1 == ee.path.size()) continue;
      if (auto it = vertex_at.find(ee.path[i]); it != vertex_at.end())
        fail(name + " passes through vertex " + std::to_string(it->second));
      auto [it, fresh] = interior_owner.emplace(ee.path[i], name);
      if (!fresh) fail(name + " crosses " + it->second + " at " + pt(ee.path[i]));
    }
  }
  return ok;
}

GridEmbedding scale_embedding(const GridEmbedding& e, int factor) {
  if (factor < 1) throw InputError("scale factor must be positive");
  GridEmbedding out;
  out.scale = e.scale * factor;
  for (const auto& p : e.coords) out.coords.push_back({p.x * factor, p.y * factor});
  for (const auto& ee : e.edges) {
    EmbeddedEdge s{ee.edge, {}};
    for (std::size_t i = 0; i < ee.path.size(); ++i) {
      Point a{ee.path[i].x * factor, ee.path[i].y * factor};
      if (i == 0) {
        s.path.push_back(a);
        continue;
      }
      Point prev = s.path.back();
      long long dx = (a.x > prev.x) - (a.x < prev.x);
      long long dy = (a.y > prev.y) - (a.y < prev.y);
      while (prev != a) {
        prev = {prev.x + dx, prev.y + dy};
        s.path.push_back(prev);
      }
    }
    out.edges.push_back(std::move(s));
  }
  return out;
}

Graph embedded_graph(const GridEmbedding& e) {
  GraphBuilder b(static_cast<int>(e.coords.size()));
  for (const auto& ee : e.edges) b.add_edge(ee.edge.u, ee.edge.v);
  return b.build();
}

namespace {

long long parse_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

GridEmbedding parse_embedding(std::string_view text) {
  GridEmbedding e;
  std::map<long long, Point> verts;
  std::vector<std::pair<EmbeddedEdge, std::size_t>> edges;
  bool header = false;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!header) {
      if (line != "hopdomlab-embedding v1") throw ParseError(line_no, "expected header 'hopdomlab-embedding v1'");
      header = true;
      continue;
    }
    if (tok[0] == "V") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'V id x y'");
      long long id = parse_int(tok[1], line_no);
      if (id < 0 || id > 1'000'000) throw ParseError(line_no, "vertex id out of range");
      if (!verts.emplace(id, Point{parse_int(tok[2], line_no), parse_int(tok[3], line_no)}).second)
        throw ParseError(line_no, "duplicate vertex id");
    } else if (tok[0] == "E") {
      if (tok.size() < 7 || (tok.size() - 3) % 2 != 0)
        throw ParseError(line_no, "expected 'E u v x1 y1 x2 y2 ...' with at least two points");
      long long u = parse_int(tok[1], line_no), v = parse_int(tok[2], line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      EmbeddedEdge ee;
      for (std::size_t i = 3; i < tok.size(); i += 2)
        ee.path.push_back({parse_int(tok[i], line_no), parse_int(tok[i + 1], line_no)});
      if (u > v) {
        std::swap(u, v);
        std::reverse(ee.path.begin(), ee.path.end());
      }
      ee.edge = {static_cast<Vertex>(u), static_cast<Vertex>(v)};
      edges.emplace_back(std::move(ee), line_no);
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(line_no, "missing header");
  long long expect = 0;
  for (const auto& [id, p] : verts) {
    if (id != expect++) throw ParseError(line_no, "vertex ids must be 0..n-1");
    e.coords.push_back(p);
  }
  for (auto& [ee, ln] : edges) {
    if (ee.edge.v >= static_cast<int>(e.coords.size())) throw ParseError(ln, "edge endpoint is not a declared vertex");
    e.edges.push_back(std::move(ee));
  }
  std::sort(e.edges.begin(), e.edges.end(),
            [](const EmbeddedEdge& a, const EmbeddedEdge& b) { return a.edge < b.edge; });
  return e;
}

std::string serialize_embedding(const GridEmbedding& e) {
  std::ostringstream out;
  out << "hopdomlab-embedding v1\n";
  if (e.scale != 1) out << "# scale " << e.scale << '\n';
  for (std::size_t v = 0; v < e.coords.size(); ++v)
    out << "V " << v << ' ' << e.coords[v].x << ' ' << e.coords[v].y << '\n';
  for (const auto& ee : e.edges) {
    out << "E " << ee.edge.u << ' ' << ee.edge.v;
    for (const auto& p : ee.path) out << ' ' << p.x << ' ' << p.y;
    out << '\n';
  }
  return out.str();
}

}  // namespace hopdom
