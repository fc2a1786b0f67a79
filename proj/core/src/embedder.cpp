#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <list>
#include <map>
#include <numeric>
#include <set>
#include <optional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <boost/property_map/property_map.hpp>

#include "hopdom/embedding.hpp"

namespace hopdom {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using BVertex = boost::graph_traits<BGraph>::vertex_descriptor;
using EmbeddingStorage = std::vector<std::vector<BEdge>>;
using BEmbedding = boost::iterator_property_map<EmbeddingStorage::iterator,
                                                boost::property_map<BGraph, boost::vertex_index_t>::type>;

void reindex_edges(BGraph& g) {
  int i = 0;
  for (auto e : boost::make_iterator_range(boost::edges(g))) boost::put(boost::edge_index, g, e, i++);
}

bool planar_embedding(BGraph& g, EmbeddingStorage& storage) {
  reindex_edges(g);
  storage.assign(boost::num_vertices(g), {});
  BEmbedding emb(storage.begin(), boost::get(boost::vertex_index, g));
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                             boost::boyer_myrvold_params::embedding = emb);
}

BGraph to_boost(const Graph& g) {
  BGraph bg(static_cast<std::size_t>(g.n()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return bg;
}

constexpr std::array<Point, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// Routes edges one at a time by BFS on a bounded lattice. Lattice points
// next to a vertex are kept for that vertex's own edges, so a vertex of
// degree <= 4 can never have its ports used up by passing paths.
class Router {
 public:
  Router(const std::vector<Point>& coords, long long margin) : coords_(coords) {
    lo_ = hi_ = coords.empty() ? Point{} : coords.front();
    for (const auto& p : coords) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    lo_ = {lo_.x - margin, lo_.y - margin};
    hi_ = {hi_.x + margin, hi_.y + margin};
    w_ = hi_.x - lo_.x + 1;
    h_ = hi_.y - lo_.y + 1;
    vertex_at_.assign(static_cast<std::size_t>(w_ * h_), -1);
    near_.assign(static_cast<std::size_t>(w_ * h_), {});
    for (int v = 0; v < static_cast<int>(coords.size()); ++v) {
      vertex_at_[index(coords[v])] = v;
      for (const auto& s : kSteps) {
        Point q{coords[v].x + s.x, coords[v].y + s.y};
        if (inside(q)) near_[index(q)].push_back(v);
      }
    }
  }

  std::optional<std::vector<EmbeddedEdge>> route_all(const std::vector<Edge>& order) const {
    std::vector<char> used(vertex_at_.size(), 0);
    std::vector<EmbeddedEdge> out;
    for (const auto& e : order) {
      auto path = route(e, used);
      if (!path) return std::nullopt;
      for (std::size_t i = 1; i + 1 < path->size(); ++i) used[index((*path)[i])] = 1;
      out.push_back({e, std::move(*path)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edge < b.edge; });
    return out;
  }

 private:
  bool inside(const Point& p) const { return p.x >= lo_.x && p.x <= hi_.x && p.y >= lo_.y && p.y <= hi_.y; }
  std::size_t index(const Point& p) const { return static_cast<std::size_t>((p.y - lo_.y) * w_ + (p.x - lo_.x)); }

  std::optional<std::vector<Point>> route(const Edge& e, const std::vector<char>& used) const {
    const Point src = coords_[e.u], dst = coords_[e.v];
    std::vector<long long> parent(vertex_at_.size(), -1);
    std::deque<Point> queue{src};
    parent[index(src)] = static_cast<long long>(index(src));
    while (!queue.empty()) {
      Point p = queue.front();
      queue.pop_front();
      for (const auto& s : kSteps) {
        Point q{p.x + s.x, p.y + s.y};
        if (!inside(q) || parent[index(q)] >= 0) continue;
        if (q == dst) {
          std::vector<Point> path{dst};
          for (Point c = p; c != src;) {
            path.push_back(c);
            long long pi = parent[index(c)];
            c = {lo_.x + pi % w_, lo_.y + pi / w_};
          }
          path.push_back(src);
          std::reverse(path.begin(), path.end());
          return path;
        }
        std::size_t qi = index(q);
        if (vertex_at_[qi] >= 0 || used[qi]) continue;
        const auto& near = near_[qi];
        if (std::any_of(near.begin(), near.end(), [&](int v) { return v != e.u && v != e.v; })) continue;
        parent[qi] = static_cast<long long>(index(p));
        queue.push_back(q);
      }
    }
    return std::nullopt;
  }

  std::vector<Point> coords_;
  Point lo_, hi_;
  long long w_ = 0, h_ = 0;
  std::vector<int> vertex_at_;
  std::vector<std::vector<int>> near_;
};

std::vector<std::vector<Edge>> edge_orders(const Graph& g, const std::vector<Point>& coords) {
  auto manhattan = [&](const Edge& e) {
    return std::llabs(coords[e.u].x - coords[e.v].x) + std::llabs(coords[e.u].y - coords[e.v].y);
  };
  std::vector<Edge> by_len = g.edges();
  std::stable_sort(by_len.begin(), by_len.end(),
                   [&](const Edge& a, const Edge& b) { return manhattan(a) < manhattan(b); });
  std::vector<Edge> rev(by_len.rbegin(), by_len.rend());
  return {by_len, g.edges(), rev};
}

std::optional<GridEmbedding> route_with(const Graph& g, const std::vector<Point>& coords, long long margin) {
  Router router(coords, margin);
  for (const auto& order : edge_orders(g, coords))
    if (auto edges = router.route_all(order)) return GridEmbedding{coords, std::move(*edges), 1};
  return std::nullopt;
}

long long total_length(const GridEmbedding& e) {
  long long s = 0;
  for (const auto& ee : e.edges) s += ee.length();
  return s;
}

// Tiny graphs: try every placement in boxes of growing area and keep the
// shortest drawing in the first box that admits one.
std::optional<GridEmbedding> embed_small(const Graph& g) {
  const int n = g.n();
  std::vector<std::pair<int, int>> boxes;
  for (int w = 1; w <= 3; ++w)
    for (int h = 1; h <= w; ++h)
      if (w * h >= n) boxes.emplace_back(w, h);
  std::sort(boxes.begin(), boxes.end(), [](auto a, auto b) {
    return std::pair(a.first * a.second, a.first - a.second) < std::pair(b.first * b.second, b.first - b.second);
  });
  for (auto [w, h] : boxes) {
    std::optional<GridEmbedding> best;
    std::vector<char> taken(static_cast<std::size_t>(w * h), 0);
    std::vector<Point> coords(n);
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        auto e = route_with(g, coords, 2);
        if (e && (!best || total_length(*e) < total_length(*best))) best = std::move(e);
        return;
      }
      for (int s = 0; s < w * h; ++s) {
        if (taken[s]) continue;
        taken[s] = 1;
        coords[v] = {s % w, s / w};
        self(self, v + 1);
        taken[s] = 0;
      }
    };
    rec(rec, 0);
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<GridEmbedding> embed_straight_line(const Graph& g) {
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  planar_embedding(bg, storage);
  boost::make_connected(bg);
  planar_embedding(bg, storage);
  BEmbedding emb(storage.begin(), boost::get(boost::vertex_index, bg));
  boost::make_biconnected_planar(bg, emb);
  planar_embedding(bg, storage);
  emb = BEmbedding(storage.begin(), boost::get(boost::vertex_index, bg));
  boost::make_maximal_planar(bg, emb);
  if (!planar_embedding(bg, storage)) throw std::logic_error("planarity lost while triangulating");
  emb = BEmbedding(storage.begin(), boost::get(boost::vertex_index, bg));

  std::vector<BVertex> ordering;
  boost::planar_canonical_ordering(bg, emb, std::back_inserter(ordering));
  struct Coord {
    std::size_t x = 0, y = 0;
  };
  std::vector<Coord> pos(boost::num_vertices(bg));
  boost::chrobak_payne_straight_line_drawing(
      bg, emb, ordering.begin(), ordering.end(),
      boost::make_iterator_property_map(pos.begin(), boost::get(boost::vertex_index, bg)));

  // Rank-compress each axis; distinct points stay distinct.
  auto ranks = [&](auto key) {
    std::vector<std::size_t> vals;
    for (const auto& p : pos) vals.push_back(key(p));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<long long> r;
    for (const auto& p : pos)
      r.push_back(std::lower_bound(vals.begin(), vals.end(), key(p)) - vals.begin());
    return r;
  };
  auto rx = ranks([](const Coord& c) { return c.x; });
  auto ry = ranks([](const Coord& c) { return c.y; });
  for (long long f : {2, 3, 4, 6, 8}) {
    std::vector<Point> coords;
    for (int v = 0; v < g.n(); ++v) coords.push_back({rx[v] * f, ry[v] * f});
    if (auto e = route_with(g, coords, f + 2)) return e;
  }
  return std::nullopt;
}


// Fallback that always succeeds on planar graphs of maximum degree 4: a
// visibility representation from an st-numbering of a biconnected
// augmentation, then a small private routing problem around each vertex.

std::vector<std::vector<int>> rotation_system(const Graph& g) {
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  if (!planar_embedding(bg, storage)) throw std::logic_error("augmented graph is not planar");
  std::vector<std::vector<int>> rot(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (const auto& e : storage[v]) {
      const int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  return rot;
}

// Connected, biconnected planar supergraph on the same vertices, no parallel edges.
Graph biconnected_augmentation(const Graph& g) {
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  boost::make_connected(bg);
  planar_embedding(bg, storage);
  BEmbedding emb(storage.begin(), boost::get(boost::vertex_index, bg));
  boost::make_biconnected_planar(bg, emb);
  std::vector<Edge> edges;
  for (auto e : boost::make_iterator_range(boost::edges(bg))) {
    const int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return graph_from_edges(g.n(), edges);
}

// st-numbering of a biconnected graph by the two-pass DFS of Tarjan (1986).
std::vector<int> st_numbering(const Graph& g, int s, int t) {
  const int n = g.n();
  std::vector<int> pre(n, -1), parent(n, -1), low(n), order;
  std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
  pre[s] = 0;
  order.push_back(s);
  low[s] = s;
  // Visit t first so the tree starts with the edge (s, t).
  auto neighbors = [&](int v) {
    std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    if (v == s) std::stable_partition(nb.begin(), nb.end(), [&](int w) { return w == t; });
    return nb;
  };
  std::vector<std::vector<int>> nbs(n);
  for (int v = 0; v < n; ++v) nbs[v] = neighbors(v);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < nbs[v].size()) {
      const int w = nbs[v][i++];
      if (pre[w] < 0) {
        pre[w] = static_cast<int>(order.size());
        order.push_back(w);
        parent[w] = v;
        low[w] = w;
        stack.push_back({w, 0});
      } else if (w != parent[v] && pre[w] < pre[low[v]]) {
        low[v] = w;
      }
    } else {
      const int done = v;
      stack.pop_back();
      if (!stack.empty()) {
        const int p = stack.back().first;
        if (pre[low[done]] < pre[low[p]]) low[p] = low[done];
      }
    }
  }
  std::list<int> seq{s, t};
  std::vector<std::list<int>::iterator> where(n);
  where[s] = seq.begin();
  where[t] = std::next(seq.begin());
  std::vector<char> minus(n, 0);
  minus[s] = 1;
  for (int v : order) {
    if (v == s || v == t) continue;
    const int p = parent[v];
    if (minus[low[v]]) {
      where[v] = seq.insert(where[p], v);
      minus[p] = 0;
    } else {
      where[v] = seq.insert(std::next(where[p]), v);
      minus[p] = 1;
    }
  }
  std::vector<int> number(n);
  int k = 0;
  for (int v : seq) number[v] = k++;
  return number;
}

struct Visibility {
  std::vector<long long> y;                  // per vertex
  std::map<std::pair<int, int>, long long> column;  // per augmented edge (u < v)
};

Visibility visibility(const Graph& aug) {
  const int n = aug.n();
  const auto rot = rotation_system(aug);
  const int s = aug.edges().front().u, t = aug.edges().front().v;
  const std::vector<int> st = st_numbering(aug, s, t);
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    bool lower = false, higher = false;
    for (int w : aug.neighbors(v)) (st[w] < st[v] ? lower : higher) = true;
    if (!lower || !higher) throw std::logic_error("st-numbering failed");
  }

  // Trace faces: dart (u, v) continues with (v, successor of u around v).
  std::map<std::pair<int, int>, int> face;
  int faces = 0;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) {
      if (face.contains({u, v})) continue;
      for (int a = u, b = v; !face.contains({a, b});) {
        face[{a, b}] = faces;
        const auto& r = rot[b];
        const auto it = std::find(r.begin(), r.end(), a);
        const int c = r[(static_cast<std::size_t>(it - r.begin()) + 1) % r.size()];
        a = b;
        b = c;
      }
      ++faces;
    }
  // The face left of s->t is the outer face; it splits into s* and t*.
  const int outer = face[{t, s}];
  const int s_star = faces, t_star = faces + 1;
  std::vector<std::vector<int>> dual(faces + 2);
  std::vector<int> indeg(faces + 2, 0);
  std::map<std::pair<int, int>, int> left_of;
  for (const auto& e : aug.edges()) {
    const int lo = st[e.u] < st[e.v] ? e.u : e.v, hi = lo == e.u ? e.v : e.u;
    int left = face[{hi, lo}], right = face[{lo, hi}];
    if (lo == s && hi == t) {
      left = s_star;
    } else {
      if (left == outer) throw std::logic_error("outer face on the wrong side");
      if (right == outer) right = t_star;
    }
    left_of[{e.u, e.v}] = left;
    dual[left].push_back(right);
    ++indeg[right];
  }
  std::vector<long long> x(faces + 2, 0);
  std::vector<int> queue;
  for (int f = 0; f < faces + 2; ++f)
    if (f != outer && indeg[f] == 0) queue.push_back(f);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int f : dual[queue[i]]) {
      x[f] = std::max(x[f], x[queue[i]] + 1);
      if (--indeg[f] == 0) queue.push_back(f);
    }
  if (queue.size() != static_cast<std::size_t>(faces + 1)) throw std::logic_error("dual graph is not acyclic");

  Visibility vis;
  vis.y.assign(st.begin(), st.end());
  for (const auto& [e, f] : left_of) vis.column[e] = x[f];
  return vis;
}

// Routes one vertex's edges inside its private box: from the vertex point
// to each terminal, pairwise disjoint, touching no other terminal.
std::optional<std::pair<Point, std::vector<std::vector<Point>>>> route_locally(
    const std::vector<Point>& terminals, long long row, long long xlo, long long xhi) {
  const long long ylo = row - 2, yhi = row + 2;
  const long long w = xhi - xlo + 1;
  auto idx = [&](const Point& p) { return static_cast<std::size_t>((p.y - ylo) * w + (p.x - xlo)); };
  auto inside = [&](const Point& p) { return p.x >= xlo && p.x <= xhi && p.y >= ylo && p.y <= yhi; };

  std::vector<Point> centres;
  for (long long y = row - 1; y <= row + 1; ++y)
    for (long long x = xlo; x <= xhi; ++x) centres.push_back({x, y});
  auto cost = [&](const Point& c) {
    long long s = 0;
    for (const auto& t : terminals) s += std::llabs(t.x - c.x) + std::llabs(t.y - c.y);
    return std::pair(s, std::llabs(c.y - row));
  };
  std::stable_sort(centres.begin(), centres.end(), [&](const Point& a, const Point& b) { return cost(a) < cost(b); });

  std::vector<int> perm(terminals.size());
  for (const auto& c : centres) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<char> used(static_cast<std::size_t>(w * 5), 0);
      used[idx(c)] = 1;
      for (const auto& t : terminals) used[idx(t)] = 1;
      std::vector<std::vector<Point>> paths(terminals.size());
      bool ok = true;
      for (int k : perm) {
        const Point goal = terminals[k];
        std::vector<long long> parent(used.size(), -1);
        std::deque<Point> queue{c};
        parent[idx(c)] = static_cast<long long>(idx(c));
        bool found = false;
        while (!queue.empty() && !found) {
          const Point p = queue.front();
          queue.pop_front();
          for (const auto& s : kSteps) {
            const Point q{p.x + s.x, p.y + s.y};
            if (!inside(q) || parent[idx(q)] >= 0) continue;
            if (q != goal && used[idx(q)]) continue;
            parent[idx(q)] = static_cast<long long>(idx(p));
            if (q == goal) {
              found = true;
              break;
            }
            queue.push_back(q);
          }
        }
        if (!found) {
          ok = false;
          break;
        }
        std::vector<Point> path;
        for (Point p = goal; p != c;) {
          path.push_back(p);
          const long long pi = parent[idx(p)];
          p = {xlo + pi % w, ylo + pi / w};
        }
        path.push_back(c);
        std::reverse(path.begin(), path.end());
        for (std::size_t i = 1; i + 1 < path.size(); ++i) used[idx(path[i])] = 1;
        paths[k] = std::move(path);
      }
      if (ok) return std::pair(c, std::move(paths));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

// Drops lattice columns (rows) crossed only by straight horizontal
// (vertical) runs; the drawing stays valid since the map is injective.
void compact(GridEmbedding& e) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int axis = 0; axis < 2 && !changed; ++axis) {
      auto key = [&](const Point& p) { return axis == 0 ? p.x : p.y; };
      std::set<long long> keep, all;
      for (const auto& p : e.coords) keep.insert(key(p));
      for (const auto& ee : e.edges)
        for (std::size_t i = 0; i < ee.path.size(); ++i) {
          const long long k = key(ee.path[i]);
          all.insert(k);
          if (i == 0 || i + 1 == ee.path.size()) {
            keep.insert(k);
            continue;
          }
          const long long a = key(ee.path[i - 1]), b = key(ee.path[i + 1]);
          if (a == k || b == k) keep.insert(k);  // a step within this line, not across it
        }
      for (long long k : all) {
        if (keep.contains(k)) continue;
        auto shift = [&](Point& p) {
          long long& c = axis == 0 ? p.x : p.y;
          if (c > k) --c;
        };
        for (auto& p : e.coords) shift(p);
        for (auto& ee : e.edges) {
          std::erase_if(ee.path, [&](const Point& p) { return key(p) == k; });
          for (auto& p : ee.path) shift(p);
        }
        changed = true;
        break;
      }
    }
  }
}

std::optional<GridEmbedding> embed_by_visibility(const Graph& g) {
  if (g.n() < 3) return std::nullopt;
  const Graph aug = biconnected_augmentation(g);
  const Visibility vis = visibility(aug);
  constexpr long long kScale = 6;

  GridEmbedding out;
  out.coords.resize(g.n());
  std::map<std::pair<int, int>, std::vector<Point>> half;  // (vertex, neighbor) -> vertex point .. terminal
  for (Vertex v = 0; v < g.n(); ++v) {
    const long long row = vis.y[v] * kScale;
    std::vector<Point> terminals;
    long long lo = std::numeric_limits<long long>::max(), hi = std::numeric_limits<long long>::min();
    for (const auto& [e, c] : vis.column)
      if (e.first == v || e.second == v) {
        lo = std::min(lo, c * kScale);
        hi = std::max(hi, c * kScale);
      }
    std::vector<Vertex> nbs(g.neighbors(v).begin(), g.neighbors(v).end());
    for (Vertex w : nbs) {
      const long long c = vis.column.at({std::min(v, w), std::max(v, w)}) * kScale;
      terminals.push_back({c, vis.y[w] > vis.y[v] ? row + 2 : row - 2});
    }
    auto local = route_locally(terminals, row, lo - 2, hi + 2);
    if (!local) return std::nullopt;
    out.coords[v] = local->first;
    for (std::size_t i = 0; i < nbs.size(); ++i) half[{v, nbs[i]}] = std::move(local->second[i]);
  }
  for (const auto& e : g.edges()) {
    std::vector<Point> path = half.at({e.u, e.v});
    const std::vector<Point>& back = half.at({e.v, e.u});
    const Point a = path.back(), b = back.back();
    const long long step = b.y > a.y ? 1 : -1;
    for (long long y = a.y + step; y != b.y; y += step) path.push_back({a.x, y});
    path.insert(path.end(), back.rbegin(), back.rend());
    out.edges.push_back({e, std::move(path)});
  }
  compact(out);
  if (!validate_embedding(out) && !validate_embedding(scale_embedding(out, 2)))
    throw std::logic_error("visibility drawing is invalid");
  return out;
}

}  // namespace

bool is_planar(const Graph& g) {
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  return planar_embedding(bg, storage);
}

GridEmbedding embed_orthogonal(const Graph& g, int scale) {
  if (scale < 2) throw InputError("scale must be at least 2 so every edge gets an interior grid vertex");
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 4)
      throw EmbeddingError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " > 4");
  if (!is_planar(g)) throw EmbeddingError("graph is not planar");

  std::optional<GridEmbedding> base;
  if (g.n() == 0) {
    base = GridEmbedding{};
  } else if (g.n() <= 5) {
    base = embed_small(g);
  }
  if (!base && g.n() >= 3) base = embed_straight_line(g);
  if (!base) base = embed_by_visibility(g);
  if (!base) throw EmbeddingError("edge routing failed");

  GridEmbedding out = scale_embedding(*base, scale);
  std::vector<std::string> why;
  if (!validate_embedding(out, &why)) throw std::logic_error("embedder produced an invalid drawing: " + why.front());
  return out;
}

}  // namespace hopdom
