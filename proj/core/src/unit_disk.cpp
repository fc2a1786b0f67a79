#include "hopdom/unit_disk.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "hopdom/reductions.hpp"

namespace hopdom {

namespace {

// Internal coordinates are integers in units of 1/64; designs below are
// written in units of 1/16 and relative to a lattice point, with +x along
// the run direction.
constexpr long long kDen = 64;
constexpr long long kAdjMax = 56 * 56;     // (7/8)^2
constexpr long long kTouch = 64 * 64;      // 1
constexpr long long kNonAdjMin = 72 * 72;  // (9/8)^2

using P = Point;
using List = std::vector<P>;

struct VertexPort {
  List chain;  // chain disks next to a vertex, nearest first
  List pend;   // pendant path
};

struct GridPort {
  List cd;          // C_d^1..C_d^4
  List inc, inp;    // incoming chain (nearest first) and its pendant
  List out, outp;   // outgoing chain (nearest first) and its pendant
};

struct Design {
  long long lattice;  // lattice unit, in 1/16
  int nchain;
  int start_anchor, end_anchor;
  std::array<int, 3> start_names, end_names;
  int pend_len;
  VertexPort vport;
  GridPort straight, left;
};

const Design& design(Problem p) {
  static const Design hd{
      104, 7, 1, 7, {8, 9, 0}, {10, 11, 0}, 2,
      {{{14, 0}, {23, -9}, {35, -5}, {47, 0}}, {{23, 9}, {32, 18}}},
      {{{-6, 0}, {6, 0}, {0, -10}, {0, -22}},
       {{-19, 0}, {-33, 0}}, {{-20, 13}, {-21, 25}},
       {{19, 0}, {33, 0}}, {{20, 13}, {21, 25}}},
      {{{-8, 0}, {0, 8}, {2, -2}, {11, -11}},
       {{-20, 0}, {-34, 0}}, {{-21, -13}, {-22, -25}},
       {{0, 20}, {0, 34}}, {{13, 21}, {25, 22}}}};
  static const Design sd{
      124, 8, 2, 7, {9, 10, 11}, {14, 15, 16}, 3,
      {{{14, 0}, {23, -9}, {36, -4}, {49, 0}}, {{24, -22}, {36, -28}, {48, -34}}},
      {{{-6, 0}, {6, 0}, {0, -10}, {0, -22}},
       {{-20, 0}, {-34, 0}, {-48, 0}}, {{-35, 13}, {-36, 25}, {-37, 37}},
       {{20, 0}, {34, 0}, {48, 0}}, {{35, 13}, {36, 25}, {37, 37}}},
      {{{-8, 0}, {0, 8}, {2, -2}, {11, -11}},
       {{-20, 0}, {-34, 0}, {-48, 0}}, {{-35, -13}, {-36, -25}, {-37, -37}},
       {{0, 20}, {0, 34}, {0, 48}}, {{13, 35}, {25, 36}, {37, 37}}}};
  return p == Problem::HopDom ? hd : sd;
}

P rot90(P p) { return {-p.y, p.x}; }

GridPort mirrored(const GridPort& g) {
  auto m = [](List l) {
    for (auto& p : l) p.y = -p.y;
    return l;
  };
  return {m(g.cd), m(g.inc), m(g.inp), m(g.out), m(g.outp)};
}

GridPort grid_port(const Design& d, P in, P out) {
  if (in == out) return d.straight;
  if (rot90(in) == out) return d.left;
  if (rot90(rot90(rot90(in))) == out) return mirrored(d.left);
  throw PreconditionError("edge path reverses direction");
}

// Places a design point (1/16 units) in the frame with +x along dir.
P place(P dir, P origin, P p) {
  const long long x = 4 * p.x, y = 4 * p.y;
  return {origin.x + x * dir.x - y * dir.y, origin.y + x * dir.y + y * dir.x};
}

long long round_div(long long num, long long den) {
  if (den < 0) num = -num, den = -den;
  return num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
}

long long dist_sq(P a, P b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

std::string edge_tag(const Edge& e) { return "{" + std::to_string(e.u) + ";" + std::to_string(e.v) + "}"; }

struct Builder {
  std::vector<P> centers;
  std::vector<std::string> roles;
  std::vector<Edge> template_edges;

  Vertex add(P c, std::string role) {
    centers.push_back(c);
    roles.push_back(std::move(role));
    return static_cast<Vertex>(centers.size()) - 1;
  }
  void link(Vertex a, Vertex b) { template_edges.push_back({std::min(a, b), std::max(a, b)}); }
};

struct Built {
  DiskLayout layout;
  std::vector<P> centers;
  Graph templ;
};

Built build(Problem problem, const GridEmbedding& e) {
  if (problem == Problem::VertexCover) throw InputError("unit-disk reductions target hd or 2sd");
  std::vector<std::string> why;
  if (!validate_embedding(e, &why)) throw PreconditionError("invalid embedding: " + why.front());
  const Design& D = design(problem);
  const long long unit = 4 * D.lattice;
  const int nc = D.nchain;
  auto W = [&](P p) { return P{p.x * unit, p.y * unit}; };

  Builder b;
  DiskLayout l;
  l.problem = problem;
  l.source = e;
  for (std::size_t v = 0; v < e.coords.size(); ++v) b.add(W(e.coords[v]), "u_" + std::to_string(v));

  for (const auto& ee : e.edges) {
    const int k = ee.length();
    const auto& path = ee.path;
    std::vector<P> dirs;
    for (int r = 0; r < k; ++r) dirs.push_back({path[r + 1].x - path[r].x, path[r + 1].y - path[r].y});
    EdgeDisks ed{ee.edge, {}, {}};
    const std::string tag = edge_tag(ee.edge);

    for (int r = 0; r < k; ++r) {
      if (r > 0) {
        GridPort g = grid_port(D, dirs[r - 1], dirs[r]);
        GridDisks gd;
        gd.c.fill(-1);
        for (int i = 0; i < 4; ++i)
          gd.c[i + 1] = b.add(place(dirs[r - 1], W(path[r]), g.cd[i]),
                              "C_d^" + std::to_string(i + 1) + "_" + tag + "@" + std::to_string(r));
        b.link(gd.c[1], gd.c[2]);
        b.link(gd.c[1], gd.c[3]);
        b.link(gd.c[2], gd.c[3]);
        b.link(gd.c[3], gd.c[4]);
        ed.grids.push_back(gd);
      }

      const P dr = dirs[r], back{-dr.x, -dr.y};
      std::array<P, 17> pos{};
      std::vector<P> start_pend, end_pend;
      std::size_t ns, ne;
      if (r == 0) {
        for (std::size_t i = 0; i < D.vport.chain.size(); ++i) pos[i + 1] = place(dr, W(path[r]), D.vport.chain[i]);
        for (const auto& p : D.vport.pend) start_pend.push_back(place(dr, W(path[r]), p));
        ns = D.vport.chain.size();
      } else {
        GridPort g = grid_port(D, dirs[r - 1], dr);
        for (std::size_t i = 0; i < g.out.size(); ++i) pos[i + 1] = place(dirs[r - 1], W(path[r]), g.out[i]);
        for (const auto& p : g.outp) start_pend.push_back(place(dirs[r - 1], W(path[r]), p));
        ns = g.out.size();
      }
      if (r == k - 1) {
        for (std::size_t i = 0; i < D.vport.chain.size(); ++i) pos[nc - i] = place(back, W(path[r + 1]), D.vport.chain[i]);
        for (const auto& p : D.vport.pend) end_pend.push_back(place(back, W(path[r + 1]), p));
        ne = D.vport.chain.size();
      } else {
        GridPort g = grid_port(D, dr, dirs[r + 1]);
        for (std::size_t i = 0; i < g.inc.size(); ++i) pos[nc - i] = place(dr, W(path[r + 1]), g.inc[i]);
        for (const auto& p : g.inp) end_pend.push_back(place(dr, W(path[r + 1]), p));
        ne = g.inc.size();
      }
      if (ns + ne > static_cast<std::size_t>(nc)) throw std::logic_error("gadget ports overlap");
      const P a = pos[ns], z = pos[nc - ne + 1];
      const long long gaps = static_cast<long long>(nc - ne + 1 - ns);
      for (long long i = 1; i < gaps; ++i)
        pos[ns + i] = {a.x + round_div((z.x - a.x) * i, gaps), a.y + round_div((z.y - a.y) * i, gaps)};
      if (problem == Problem::TwoStepDom) {
        // Bridge pair off the middle of the chain; it sits on the side away
        // from the end pendant.
        const long long side = (r == k - 1) ? -1 : 1;
        const P nrm = rot90(dr);
        const P mid{(pos[4].x + pos[5].x) / 2, (pos[4].y + pos[5].y) / 2};
        pos[12] = {mid.x + 48 * side * nrm.x, mid.y + 48 * side * nrm.y};
        pos[13] = {mid.x + 96 * side * nrm.x, mid.y + 96 * side * nrm.y};
      }
      for (int i = 0; i < D.pend_len; ++i) {
        pos[D.start_names[i]] = start_pend[i];
        pos[D.end_names[i]] = end_pend[i];
      }

      RunDisks rd;
      rd.c.fill(-1);
      const int top = problem == Problem::HopDom ? 11 : 16;
      for (int p = 1; p <= top; ++p)
        rd.c[p] = b.add(pos[p], "C^" + std::to_string(p) + "_" + tag + "@" + std::to_string(r));

      const Vertex x = r == 0 ? ee.edge.u : ed.grids[r - 1].c[2];
      b.link(x, rd.c[1]);
      for (int p = 1; p < nc; ++p) b.link(rd.c[p], rd.c[p + 1]);
      Vertex prev = rd.c[D.start_anchor];
      for (int i = 0; i < D.pend_len; ++i) b.link(prev, rd.c[D.start_names[i]]), prev = rd.c[D.start_names[i]];
      prev = rd.c[D.end_anchor];
      for (int i = 0; i < D.pend_len; ++i) b.link(prev, rd.c[D.end_names[i]]), prev = rd.c[D.end_names[i]];
      if (problem == Problem::TwoStepDom) {
        b.link(rd.c[4], rd.c[12]);
        b.link(rd.c[5], rd.c[12]);
        b.link(rd.c[12], rd.c[13]);
      }
      ed.runs.push_back(rd);
    }
    // The far end of each run attaches to the next grid gadget or to v.
    for (int r = 0; r < k; ++r) {
      const Vertex y = r == k - 1 ? ee.edge.v : ed.grids[r].c[1];
      b.link(ed.runs[r].c[nc], y);
    }
    l.offset += problem == Problem::HopDom ? 4 * k - 1 : 8 * k - 1;
    l.edges.push_back(std::move(ed));
  }

  for (std::size_t i = 0; i < b.centers.size(); ++i)
    l.disks.push_back({Rational(b.centers[i].x, kDen), Rational(b.centers[i].y, kDen), b.roles[i]});
  Graph templ = graph_from_edges(static_cast<int>(b.centers.size()), b.template_edges);
  return {std::move(l), std::move(b.centers), std::move(templ)};
}

std::vector<P> centers_of(const DiskLayout& l) {
  std::vector<P> c;
  for (const auto& d : l.disks) {
    Rational x = d.cx * Rational(kDen), y = d.cy * Rational(kDen);
    if (x.den() != 1 || y.den() != 1) throw InputError("disk centers must be multiples of 1/64");
    c.push_back({x.num(), y.num()});
  }
  return c;
}

}  // namespace

bool SeparationStats::holds() const {
  return max_adjacent_sq <= Rational(49, 64) && min_nonadjacent_sq >= Rational(81, 64);
}

DiskLayout reduce_unit_disk(Problem problem, const GridEmbedding& e) {
  Built built = build(problem, e);
  const auto& c = built.centers;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const long long d = dist_sq(c[i], c[j]);
      const bool want = built.templ.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if ((want && d > kAdjMax) || (!want && d < kNonAdjMin)) {
        std::ostringstream msg;
        msg << "disks " << built.layout.disks[i].role << " and " << built.layout.disks[j].role << " at squared distance "
            << Rational(d, kDen * kDen).to_string() << " break the separation band";
        throw PlacementError(msg.str());
      }
    }
  return std::move(built.layout);
}

Graph intersection_graph(const DiskLayout& l) {
  const auto c = centers_of(l);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (dist_sq(c[i], c[j]) <= kTouch) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return graph_from_edges(static_cast<int>(c.size()), edges);
}

Graph template_graph(const DiskLayout& l) { return build(l.problem, l.source).templ; }

bool template_fidelity(const DiskLayout& l, std::vector<std::string>* diagnostics) {
  const Graph got = intersection_graph(l), want = template_graph(l);
  if (got.n() != want.n()) {
    if (diagnostics) diagnostics->push_back("disk count differs from the template");
    return false;
  }
  std::vector<Edge> a = got.edges(), b = want.edges(), diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diagnostics)
    for (const auto& e : diff)
      diagnostics->push_back((got.adjacent(e.u, e.v) ? "unexpected contact " : "missing contact ") +
                             l.disks[e.u].role + " - " + l.disks[e.v].role);
  return diff.empty();
}

SeparationStats separation_stats(const DiskLayout& l) {
  const auto c = centers_of(l);
  long long max_adj = 0, min_non = std::numeric_limits<long long>::max();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const long long d = dist_sq(c[i], c[j]);
      if (d <= kTouch)
        max_adj = std::max(max_adj, d);
      else
        min_non = std::min(min_non, d);
    }
  if (min_non == std::numeric_limits<long long>::max()) min_non = 1LL << 40;
  return {Rational(max_adj, kDen * kDen), Rational(min_non, kDen * kDen)};
}

int printed_offset(Problem problem, const GridEmbedding& e) {
  int total = 0;
  for (const auto& ee : e.edges) {
    const int k = ee.length();
    total += problem == Problem::HopDom ? 3 * k + k - 1 : 7 * (k + 1) + k;
  }
  return total;
}

VertexSet unit_disk_forward_certificate(const DiskLayout& l, const VertexSet& vc) {
  const Graph source = embedded_graph(l.source);
  if (!vc.within(source.n()) || !is_vertex_cover(source, vc))
    throw PreconditionError("certificate input is not a vertex cover of the embedded graph");
  const bool hd = l.problem == Problem::HopDom;
  const std::vector<int> u_side = hd ? std::vector<int>{1, 6, 7} : std::vector<int>{1, 2, 5, 6, 7, 9, 14};
  const std::vector<int> v_side = hd ? std::vector<int>{1, 2, 7} : std::vector<int>{1, 2, 4, 6, 7, 9, 14};
  std::vector<Vertex> out(vc.begin(), vc.end());
  for (const auto& ed : l.edges) {
    const bool from_u = vc.contains(ed.edge.u);
    for (const auto& run : ed.runs)
      for (int p : from_u ? u_side : v_side) out.push_back(run.c[p]);
    for (const auto& g : ed.grids) out.push_back(g.c[from_u ? 2 : 1]);
  }
  return VertexSet::from_unsorted(std::move(out));
}

VertexSet unit_disk_extract_vertex_cover(const DiskLayout& l, const VertexSet& sol) {
  const Graph g2 = intersection_graph(l);
  if (!sol.within(g2.n()) || !is_feasible(g2, l.problem, sol))
    throw PreconditionError("extraction input is not a valid solution of the disk graph");
  const int n1 = static_cast<int>(l.source.coords.size());
  std::vector<char> pick(n1, 0);
  for (Vertex v : sol)
    if (v < n1) pick[v] = 1;
  auto leans = [&](Vertex i) {
    return std::any_of(g2.neighbors(i).begin(), g2.neighbors(i).end(), [&](Vertex x) { return sol.contains(x); });
  };
  for (const auto& ed : l.edges) {
    const Edge e = ed.edge;
    if (pick[e.u] || pick[e.v]) continue;
    pick[leans(e.u) || !leans(e.v) ? e.u : e.v] = 1;
  }
  std::vector<Vertex> cover;
  for (Vertex i = 0; i < n1; ++i)
    if (pick[i]) cover.push_back(i);
  const long long allowed = static_cast<long long>(sol.size()) - l.offset;
  if (static_cast<long long>(cover.size()) > allowed)
    throw ExtractionError("extraction needs " + std::to_string(cover.size()) + " vertex disks but only " +
                          std::to_string(allowed) + " are licensed");
  return VertexSet(std::move(cover));
}

std::string layout_csv(const DiskLayout& l) {
  std::ostringstream out;
  out << "id,role,cx_num,cx_den,cy_num,cy_den\n";
  for (std::size_t i = 0; i < l.disks.size(); ++i) {
    const auto& d = l.disks[i];
    out << i << ',' << d.role << ',' << d.cx.num() << ',' << d.cx.den() << ',' << d.cy.num() << ',' << d.cy.den()
        << '\n';
  }
  return out.str();
}

namespace {

std::string role_color(const std::string& role) {
  if (role.rfind("u_", 0) == 0) return "#d62728";
  if (role.rfind("C_d", 0) == 0) return "#2ca02c";
  return "#1f77b4";
}

}  // namespace

std::string layout_svg(const DiskLayout& l) {
  constexpr double px = 40.0;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& d : l.disks) {
    const double x = d.cx.to_double(), y = d.cy.to_double();
    if (first) x0 = x1 = x, y0 = y1 = y, first = false;
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  x0 -= 1, y0 -= 1, x1 += 1, y1 += 1;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x1 - x0) * px << "\" height=\"" << (y1 - y0) * px
      << "\">\n";
  for (const auto& d : l.disks) {
    // SVG y grows downwards.
    out << "  <circle cx=\"" << (d.cx.to_double() - x0) * px << "\" cy=\"" << (y1 - d.cy.to_double()) * px
        << "\" r=\"" << px / 2 << "\" fill=\"" << role_color(d.role)
        << "\" fill-opacity=\"0.25\" stroke=\"black\" stroke-width=\"1\"><title>" << d.role << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string layout_dot(const DiskLayout& l) {
  const Graph g = intersection_graph(l);
  std::ostringstream out;
  out << "graph disks {\n";
  for (std::size_t i = 0; i < l.disks.size(); ++i)
    out << "  " << i << " [label=\"" << l.disks[i].role << "\", color=\"" << role_color(l.disks[i].role) << "\"];\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hopdom
