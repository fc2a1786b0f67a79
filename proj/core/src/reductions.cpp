#include "hopdom/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hopdom {

std::string ReductionKind::name() const {
  std::string out = problem == Problem::HopDom ? "hd-" : "2sd-";
  switch (family) {
    case Family::ThreeRegular: out += "3reg"; break;
    case Family::DRegular: out += "dreg:" + std::to_string(d); break;
    case Family::ClawFree: out += "claw"; break;
    case Family::UnitDisk: out += "ud"; break;
  }
  return out;
}

std::optional<ReductionKind> parse_kind(std::string_view text, int default_d) {
  ReductionKind k;
  std::string_view rest;
  if (text.starts_with("hd-")) {
    k.problem = Problem::HopDom;
    rest = text.substr(3);
  } else if (text.starts_with("2sd-")) {
    k.problem = Problem::TwoStepDom;
    rest = text.substr(4);
  } else {
    return std::nullopt;
  }
  if (rest == "3reg") {
    k.family = Family::ThreeRegular;
  } else if (rest == "claw") {
    k.family = Family::ClawFree;
  } else if (rest == "ud") {
    k.family = Family::UnitDisk;
  } else if (rest.starts_with("dreg")) {
    k.family = Family::DRegular;
    k.d = default_d;
    std::string_view tail = rest.substr(4);
    if (!tail.empty()) {
      if (tail.front() != ':') return std::nullopt;
      tail.remove_prefix(1);
      auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k.d);
      if (ec != std::errc() || p != tail.data() + tail.size()) return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  return k;
}

int offset_per_edge(const ReductionKind& kind) {
  bool hd = kind.problem == Problem::HopDom;
  switch (kind.family) {
    case Family::ThreeRegular: return hd ? 6 : 3;
    case Family::DRegular: return hd ? 1 : 2;
    case Family::ClawFree: return hd ? 2 : 4;
    case Family::UnitDisk: break;
  }
  throw DispatchError("unit-disk offsets depend on the embedding; use reduce_unit_disk");
}

Vertex Gadget::at(std::string_view name) const {
  for (const auto& [n, id] : members)
    if (n == name) return id;
  throw InputError("gadget has no member named " + std::string(name));
}

namespace {

// Short member names like "d24", "u3.2", "w1" become "d^{24}_{i,j}",
// "u^{3,2}_{i,j}", "w^{1}_{i,j}"; "u" becomes "u_{i,j}".
std::string role_label(std::string_view name, const Edge& e) {
  std::string base(name.substr(0, 1));
  std::string sup(name.substr(1));
  std::replace(sup.begin(), sup.end(), '.', ',');
  std::string sub = "_{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  if (sup.empty()) return base + sub;
  return base + "^{" + sup + "}" + sub;
}

class Assembler {
 public:
  explicit Assembler(const Graph& g1) : b_(g1.n()) {
    for (Vertex i = 0; i < g1.n(); ++i) roles_.push_back("u_" + std::to_string(i));
  }

  Gadget& open(const Edge& e) {
    gadgets_.push_back(Gadget{e, {}});
    return gadgets_.back();
  }
  Vertex add(Gadget& g, const std::string& name) {
    Vertex v = b_.add_vertex();
    roles_.push_back(role_label(name, g.edge));
    g.members.emplace_back(name, v);
    return v;
  }
  void link(Vertex u, Vertex v) { b_.add_edge(u, v); }
  void ensure(Vertex u, Vertex v) { b_.ensure_edge(u, v); }
  GraphBuilder& builder() { return b_; }

  Reduction finish(const ReductionKind& kind, const Graph& g1, int offset) {
    for (Vertex v = 0; v < b_.n(); ++v) b_.set_label(v, roles_[v]);
    Reduction r;
    r.kind = kind;
    r.source = g1;
    r.output = b_.build();
    r.offset = offset;
    r.roles = std::move(roles_);
    r.gadgets = std::move(gadgets_);
    return r;
  }

 private:
  GraphBuilder b_;
  std::vector<std::string> roles_;
  std::vector<Gadget> gadgets_;
};

void three_regular_hd(Assembler& as, const Edge& e) {
  Gadget& g = as.open(e);
  Vertex u = as.add(g, "u");
  Vertex a = as.add(g, "a");
  Vertex b = as.add(g, "b");
  Vertex c = as.add(g, "c");
  Vertex d = as.add(g, "d");
  Vertex ee = as.add(g, "e");
  as.link(u, e.u);
  as.link(u, e.v);
  as.link(a, u);
  as.link(a, b);
  as.link(a, c);
  as.link(b, c);
  as.link(b, d);
  as.link(c, ee);
  for (auto [x, root] : {std::pair<const char*, Vertex>{"d", d}, {"e", ee}}) {
    Vertex rail[2][7];
    for (int p = 0; p < 2; ++p) {
      rail[p][0] = root;
      for (int k = 1; k <= 6; ++k) {
        rail[p][k] = as.add(g, std::string(x) + std::to_string(p + 1) + std::to_string(k));
        as.link(rail[p][k - 1], rail[p][k]);
      }
    }
    for (int k = 1; k <= 4; ++k) as.link(rail[0][k], rail[1][k]);
    as.link(rail[1][5], rail[0][6]);
    as.link(rail[0][5], rail[1][6]);
    as.link(rail[0][6], rail[1][6]);  // completion edge restoring degree 3
  }
}

void three_regular_2sd(Assembler& as, const Edge& e) {
  Gadget& g = as.open(e);
  Vertex u = as.add(g, "u");
  Vertex a = as.add(g, "a");
  Vertex b = as.add(g, "b");
  Vertex c = as.add(g, "c");
  as.link(u, e.u);
  as.link(u, e.v);
  as.link(a, u);
  as.link(a, b);
  as.link(a, c);
  for (auto [x, root] : {std::pair<const char*, Vertex>{"b", b}, {"c", c}}) {
    std::string s(x);
    Vertex x11 = as.add(g, s + "11");
    Vertex x12 = as.add(g, s + "12");
    Vertex x21 = as.add(g, s + "21");
    Vertex x22 = as.add(g, s + "22");
    as.link(root, x11);
    as.link(root, x21);
    as.link(x11, x12);
    as.link(x21, x22);
    as.link(x11, x22);
    as.link(x21, x12);
    as.link(x12, x22);
  }
}

void d_regular_hd(Assembler& as, const Edge& e, int d, const Graph& level2) {
  Gadget& g = as.open(e);
  Vertex u = as.add(g, "u");
  as.link(u, e.u);
  as.link(u, e.v);
  std::vector<Vertex> mid;
  for (int k = 1; k <= d - 2; ++k) {
    mid.push_back(as.add(g, "u" + std::to_string(k)));
    as.link(u, mid.back());
  }
  std::vector<Vertex> leaves;
  for (int k = 1; k <= d - 2; ++k)
    for (int m = 1; m <= d - 1; ++m) {
      leaves.push_back(as.add(g, "u" + std::to_string(k) + "." + std::to_string(m)));
      as.link(mid[k - 1], leaves.back());
    }
  for (const auto& le : level2.edges()) as.link(leaves[le.u], leaves[le.v]);
}

void d_regular_2sd(Assembler& as, const Edge& e, int d) {
  Gadget& g = as.open(e);
  Vertex u = as.add(g, "u");
  as.link(u, e.u);
  as.link(u, e.v);
  std::vector<Vertex> mid, w;
  for (int k = 1; k <= d - 2; ++k) {
    mid.push_back(as.add(g, "u" + std::to_string(k)));
    as.link(u, mid.back());
  }
  for (int k = 1; k <= d - 1; ++k) w.push_back(as.add(g, "w" + std::to_string(k)));
  for (Vertex x : mid)
    for (Vertex y : w) as.link(x, y);
  Vertex p = as.add(g, "p");
  Vertex q = as.add(g, "q");
  for (Vertex y : w) {
    as.link(p, y);
    as.link(q, y);
  }
  as.link(p, q);
}

void claw_hd(Assembler& as, const Edge& e) {
  Gadget& g = as.open(e);
  Vertex a = as.add(g, "a");
  Vertex b = as.add(g, "b");
  Vertex c = as.add(g, "c");
  Vertex b1 = as.add(g, "b1");
  Vertex b2 = as.add(g, "b2");
  Vertex b3 = as.add(g, "b3");
  Vertex b4 = as.add(g, "b4");
  as.link(e.u, a);
  as.link(a, b);
  as.link(b, c);
  as.link(c, e.v);
  as.link(b, b1);
  as.link(b1, b2);
  as.link(b2, b3);
  as.link(b3, b4);
  as.link(b, b2);
  for (Vertex x : {a, b, c, b1})
    for (Vertex y : {a, b, c, b1})
      if (x < y) as.ensure(x, y);
}

void claw_2sd(Assembler& as, const Edge& e) {
  Gadget& g = as.open(e);
  Vertex a = as.add(g, "a");
  Vertex b = as.add(g, "b");
  Vertex c = as.add(g, "c");
  Vertex bb[9];
  for (int k = 1; k <= 8; ++k) bb[k] = as.add(g, "b" + std::to_string(k));
  as.link(e.u, a);
  as.link(a, b);
  as.link(b, c);
  as.link(c, e.v);
  as.link(b, bb[1]);
  as.link(bb[1], bb[2]);
  as.link(bb[2], bb[3]);
  as.link(bb[2], bb[6]);
  as.link(bb[3], bb[4]);
  as.link(bb[4], bb[5]);
  as.link(bb[3], bb[6]);
  as.link(bb[6], bb[7]);
  as.link(bb[7], bb[8]);
}

void close_source_neighborhoods(Assembler& as, const Graph& g1) {
  GraphBuilder& b = as.builder();
  for (Vertex i = 0; i < g1.n(); ++i) {
    std::vector<Vertex> closed{i};
    for (Vertex x = 0; x < b.n(); ++x)
      if (x != i && b.has_edge(i, x)) closed.push_back(x);
    for (std::size_t p = 0; p < closed.size(); ++p)
      for (std::size_t q = p + 1; q < closed.size(); ++q) b.ensure_edge(closed[p], closed[q]);
  }
}

}  // namespace

Reduction reduce(const ReductionKind& kind, const Graph& g1) {
  if (kind.family == Family::UnitDisk)
    throw DispatchError("unit-disk reductions are built by reduce_unit_disk");
  if (kind.family == Family::DRegular && kind.d < 4)
    throw InputError("d-regular reductions need d >= 4");

  Assembler as(g1);
  auto edges = g1.edges();
  Graph level2;
  if (kind.family == Family::DRegular && kind.problem == Problem::HopDom)
    level2 = build_regular_graph((kind.d - 2) * (kind.d - 1), kind.d - 1);

  for (const auto& e : edges) {
    switch (kind.family) {
      case Family::ThreeRegular:
        if (kind.problem == Problem::HopDom)
          three_regular_hd(as, e);
        else
          three_regular_2sd(as, e);
        break;
      case Family::DRegular:
        if (kind.problem == Problem::HopDom)
          d_regular_hd(as, e, kind.d, level2);
        else
          d_regular_2sd(as, e, kind.d);
        break;
      case Family::ClawFree:
        if (kind.problem == Problem::HopDom)
          claw_hd(as, e);
        else
          claw_2sd(as, e);
        break;
      case Family::UnitDisk: break;
    }
  }
  if (kind.family == Family::ClawFree) close_source_neighborhoods(as, g1);
  return as.finish(kind, g1, offset_per_edge(kind) * static_cast<int>(edges.size()));
}

namespace {

std::vector<std::string> certificate_names(const ReductionKind& k) {
  bool hd = k.problem == Problem::HopDom;
  switch (k.family) {
    case Family::ThreeRegular:
      if (hd) return {"b", "c", "d24", "d23", "e24", "e23"};
      return {"a", "b", "c"};
    case Family::DRegular:
      if (hd) return {"u"};
      return {"u", "u1"};
    case Family::ClawFree:
      if (hd) return {"b1", "b2"};
      return {"b3", "b6", "b", "b1"};
    case Family::UnitDisk: break;
  }
  throw DispatchError("unit-disk certificates are built by unit_disk_forward_certificate");
}

}  // namespace

VertexSet forward_certificate(const Reduction& r, const VertexSet& vc) {
  if (!vc.within(r.source.n()) || !is_vertex_cover(r.source, vc))
    throw PreconditionError("certificate input is not a vertex cover of the source graph");
  std::vector<Vertex> out(vc.begin(), vc.end());
  auto names = certificate_names(r.kind);
  for (const auto& g : r.gadgets)
    for (const auto& n : names) out.push_back(g.at(n));
  return VertexSet::from_unsorted(std::move(out));
}

VertexSet extract_vertex_cover(const Reduction& r, const VertexSet& sol) {
  if (!sol.within(r.output.n()) || !is_feasible(r.output, r.kind.problem, sol))
    throw PreconditionError("extraction input is not a valid solution of the reduced instance");
  const int n1 = r.source.n();
  std::vector<char> pick(n1, 0);
  for (Vertex v : sol)
    if (v < n1) pick[v] = 1;

  // Any solution member adjacent to u_i can be traded for u_i; prefer the
  // endpoint the solution already leans towards, else the lower id.
  for (const auto& e : r.source.edges()) {
    if (pick[e.u] || pick[e.v]) continue;
    auto leans = [&](Vertex i) {
      return std::any_of(r.output.neighbors(i).begin(), r.output.neighbors(i).end(),
                         [&](Vertex x) { return sol.contains(x); });
    };
    if (leans(e.u))
      pick[e.u] = 1;
    else if (leans(e.v))
      pick[e.v] = 1;
    else
      pick[e.u] = 1;
  }
  std::vector<Vertex> cover;
  for (Vertex i = 0; i < n1; ++i)
    if (pick[i]) cover.push_back(i);
  long long allowed = static_cast<long long>(sol.size()) - r.offset;
  if (static_cast<long long>(cover.size()) > allowed) {
    std::ostringstream msg;
    msg << "extraction needs " << cover.size() << " source vertices but only " << allowed
        << " are licensed (|sol| = " << sol.size() << ", offset = " << r.offset << ")";
    throw ExtractionError(msg.str());
  }
  return VertexSet(std::move(cover));
}

std::vector<Vertex> gadget_degree_violations(const Reduction& r, int d) {
  std::vector<Vertex> bad;
  for (Vertex v = r.source.n(); v < r.output.n(); ++v)
    if (r.output.degree(v) != d) bad.push_back(v);
  return bad;
}

std::string serialize_reduction(const Reduction& r) {
  std::ostringstream out;
  out << "hopdomlab-reduction v1\n";
  out << "kind " << r.kind.name() << '\n';
  out << "offset " << r.offset << '\n';
  out << "graph\n" << serialize_graph(r.output);
  out << "roles\n";
  for (std::size_t v = 0; v < r.roles.size(); ++v) out << v << '\t' << r.roles[v] << '\n';
  return out.str();
}

ReductionReport parse_reduction_report(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  auto expect_prefix = [&](std::size_t i, std::string_view prefix) {
    if (i >= lines.size() || !lines[i].starts_with(prefix))
      throw ParseError(i + 1, "expected '" + std::string(prefix) + "'");
    return lines[i].substr(prefix.size());
  };
  ReductionReport rep;
  expect_prefix(0, "hopdomlab-reduction v1");
  rep.kind = std::string(expect_prefix(1, "kind "));
  auto off = expect_prefix(2, "offset ");
  auto [p, ec] = std::from_chars(off.data(), off.data() + off.size(), rep.offset);
  if (ec != std::errc() || p != off.data() + off.size()) throw ParseError(3, "bad offset");
  expect_prefix(3, "graph");
  std::size_t roles_at = 4;
  while (roles_at < lines.size() && lines[roles_at] != "roles") ++roles_at;
  if (roles_at == lines.size()) throw ParseError(lines.size(), "missing 'roles' section");
  std::string graph_text;
  for (std::size_t i = 4; i < roles_at; ++i) {
    graph_text += lines[i];
    graph_text += '\n';
  }
  try {
    rep.output = parse_graph(graph_text);
  } catch (const ParseError& e) {
    throw ParseError(e.line() + 4, std::string("in graph section: ") + e.what());
  }
  for (std::size_t i = roles_at + 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto tab = lines[i].find('\t');
    if (tab == std::string_view::npos) throw ParseError(i + 1, "expected id<TAB>role");
    int id = -1;
    auto [q, ec2] = std::from_chars(lines[i].data(), lines[i].data() + tab, id);
    if (ec2 != std::errc() || q != lines[i].data() + tab || id != static_cast<int>(rep.roles.size()))
      throw ParseError(i + 1, "role ids must be consecutive from 0");
    rep.roles.emplace_back(lines[i].substr(tab + 1));
  }
  if (static_cast<int>(rep.roles.size()) != rep.output.n())
    throw ParseError(lines.size(), "role count does not match vertex count");
  return rep;
}

}  // namespace hopdom
