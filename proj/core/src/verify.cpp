#include "hopdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include "hopdom/embedding.hpp"
#include "hopdom/unit_disk.hpp"

namespace hopdom {

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Timeout: return "TIMEOUT";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

int VerifyReport::count(RowStatus s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const VerifyRow& r) { return r.status == s; }));
}

int default_thread_count() {
  if (const char* env = std::getenv("HOPDOMLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// What the row needs from either kind of construction.
struct Instance {
  Graph output;
  int offset = 0;
  std::optional<int> printed_offset;
  std::optional<Reduction> reduction;
  std::optional<DiskLayout> layout;
};

std::string structure_check(const Instance& in, const ReductionKind& kind, const Graph& g1) {
  if (in.layout) {
    std::vector<std::string> why;
    if (!template_fidelity(*in.layout, &why)) return "template mismatch: " + why.front();
    if (!separation_stats(*in.layout).holds()) return "separation band violated";
    return "ok";
  }
  const Reduction& r = *in.reduction;
  switch (kind.family) {
    case Family::ThreeRegular:
    case Family::DRegular: {
      const int d = kind.family == Family::ThreeRegular ? 3 : kind.d;
      auto bad = gadget_degree_violations(r, d);
      if (!bad.empty())
        return std::to_string(bad.size()) + " gadget vertices not of degree " + std::to_string(d) + " (first " +
               r.roles[bad.front()] + ")";
      if (is_regular(g1, d) && !is_regular(r.output, d)) return "output not " + std::to_string(d) + "-regular";
      return "ok";
    }
    case Family::ClawFree:
      return is_claw_free(r.output) ? "ok" : "output contains a claw";
    case Family::UnitDisk: break;
  }
  return "-";
}

VertexSet forward(const Instance& in, const VertexSet& vc) {
  return in.layout ? unit_disk_forward_certificate(*in.layout, vc) : forward_certificate(*in.reduction, vc);
}

VertexSet extract(const Instance& in, const VertexSet& sol) {
  return in.layout ? unit_disk_extract_vertex_cover(*in.layout, sol) : extract_vertex_cover(*in.reduction, sol);
}

std::string clean(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

void add_note(VerifyRow& row, const std::string& text) {
  if (!row.note.empty()) row.note += "; ";
  row.note += clean(text);
}

}  // namespace

VerifyRow verify_row(const NamedGraph& ng, const ReductionKind& kind, const VerifyOptions& opts) {
  const auto start = Clock::now();
  const auto deadline = start + opts.budget;
  const Graph& g = ng.graph;
  VerifyRow row;
  row.graph = ng.name;
  row.graph6 = g.n() <= 62 ? to_graph6(g) : "-";
  row.kind = kind.name();
  row.n1 = g.n();
  row.m1 = static_cast<int>(g.m());
  auto finish = [&](RowStatus s) {
    row.status = s;
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return row;
  };

  Instance in;
  try {
    if (kind.family == Family::UnitDisk) {
      for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) > 4) {
          add_note(row, "unit-disk kinds need max degree <= 4");
          return finish(RowStatus::Skipped);
        }
      if (!is_planar(g)) {
        add_note(row, "unit-disk kinds need a planar graph");
        return finish(RowStatus::Skipped);
      }
      in.layout = reduce_unit_disk(kind.problem, embed_orthogonal(g, opts.ud_scale));
      in.output = intersection_graph(*in.layout);
      in.offset = in.layout->offset;
      in.printed_offset = printed_offset(kind.problem, in.layout->source);
    } else {
      in.reduction = reduce(kind, g);
      in.output = in.reduction->output;
      in.offset = in.reduction->offset;
    }
  } catch (const Error& e) {
    add_note(row, std::string("construction: ") + e.what());
    return finish(RowStatus::Skipped);
  }
  row.n2 = in.output.n();
  row.m2 = static_cast<int>(in.output.m());
  row.offset = in.offset;
  row.printed_offset = in.printed_offset;
  row.structure = clean(structure_check(in, kind, g));

  SolveOptions so;
  so.deadline = deadline;
  const SolveResult tau = solve_minimum(g, Problem::VertexCover, so);
  if (tau.status != SolveStatus::Optimal) {
    add_note(row, "vertex cover solve ran out of time");
    return finish(RowStatus::Timeout);
  }
  row.tau = tau.optimum;
  row.cover_witness = tau.witness;

  // Certificate round trip from the minimum cover.
  try {
    const VertexSet cert = forward(in, *tau.witness);
    if (!is_feasible(in.output, kind.problem, cert))
      row.certificate = "forward certificate is not a valid solution";
    else if (static_cast<int>(cert.size()) != *row.tau + in.offset)
      row.certificate = "forward certificate has size " + std::to_string(cert.size());
    else {
      const VertexSet back = extract(in, cert);
      if (!is_vertex_cover(g, back) || back.size() > tau.witness->size())
        row.certificate = "extracted set is not a cover of size <= |vc|";
      else
        row.certificate = "ok";
    }
  } catch (const Error& e) {
    row.certificate = clean(e.what());
  }

  const SolveResult gamma = solve_minimum(in.output, kind.problem, so);
  row.method = std::string(to_string(gamma.method));
  row.nodes = gamma.nodes_explored;
  row.solution_witness = gamma.witness;
  if (gamma.status == SolveStatus::Timeout) {
    add_note(row, "reduced instance solve ran out of time");
    return finish(RowStatus::Timeout);
  }
  if (gamma.status == SolveStatus::Infeasible) {
    row.identity = "infeasible";
  } else {
    row.gamma = gamma.optimum;
    row.identity = *row.gamma == *row.expected() ? "ok" : "mismatch";
    try {
      const VertexSet back = extract(in, *gamma.witness);
      add_note(row, "optimum extracts to a cover of size " + std::to_string(back.size()));
    } catch (const ExtractionError& e) {
      add_note(row, std::string("optimum extraction: ") + e.what());
    }
  }
  const bool ok = row.identity == "ok" && row.certificate == "ok" && row.structure == "ok";
  return finish(ok ? RowStatus::Pass : RowStatus::Fail);
}

VerifyReport run_verification(const std::vector<NamedGraph>& corpus, const std::vector<ReductionKind>& kinds,
                              const VerifyOptions& opts) {
  VerifyReport report;
  const std::size_t total = corpus.size() * kinds.size();
  report.rows.resize(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;)
      report.rows[i] = verify_row(corpus[i / kinds.size()], kinds[i % kinds.size()], opts);
  };
  const int threads = std::min<std::size_t>(opts.threads > 0 ? opts.threads : default_thread_count(),
                                            std::max<std::size_t>(total, 1));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  return report;
}

namespace {

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt(const std::optional<VertexSet>& v) { return v ? "{" + v->to_string() + "}" : "-"; }

}  // namespace

std::string report_tsv(const VerifyReport& r) {
  std::ostringstream out;
  out << "# hopdomlab-verify v1\n"
         "# One row per (graph, kind). expected = tau + offset; PASS needs identity, certificate and structure\n"
         "# all \"ok\". printed_offset is the printed closed form for unit-disk kinds. Witnesses are vertex ids in\n"
         "# the source graph (cover) and in the reduced graph (solution); graph6 replays the source graph.\n";
  out << "graph\tgraph6\tkind\tn1\tm1\tn2\tm2\ttau\tgamma\toffset\texpected\tprinted_offset\tstatus\tidentity"
         "\tcertificate\tstructure\tmethod\tnodes\tmillis\tcover_witness\tsolution_witness\tnote\n";
  for (const auto& row : r.rows) {
    out << row.graph << '\t' << row.graph6 << '\t' << row.kind << '\t' << row.n1 << '\t' << row.m1 << '\t' << row.n2
        << '\t' << row.m2 << '\t' << opt(row.tau) << '\t' << opt(row.gamma) << '\t' << row.offset << '\t'
        << opt(row.expected()) << '\t' << opt(row.printed_offset) << '\t' << to_string(row.status) << '\t'
        << row.identity << '\t' << row.certificate << '\t' << row.structure << '\t' << row.method << '\t' << row.nodes
        << '\t' << row.millis << '\t' << opt(row.cover_witness) << '\t' << opt(row.solution_witness) << '\t'
        << (row.note.empty() ? "-" : row.note) << '\n';
  }
  out << "# summary PASS=" << r.count(RowStatus::Pass) << " FAIL=" << r.count(RowStatus::Fail)
      << " TIMEOUT=" << r.count(RowStatus::Timeout) << " SKIPPED=" << r.count(RowStatus::Skipped) << '\n';
  return out.str();
}

std::string report_table(const VerifyReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "graph" << std::setw(12) << "kind" << std::setw(7) << "n2" << std::setw(5)
      << "tau" << std::setw(7) << "gamma" << std::setw(8) << "offset" << std::setw(9) << "status" << "detail\n";
  for (const auto& row : r.rows) {
    std::string detail;
    for (auto [label, val] : {std::pair{"identity", &row.identity}, std::pair{"certificate", &row.certificate},
                              std::pair{"structure", &row.structure}})
      if (*val != "ok" && *val != "-") detail += std::string(label) + ": " + *val + "  ";
    if (row.status != RowStatus::Pass && !row.note.empty()) detail += row.note;
    out << std::setw(14) << row.graph << std::setw(12) << row.kind << std::setw(7) << row.n2 << std::setw(5)
        << opt(row.tau) << std::setw(7) << opt(row.gamma) << std::setw(8) << row.offset << std::setw(9)
        << to_string(row.status) << detail << '\n';
  }
  out << "PASS " << r.count(RowStatus::Pass) << "  FAIL " << r.count(RowStatus::Fail) << "  TIMEOUT "
      << r.count(RowStatus::Timeout) << "  SKIPPED " << r.count(RowStatus::Skipped) << '\n';
  return out.str();
}

}  // namespace hopdom
