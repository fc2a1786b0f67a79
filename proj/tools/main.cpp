#include <charconv>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopdom/corpus.hpp"
#include "hopdom/embedding.hpp"
#include "hopdom/reductions.hpp"
#include "hopdom/solvers.hpp"
#include "hopdom/unit_disk.hpp"
#include "hopdom/verify.hpp"

using namespace hopdom;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Errors in what the user typed, reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

Problem problem_arg(const std::string& s) {
  auto p = parse_problem(s);
  if (!p) throw UsageError("unknown problem '" + s + "' (expected vc, hd or 2sd)");
  return *p;
}

ReductionKind kind_arg(const std::string& s, int d) {
  auto k = parse_kind(s, d);
  if (!k) throw UsageError("unknown kind '" + s + "'");
  return *k;
}

// "300s", "5m", "1500ms", or a bare number of seconds.
std::chrono::milliseconds duration_arg(const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || v < 0) throw UsageError("bad duration '" + s + "'");
  const std::string unit(p, s.data() + s.size());
  if (unit.empty() || unit == "s") return std::chrono::seconds(v);
  if (unit == "ms") return std::chrono::milliseconds(v);
  if (unit == "m" || unit == "min") return std::chrono::minutes(v);
  if (unit == "h") return std::chrono::hours(v);
  throw UsageError("bad duration unit in '" + s + "'");
}

VertexSet set_arg(const std::string& text) {
  std::vector<Vertex> ids;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    Vertex v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) throw UsageError("bad vertex id '" + tok + "'");
    ids.push_back(v);
  }
  const std::size_t before = ids.size();
  VertexSet s = VertexSet::from_unsorted(std::move(ids));
  if (s.size() != before) throw UsageError("vertex set lists an id twice");
  return s;
}

std::string roles_tsv(const std::vector<std::string>& roles) {
  std::ostringstream out;
  for (std::size_t i = 0; i < roles.size(); ++i) out << i << '\t' << roles[i] << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hop and 2-step domination solvers, hardness reductions and their verification"};
  app.require_subcommand(1, 1);

  // solve
  auto* solve = app.add_subcommand("solve", "Minimum vertex cover, hop dominating or 2-step dominating set");
  std::string problem_s, in_path, out_path, method_s;
  std::optional<int> budget;
  std::string timeout_s;
  bool deterministic = true;
  solve->add_option("--problem", problem_s, "vc, hd or 2sd")->required();
  solve->add_option("--in", in_path, "Edge-list graph file")->required();
  solve->add_option("--budget", budget, "Stop at the first solution of at most this size");
  solve->add_option("--timeout", timeout_s, "Wall-clock limit, e.g. 30s");
  solve->add_option("--method", method_s, "Force brute or bnb")->check(CLI::IsMember({"brute", "bnb"}));
  solve->add_flag("--deterministic,!--no-deterministic", deterministic, "Lexicographically smallest optimum (default)");
  solve->add_option("--out", out_path, "Write the result here instead of stdout");

  // check
  auto* check = app.add_subcommand("check", "Check a vertex set against a problem definition");
  std::string set_s;
  check->add_option("--problem", problem_s, "vc, hd or 2sd")->required();
  check->add_option("--in", in_path, "Edge-list graph file")->required();
  check->add_option("--set", set_s, "Space separated vertex ids")->required();

  // reduce
  auto* red = app.add_subcommand("reduce", "Build the reduced instance G2 from a source graph");
  std::string kind_s, roles_path, embedding_path;
  int d = 4, scale = 4;
  red->add_option("--kind", kind_s, "hd-3reg, 2sd-3reg, hd-dreg, 2sd-dreg, hd-claw, 2sd-claw, hd-ud, 2sd-ud")
      ->required();
  red->add_option("--d", d, "Degree for the d-regular kinds")->check(CLI::Range(4, 64));
  red->add_option("--in", in_path, "Edge-list graph file")->required();
  red->add_option("--out", out_path, "Write G2 as an edge list here (default: full report on stdout)");
  red->add_option("--roles", roles_path, "Write id<TAB>role lines here");
  red->add_option("--scale", scale, "Embedding scale for unit-disk kinds")->check(CLI::Range(2, 64));
  red->add_option("--embedding", embedding_path, "Use this embedding for unit-disk kinds");

  // embed
  auto* emb = app.add_subcommand("embed", "Orthogonal grid embedding of a planar graph of max degree <= 4");
  emb->add_option("--in", in_path, "Edge-list graph file")->required();
  emb->add_option("--scale", scale, "Stretch factor for every unit segment")->check(CLI::Range(2, 64));
  emb->add_option("--out", out_path, "Write the embedding here");

  // layout
  auto* lay = app.add_subcommand("layout", "Place the unit-disk gadgets along an embedding");
  std::string svg_path, dot_path;
  lay->add_option("--problem", problem_s, "hd or 2sd")->required();
  auto* lay_emb = lay->add_option("--embedding", embedding_path, "Embedding file");
  auto* lay_in = lay->add_option("--in", in_path, "Graph file, embedded on the fly");
  lay_emb->excludes(lay_in);
  lay->add_option("--scale", scale, "Embedding scale when embedding on the fly")->check(CLI::Range(2, 64));
  lay->add_option("--out", out_path, "Write the disk CSV here");
  lay->add_option("--svg", svg_path, "Write an SVG drawing here");
  lay->add_option("--dot", dot_path, "Write the intersection graph as DOT here");

  // verify
  auto* ver = app.add_subcommand("verify", "Check the reduction identities over a corpus");
  std::vector<std::string> corpus_specs;
  std::vector<std::string> kinds_s;
  std::string budget_s = "300s";
  int threads = 0, ud_scale = 2;
  std::optional<std::uint64_t> seed;
  bool table = false;
  ver->add_option("--corpus", corpus_specs, "named:K2,P3 | exhaustive:5 | random:n:d:count[:seed]")->required();
  ver->add_option("--kinds", kinds_s, "Comma separated reduction kinds")->required()->delimiter(',');
  ver->add_option("--d", d, "Degree for the d-regular kinds")->check(CLI::Range(4, 64));
  ver->add_option("--budget", budget_s, "Per-row time budget, e.g. 300s");
  ver->add_option("--threads", threads, "Worker threads (default: HOPDOMLAB_THREADS or all cores)");
  ver->add_option("--scale", ud_scale, "Embedding scale for unit-disk kinds")->check(CLI::Range(2, 64));
  ver->add_option("--seed", seed, "Seed for random corpora that omit one");
  ver->add_option("--out", out_path, "Write the TSV report here");
  ver->add_flag("--table", table, "Also print a human-readable table to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      const Problem p = problem_arg(problem_s);
      const Graph g = read_graph_file(in_path);
      SolveOptions opts;
      opts.budget = budget;
      opts.deterministic = deterministic;
      if (!timeout_s.empty()) opts.deadline = Clock::now() + duration_arg(timeout_s);
      if (!method_s.empty()) opts.force_method = method_s == "brute" ? Method::Brute : Method::BranchAndBound;
      const SolveResult r = solve_minimum(g, p, opts);
      std::ostringstream out;
      out << "status " << to_string(r.status) << '\n';
      if (r.witness) {
        out << "optimum " << r.witness->size() << '\n';
        out << "witness " << r.witness->to_string() << '\n';
      }
      out << "method " << to_string(r.method) << '\n' << "nodes " << r.nodes_explored << '\n';
      emit(out_path, out.str());
      return r.status == SolveStatus::Infeasible || r.status == SolveStatus::Timeout ? kExitFail : 0;
    }

    if (*check) {
      const Problem p = problem_arg(problem_s);
      const Graph g = read_graph_file(in_path);
      const VertexSet s = set_arg(set_s);
      if (!s.within(g.n())) throw UsageError("vertex id out of range");
      const bool ok = is_feasible(g, p, s);
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : kExitFail;
    }

    if (*red) {
      const ReductionKind kind = kind_arg(kind_s, d);
      const Graph g = read_graph_file(in_path);
      Graph output;
      std::vector<std::string> roles;
      int offset = 0;
      std::string report;
      if (kind.family == Family::UnitDisk) {
        const GridEmbedding e =
            embedding_path.empty() ? embed_orthogonal(g, scale) : parse_embedding(read_text_file(embedding_path));
        if (embedded_graph(e).edges() != g.edges() || embedded_graph(e).n() != g.n())
          throw UsageError("embedding does not match the input graph");
        const DiskLayout l = reduce_unit_disk(kind.problem, e);
        output = intersection_graph(l);
        for (const auto& disk : l.disks) roles.push_back(disk.role);
        offset = l.offset;
        std::ostringstream rep;
        rep << "hopdomlab-reduction v1\nkind " << kind.name() << "\noffset " << offset << "\ngraph\n"
            << serialize_graph(output) << "roles\n"
            << roles_tsv(roles);
        report = rep.str();
      } else {
        const Reduction r = reduce(kind, g);
        output = r.output;
        roles = r.roles;
        offset = r.offset;
        report = serialize_reduction(r);
      }
      if (!roles_path.empty()) write_text_file(roles_path, roles_tsv(roles));
      if (out_path.empty()) {
        std::cout << report;
      } else {
        write_text_file(out_path, serialize_graph(output));
        std::cout << "kind " << kind.name() << "\nvertices " << output.n() << "\nedges " << output.m() << "\noffset "
                  << offset << '\n';
      }
      return 0;
    }

    if (*emb) {
      emit(out_path, serialize_embedding(embed_orthogonal(read_graph_file(in_path), scale)));
      return 0;
    }

    if (*lay) {
      const Problem p = problem_arg(problem_s);
      if (p == Problem::VertexCover) throw UsageError("layout needs --problem hd or 2sd");
      GridEmbedding e;
      if (!embedding_path.empty())
        e = parse_embedding(read_text_file(embedding_path));
      else if (!in_path.empty())
        e = embed_orthogonal(read_graph_file(in_path), scale);
      else
        throw UsageError("layout needs --embedding or --in");
      const DiskLayout l = reduce_unit_disk(p, e);
      if (!out_path.empty()) write_text_file(out_path, layout_csv(l));
      if (!svg_path.empty()) write_text_file(svg_path, layout_svg(l));
      if (!dot_path.empty()) write_text_file(dot_path, layout_dot(l));
      const SeparationStats s = separation_stats(l);
      std::cout << "disks " << l.disks.size() << "\noffset " << l.offset << "\nprinted_offset "
                << printed_offset(p, e) << "\nmax_adjacent_sq " << s.max_adjacent_sq.to_string()
                << "\nmin_nonadjacent_sq " << s.min_nonadjacent_sq.to_string() << '\n';
      if (out_path.empty()) std::cout << layout_csv(l);
      return 0;
    }

    if (*ver) {
      std::vector<NamedGraph> corpus;
      for (std::string spec_s : corpus_specs) {
        if (spec_s.starts_with("random:") && std::count(spec_s.begin(), spec_s.end(), ':') == 3) {
          if (!seed) throw UsageError("random corpus '" + spec_s + "' needs a seed or --seed");
          spec_s += ":" + std::to_string(*seed);
        }
        auto part = enumerate_corpus(parse_corpus_spec(spec_s));
        corpus.insert(corpus.end(), part.begin(), part.end());
      }
      std::vector<ReductionKind> kinds;
      for (const auto& k : kinds_s) kinds.push_back(kind_arg(k, d));
      VerifyOptions opts;
      opts.budget = duration_arg(budget_s);
      opts.threads = threads;
      opts.ud_scale = ud_scale;
      const VerifyReport r = run_verification(corpus, kinds, opts);
      emit(out_path, report_tsv(r));
      if (table) std::cerr << report_table(r);
      return r.passed() ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
