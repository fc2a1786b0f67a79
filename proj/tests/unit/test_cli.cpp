#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hopdom/reductions.hpp"
#include "../helpers.hpp"

namespace fs = std::filesystem;
using namespace hopdom;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOPDOM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("hopdomlab-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("solve and check") {
  TempDir t;
  const std::string k2 = t.write("k2.txt", serialize_graph(testing::K(2)));
  const Run s = run("solve --problem hd --in " + k2);
  CHECK(s.code == 0);
  CHECK(s.out.find("optimum 2\n") != std::string::npos);
  CHECK(s.out.find("witness 0 1\n") != std::string::npos);

  const std::string p4 = t.write("p4.txt", serialize_graph(testing::P(4)));
  CHECK(run("solve --problem hd --in " + p4).out.find("witness 0 1\n") != std::string::npos);
  CHECK(run("solve --problem 2sd --in " + p4).out.find("optimum 4\n") != std::string::npos);
  CHECK(run("solve --problem 2sd --in " + k2).code == 1);
  CHECK(run("check --problem vc --in " + p4 + " --set \"1 2\"").code == 0);
  CHECK(run("check --problem vc --in " + p4 + " --set \"0 3\"").code == 1);
}

TEST_CASE("reduce matches the library") {
  TempDir t;
  const std::string k2 = t.write("k2.txt", serialize_graph(testing::K(2)));
  const std::string out = (t.path / "g2.txt").string();
  const Run r = run("reduce --kind hd-dreg --d 4 --in " + k2 + " --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices 11\n") != std::string::npos);
  CHECK(r.out.find("offset 1\n") != std::string::npos);
  const Reduction lib = reduce(*parse_kind("hd-dreg:4"), testing::K(2));
  CHECK(read_graph_file(out).edges() == lib.output.edges());

  const Run full = run("reduce --kind 2sd-3reg --in " + k2);
  CHECK(full.code == 0);
  const ReductionReport rep = parse_reduction_report(full.out);
  CHECK(rep.output.n() == 14);
  CHECK(rep.offset == 3);
}

TEST_CASE("embed and layout") {
  TempDir t;
  const std::string k2 = t.write("k2.txt", serialize_graph(testing::K(2)));
  const std::string emb = (t.path / "k2.emb").string();
  CHECK(run("embed --in " + k2 + " --scale 2 --out " + emb).code == 0);
  const Run l = run("layout --problem hd --embedding " + emb);
  CHECK(l.code == 0);
  CHECK(l.out.find("disks 28\n") != std::string::npos);
  CHECK(l.out.find("offset 7\n") != std::string::npos);
  const std::string k5 = t.write("k5.txt", serialize_graph(testing::K(5)));
  CHECK(run("embed --in " + k5).code == 1);
}

TEST_CASE("verify") {
  TempDir t;
  const std::string out = (t.path / "report.tsv").string();
  const Run v = run("verify --corpus named:K2,P3 --kinds hd-3reg,2sd-3reg --threads 2 --out " + out);
  CHECK(v.code == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("# summary PASS=4 FAIL=0") != std::string::npos);
  CHECK(run("verify --corpus named:K2 --kinds 2sd-dreg --d 4").code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("solve --problem xyz --in /nonexistent").code == 2);
  CHECK(run("solve --problem hd --in /nonexistent/graph.txt").code == 2);
  CHECK(run("verify --corpus named:K2 --kinds nope").code == 2);
  CHECK(run("--help").code == 0);
}
