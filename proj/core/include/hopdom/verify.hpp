#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopdom/corpus.hpp"
#include "hopdom/reductions.hpp"

namespace hopdom {

enum class RowStatus { Pass, Fail, Timeout, Skipped };
std::string_view to_string(RowStatus s);

struct VerifyRow {
  std::string graph;   // corpus name
  std::string graph6;  // replayable source graph
  std::string kind;
  int n1 = 0, m1 = 0, n2 = 0, m2 = 0;
  std::optional<int> tau, gamma;
  int offset = 0;
  std::optional<int> printed_offset;  // unit-disk kinds only
  RowStatus status = RowStatus::Skipped;
  // Each is "ok", "-" when not run, or a short failure reason.
  std::string identity = "-";
  std::string certificate = "-";
  std::string structure = "-";
  std::optional<VertexSet> cover_witness, solution_witness;
  std::string method = "-";
  std::uint64_t nodes = 0;
  long long millis = 0;
  std::string note;

  std::optional<int> expected() const {
    if (!tau) return std::nullopt;
    return *tau + offset;
  }
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  int count(RowStatus s) const;
  // Overall pass: no FAIL rows. TIMEOUT and SKIPPED rows are reported but
  // are never counted as passes.
  bool passed() const { return count(RowStatus::Fail) == 0; }
};

struct VerifyOptions {
  std::chrono::milliseconds budget{std::chrono::minutes(5)};  // per row
  int threads = 0;     // 0: HOPDOMLAB_THREADS, else hardware concurrency
  int ud_scale = 2;    // embedding scale for unit-disk kinds
};

// Worker count from HOPDOMLAB_THREADS, falling back to the hardware.
int default_thread_count();

VerifyRow verify_row(const NamedGraph& g, const ReductionKind& kind, const VerifyOptions& opts);

// Rows come out in corpus order, then kind order, whatever the scheduling.
VerifyReport run_verification(const std::vector<NamedGraph>& corpus, const std::vector<ReductionKind>& kinds,
                              const VerifyOptions& opts = {});

// Tab-separated, one line per row after a documented header.
std::string report_tsv(const VerifyReport& r);
std::string report_table(const VerifyReport& r);

}  // namespace hopdom
