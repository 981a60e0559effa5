#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wlp/graph.hpp"
#include "wlp/lefschetz.hpp"

namespace wlp {

// Labeled graphs on n vertices are coded by a bitmask over the C(n,2)
// vertex pairs taken in lexicographic order: bit 0 is {0,1}, bit 1 is
// {0,2}, ..., then {1,2}, and so on.
using GraphCode = std::uint32_t;

int pair_count(int n);
GraphCode code_of_graph(const Graph& graph);
Graph graph_from_code(int n, GraphCode code);

// Minimal code over all vertex relabelings; brute force over n!
// permutations (n <= 8).
GraphCode canonical_code(int n, GraphCode code);

enum class Bucket {
  wlp,                  // has WLP
  degree1_injectivity,  // fails injectivity (or both) at degree 1 with
                        // dim A_1 <= dim A_2: the Togliatti regime
  exceptional           // fails WLP for any other reason
};

const char* to_string(Bucket bucket);

Bucket classify(const WLPReport& report);

struct CensusRecord {
  GraphCode code = 0;
  int edge_count = 0;
  HilbertFunction hilbert;
  bool has_wlp = true;
  std::vector<Failure> failures;
  Bucket bucket = Bucket::wlp;
};

struct CensusOptions {
  bool canonical = false;    // keep only canonical-code representatives
  int max_edges = -1;        // -1: no cap
  std::int64_t characteristic = 0;
  int jobs = 0;              // 0: LEFSCHETZ_JOBS env var, else hardware
};

struct SummaryRow {
  int edge_count = 0;
  HilbertFunction hilbert;
  std::int64_t total = 0;
  std::int64_t wlp = 0;
  std::int64_t degree1_injectivity = 0;
  std::int64_t exceptional = 0;
};

struct CensusSummary {
  std::int64_t total = 0;
  std::int64_t wlp = 0;
  std::int64_t degree1_injectivity = 0;
  std::int64_t exceptional = 0;
  std::vector<SummaryRow> rows;  // per (edge count, Hilbert function)
};

struct CensusResult {
  int num_vertices = 0;
  CensusOptions options;
  std::vector<CensusRecord> records;  // sorted by code
  CensusSummary summary;
};

// Sweep all 2^C(n,2) labeled graphs (2 <= n <= 8), compute reports, bucket
// them. Work is split over a fixed-size worker pool; results are gathered
// and sorted by code, so parallel output is identical to serial output.
CensusResult census(int n_vertices, const CensusOptions& options = {});

}  // namespace wlp
