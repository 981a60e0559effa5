#include "wlp/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "wlp/errors.hpp"

namespace wlp {

int pair_count(int n) { return n * (n - 1) / 2; }

namespace {

// bit index of the pair {u, v}, u < v, in lexicographic pair order
int pair_bit(int n, int u, int v) {
  // pairs (0,1) .. (0,n-1), (1,2) .. : u full rows before, then offset
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

GraphCode code_of_graph(const Graph& graph) {
  const int n = graph.num_vertices();
  GraphCode code = 0;
  for (auto [u, v] : graph.edges()) {
    code |= GraphCode{1} << pair_bit(n, u, v);
  }
  return code;
}

Graph graph_from_code(int n, GraphCode code) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

GraphCode canonical_code(int n, GraphCode code) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // Decode once; re-encode under every relabeling.
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1) pairs.emplace_back(u, v);
    }
  }
  GraphCode best = code;
  do {
    GraphCode relabeled = 0;
    for (auto [u, v] : pairs) {
      const int a = std::min(perm[u], perm[v]);
      const int b = std::max(perm[u], perm[v]);
      relabeled |= GraphCode{1} << pair_bit(n, a, b);
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

const char* to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::wlp: return "wlp";
    case Bucket::degree1_injectivity: return "degree1-injectivity";
    case Bucket::exceptional: return "exceptional";
  }
  return "?";
}

Bucket classify(const WLPReport& report) {
  if (report.has_wlp) return Bucket::wlp;
  for (const Failure& f : report.failures) {
    if (f.degree == 1 &&
        (f.mode == FailureMode::injectivity || f.mode == FailureMode::both) &&
        report.dim(1) <= report.dim(2)) {
      return Bucket::degree1_injectivity;
    }
  }
  return Bucket::exceptional;
}

namespace {

int resolve_jobs(int requested) {
  if (const char* env = std::getenv("LEFSCHETZ_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

CensusRecord build_record(int n, GraphCode code, std::int64_t characteristic) {
  const Graph graph = graph_from_code(n, code);
  const WLPReport report = wlp_report(to_ideal(graph), characteristic);
  CensusRecord rec;
  rec.code = code;
  rec.edge_count = graph.num_edges();
  rec.hilbert = report.hilbert;
  rec.has_wlp = report.has_wlp;
  rec.failures = report.failures;
  rec.bucket = classify(report);
  return rec;
}

}  // namespace

CensusResult census(int n_vertices, const CensusOptions& options) {
  if (n_vertices < 2 || n_vertices > 8) {
    throw invalid_input("census supports 2..8 vertices");
  }
  const int bits = pair_count(n_vertices);
  const std::uint64_t total = std::uint64_t{1} << bits;
  const int jobs = resolve_jobs(options.jobs);

  std::vector<std::vector<CensusRecord>> partial(static_cast<std::size_t>(jobs));
  std::atomic<std::uint64_t> next_chunk{0};
  constexpr std::uint64_t kChunk = 1024;

  auto worker = [&](int id) {
    auto& sink = partial[static_cast<std::size_t>(id)];
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(begin + kChunk, total);
      for (std::uint64_t c = begin; c < end; ++c) {
        const auto code = static_cast<GraphCode>(c);
        if (options.max_edges >= 0 &&
            std::popcount(code) > options.max_edges) {
          continue;
        }
        if (options.canonical &&
            canonical_code(n_vertices, code) != code) {
          continue;
        }
        sink.push_back(build_record(n_vertices, code, options.characteristic));
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (std::thread& t : pool) t.join();
  }

  CensusResult result;
  result.num_vertices = n_vertices;
  result.options = options;
  for (auto& part : partial) {
    result.records.insert(result.records.end(),
                          std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return a.code < b.code;
            });

  CensusSummary& summary = result.summary;
  std::map<std::pair<int, HilbertFunction>, SummaryRow> rows;
  for (const CensusRecord& rec : result.records) {
    ++summary.total;
    SummaryRow& row = rows[{rec.edge_count, rec.hilbert}];
    row.edge_count = rec.edge_count;
    row.hilbert = rec.hilbert;
    ++row.total;
    switch (rec.bucket) {
      case Bucket::wlp:
        ++summary.wlp;
        ++row.wlp;
        break;
      case Bucket::degree1_injectivity:
        ++summary.degree1_injectivity;
        ++row.degree1_injectivity;
        break;
      case Bucket::exceptional:
        ++summary.exceptional;
        ++row.exceptional;
        break;
    }
  }
  for (auto& [key, row] : rows) summary.rows.push_back(std::move(row));
  return result;
}

}  // namespace wlp
