#include "wlp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wlp/census.hpp"
#include "wlp/errors.hpp"
#include "wlp/graph.hpp"
#include "wlp/json_io.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/tensor.hpp"
#include "wlp/topology.hpp"

namespace wlp::cli {

using nlohmann::json;

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LoadedInput read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return load_input_text(slurp(in));
  std::ifstream file(path);
  if (!file) throw invalid_input("cannot open input file: " + path);
  return load_input_text(slurp(file));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw invalid_input(std::string("bad ") + what + ": '" + text + "'");
    }
  }
  if (out.empty()) throw invalid_input(std::string("empty ") + what);
  return out;
}

void print_report_text(const WLPReport& report, std::ostream& out) {
  out << "hilbert: " << format_hilbert(report.hilbert) << "\n";
  out << "characteristic: " << report.characteristic << "\n";
  for (const DegreeRecord& rec : report.degrees) {
    out << "degree " << rec.degree << ": " << rec.dim_source << " -> "
        << rec.dim_target << ", rank " << rec.rank
        << (rec.full ? ", full" : ", NOT full") << "\n";
  }
  if (report.has_wlp) {
    out << "has WLP\n";
  } else {
    out << "fails WLP: ";
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      if (i > 0) out << ", ";
      out << to_string(report.failures[i].mode) << " in degree "
          << report.failures[i].degree;
    }
    out << "\n";
  }
}

struct CommonOptions {
  std::string input_path;
  std::int64_t characteristic = 0;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_char = true) {
  cmd->add_option("--input", opts.input_path,
                  "JSON ideal or graph file ('-' or absent: stdin)");
  if (with_char) {
    cmd->add_option("--char", opts.characteristic, "characteristic, 0 or a prime")
        ->check(CLI::NonNegativeNumber);
  }
  cmd->add_flag("--json", opts.as_json, "machine-readable output");
}

int run_wlp(const CommonOptions& opts, bool dump_matrices, std::istream& in,
            std::ostream& out) {
  const LoadedInput input = read_input(opts.input_path, in);
  const WLPReport report = wlp_report(input.ideal, opts.characteristic);
  if (opts.as_json || dump_matrices) {
    json doc = to_json(report);
    if (dump_matrices) {
      json mats = json::array();
      for (const DegreeRecord& rec : report.degrees) {
        mats.push_back(to_json(mult_matrix(input.ideal, rec.degree, 1)));
      }
      doc["matrices"] = std::move(mats);
    }
    out << doc.dump() << "\n";
  } else {
    print_report_text(report, out);
  }
  return 0;
}

int run_hilbert(const CommonOptions& opts, std::istream& in, std::ostream& out) {
  const LoadedInput input = read_input(opts.input_path, in);
  const HilbertFunction h = hilbert_function(input.ideal);
  if (opts.as_json) {
    out << json{{"hilbert", h}}.dump() << "\n";
  } else {
    out << format_hilbert(h) << "\n";
  }
  return 0;
}

int run_homology(const CommonOptions& opts, int degree, std::istream& in,
                 std::ostream& out) {
  const Graph graph = read_input(opts.input_path, in).require_graph();
  const Index h = homology_gf2(graph, degree);
  if (opts.as_json) {
    out << json{{"degree", degree}, {"h_dim", h}}.dump() << "\n";
  } else {
    out << "dim H_" << degree << "(skeleton(" << degree << "); GF(2)) = " << h
        << "\n";
  }
  return 0;
}

int run_bockstein(const CommonOptions& opts, int degree, std::istream& in,
                  std::ostream& out) {
  const Graph graph = read_input(opts.input_path, in).require_graph();
  const BocksteinVerdict verdict = bockstein_verdict(graph, degree);
  if (opts.as_json) {
    out << to_json(verdict).dump() << "\n";
    return 0;
  }
  out << "degree: " << verdict.degree << "\n";
  out << "H dimension (GF(2)): " << verdict.h_dim << "\n";
  out << "delta injective: " << (verdict.delta_injective ? "yes" : "no") << "\n";
  out << "char-0 surjectivity at degree " << verdict.degree << ": "
      << (verdict.delta_injective ? "holds" : "fails") << "\n";
  if (!verdict.delta_injective) {
    out << "witness cycle:";
    for (const auto& face : verdict.witness_cycle) {
      out << " [";
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (i > 0) out << ",";
        out << face[i];
      }
      out << "]";
    }
    out << "\n";
  }
  return 0;
}

int run_ses(const CommonOptions& opts, std::optional<int> vertex,
            const std::string& edge_text, std::istream& in, std::ostream& out) {
  if (vertex.has_value() == !edge_text.empty()) {
    throw invalid_input("ses needs exactly one of --remove-vertex / --remove-edge");
  }
  Removal removal = Removal::vertex(0);
  if (vertex) {
    removal = Removal::vertex(*vertex);
  } else {
    const std::vector<int> uv = parse_int_list(edge_text, "edge");
    if (uv.size() != 2) throw invalid_input("--remove-edge wants 'u,v'");
    removal = Removal::edge(uv[0], uv[1]);
  }
  const Graph graph = read_input(opts.input_path, in).require_graph();
  const SESInference inference = ses_infer(graph, removal);
  if (opts.as_json) {
    out << to_json(inference).dump() << "\n";
    return 0;
  }
  if (removal.kind == Removal::Kind::vertex) {
    out << "removal: vertex " << removal.u << "\n";
  } else {
    out << "removal: edge {" << removal.u << "," << removal.v << "}\n";
  }
  if (inference.conclusions.empty()) {
    out << "no failure certificates (degrees 0.." << inference.max_degree
        << " scanned)\n";
    return 0;
  }
  for (const SESConclusion& c : inference.conclusions) {
    out << "degree " << c.degree << ": fails " << to_string(c.mode) << " ["
        << to_string(c.rule) << "; witness map at degree " << c.witness_degree
        << " has rank " << c.witness_rank << " < " << c.witness_dim
        << "; f_i=" << c.f_i << ", f_{i-1}=" << c.f_im1 << "]\n";
  }
  return 0;
}

int run_tensor(const CommonOptions& opts, const std::string& spec_text,
               bool predict_only, bool verify, std::ostream& out) {
  const TensorSpec spec = parse_tensor_spec(spec_text);

  bool all_order2 = true;
  bool all_big = spec.factors.size() >= 2;
  for (const TensorFactor& f : spec.factors) {
    all_order2 = all_order2 && f.order == 2;
    all_big = all_big && f.dim >= 2;
  }

  json doc;
  doc["spec"] = json::array();
  for (const TensorFactor& f : spec.factors) {
    doc["spec"].push_back(json{{"dim", f.dim}, {"order", f.order}});
  }

  std::optional<bool> predicted_wlp;
  std::optional<int> predicted_failure;
  if (all_order2) predicted_wlp = order2_tensor_has_wlp(spec, opts.characteristic);
  if (all_big) predicted_failure = tensor_failure_degree(spec);

  json predictions = json::object();
  if (predicted_wlp) predictions["wlp"] = *predicted_wlp;
  if (predicted_failure) predictions["failure_degree"] = *predicted_failure;
  doc["predictions"] = predictions;

  if (!opts.as_json) {
    out << "factors: " << spec_text << " (" << spec.total_vars()
        << " variables)\n";
    if (predicted_wlp) {
      out << "prediction: " << (*predicted_wlp ? "has WLP" : "fails WLP") << "\n";
    }
    if (predicted_failure) {
      out << "prediction: multiplication fails from degree " << *predicted_failure
          << " to degree " << *predicted_failure + 1 << "\n";
    }
    if (!predicted_wlp && !predicted_failure) {
      out << "no closed-form prediction applies\n";
    }
  }

  if (!predict_only) {
    const MonomialIdeal ideal = realize(spec);
    const WLPReport report = wlp_report(ideal, opts.characteristic);
    doc["report"] = to_json(report);
    if (!opts.as_json) print_report_text(report, out);
    if (verify) {
      if (predicted_wlp && *predicted_wlp != report.has_wlp) {
        throw oracle_mismatch("tensor classification disagrees with the direct engine");
      }
      if (predicted_failure) {
        bool found = false;
        for (const Failure& f : report.failures) {
          found = found || f.degree == *predicted_failure;
        }
        if (!found) {
          throw oracle_mismatch("predicted tensor failure degree not found in the report");
        }
      }
      doc["verified"] = true;
      if (!opts.as_json) out << "verified: predictions match the direct engine\n";
    }
  }
  if (opts.as_json) out << doc.dump() << "\n";
  return 0;
}

int run_family(const std::string& input_path, std::optional<int> cycle_n,
               const std::string& multipartite, const std::string& togliatti,
               std::optional<int> cone_t, std::istream& in, std::ostream& out) {
  const int given = int(cycle_n.has_value()) + int(!multipartite.empty()) +
                    int(!togliatti.empty()) + int(cone_t.has_value());
  if (given != 1) {
    throw invalid_input(
        "family needs exactly one of --cycle / --multipartite / --togliatti / --cone");
  }
  Graph graph;
  if (cycle_n) {
    graph = cycle(*cycle_n);
  } else if (!multipartite.empty()) {
    graph = complete_multipartite(parse_int_list(multipartite, "part sizes"));
  } else if (!togliatti.empty()) {
    const std::vector<int> ri = parse_int_list(togliatti, "togliatti parameters");
    if (ri.size() != 2) throw invalid_input("--togliatti wants 'r,i'");
    graph = togliatti_system_graph(ri[0], ri[1]);
  } else {
    graph = cone(read_input(input_path, in).require_graph(), *cone_t);
  }
  out << to_json(graph).dump() << "\n";
  return 0;
}

int run_search(const CommonOptions& opts, int vertices, int max_edges,
               bool canonical, int jobs, std::ostream& out) {
  CensusOptions options;
  options.canonical = canonical;
  options.max_edges = max_edges;
  options.characteristic = opts.characteristic;
  options.jobs = jobs;
  const CensusResult result = census(vertices, options);
  if (opts.as_json) {
    out << to_json(result).dump() << "\n";
    return 0;
  }
  out << "code,edges,hilbert,wlp,bucket\n";
  for (const CensusRecord& rec : result.records) {
    out << rec.code << "," << rec.edge_count << ",\""
        << format_hilbert(rec.hilbert) << "\","
        << (rec.has_wlp ? "true" : "false") << "," << to_string(rec.bucket)
        << "\n";
  }
  const CensusSummary& s = result.summary;
  out << "# total=" << s.total << " wlp=" << s.wlp
      << " degree1-injectivity=" << s.degree1_injectivity
      << " exceptional=" << s.exceptional << "\n";
  for (const SummaryRow& row : s.rows) {
    out << "# edges=" << row.edge_count << " hilbert="
        << format_hilbert(row.hilbert) << " total=" << row.total
        << " wlp=" << row.wlp << " degree1-injectivity="
        << row.degree1_injectivity << " exceptional=" << row.exceptional
        << "\n";
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz Property toolkit for quadratic monomial ideals"};
  app.require_subcommand(1);

  CommonOptions wlp_opts;
  bool dump_matrices = false;
  CLI::App* cmd_wlp = app.add_subcommand("wlp", "decide WLP for an ideal or graph");
  add_common(cmd_wlp, wlp_opts);
  cmd_wlp->add_flag("--dump-matrices", dump_matrices,
                    "include the multiplication matrices in the output");

  CommonOptions hilbert_opts;
  CLI::App* cmd_hilbert =
      app.add_subcommand("hilbert", "Hilbert function of an ideal or graph");
  add_common(cmd_hilbert, hilbert_opts, /*with_char=*/false);

  CommonOptions homology_opts;
  int homology_degree = 0;
  CLI::App* cmd_homology =
      app.add_subcommand("homology", "mod-2 homology of the flag-complex skeleton");
  add_common(cmd_homology, homology_opts, /*with_char=*/false);
  cmd_homology->add_option("--degree", homology_degree, "skeleton degree i")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CommonOptions bockstein_opts;
  int bockstein_degree = 1;
  CLI::App* cmd_bockstein = app.add_subcommand(
      "bockstein", "Bockstein verdict: char-0 surjectivity from the mod-2 lift");
  add_common(cmd_bockstein, bockstein_opts, /*with_char=*/false);
  cmd_bockstein->add_option("--degree", bockstein_degree, "degree i >= 1")
      ->required()
      ->check(CLI::PositiveNumber);

  CommonOptions ses_opts;
  std::optional<int> ses_vertex;
  std::string ses_edge;
  CLI::App* cmd_ses = app.add_subcommand(
      "ses", "failure certificates from removing a vertex or an edge");
  add_common(cmd_ses, ses_opts, /*with_char=*/false);
  cmd_ses->add_option("--remove-vertex", ses_vertex, "vertex to remove");
  cmd_ses->add_option("--remove-edge", ses_edge, "edge to remove, as 'u,v'");

  CommonOptions tensor_opts;
  std::string tensor_spec;
  bool tensor_predict = false;
  bool tensor_verify = false;
  CLI::App* cmd_tensor =
      app.add_subcommand("tensor", "tensor products of truncated symmetric algebras");
  add_common(cmd_tensor, tensor_opts);
  cmd_tensor->add_option("--spec", tensor_spec, "factors as dim:order,dim:order,...")
      ->required();
  cmd_tensor->add_flag("--predict", tensor_predict,
                       "closed-form predictions only; skip the direct engine");
  cmd_tensor->add_flag("--verify", tensor_verify,
                       "diff predictions against the direct engine (exit 2 on mismatch)");

  std::string family_input;
  std::optional<int> family_cycle;
  std::string family_multipartite;
  std::string family_togliatti;
  std::optional<int> family_cone;
  CLI::App* cmd_family =
      app.add_subcommand("family", "emit a named family graph as JSON");
  cmd_family->add_option("--input", family_input, "base graph for --cone");
  cmd_family->add_option("--cycle", family_cycle, "cycle on n vertices");
  cmd_family->add_option("--multipartite", family_multipartite,
                         "complete multipartite part sizes, e.g. 2,2,2");
  cmd_family->add_option("--togliatti", family_togliatti,
                         "Togliatti quadric system parameters 'r,i'");
  cmd_family->add_option("--cone", family_cone, "cone the --input graph t times");

  CommonOptions search_opts;
  int search_vertices = 0;
  int search_max_edges = -1;
  bool search_canonical = false;
  int search_jobs = 0;
  CLI::App* cmd_search =
      app.add_subcommand("search", "exhaustive labeled-graph census");
  add_common(cmd_search, search_opts);
  cmd_search->add_option("--vertices", search_vertices, "number of vertices (2..8)")
      ->required();
  cmd_search->add_option("--max-edges", search_max_edges,
                         "skip graphs with more edges than this");
  cmd_search->add_flag("--canonical", search_canonical,
                       "keep one representative per isomorphism class");
  cmd_search->add_option("--jobs", search_jobs,
                         "worker count (LEFSCHETZ_JOBS overrides)");

  std::vector<const char*> argv;
  argv.push_back("lefschetz");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (cmd_wlp->parsed()) return run_wlp(wlp_opts, dump_matrices, in, out);
    if (cmd_hilbert->parsed()) return run_hilbert(hilbert_opts, in, out);
    if (cmd_homology->parsed()) return run_homology(homology_opts, homology_degree, in, out);
    if (cmd_bockstein->parsed()) return run_bockstein(bockstein_opts, bockstein_degree, in, out);
    if (cmd_ses->parsed()) return run_ses(ses_opts, ses_vertex, ses_edge, in, out);
    if (cmd_tensor->parsed()) {
      return run_tensor(tensor_opts, tensor_spec, tensor_predict, tensor_verify, out);
    }
    if (cmd_family->parsed()) {
      return run_family(family_input, family_cycle, family_multipartite,
                        family_togliatti, family_cone, in, out);
    }
    if (cmd_search->parsed()) {
      return run_search(search_opts, search_vertices, search_max_edges,
                        search_canonical, search_jobs, out);
    }
  } catch (const oracle_mismatch& e) {
    err << "oracle mismatch: " << e.what() << "\n";
    return 2;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command given\n";
  return 1;
}

}  // namespace wlp::cli
