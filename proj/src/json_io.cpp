#include "wlp/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "wlp/errors.hpp"

namespace wlp {

using nlohmann::json;

Graph LoadedInput::require_graph() const {
  if (graph) return *graph;
  return from_quadratic_ideal(ideal);
}

namespace {

MonomialIdeal parse_ideal(const json& doc) {
  if (!doc.contains("vars") || !doc["vars"].is_number_integer()) {
    throw invalid_input("ideal document needs an integer \"vars\" field");
  }
  const int n = doc["vars"].get<int>();
  if (n < 1) throw invalid_input("\"vars\" must be >= 1");
  if (!doc.contains("gens") || !doc["gens"].is_array()) {
    throw invalid_input("ideal document needs a \"gens\" array");
  }
  std::vector<Monomial> gens;
  for (const json& entry : doc["gens"]) {
    if (!entry.is_array()) throw invalid_input("generator must be an exponent array");
    std::vector<int> exps;
    for (const json& e : entry) {
      if (!e.is_number_integer()) throw invalid_input("exponent must be an integer");
      exps.push_back(e.get<int>());
    }
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal(n, std::move(gens));
}

Graph parse_graph(const json& doc) {
  if (!doc.contains("vars") || !doc["vars"].is_number_integer()) {
    throw invalid_input("graph document needs an integer \"vars\" field");
  }
  const int n = doc["vars"].get<int>();
  if (n < 1) throw invalid_input("\"vars\" must be >= 1");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw invalid_input("graph document needs an \"edges\" array");
  }
  std::vector<std::pair<int, int>> edges;
  for (const json& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw invalid_input("edge must be a pair of vertex indices");
    }
    edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return Graph(n, std::move(edges));
}

}  // namespace

LoadedInput load_input(const json& doc) {
  if (!doc.is_object()) throw invalid_input("input must be a JSON object");
  if (doc.contains("graph")) {
    Graph graph = parse_graph(doc["graph"]);
    return LoadedInput{to_ideal(graph), std::move(graph)};
  }
  return LoadedInput{parse_ideal(doc), std::nullopt};
}

LoadedInput load_input_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("invalid JSON: ") + e.what());
  }
  return load_input(doc);
}

json to_json(const Monomial& m) { return json(m.exponents); }

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(to_json(g));
  return json{{"vars", ideal.num_vars()}, {"gens", std::move(gens)}};
}

json to_json(const Graph& graph) {
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back(json::array({u, v}));
  return json{{"graph", {{"vars", graph.num_vertices()}, {"edges", std::move(edges)}}}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      const Int& e = m(i, j);
      if (e.fits_slong_p()) {
        row.push_back(e.get_si());
      } else {
        row.push_back(e.get_str());  // too wide for a JSON number
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const WLPReport& report) {
  json degrees = json::array();
  for (const DegreeRecord& rec : report.degrees) {
    degrees.push_back(json{{"i", rec.degree},
                           {"dim_i", rec.dim_source},
                           {"dim_j", rec.dim_target},
                           {"rank", rec.rank},
                           {"full", rec.full}});
  }
  json failures = json::array();
  for (const Failure& f : report.failures) {
    failures.push_back(json{{"degree", f.degree}, {"mode", to_string(f.mode)}});
  }
  return json{{"char", report.characteristic},
              {"hilbert", report.hilbert},
              {"degrees", std::move(degrees)},
              {"wlp", report.has_wlp},
              {"failures", std::move(failures)}};
}

json to_json(const SESInference& inference) {
  json removal;
  if (inference.removal.kind == Removal::Kind::vertex) {
    removal = json{{"kind", "vertex"}, {"v", inference.removal.u}};
  } else {
    removal = json{{"kind", "edge"}, {"u", inference.removal.u}, {"v", inference.removal.v}};
  }
  json conclusions = json::array();
  for (const SESConclusion& c : inference.conclusions) {
    conclusions.push_back(json{
        {"degree", c.degree},
        {"mode", to_string(c.mode)},
        {"rule", to_string(c.rule)},
        {"witness",
         json{{"degree", c.witness_degree},
              {"rank", c.witness_rank},
              {"dim", c.witness_dim},
              {"f_i", c.f_i},
              {"f_im1", c.f_im1}}}});
  }
  return json{{"removal", std::move(removal)},
              {"max_degree", inference.max_degree},
              {"conclusions", std::move(conclusions)},
              {"deletion_report", to_json(inference.deletion_report)},
              {"link_report", to_json(inference.link_report)}};
}

json to_json(const SkeletonVerdict& verdict) {
  return json{{"degree", verdict.degree},
              {"f_i", verdict.f_i},
              {"f_im1", verdict.f_im1},
              {"boundary_rank", verdict.boundary_rank},
              {"h_dim", verdict.h_dim},
              {"surjectivity_fails", verdict.surjectivity_fails},
              {"injectivity_fails", verdict.injectivity_fails},
              {"holds", verdict.holds()}};
}

json to_json(const BocksteinVerdict& verdict) {
  json out{{"degree", verdict.degree},
           {"h_dim", verdict.h_dim},
           {"delta_injective", verdict.delta_injective},
           {"char0_surjective", verdict.delta_injective}};
  if (!verdict.delta_injective) {
    json faces = json::array();
    for (const auto& face : verdict.witness_cycle) faces.push_back(face);
    out["witness_cycle"] = std::move(faces);
    if (verdict.witness_preimage) {
      json pre = json::array();
      for (Index i = 0; i < verdict.witness_preimage->size(); ++i) {
        const Int& e = (*verdict.witness_preimage)(i);
        if (e.fits_slong_p()) {
          pre.push_back(e.get_si());
        } else {
          pre.push_back(e.get_str());
        }
      }
      out["witness_preimage"] = std::move(pre);
    }
  }
  return out;
}

json to_json(const CensusRecord& record) {
  json failures = json::array();
  for (const Failure& f : record.failures) {
    failures.push_back(json{{"degree", f.degree}, {"mode", to_string(f.mode)}});
  }
  return json{{"code", record.code},
              {"edges", record.edge_count},
              {"hilbert", record.hilbert},
              {"wlp", record.has_wlp},
              {"failures", std::move(failures)},
              {"bucket", to_string(record.bucket)}};
}

json to_json(const CensusResult& result) {
  json records = json::array();
  for (const CensusRecord& rec : result.records) records.push_back(to_json(rec));
  json rows = json::array();
  for (const SummaryRow& row : result.summary.rows) {
    rows.push_back(json{{"edges", row.edge_count},
                        {"hilbert", row.hilbert},
                        {"total", row.total},
                        {"wlp", row.wlp},
                        {"degree1_injectivity", row.degree1_injectivity},
                        {"exceptional", row.exceptional}});
  }
  return json{{"vertices", result.num_vertices},
              {"records", std::move(records)},
              {"summary",
               json{{"total", result.summary.total},
                    {"wlp", result.summary.wlp},
                    {"degree1_injectivity", result.summary.degree1_injectivity},
                    {"exceptional", result.summary.exceptional},
                    {"rows", std::move(rows)}}}};
}

std::string format_hilbert(const HilbertFunction& h) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) os << ",";
    os << h[i];
  }
  os << "]";
  return os.str();
}

}  // namespace wlp
