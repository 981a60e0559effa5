#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wlp/census.hpp"
#include "wlp/graph.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/monomial.hpp"
#include "wlp/topology.hpp"

namespace wlp {

// Either of the two accepted input documents:
//   ideal: {"vars": 6, "gens": [[2,0,0,0,0,0], ...]}   (exponent vectors)
//   graph: {"graph": {"vars": 6, "edges": [[0,1], ...]}}
// A graph document also carries its ideal (squares plus non-edges).
struct LoadedInput {
  MonomialIdeal ideal;
  std::optional<Graph> graph;

  // The graph view; derived via from_quadratic_ideal when the input was an
  // ideal document.
  Graph require_graph() const;
};

LoadedInput load_input(const nlohmann::json& doc);
LoadedInput load_input_text(const std::string& text);

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const Graph& graph);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const WLPReport& report);
nlohmann::json to_json(const SESInference& inference);
nlohmann::json to_json(const SkeletonVerdict& verdict);
nlohmann::json to_json(const BocksteinVerdict& verdict);
nlohmann::json to_json(const CensusRecord& record);
nlohmann::json to_json(const CensusResult& result);

std::string format_hilbert(const HilbertFunction& h);

}  // namespace wlp
