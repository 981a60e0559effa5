#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wlp/monomial.hpp"

namespace wlp {

// One factor Sym(V)/V^order with dim V = dim. Order >= 2; order 2 is the
// quadratic case classified in closed form.
struct TensorFactor {
  int dim = 1;
  int order = 2;

  friend bool operator==(const TensorFactor&, const TensorFactor&) = default;
};

// A tensor product of truncated symmetric algebras over disjoint variable
// blocks.
struct TensorSpec {
  std::vector<TensorFactor> factors;

  int total_vars() const;
  // k = sum over factors of (order - 1): the top degree of the product, and
  // the target of the critical multiplication map.
  int critical_degree() const;
};

// Parses "d:k,d:k,..." (dim:order per factor).
TensorSpec parse_tensor_spec(const std::string& text);

// The monomial ideal of the tensor product: per factor, every monomial of
// the given order in that factor's variable block.
MonomialIdeal realize(const TensorSpec& spec);

// Closed-form WLP classification of quadratic tensor products (all orders
// 2) away from characteristic 2: WLP holds iff at most one factor has
// dimension >= 2, or exactly two do and the number of factors is odd.
// Characteristic-2 queries are refused, not answered. Never calls the rank
// engine; the rank engine is the test oracle for this predicate.
bool order2_tensor_has_wlp(const TensorSpec& spec, std::int64_t characteristic = 0);

// For a spec with every dimension >= 2 and at least two factors, the source
// degree of the multiplication map guaranteed to fail: critical_degree()-1.
int tensor_failure_degree(const TensorSpec& spec);

// Map-level failure data of one algebra, keyed the way tensor composition
// combines it: surjectivity failures by target degree, injectivity failures
// by source degree.
struct FailureWindow {
  std::set<int> surj_fail_targets;
  std::set<int> inj_fail_sources;

  friend bool operator==(const FailureWindow&, const FailureWindow&) = default;
};

// Window of an algebra's multiplication maps, read off the direct engine.
FailureWindow failure_window(const MonomialIdeal& ideal,
                             std::int64_t characteristic = 0);

// Failures licensed for a tensor product: surjectivity failures into target
// degrees i and j combine to one into i+j; injectivity failures at source
// degrees i and j combine to one at i+j. Nothing else is emitted.
FailureWindow combine_windows(const FailureWindow& a, const FailureWindow& b);

enum class WlpGuarantee { guaranteed, no_guarantee };

// A (x) K[z]/z^j has WLP whenever j exceeds the socle degree of A. Below
// that threshold nothing is promised and only the direct engine answers.
WlpGuarantee power_factor_guarantee(const MonomialIdeal& ideal, int j);

// WLP of the algebra of the complete multipartite graph K_{a,b,1,...,1}
// (r singleton parts): holds iff r is odd. Refuses characteristic 2.
bool bipartite_cone_has_wlp(int a, int b, int r, std::int64_t characteristic = 0);

}  // namespace wlp
