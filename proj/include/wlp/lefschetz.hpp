#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlp/graph.hpp"
#include "wlp/linalg.hpp"
#include "wlp/monomial.hpp"

namespace wlp {

// The Lefschetz element is always the sum of all variables; for monomial
// ideals this form is generic, so no sampling of random forms is needed.

// Matrix of multiplication by (sum of variables)^power from A_degree to
// A_{degree+power} in canonical bases. Rows are indexed by the target basis,
// columns by the source basis; entries are multinomial counts (0/1 when
// power == 1). Zero-dimensional source or target yields an empty-dimension
// matrix.
IntMatrix mult_matrix(const MonomialIdeal& ideal, int degree, int power = 1);

enum class FailureMode { injectivity, surjectivity, both };

const char* to_string(FailureMode mode);

struct DegreeRecord {
  int degree = 0;           // source degree i of the map A_i -> A_{i+1}
  std::int64_t dim_source = 0;
  std::int64_t dim_target = 0;
  std::int64_t rank = 0;
  bool full = false;        // rank == min(dim_source, dim_target)

  std::int64_t max_rank() const { return std::min(dim_source, dim_target); }
};

struct Failure {
  int degree = 0;
  FailureMode mode = FailureMode::both;

  friend bool operator==(const Failure&, const Failure&) = default;
};

// Per-degree rank data for multiplication by the sum of variables, plus the
// overall verdict. Failure modes: injectivity when the source is the smaller
// side, surjectivity when the target is, both when dimensions tie.
struct WLPReport {
  std::int64_t characteristic = 0;  // 0 or a prime
  HilbertFunction hilbert;
  std::vector<DegreeRecord> degrees;  // source degrees 0 .. socle_degree-1
  std::vector<Failure> failures;
  bool has_wlp = true;

  std::int64_t dim(int degree) const {
    return degree >= 0 && degree < static_cast<int>(hilbert.size())
               ? hilbert[degree]
               : 0;
  }
  // Rank of A_degree -> A_{degree+1}; 0 outside the recorded range (the map
  // is zero there).
  std::int64_t rank_at(int degree) const;
  // Map-level properties, defined for every integer degree.
  bool injective_at(int degree) const;
  bool surjective_at(int degree) const;
};

// Decide WLP degree by degree. characteristic 0 ranks via Bareiss over Z,
// characteristic p via Gaussian elimination over GF(p).
WLPReport wlp_report(const MonomialIdeal& ideal, std::int64_t characteristic = 0);

// Self-test of the char-2 chain condition: multiplication by the sum of the
// variables squares to zero mod 2 on every quadratic monomial quotient.
bool char2_chain_condition(const MonomialIdeal& ideal);

// A vertex or edge removal target for the short-exact-sequence rules.
struct Removal {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  int u = -1;
  int v = -1;

  static Removal vertex(int v) { return {Kind::vertex, v, -1}; }
  static Removal edge(int u, int v) { return {Kind::edge, u, v}; }
};

enum class SESRule {
  link_injectivity,      // lk algebra map not injective and f_i >= f_{i-1}
  deletion_surjectivity  // deletion algebra map not surjective and f_i <= f_{i-1}
};

const char* to_string(SESRule rule);

// One licensed conclusion: A fails WLP in `degree` with `mode`, because the
// named rule fired. Witness data records the primed algebra's failing map
// and the face-count comparison that licensed the transfer.
struct SESConclusion {
  int degree = 0;
  FailureMode mode = FailureMode::injectivity;
  SESRule rule = SESRule::link_injectivity;
  int witness_degree = 0;          // degree of the primed algebra's map
  std::int64_t witness_rank = 0;
  std::int64_t witness_dim = 0;    // the dimension the rank falls short of
  std::int64_t f_i = 0;            // dim A_{degree+1} of the ambient algebra
  std::int64_t f_im1 = 0;          // dim A_degree
};

// Failure certificates inferred from removing a vertex or an edge. Only
// failures are ever concluded: the positive directions would need the
// connecting homomorphism of the long exact sequence, which is not computed.
struct SESInference {
  Removal removal;
  int max_degree = -1;  // degrees 0..max_degree were scanned
  std::vector<SESConclusion> conclusions;
  WLPReport deletion_report;  // A'
  WLPReport link_report;      // A''
};

SESInference ses_infer(const Graph& graph, const Removal& removal);

}  // namespace wlp
