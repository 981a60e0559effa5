#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlp/graph.hpp"
#include "wlp/linalg.hpp"

namespace wlp {

// The degree-i slice of the simplicial chain complex of the i-skeleton of
// the flag complex. Rows of the boundary matrix are the i-cliques (the
// (i-1)-faces, i.e. the basis of A_i), columns the (i+1)-cliques. The
// integer lift carries coefficient 1 on every facet — all signs positive —
// which is exactly the transpose of the degree-i multiplication matrix.
struct SkeletonComplex {
  int degree = 0;
  std::vector<std::vector<int>> row_faces;  // i-cliques
  std::vector<std::vector<int>> col_faces;  // (i+1)-cliques
  PrimeFieldMatrix boundary_gf2;
  IntMatrix boundary_lift;
};

SkeletonComplex skeleton_complex(const Graph& graph, int i);

// dim H_i(skeleton_i; GF(2)). The skeleton has no (i+1)-faces, so this is
// just the kernel of the boundary. Degree 0 uses the augmented complex (the
// empty face is the basis of A_0), matching the algebra side.
Index homology_gf2(const Graph& graph, int i);

// Degree-i WLP diagnosis over GF(2), straight from the skeleton:
// surjectivity fails iff H_i != 0 and f_i <= f_{i-1}; injectivity fails iff
// the boundary has a cokernel and f_{i-1} <= f_i. Requires i >= 1.
struct SkeletonVerdict {
  int degree = 0;
  std::int64_t f_i = 0;      // number of i-faces = dim A_{i+1}
  std::int64_t f_im1 = 0;    // number of (i-1)-faces = dim A_i
  Index boundary_rank = 0;   // rank of the boundary over GF(2)
  Index h_dim = 0;           // dim H_i(skeleton_i; GF(2))
  bool surjectivity_fails = false;
  bool injectivity_fails = false;

  bool holds() const { return !surjectivity_fails && !injectivity_fails; }
};

SkeletonVerdict skeleton_verdict_gf2(const Graph& graph, int i);

// Verdict of the Bockstein connecting homomorphism on H_i(skeleton_i; GF(2)),
// computed by the explicit snake-lemma lift: each GF(2) cycle is lifted to a
// 0/1 integer vector, pushed through the integer boundary (all entries come
// out even), halved, and tested for membership in the integer column span.
// delta is injective iff no nonzero combination of basis cycles dies; that
// decides characteristic-zero surjectivity of the degree-i multiplication
// map on the truncated algebra. The equivalent full-column-rank shortcut is
// recomputed independently and any disagreement throws oracle_mismatch.
struct BocksteinVerdict {
  int degree = 0;
  Index h_dim = 0;
  bool delta_injective = true;
  // When delta is not injective: a nonzero GF(2) cycle in its kernel, as a
  // list of i-faces, plus the integer certificate x with M x = (lift of the
  // cycle pushed through M) / 2.
  std::vector<std::vector<int>> witness_cycle;
  std::optional<IntVector> witness_preimage;
};

BocksteinVerdict bockstein_verdict(const Graph& graph, int i);

}  // namespace wlp
