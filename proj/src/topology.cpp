#include "wlp/topology.hpp"

#include <algorithm>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

bool is_subface(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SkeletonComplex skeleton_complex(const Graph& graph, int i) {
  if (i < 0) throw invalid_input("skeleton degree must be >= 0");
  SkeletonComplex out;
  out.degree = i;
  out.row_faces = cliques(graph, i);
  out.col_faces = cliques(graph, i + 1);
  const Index rows = static_cast<Index>(out.row_faces.size());
  const Index cols = static_cast<Index>(out.col_faces.size());
  out.boundary_lift = IntMatrix::Zero(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      if (is_subface(out.row_faces[static_cast<std::size_t>(r)],
                     out.col_faces[static_cast<std::size_t>(c)])) {
        out.boundary_lift(r, c) = 1;
      }
    }
  }
  out.boundary_gf2 = reduce_mod_p(out.boundary_lift, 2);
  return out;
}

Index homology_gf2(const Graph& graph, int i) {
  const SkeletonComplex sc = skeleton_complex(graph, i);
  return static_cast<Index>(sc.col_faces.size()) - rank(sc.boundary_gf2);
}

SkeletonVerdict skeleton_verdict_gf2(const Graph& graph, int i) {
  if (i < 1) throw invalid_input("skeleton verdict needs degree >= 1");
  const SkeletonComplex sc = skeleton_complex(graph, i);
  SkeletonVerdict v;
  v.degree = i;
  v.f_i = static_cast<std::int64_t>(sc.col_faces.size());
  v.f_im1 = static_cast<std::int64_t>(sc.row_faces.size());
  v.boundary_rank = rank(sc.boundary_gf2);
  v.h_dim = v.f_i - v.boundary_rank;
  v.surjectivity_fails = v.h_dim != 0 && v.f_i <= v.f_im1;
  v.injectivity_fails = v.boundary_rank < v.f_im1 && v.f_im1 <= v.f_i;
  return v;
}

BocksteinVerdict bockstein_verdict(const Graph& graph, int i) {
  if (i < 1) throw invalid_input("Bockstein verdict needs degree >= 1");
  const SkeletonComplex sc = skeleton_complex(graph, i);
  const IntMatrix& m = sc.boundary_lift;
  const Index cols = m.cols();

  BocksteinVerdict out;
  out.degree = i;

  const std::vector<GFVector> cycles = kernel_basis(sc.boundary_gf2);
  out.h_dim = static_cast<Index>(cycles.size());
  if (out.h_dim >= 63) throw invalid_input("mod-2 homology too large to enumerate");

  // Snake-lemma lift: the 0/1 lift of a cycle lands in 2Z^rows under the
  // integer boundary; delta is the class of the halved image in coker.
  std::vector<IntVector> halved;
  for (const GFVector& z : cycles) {
    IntVector lift(cols);
    for (Index c = 0; c < cols; ++c) lift(c) = z(c);
    IntVector w = m * lift;
    for (Index r = 0; r < w.size(); ++r) {
      if (mpz_odd_p(w(r).get_mpz_t())) {
        throw oracle_mismatch("boundary of a mod-2 cycle lift is not even");
      }
      w(r) /= 2;
    }
    halved.push_back(std::move(w));
  }

  out.delta_injective = true;
  if (out.h_dim > 0) {
    const SmithForm snf = smith_normal_form(m);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << out.h_dim); ++mask) {
      IntVector sum = IntVector::Zero(m.rows());
      for (Index j = 0; j < out.h_dim; ++j) {
        if ((mask >> j) & 1) sum += halved[static_cast<std::size_t>(j)];
      }
      auto preimage = solve_integer(snf, sum);
      if (!preimage) continue;
      // This combination of basis cycles dies in coker: delta has a kernel.
      out.delta_injective = false;
      GFVector combo = GFVector::Zero(cols);
      for (Index j = 0; j < out.h_dim; ++j) {
        if ((mask >> j) & 1) {
          combo += cycles[static_cast<std::size_t>(j)];
        }
      }
      for (Index c = 0; c < cols; ++c) {
        if (combo(c) % 2 != 0) {
          out.witness_cycle.push_back(sc.col_faces[static_cast<std::size_t>(c)]);
        }
      }
      out.witness_preimage = std::move(preimage);
      break;
    }
  }

  // Independent route: delta is injective iff the integer boundary has full
  // column rank over Q. Disagreement is a bug in one of the two engines.
  const bool full_column_rank = rank_rational(m) == cols;
  if (full_column_rank != out.delta_injective) {
    throw oracle_mismatch("Bockstein lift disagrees with the rational rank shortcut");
  }
  return out;
}

}  // namespace wlp
