#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlp/numeric.hpp"

namespace wlp {

// Rank over Q, computed by fraction-free (Bareiss) elimination on the
// integer entries. Exact; no pivot thresholds exist in this codebase.
Index rank_rational(const IntMatrix& m);

// Determinant of a square matrix via Bareiss. Exact.
Int determinant(const IntMatrix& m);

using GFScalar = std::int64_t;
using GFMatrix = DenseMatrix<GFScalar>;
using GFVector = DenseVector<GFScalar>;

// A dense matrix over GF(p), entries reduced into [0, p).
struct PrimeFieldMatrix {
  std::int64_t modulus = 2;
  GFMatrix entries;

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }
};

bool is_prime(std::int64_t p);

PrimeFieldMatrix reduce_mod_p(const IntMatrix& m, std::int64_t p);

Index rank(const PrimeFieldMatrix& m);

// Basis of the right kernel, taken from the reduced echelon form so that
// witnesses are deterministic. Each v satisfies M v = 0 over GF(p).
std::vector<GFVector> kernel_basis(const PrimeFieldMatrix& m);

Index rank_mod_p(const IntMatrix& m, std::int64_t p);
std::vector<GFVector> kernel_basis_mod_p(const IntMatrix& m, std::int64_t p);

// Smith normal form U * M * V = diag(d_1, ..., d_k) with d_1 | d_2 | ... and
// U, V unimodular. The invariant factors classify coker(M).
struct SmithForm {
  std::vector<Int> invariant_factors;
  Index rank = 0;
  IntMatrix U;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Integer solution of M x = b through the Smith transforms: solve in
// diagonal coordinates, check divisibility. nullopt when b is not in the
// integer column span.
std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& b);
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

// True iff b lies in the integer image of M.
bool in_image(const IntMatrix& m, const IntVector& b);
bool in_image(const SmithForm& snf, const IntVector& b);

}  // namespace wlp
