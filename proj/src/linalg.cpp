#include "wlp/linalg.hpp"

#include <algorithm>
#include <utility>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

// Fraction-free elimination; returns (rank, determinant-of-leading-block).
// The determinant value is only meaningful for square full-rank input.
std::pair<Index, Int> bareiss(IntMatrix a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Int prev = 1;
  int sign = 1;
  Index r = 0;
  while (r < rows && r < cols) {
    // Smallest-magnitude nonzero pivot keeps intermediate growth down.
    Index pr = -1, pc = -1;
    for (Index i = r; i < rows; ++i) {
      for (Index j = r; j < cols; ++j) {
        if (a(i, j) != 0 &&
            (pr < 0 || cmp(abs(a(i, j)), abs(a(pr, pc))) < 0)) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    if (pr != r) {
      a.row(pr).swap(a.row(r));
      sign = -sign;
    }
    if (pc != r) {
      a.col(pc).swap(a.col(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = r + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / prev;
      }
      a(i, r) = 0;
    }
    prev = a(r, r);
    ++r;
  }
  return {r, Int(sign) * prev};
}

}  // namespace

Index rank_rational(const IntMatrix& m) { return bareiss(m).first; }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto [rank, det] = bareiss(m);
  return rank == m.rows() ? det : Int(0);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a nonzero mod p, p prime.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % p) + p) % p;
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row, in order.
std::vector<Index> rref(GFMatrix& e, std::int64_t p) {
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < e.cols() && r < e.rows(); ++c) {
    Index pivot = -1;
    for (Index i = r; i < e.rows(); ++i) {
      if (e(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) e.row(pivot).swap(e.row(r));
    const std::int64_t inv = mod_inverse(e(r, c), p);
    for (Index j = c; j < e.cols(); ++j) e(r, j) = e(r, j) * inv % p;
    for (Index i = 0; i < e.rows(); ++i) {
      if (i == r || e(i, c) == 0) continue;
      const std::int64_t f = e(i, c);
      for (Index j = c; j < e.cols(); ++j) {
        e(i, j) = ((e(i, j) - f * e(r, j)) % p + p) % p;
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

PrimeFieldMatrix reduce_mod_p(const IntMatrix& m, std::int64_t p) {
  if (p > (std::int64_t{1} << 31)) throw invalid_input("modulus too large");
  if (!is_prime(p)) throw invalid_input("modulus must be prime");
  PrimeFieldMatrix out;
  out.modulus = p;
  out.entries.resize(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out.entries(i, j) = static_cast<std::int64_t>(
          mpz_fdiv_ui(m(i, j).get_mpz_t(), static_cast<unsigned long>(p)));
    }
  }
  return out;
}

Index rank(const PrimeFieldMatrix& m) {
  GFMatrix e = m.entries;
  return static_cast<Index>(rref(e, m.modulus).size());
}

std::vector<GFVector> kernel_basis(const PrimeFieldMatrix& m) {
  GFMatrix e = m.entries;
  const std::int64_t p = m.modulus;
  const std::vector<Index> pivot_cols = rref(e, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(e.cols()), false);
  for (Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<GFVector> basis;
  for (Index free = 0; free < e.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    GFVector v = GFVector::Zero(e.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v(pivot_cols[r]) = (p - e(static_cast<Index>(r), free)) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Index rank_mod_p(const IntMatrix& m, std::int64_t p) {
  return rank(reduce_mod_p(m, p));
}

std::vector<GFVector> kernel_basis_mod_p(const IntMatrix& m, std::int64_t p) {
  return kernel_basis(reduce_mod_p(m, p));
}

namespace {

struct SnfPivot {
  Index row = -1;
  Index col = -1;
};

SnfPivot smallest_nonzero(const IntMatrix& a, Index from) {
  SnfPivot best;
  for (Index i = from; i < a.rows(); ++i) {
    for (Index j = from; j < a.cols(); ++j) {
      if (a(i, j) != 0 && (best.row < 0 ||
                           cmp(abs(a(i, j)), abs(a(best.row, best.col))) < 0)) {
        best.row = i;
        best.col = j;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  IntMatrix a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();
  out.U = IntMatrix::Identity(rows, rows);
  out.V = IntMatrix::Identity(cols, cols);

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    SnfPivot pivot = smallest_nonzero(a, t);
    if (pivot.row < 0) break;
    a.row(pivot.row).swap(a.row(t));
    out.U.row(pivot.row).swap(out.U.row(t));
    a.col(pivot.col).swap(a.col(t));
    out.V.col(pivot.col).swap(out.V.col(t));

    for (;;) {
      // Clear below, then to the right, repeating while remainders pop up.
      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Int q = a(i, t) / a(t, t);  // truncated; remainder handled below
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          out.U.row(i) -= q * out.U.row(t);
        }
        if (a(i, t) != 0) {
          // Remainder smaller than the pivot: promote it and restart.
          a.row(i).swap(a.row(t));
          out.U.row(i).swap(out.U.row(t));
          dirty = true;
        }
      }
      if (dirty) continue;
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Int q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          out.V.col(j) -= q * out.V.col(t);
        }
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          out.V.col(j).swap(out.V.col(t));
          dirty = true;
        }
      }
      if (dirty) continue;

      // Row and column are clear; enforce that the pivot divides the rest
      // of the submatrix, fixing violations by a row addition.
      bool divides_all = true;
      for (Index i = t + 1; i < rows && divides_all; ++i) {
        for (Index j = t + 1; j < cols && divides_all; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            out.U.row(t) += out.U.row(i);
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }

    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      out.U.row(t) = -out.U.row(t);
    }
  }

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    if (a(t, t) == 0) break;
    out.invariant_factors.push_back(a(t, t));
  }
  out.rank = static_cast<Index>(out.invariant_factors.size());
  return out;
}

std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& b) {
  const Index rows = snf.U.rows();
  const Index cols = snf.V.cols();
  if (b.size() != rows) throw invalid_input("right-hand side has the wrong length");
  const IntVector c = snf.U * b;
  IntVector y = IntVector::Zero(cols);
  for (Index t = 0; t < rows; ++t) {
    if (t < snf.rank) {
      if (c(t) % snf.invariant_factors[static_cast<std::size_t>(t)] != 0) {
        return std::nullopt;
      }
      y(t) = c(t) / snf.invariant_factors[static_cast<std::size_t>(t)];
    } else if (c(t) != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  return solve_integer(smith_normal_form(m), b);
}

bool in_image(const SmithForm& snf, const IntVector& b) {
  return solve_integer(snf, b).has_value();
}

bool in_image(const IntMatrix& m, const IntVector& b) {
  return solve_integer(m, b).has_value();
}

}  // namespace wlp
