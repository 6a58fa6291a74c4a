#pragma once

#include <optional>
#include <vector>

#include "idealforge/error.hpp"
#include "idealforge/types.hpp"

namespace idealforge {

/// Canonical basis of a full-rank sublattice of Z^n.
///
/// Rows are basis vectors and the matrix is lower triangular: row i is
/// supported on columns 0..i. Pivots (the diagonal) are strictly positive and
/// every entry below a pivot lies in [0, pivot). Two generator sets span the
/// same lattice iff their HnfBasis compare equal.
class HnfBasis {
 public:
  Eigen::Index dim() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const Int& pivot(Eigen::Index i) const { return basis_(i, i); }

  friend bool operator==(const HnfBasis& a, const HnfBasis& b) {
    return a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  explicit HnfBasis(IntMatrix basis) : basis_(std::move(basis)) {}
  IntMatrix basis_;

  friend HnfBasis hnf_rows(std::vector<IntVector> rows, Eigen::Index n, const Int* modulus);
};

// Core routine behind hnf()/hnf_modular(). `modulus`, when non-null, must be a
// positive integer D with D*Z^n contained in the lattice.
HnfBasis hnf_rows(std::vector<IntVector> rows, Eigen::Index n, const Int* modulus);

/// HNF of the lattice spanned by the rows of `generators`.
/// Throws RankDeficient if the rows do not span a rank-n lattice.
template <typename Derived>
HnfBasis hnf(const Eigen::MatrixBase<Derived>& generators) {
  if (generators.rows() == 0 || generators.cols() == 0)
    throw Error(ErrorKind::RankDeficient, "no generators");
  std::vector<IntVector> rows;
  rows.reserve(generators.rows());
  for (Eigen::Index i = 0; i < generators.rows(); ++i) rows.emplace_back(generators.row(i).transpose());
  return hnf_rows(std::move(rows), generators.cols(), nullptr);
}

/// As hnf(), for a lattice known to contain modulus*Z^n. Intermediate entries
/// are reduced modulo `modulus`, which keeps them bounded.
template <typename Derived>
HnfBasis hnf_modular(const Eigen::MatrixBase<Derived>& generators, const Int& modulus) {
  if (modulus <= 0) throw Error(ErrorKind::BadModulus, "HNF modulus must be positive");
  std::vector<IntVector> rows;
  rows.reserve(generators.rows());
  for (Eigen::Index i = 0; i < generators.rows(); ++i) rows.emplace_back(generators.row(i).transpose());
  return hnf_rows(std::move(rows), generators.cols(), &modulus);
}

HnfBasis hnf(const std::vector<IntVector>& generators);

/// Coefficients c with c^T * basis == target, or nullopt if target is not in
/// the lattice. Throws DimensionMismatch.
std::optional<IntVector> member_lattice(const HnfBasis& basis, const IntVector& target);

/// Index of the lattice in Z^n: the product of the pivots.
Int lattice_index(const HnfBasis& basis);

/// Exact determinant by Bareiss fraction-free elimination.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Entrywise non-negative residue.
template <typename Derived>
IntMatrix mod(const Eigen::MatrixBase<Derived>& m, const Int& modulus) {
  IntMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = idealforge::mod(Int(m(i, j)), modulus);
  return r;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace idealforge
