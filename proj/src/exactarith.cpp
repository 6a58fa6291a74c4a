#include "idealforge/exactarith.hpp"

#include <utility>

namespace idealforge {
namespace {

void reduce_entries(IntVector& v, Eigen::Index upto, const Int& modulus) {
  for (Eigen::Index k = 0; k < upto; ++k) v(k) = mod(v(k), modulus);
}

}  // namespace

HnfBasis hnf_rows(std::vector<IntVector> rows, Eigen::Index n, const Int* modulus) {
  for (const auto& r : rows)
    if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "generators of unequal dimension");
  if (n == 0) throw Error(ErrorKind::RankDeficient, "zero-dimensional lattice");

  if (modulus) {
    for (auto& r : rows) reduce_entries(r, n, *modulus);
    for (Eigen::Index k = 0; k < n; ++k) {
      IntVector e = IntVector::Zero(n);
      e(k) = *modulus;
      rows.push_back(std::move(e));
    }
  }

  IntMatrix basis = IntMatrix::Zero(n, n);
  // Eliminate columns from the last to the first; the row left holding a
  // nonzero entry in column j becomes basis row j.
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i](j) == 0) continue;
      if (pivot == rows.size()) {
        pivot = i;
        continue;
      }
      IntVector& p = rows[pivot];
      IntVector& r = rows[i];
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p(j).get_mpz_t(), r(j).get_mpz_t());
      const Int pa = p(j) / g;
      const Int ra = r(j) / g;
      // [u v; -ra pa] has determinant u*pa + v*ra = 1.
      IntVector np = u * p + v * r;
      IntVector nr = pa * r - ra * p;
      p = std::move(np);
      r = std::move(nr);
      if (modulus) {
        reduce_entries(r, n, *modulus);
        reduce_entries(p, j, *modulus);
      }
    }
    if (pivot == rows.size()) throw Error(ErrorKind::RankDeficient, "generators do not span a full-rank lattice");
    IntVector row = std::move(rows[pivot]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    if (row(j) < 0) row = -row;
    basis.row(j) = row.transpose();
    // Remaining rows now vanish on columns >= j.
  }

  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = i - 1; j >= 0; --j) {
      const Int q = floor_div(basis(i, j), basis(j, j));
      if (q != 0) basis.row(i) -= q * basis.row(j);
    }
  }
  return HnfBasis(std::move(basis));
}

HnfBasis hnf(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw Error(ErrorKind::RankDeficient, "no generators");
  return hnf_rows(generators, generators.front().size(), nullptr);
}

std::optional<IntVector> member_lattice(const HnfBasis& basis, const IntVector& target) {
  const Eigen::Index n = basis.dim();
  if (target.size() != n) throw Error(ErrorKind::DimensionMismatch, "target dimension differs from lattice dimension");
  IntVector rest = target;
  IntVector coeffs = IntVector::Zero(n);
  const IntMatrix& b = basis.basis();
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    if (!mpz_divisible_p(rest(j).get_mpz_t(), b(j, j).get_mpz_t())) return std::nullopt;
    coeffs(j) = rest(j) / b(j, j);
    if (coeffs(j) != 0) rest -= coeffs(j) * b.row(j).transpose();
  }
  return coeffs;
}

Int lattice_index(const HnfBasis& basis) {
  Int index = 1;
  for (Eigen::Index i = 0; i < basis.dim(); ++i) index *= basis.pivot(i);
  return index;
}

}  // namespace idealforge
