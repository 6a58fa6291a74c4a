#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "idealforge/exactarith.hpp"
#include "idealforge/polyring.hpp"

namespace idealforge {

enum class Irreducibility { Certified, Assumed };

/// The ring Z[theta] for a monic integer polynomial f of degree n >= 2.
///
/// The power basis 1, theta, ..., theta^(n-1) is taken as the ring of
/// integers; maximal orders are never computed. Irreducibility of f is
/// certified by a prime q with f irreducible mod q, or recorded as assumed.
class NumberField {
 public:
  const IntPoly& poly() const { return f_; }
  int degree() const { return f_.degree(); }
  const Int& discriminant() const { return disc_; }
  Irreducibility irreducibility() const { return status_; }
  /// Prime modulo which f is irreducible, when certified.
  const std::optional<Int>& witness_prime() const { return witness_; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.f_ == b.f_; }

 private:
  NumberField() = default;
  IntPoly f_;
  Int disc_;
  Irreducibility status_ = Irreducibility::Assumed;
  std::optional<Int> witness_;

  friend std::shared_ptr<const NumberField> make_field(const IntPoly& f);
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Throws NotMonic, DegreeTooSmall. Certification tries the first 25 primes
/// not dividing the discriminant.
FieldPtr make_field(const IntPoly& f);

/// Discriminant of a monic polynomial, via the Sylvester resultant.
Int discriminant(const IntPoly& f);

/// Element c0 + c1*theta + ... + c_(n-1)*theta^(n-1) of Z[theta].
class FieldElement {
 public:
  FieldElement(FieldPtr field, IntVector coords);

  static FieldElement from_poly(FieldPtr field, const IntPoly& c);
  static FieldElement from_int(FieldPtr field, const Int& m);
  static FieldElement theta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const IntVector& coords() const { return coords_; }
  /// The coordinate polynomial c(x) = c0 + c1*x + ...
  IntPoly as_poly() const;
  bool is_zero() const { return is_zero_vector(coords_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

 private:
  static bool is_zero_vector(const IntVector& v);
  FieldPtr field_;
  IntVector coords_;
};

enum class ElemOp { Add, Sub, Mul };

/// Throws FieldMismatch.
FieldElement elem_arith(ElemOp op, const FieldElement& a, const FieldElement& b);

FieldElement pow(const FieldElement& base, unsigned e);

/// Column k holds the coordinates of alpha*theta^k.
IntMatrix multiplication_matrix(const FieldElement& alpha);

/// Determinant of the multiplication matrix.
Int norm(const FieldElement& alpha);

/// |norm| == 1
bool is_unit(const FieldElement& alpha);

/// gamma with divisor*gamma == dividend, if it exists in Z[theta].
/// Throws ZeroElement for a zero divisor.
std::optional<FieldElement> exact_divide(const FieldElement& dividend, const FieldElement& divisor);

/// Companion matrix of a monic polynomial given by ascending coefficients:
/// ones on the subdiagonal, last column -c0, -c1, ..., -c_(r-1).
template <typename Scalar>
Matrix<Scalar> companion_matrix(const std::vector<Scalar>& monic_ascending) {
  const auto r = static_cast<Eigen::Index>(monic_ascending.size()) - 1;
  Matrix<Scalar> b = Matrix<Scalar>::Zero(r, r);
  for (Eigen::Index i = 1; i < r; ++i) b(i, i - 1) = Scalar(1);
  for (Eigen::Index i = 0; i < r; ++i) b(i, r - 1) = -monic_ascending[static_cast<std::size_t>(i)];
  return b;
}

/// Throws NotMonic.
IntMatrix companion_matrix(const IntPoly& phi);
/// Entries are residues in [0, q).
IntMatrix companion_matrix(const ModPoly& phi);

/// c(B) by Horner's rule.
template <typename Derived>
Matrix<typename Derived::Scalar> matrix_poly_eval(const IntPoly& c, const Eigen::MatrixBase<Derived>& b) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index r = b.rows();
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(r, r);
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(r, r);
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) acc = Matrix<Scalar>(acc * b) + Scalar(*it) * id;
  return acc;
}

/// c(B) mod m, reducing after every Horner step.
IntMatrix matrix_poly_eval_mod(const IntPoly& c, const IntMatrix& b, const Int& m);

/// "[c0, c1, ..., c_(n-1)]"
std::string to_string(const FieldElement& alpha);

/// Accepts the bracketed coordinate list, or polynomial text in x (or
/// theta) which is reduced modulo f.
FieldElement parse_element(const FieldPtr& field, std::string_view text);

}  // namespace idealforge
