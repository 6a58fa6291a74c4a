#include "idealforge/numfield.hpp"

namespace idealforge {

Int discriminant(const IntPoly& f) {
  const int n = f.degree();
  const IntPoly fp = [&] {
    std::vector<Int> d;
    for (int k = 1; k <= n; ++k) d.push_back(f.coeff(k) * k);
    return IntPoly(std::move(d));
  }();
  const int m = fp.degree();
  if (m < 0) return 0;
  // Sylvester matrix of f (degree n) and f' (degree m), size n + m.
  const Eigen::Index size = n + m;
  IntMatrix s = IntMatrix::Zero(size, size);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(i, i + k) = f.coeff(n - k);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(m + i, i + k) = fp.coeff(m - k);
  const Int res = determinant(s);
  const bool negate = ((n * (n - 1) / 2) % 2) != 0;
  return negate ? Int(-res) : res;
}

FieldPtr make_field(const IntPoly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "field polynomial " + to_string(f) + " is not monic");
  if (f.degree() < 2) throw Error(ErrorKind::DegreeTooSmall, "field polynomial must have degree at least 2");
  std::shared_ptr<NumberField> field(new NumberField());
  field->f_ = f;
  field->disc_ = discriminant(f);
  if (field->disc_ != 0) {
    int tried = 0;
    for (Int q = 2; tried < 25; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
      if (mpz_divisible_p(field->disc_.get_mpz_t(), q.get_mpz_t())) continue;
      ++tried;
      if (is_irreducible_mod_q(ModPoly(f, q))) {
        field->status_ = Irreducibility::Certified;
        field->witness_ = q;
        break;
      }
    }
  }
  return field;
}

// ------------------------------------------------------------ elements

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw Error(ErrorKind::FieldMismatch, "elements belong to different fields");
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, IntVector coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree())
    throw Error(ErrorKind::DimensionMismatch, "element needs exactly " + std::to_string(field_->degree()) + " coordinates");
}

bool FieldElement::is_zero_vector(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

FieldElement FieldElement::from_poly(FieldPtr field, const IntPoly& c) {
  const IntPoly r = divrem_monic(c, field->poly()).second;
  IntVector v(field->degree());
  for (int k = 0; k < field->degree(); ++k) v(k) = r.coeff(k);
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::from_int(FieldPtr field, const Int& m) {
  IntVector v = IntVector::Zero(field->degree());
  v(0) = m;
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::theta(FieldPtr field) {
  IntVector v = IntVector::Zero(field->degree());
  v(1) = 1;
  return FieldElement(std::move(field), std::move(v));
}

IntPoly FieldElement::as_poly() const { return IntPoly(std::vector<Int>(coords_.begin(), coords_.end())); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return (a.field_ == b.field_ || *a.field_ == *b.field_) && a.coords_ == b.coords_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.coords_ + b.coords_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.coords_ - b.coords_);
}

FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, -a.coords_); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement::from_poly(a.field_, a.as_poly() * b.as_poly());
}

FieldElement elem_arith(ElemOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case ElemOp::Add: return a + b;
    case ElemOp::Sub: return a - b;
    case ElemOp::Mul: return a * b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown element operation");
}

FieldElement pow(const FieldElement& base, unsigned e) {
  FieldElement result = FieldElement::from_int(base.field(), Int(1));
  FieldElement b = base;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

IntMatrix multiplication_matrix(const FieldElement& alpha) {
  const int n = alpha.field()->degree();
  IntMatrix m(n, n);
  FieldElement column = alpha;
  const FieldElement theta = FieldElement::theta(alpha.field());
  for (int k = 0; k < n; ++k) {
    m.col(k) = column.coords();
    if (k + 1 < n) column = column * theta;
  }
  return m;
}

Int norm(const FieldElement& alpha) { return determinant(multiplication_matrix(alpha)); }

bool is_unit(const FieldElement& alpha) { return abs(norm(alpha)) == 1; }

std::optional<FieldElement> exact_divide(const FieldElement& dividend, const FieldElement& divisor) {
  require_same_field(dividend, divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroElement, "division by zero element");
  // Cramer's rule on M_divisor * gamma = dividend.
  const IntMatrix m = multiplication_matrix(divisor);
  const Int det = determinant(m);
  const Eigen::Index n = m.rows();
  IntVector gamma(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    IntMatrix mk = m;
    mk.col(k) = dividend.coords();
    const Int num = determinant(mk);
    if (!mpz_divisible_p(num.get_mpz_t(), det.get_mpz_t())) return std::nullopt;
    gamma(k) = num / det;
  }
  return FieldElement(dividend.field(), std::move(gamma));
}

IntMatrix companion_matrix(const IntPoly& phi) {
  if (!phi.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
  if (phi.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "companion matrix needs degree >= 1");
  return companion_matrix<Int>(phi.coeffs());
}

IntMatrix companion_matrix(const ModPoly& phi) {
  if (!phi.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
  if (phi.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "companion matrix needs degree >= 1");
  return mod(companion_matrix<Int>(phi.coeffs()), phi.modulus());
}

IntMatrix matrix_poly_eval_mod(const IntPoly& c, const IntMatrix& b, const Int& m) {
  const Eigen::Index r = b.rows();
  IntMatrix acc = IntMatrix::Zero(r, r);
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) {
    acc = acc * b;
    for (Eigen::Index i = 0; i < r; ++i) acc(i, i) += *it;
    acc = mod(acc, m);
  }
  return acc;
}

std::string to_string(const FieldElement& alpha) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < alpha.coords().size(); ++i) {
    if (i) out += ", ";
    out += alpha.coords()(i).get_str();
  }
  return out + "]";
}

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  const IntPoly c = parse_poly(text);
  std::string_view trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  if (!trimmed.empty() && trimmed.front() == '[' && c.degree() >= field->degree())
    throw Error(ErrorKind::DimensionMismatch, "coordinate list longer than the field degree");
  return FieldElement::from_poly(field, c);
}

}  // namespace idealforge
