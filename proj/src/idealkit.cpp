#include "idealforge/idealkit.hpp"

namespace idealforge {
namespace {

void require_prime(const Int& q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
}

void require_field(const FieldPtr& field, const FieldElement& alpha) {
  if (alpha.field() != field && !(*alpha.field() == *field))
    throw Error(ErrorKind::FieldMismatch, "element is not in the prime's field");
}

// Rows: coordinates of g*theta^k for every generator g and 0 <= k < n.
IntMatrix shifted_rows(const std::vector<FieldElement>& gens) {
  const int n = gens.front().field()->degree();
  IntMatrix rows(static_cast<Eigen::Index>(gens.size()) * n, n);
  Eigen::Index r = 0;
  for (const auto& g : gens) {
    const IntMatrix m = multiplication_matrix(g);
    for (int k = 0; k < n; ++k) rows.row(r++) = m.col(k).transpose();
  }
  return rows;
}

}  // namespace

SplitReport split_prime(const FieldPtr& field, const Int& q) {
  require_prime(q);
  const FactorizationModQ fac = factor_mod_q(field->poly(), q);
  SplitReport report{q, {}, true, false, true};
  for (const auto& [phi, e] : fac.factors) {
    report.primes.push_back({field, q, phi, phi.degree(), e});
    if (phi.degree() != 1 || e != 1) report.fully_split = false;
    if (e > 1) report.ramified = true;
  }
  // Dedekind: with g = prod phi_i, h = prod phi_i^(e_i - 1) (integer lifts),
  // F = (g*h - f)/q, Z[theta] is q-maximal iff gcd(F, g, h) = 1 mod q.
  IntPoly g{1}, h{1};
  for (const auto& p : report.primes) {
    g = g * p.phi.lift();
    for (int k = 1; k < p.ramification; ++k) h = h * p.phi.lift();
  }
  const IntPoly diff = g * h - field->poly();
  std::vector<Int> quotient;
  for (const auto& c : diff.coeffs()) quotient.push_back(c / q);
  const ModPoly big_f(q, std::move(quotient));
  const ModPoly common = gcd(gcd(big_f, ModPoly(g, q)), ModPoly(h, q));
  report.q_maximal = common.is_one();
  return report;
}

PrimeIdealRep degree_one_prime(const FieldPtr& field, const Int& q, const Int& a) {
  require_prime(q);
  if (poly_eval_mod(field->poly(), a, q) != 0)
    throw Error(ErrorKind::NotARoot, a.get_str() + " is not a root of " + to_string(field->poly()) + " mod " + q.get_str());
  const ModPoly phi(q, {Int(-a), Int(1)});
  for (const auto& r : roots_mod_q(field->poly(), q))
    if (r.root == mod(a, q)) return {field, q, phi, 1, r.multiplicity};
  throw InvariantViolation("root scan disagrees with evaluation");
}

PrimeIdealRep prime_above(const FieldPtr& field, const ModPoly& phi) {
  const Int& q = phi.modulus();
  require_prime(q);
  const ModPoly m = phi.monic();
  for (const auto& f : factor_mod_q(field->poly(), q).factors)
    if (f.phi == m) return {field, q, m, m.degree(), f.multiplicity};
  throw Error(ErrorKind::InvalidArgument,
              to_string(m) + " is not an irreducible factor of " + to_string(field->poly()) + " mod " + q.get_str());
}

bool divides_prime_residue(const PrimeIdealRep& prime, const FieldElement& alpha) {
  require_field(prime.field, alpha);
  if (!prime.is_degree_one()) throw Error(ErrorKind::DegreeNotOne, "residue criterion needs a degree-one prime");
  return poly_eval_mod(alpha.as_poly(), prime.root(), prime.q) == 0;
}

bool divides_prime_matrix(const PrimeIdealRep& prime, const FieldElement& alpha) {
  require_field(prime.field, alpha);
  return is_zero(matrix_poly_eval_mod(alpha.as_poly(), companion_matrix(prime.phi), prime.q));
}

bool divides_prime_poly(const PrimeIdealRep& prime, const FieldElement& alpha) {
  require_field(prime.field, alpha);
  return poly_divrem_mod_q(ModPoly(alpha.as_poly(), prime.q), prime.phi).second.is_zero();
}

bool divides_prime(const PrimeIdealRep& prime, const FieldElement& alpha) {
  return prime.is_degree_one() ? divides_prime_residue(prime, alpha) : divides_prime_matrix(prime, alpha);
}

bool experimental_matrix_power_criterion(const PrimeIdealRep& prime, const FieldElement& alpha, int s) {
  require_field(prime.field, alpha);
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
  const Int qs = pow(prime.q, static_cast<unsigned long>(s));
  return is_zero(matrix_poly_eval_mod(alpha.as_poly(), companion_matrix(prime.phi), qs));
}

IdealPowerModule ideal_power_module(const PrimeIdealRep& prime, int s) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "ideal power must be at least 1");
  const FieldElement phi = prime.phi_at_theta();
  std::vector<FieldElement> gens;
  FieldElement phi_power = FieldElement::from_int(prime.field, Int(1));
  for (int j = 0; j <= s; ++j) {
    gens.push_back(FieldElement::from_int(prime.field, pow(prime.q, static_cast<unsigned long>(s - j))) * phi_power);
    phi_power = phi_power * phi;
  }
  const Int modulus = pow(prime.q, static_cast<unsigned long>(s));
  return {prime, s, hnf_modular(shifted_rows(gens), modulus)};
}

IdealPowerModule next_power(const IdealPowerModule& module) {
  const PrimeIdealRep& prime = module.prime;
  const int n = prime.field->degree();
  const FieldElement q = FieldElement::from_int(prime.field, prime.q);
  const FieldElement phi = prime.phi_at_theta();
  IntMatrix rows(2 * n, n);
  for (int i = 0; i < n; ++i) {
    const FieldElement b(prime.field, module.basis.basis().row(i).transpose());
    rows.row(i) = (q * b).coords().transpose();
    rows.row(n + i) = (phi * b).coords().transpose();
  }
  const Int modulus = pow(prime.q, static_cast<unsigned long>(module.s + 1));
  return {prime, module.s + 1, hnf_modular(rows, modulus)};
}

std::optional<IntVector> ideal_power_coefficients(const IdealPowerModule& module, const FieldElement& alpha) {
  require_field(module.prime.field, alpha);
  return member_lattice(module.basis, alpha.coords());
}

bool member_ideal_power(const IdealPowerModule& module, const FieldElement& alpha) {
  return ideal_power_coefficients(module, alpha).has_value();
}

HnfBasis principal_ideal_lattice(const FieldElement& alpha) {
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroElement, "principal ideal of zero");
  // |N(alpha)| lies in alpha*Z[theta].
  const Int n = abs(norm(alpha));
  return hnf_modular(shifted_rows({alpha}), n);
}

Valuation valuation(const PrimeIdealRep& prime, const FieldElement& alpha, int cap) {
  require_field(prime.field, alpha);
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of zero");
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "valuation cap must be at least 1");
  IdealPowerModule module = ideal_power_module(prime, 1);
  int v = 0;
  while (v < cap && member_ideal_power(module, alpha)) {
    ++v;
    if (v < cap) module = next_power(module);
  }
  return {v, v == cap};
}

bool pairwise_coprime(const FieldPtr& field, const FieldElement& alpha, const FieldElement& beta) {
  require_field(field, alpha);
  require_field(field, beta);
  if (alpha.is_zero() || beta.is_zero()) throw Error(ErrorKind::ZeroElement, "coprimality with zero");
  const IntMatrix a = multiplication_matrix(alpha);
  const IntMatrix b = multiplication_matrix(beta);
  IntMatrix rows(a.cols() + b.cols(), a.rows());
  rows << a.transpose(), b.transpose();
  return lattice_index(hnf_modular(rows, abs(norm(alpha)))) == 1;
}

}  // namespace idealforge
