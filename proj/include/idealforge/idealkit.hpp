#pragma once

#include <optional>
#include <vector>

#include "idealforge/numfield.hpp"

namespace idealforge {

/// Prime ideal (q, phi(theta)) of Z[theta], phi a monic irreducible factor of
/// f mod q with multiplicity `ramification`.
struct PrimeIdealRep {
  FieldPtr field;
  Int q;
  ModPoly phi;
  int residue_degree;
  int ramification;

  bool is_degree_one() const { return residue_degree == 1; }
  /// For degree-one primes, the residue a with phi = x - a.
  Int root() const { return mod(-phi.coeff(0), q); }
  /// phi lifted to Z with coefficients in [0, q), evaluated at theta.
  FieldElement phi_at_theta() const { return FieldElement::from_poly(field, phi.lift()); }
};

struct SplitReport {
  Int q;
  std::vector<PrimeIdealRep> primes;
  bool fully_split;
  bool ramified;
  /// Dedekind's criterion: Z[theta] is maximal at q, so the listed ideals are
  /// exactly the primes of the maximal order above q.
  bool q_maximal;
};

/// Kummer-Dedekind splitting of (q) from the factorization of f mod q.
/// Throws NotPrime.
SplitReport split_prime(const FieldPtr& field, const Int& q);

/// The degree-one prime (q, theta - a). Throws NotPrime, NotARoot.
PrimeIdealRep degree_one_prime(const FieldPtr& field, const Int& q, const Int& a);

/// The prime (q, phi(theta)) for a given factor. Throws NotPrime and
/// InvalidArgument when phi is not an irreducible factor of f mod q.
PrimeIdealRep prime_above(const FieldPtr& field, const ModPoly& phi);

// Divisibility of alpha = c(theta) by a prime, three ways. All throw
// FieldMismatch.

/// c(a) == 0 mod q. Throws DegreeNotOne for higher-degree primes.
bool divides_prime_residue(const PrimeIdealRep& prime, const FieldElement& alpha);
/// c(B) == 0 mod q entrywise, B the companion matrix of phi.
bool divides_prime_matrix(const PrimeIdealRep& prime, const FieldElement& alpha);
/// phi divides c over F_q.
bool divides_prime_poly(const PrimeIdealRep& prime, const FieldElement& alpha);

/// Residue criterion for degree-one primes, matrix criterion otherwise.
bool divides_prime(const PrimeIdealRep& prime, const FieldElement& alpha);

/// c(B) == 0 mod q^s. Not an established criterion for s > 1; exposed for
/// experiments only and labeled as such in reports.
bool experimental_matrix_power_criterion(const PrimeIdealRep& prime, const FieldElement& alpha, int s);

/// pi^s as a sublattice of Z^n in power-basis coordinates.
struct IdealPowerModule {
  PrimeIdealRep prime;
  int s;
  HnfBasis basis;
};

/// HNF of the Z-span of q^(s-j) * phi(theta)^j * theta^k, 0 <= j <= s,
/// 0 <= k < n. Throws InvalidArgument for s < 1.
IdealPowerModule ideal_power_module(const PrimeIdealRep& prime, int s);

/// pi^(s+1) from pi^s as q*pi^s + phi(theta)*pi^s.
IdealPowerModule next_power(const IdealPowerModule& module);

/// Coefficients over the module basis, or nullopt. Throws FieldMismatch.
std::optional<IntVector> ideal_power_coefficients(const IdealPowerModule& module, const FieldElement& alpha);

bool member_ideal_power(const IdealPowerModule& module, const FieldElement& alpha);

/// Lattice of the principal ideal alpha*Z[theta]. Throws ZeroElement.
HnfBasis principal_ideal_lattice(const FieldElement& alpha);

struct Valuation {
  int value;
  /// value == cap; the true valuation may be larger.
  bool saturated;
};

inline constexpr int kDefaultValuationCap = 64;

/// Largest s <= cap with alpha in pi^s. Throws ZeroElement, FieldMismatch.
Valuation valuation(const PrimeIdealRep& prime, const FieldElement& alpha, int cap = kDefaultValuationCap);

/// Whether alpha*Z[theta] + beta*Z[theta] is the whole ring.
/// Throws ZeroElement, FieldMismatch.
bool pairwise_coprime(const FieldPtr& field, const FieldElement& alpha, const FieldElement& beta);

}  // namespace idealforge
