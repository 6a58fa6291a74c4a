#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idealforge/idealkit.hpp"
#include "idealforge/random.hpp"

namespace idealforge {

enum class Classification { Consistent, Counterexample, ConverseGap };

std::string_view to_string(Classification c);

/// c(a) mod q^s for alpha = c(theta).
Int congruence_residue(const FieldElement& alpha, const Int& a, const Int& q, int s);

/// The claimed necessary condition c(a) == 0 mod q^s for alpha in
/// (q, theta - a)^s. Throws NotARoot, InvalidArgument (s < 1).
bool necessary_condition(const FieldPtr& field, const Int& a, const Int& q, int s, const FieldElement& alpha);

struct Theorem2Verdict {
  FieldElement element;
  PrimeIdealRep prime;
  int s;
  Int residue;  // c(a) mod q^s
  bool condition_holds;
  bool member;
  Classification classification;
  std::optional<IntVector> coefficients;  // over the pi^s basis, when member
};

/// Compare the congruence with lattice membership. Throws DegreeNotOne,
/// FieldMismatch.
Theorem2Verdict verify_instance(const PrimeIdealRep& prime, int s, const FieldElement& alpha);
Theorem2Verdict verify_instance(const PrimeIdealRep& prime, const IdealPowerModule& module, const FieldElement& alpha);

/// sum_i coeffs[i] * (basis row i).
FieldElement combine_basis_rows(const IdealPowerModule& module, const IntVector& coeffs);

/// Random member of pi^s: basis combination with coefficients in
/// [-bound, bound]. Throws InvalidArgument for bound < 1.
FieldElement sample_ideal_power_element(const IdealPowerModule& module, Rng& gen, const Int& bound);

/// Where the published argument breaks on a concrete element.
///
/// The argument multiplies alpha by P = ((theta - a_2)...(theta - a_n))^(s-1),
/// divides by q^(s-1), and reads off the residue of the quotient at a as
/// c(a) * prod(a - a_i)^(s-1) / q^(s-1) mod q. `quotient_residue` is the true
/// residue of the quotient; `claimed_residue` is the value read off from c(a).
struct ProofStepProbe {
  bool applicable;               // requires f to split into distinct linear factors mod q
  bool quotient_integral;        // alpha * P / q^(s-1) lies in Z[theta]
  std::optional<Int> quotient_residue;
  bool claimed_integral;         // q^(s-1) divides c(a) * prod(a - a_i)^(s-1)
  std::optional<Int> claimed_residue;
  bool step_holds;               // both integral and residues agree
};

ProofStepProbe probe_proof_step(const PrimeIdealRep& prime, int s, const FieldElement& alpha);

/// Self-contained refutation record: alpha lies in (q, theta - a)^s yet
/// c(a) != 0 mod q^s.
struct CounterexampleCertificate {
  std::uint64_t trial;
  IntPoly field_poly;
  Int q;
  Int a;
  int s;
  IntVector element;
  Int residue;
  IntVector coefficients;  // over `basis`
  IntMatrix basis;         // HNF basis of pi^s
  ProofStepProbe proof_step;
};

inline constexpr std::int64_t kDefaultTrials = 1000;
inline constexpr long kDefaultBound = 10;

struct SearchOptions {
  std::int64_t trials = kDefaultTrials;
  std::uint64_t seed = 1;
  Int bound = kDefaultBound;
  unsigned workers = 1;
};

/// Trial 0 is (theta - a)^s; trials 1.. sample pi^s with independent seeded
/// streams. Certificates come back ordered by trial, independent of
/// `workers`. Throws DegreeNotOne, SPowerTooSmall (s < 2), InvalidArgument.
std::vector<CounterexampleCertificate> search_counterexamples(const PrimeIdealRep& prime, int s,
                                                              const SearchOptions& options);

/// Rebuilds the field, prime and pi^s from scratch (by the incremental
/// product route) and checks every claim in the certificate.
bool reverify(const CounterexampleCertificate& cert);

}  // namespace idealforge
