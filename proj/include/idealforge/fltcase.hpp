#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealforge/jsonfmt.hpp"
#include "idealforge/thmcheck.hpp"

namespace idealforge {

/// Z[zeta] for an odd prime p, zeta a root of x^(p-1) + ... + x + 1.
struct CyclotomicContext {
  int p;
  FieldPtr field;
  FieldElement zeta;
};

/// Largest p accepted by cyclotomic_field (norms are (p-1)x(p-1) determinants).
inline constexpr int kMaxCyclotomicPrime = 199;

/// Throws NotOddPrime. Checks f(x)*(x - 1) = x^p - 1 and raises
/// InvariantViolation if it fails.
CyclotomicContext cyclotomic_field(const Int& p);

/// prod_{i=0}^{p-1} (x + zeta^i y) computed in Z[zeta]. Throws
/// InvariantViolation (ResultNotRational) if the product has a nonzero
/// irrational part.
Int product_identity(const CyclotomicContext& ctx, const Int& x, const Int& y);

/// norm(x + zeta*y); equals (x^p + y^p)/(x + y) when x + y != 0, and
/// p*x^(p-1) when y = -x. Throws DegenerateSum when x = y = 0.
Int norm_linear(const CyclotomicContext& ctx, const Int& x, const Int& y);

struct RamificationReport {
  int p;
  Int norm_one_minus_zeta;
  bool norm_is_p;
  /// HNF of ((1 - zeta)^(p-1)) equals HNF of (p).
  bool lattices_equal;
  std::optional<FieldElement> unit_quotient;  // p / (1 - zeta)^(p-1)
  Int unit_norm;
  bool quotient_is_unit;
  /// split_prime(p) is a single degree-one prime with e = p - 1.
  bool single_prime;
  int ramification;
  int residue_degree;
  bool passed;
};

RamificationReport ramification_check(const CyclotomicContext& ctx);

struct RootCount {
  int p;
  Int q;
  Int count;
  std::optional<Int> scan_count;  // exhaustive count, for q < 2^16
  Int gcd_count;                  // gcd(p, q - 1)
};

/// Solutions of x^p = 1 mod q. Throws NotOddPrime, NotPrime, SamePrime, and
/// InvariantViolation if the two counting methods disagree.
RootCount pth_root_count(const Int& p, const Int& q);

struct PrimeValuation {
  Int root;
  Valuation valuation;
};

/// The norm of zeta - a against the bound q^p, and two closed forms.
struct NormBoundProbe {
  int p;
  Int q;
  Int a;
  Int exact_norm;             // determinant of multiplication by zeta - a
  Int printed_value;          // |(-a^p - 1)/(-a - 1)|
  bool printed_exact;         // the printed quotient is an integer
  Int geometric_value;        // (a^p - 1)/(a - 1) = 1 + a + ... + a^(p-1)
  bool printed_matches;
  bool geometric_matches;
  Int q_pow_p;
  bool below_bound;           // |exact_norm| < q^p
  int norm_q_valuation;       // exponent of q in the exact norm
  std::vector<PrimeValuation> valuations;  // of zeta - a at each (q, theta - a_i)
};

/// Throws NotARoot, NotPrime.
NormBoundProbe norm_bound_probe(const CyclotomicContext& ctx, const Int& q, const Int& a);

enum class StepStatus { Pass, Fail, NotApplicable };

std::string_view to_string(StepStatus s);

struct TraceStep {
  int index;
  std::string name;
  StepStatus status;
  Json values;
  std::string note;
};

/// Mechanical record of the Fermat lemma's sub-claims for concrete inputs.
/// Never asserts the lemma; anomalies are steps, not exceptions.
struct LemmaTrace {
  int p;
  Int q;
  Int x, y, z;
  bool assume_p_less_z;
  std::vector<TraceStep> steps;
  std::optional<CounterexampleCertificate> linked_certificate;
  Json summary;
};

/// Step names, in order.
inline const std::vector<std::string> kLemmaStepNames = {
    "gcd_condition",          "fermat_equation", "q_splitting",
    "q_divides_z_not_x_plus_y", "linear_prime_divisibility", "theorem2_congruence",
    "norm_bound",             "p_adic_valuations", "final_chain_arithmetic"};

/// Throws only for unusable inputs: NotPrime (q), InvalidArgument (a zero
/// x, y or z).
LemmaTrace lemma_trace(const CyclotomicContext& ctx, const Int& q, const Int& x, const Int& y, const Int& z,
                       bool assume_p_less_z);

}  // namespace idealforge
