#include "idealforge/thmcheck.hpp"

#include <algorithm>
#include <thread>

namespace idealforge {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Consistent: return "consistent";
    case Classification::Counterexample: return "counterexample";
    case Classification::ConverseGap: return "converse-gap";
  }
  return "unknown";
}

Int congruence_residue(const FieldElement& alpha, const Int& a, const Int& q, int s) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "power s must be at least 1");
  return poly_eval_mod(alpha.as_poly(), a, pow(q, static_cast<unsigned long>(s)));
}

bool necessary_condition(const FieldPtr& field, const Int& a, const Int& q, int s, const FieldElement& alpha) {
  if (!(*alpha.field() == *field)) throw Error(ErrorKind::FieldMismatch, "element is not in the given field");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  if (poly_eval_mod(field->poly(), a, q) != 0)
    throw Error(ErrorKind::NotARoot, a.get_str() + " is not a root of " + to_string(field->poly()) + " mod " + q.get_str());
  return congruence_residue(alpha, a, q, s) == 0;
}

Theorem2Verdict verify_instance(const PrimeIdealRep& prime, const IdealPowerModule& module, const FieldElement& alpha) {
  if (!prime.is_degree_one()) throw Error(ErrorKind::DegreeNotOne, "the congruence is stated for degree-one primes");
  auto coeffs = ideal_power_coefficients(module, alpha);
  const Int residue = congruence_residue(alpha, prime.root(), prime.q, module.s);
  const bool condition = residue == 0;
  const bool member = coeffs.has_value();
  Classification c = Classification::Consistent;
  if (member && !condition) c = Classification::Counterexample;
  if (!member && condition) c = Classification::ConverseGap;
  return {alpha, prime, module.s, residue, condition, member, c, std::move(coeffs)};
}

Theorem2Verdict verify_instance(const PrimeIdealRep& prime, int s, const FieldElement& alpha) {
  if (!prime.is_degree_one()) throw Error(ErrorKind::DegreeNotOne, "the congruence is stated for degree-one primes");
  return verify_instance(prime, ideal_power_module(prime, s), alpha);
}

FieldElement combine_basis_rows(const IdealPowerModule& module, const IntVector& coeffs) {
  if (coeffs.size() != module.basis.dim()) throw Error(ErrorKind::DimensionMismatch, "one coefficient per basis row");
  const IntVector v = (coeffs.transpose() * module.basis.basis()).transpose();
  return FieldElement(module.prime.field, v);
}

FieldElement sample_ideal_power_element(const IdealPowerModule& module, Rng& gen, const Int& bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "sampling bound must be at least 1");
  IntVector coeffs(module.basis.dim());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) = uniform_in(gen, -bound, bound);
  return combine_basis_rows(module, coeffs);
}

ProofStepProbe probe_proof_step(const PrimeIdealRep& prime, int s, const FieldElement& alpha) {
  ProofStepProbe probe{false, false, std::nullopt, false, std::nullopt, false};
  if (!prime.is_degree_one() || s < 1) return probe;
  const auto roots = roots_mod_q(prime.field->poly(), prime.q);
  if (static_cast<int>(roots.size()) != prime.field->degree()) return probe;
  for (const auto& r : roots)
    if (r.multiplicity != 1) return probe;
  probe.applicable = true;

  const FieldPtr& F = prime.field;
  const Int a = prime.root();
  const Int qs1 = pow(prime.q, static_cast<unsigned long>(s - 1));
  const FieldElement theta = FieldElement::theta(F);
  FieldElement cofactor = FieldElement::from_int(F, Int(1));
  Int claimed = alpha.as_poly().eval(a);
  for (const auto& r : roots) {
    if (r.root == a) continue;
    cofactor = cofactor * (theta - FieldElement::from_int(F, r.root));
    claimed *= pow(Int(a - r.root), static_cast<unsigned long>(s - 1));
  }
  const FieldElement product = alpha * pow(cofactor, static_cast<unsigned>(s - 1));

  probe.quotient_integral = true;
  for (Eigen::Index i = 0; i < product.coords().size(); ++i)
    probe.quotient_integral = probe.quotient_integral && mpz_divisible_p(product.coords()(i).get_mpz_t(), qs1.get_mpz_t());
  if (probe.quotient_integral) {
    const FieldElement quotient(F, product.coords() / qs1);
    probe.quotient_residue = poly_eval_mod(quotient.as_poly(), a, prime.q);
  }
  probe.claimed_integral = mpz_divisible_p(claimed.get_mpz_t(), qs1.get_mpz_t()) != 0;
  if (probe.claimed_integral) probe.claimed_residue = mod(claimed / qs1, prime.q);
  probe.step_holds = probe.quotient_integral && probe.claimed_integral && probe.quotient_residue == probe.claimed_residue;
  return probe;
}

namespace {

std::optional<CounterexampleCertificate> certify(std::uint64_t trial, const PrimeIdealRep& prime,
                                                 const IdealPowerModule& module, const FieldElement& alpha) {
  Theorem2Verdict v = verify_instance(prime, module, alpha);
  if (v.classification != Classification::Counterexample) return std::nullopt;
  return CounterexampleCertificate{trial,        prime.field->poly(),
                                   prime.q,      prime.root(),
                                   module.s,     alpha.coords(),
                                   v.residue,    *v.coefficients,
                                   module.basis.basis(), probe_proof_step(prime, module.s, alpha)};
}

}  // namespace

std::vector<CounterexampleCertificate> search_counterexamples(const PrimeIdealRep& prime, int s,
                                                              const SearchOptions& options) {
  if (!prime.is_degree_one()) throw Error(ErrorKind::DegreeNotOne, "the congruence is stated for degree-one primes");
  if (s < 2) throw Error(ErrorKind::SPowerTooSmall, "s = 1 is the exact residue criterion; search needs s >= 2");
  if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (options.bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be at least 1");

  const IdealPowerModule module = ideal_power_module(prime, s);
  const FieldPtr& F = prime.field;
  const FieldElement trial0 = pow(FieldElement::theta(F) - FieldElement::from_int(F, prime.root()), static_cast<unsigned>(s));
  const auto trials = static_cast<std::uint64_t>(options.trials);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::min<std::uint64_t>(trials, 64))));

  std::vector<std::vector<CounterexampleCertificate>> shards(workers);
  auto run_shard = [&](unsigned w) {
    for (std::uint64_t t = w; t < trials; t += workers) {
      std::optional<CounterexampleCertificate> cert;
      if (t == 0) {
        cert = certify(0, prime, module, trial0);
      } else {
        Rng gen = trial_rng(options.seed, t);
        cert = certify(t, prime, module, sample_ideal_power_element(module, gen, options.bound));
      }
      if (cert) shards[w].push_back(std::move(*cert));
    }
  };
  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_shard, w);
    for (auto& th : pool) th.join();
  }

  std::vector<CounterexampleCertificate> merged;
  for (auto& shard : shards)
    for (auto& c : shard) merged.push_back(std::move(c));
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.trial < y.trial; });
  return merged;
}

bool reverify(const CounterexampleCertificate& cert) {
  if (cert.s < 1 || !is_prime(cert.q)) return false;
  const FieldPtr F = make_field(cert.field_poly);
  if (static_cast<int>(cert.element.size()) != F->degree()) return false;
  if (poly_eval_mod(F->poly(), cert.a, cert.q) != 0) return false;
  const PrimeIdealRep prime = degree_one_prime(F, cert.q, cert.a);

  // pi^s by repeated multiplication, not from the generator list.
  IdealPowerModule module = ideal_power_module(prime, 1);
  while (module.s < cert.s) module = next_power(module);
  if (module.basis.basis() != cert.basis) return false;
  if (cert.coefficients.size() != cert.basis.rows()) return false;
  const IntVector rebuilt = (cert.coefficients.transpose() * cert.basis).transpose();
  if (rebuilt != cert.element) return false;

  const Int qs = pow(cert.q, static_cast<unsigned long>(cert.s));
  Int residue = 0;
  for (Eigen::Index k = cert.element.size(); k-- > 0;) residue = mod(residue * cert.a + cert.element(k), qs);
  return residue == cert.residue && residue != 0;
}

}  // namespace idealforge
