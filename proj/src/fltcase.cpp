#include "idealforge/fltcase.hpp"

#include <cstdint>

namespace idealforge {

std::string_view to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Fail: return "fail";
    case StepStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

CyclotomicContext cyclotomic_field(const Int& p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, p.get_str() + " is not an odd prime");
  if (p > kMaxCyclotomicPrime)
    throw Error(ErrorKind::InvalidArgument, "cyclotomic prime above " + std::to_string(kMaxCyclotomicPrime));
  const int pi = static_cast<int>(p.get_si());
  const IntPoly f(std::vector<Int>(static_cast<std::size_t>(pi), Int(1)));
  if (f * IntPoly{-1, 1} != IntPoly::monomial(Int(1), pi) - IntPoly{1})
    throw InvariantViolation("cyclotomic identity f(x)(x - 1) = x^p - 1 failed");
  FieldPtr field = make_field(f);
  FieldElement zeta = FieldElement::theta(field);
  return {pi, std::move(field), std::move(zeta)};
}

Int product_identity(const CyclotomicContext& ctx, const Int& x, const Int& y) {
  const FieldPtr& F = ctx.field;
  FieldElement acc = FieldElement::from_int(F, Int(1));
  FieldElement zeta_i = FieldElement::from_int(F, Int(1));
  const FieldElement xe = FieldElement::from_int(F, x);
  const FieldElement ye = FieldElement::from_int(F, y);
  for (int i = 0; i < ctx.p; ++i) {
    acc = acc * (xe + zeta_i * ye);
    zeta_i = zeta_i * ctx.zeta;
  }
  for (Eigen::Index k = 1; k < acc.coords().size(); ++k)
    if (acc.coords()(k) != 0) throw InvariantViolation("ResultNotRational: product has coordinates " + to_string(acc));
  return acc.coords()(0);
}

Int norm_linear(const CyclotomicContext& ctx, const Int& x, const Int& y) {
  if (x == 0 && y == 0) throw Error(ErrorKind::DegenerateSum, "x = y = 0");
  return norm(FieldElement::from_int(ctx.field, x) + ctx.zeta * FieldElement::from_int(ctx.field, y));
}

RamificationReport ramification_check(const CyclotomicContext& ctx) {
  const FieldPtr& F = ctx.field;
  const FieldElement one_minus = FieldElement::from_int(F, Int(1)) - ctx.zeta;
  const FieldElement power = pow(one_minus, static_cast<unsigned>(ctx.p - 1));
  const FieldElement p_elem = FieldElement::from_int(F, Int(ctx.p));

  RamificationReport r{};
  r.p = ctx.p;
  r.norm_one_minus_zeta = norm(one_minus);
  r.norm_is_p = r.norm_one_minus_zeta == ctx.p;
  r.lattices_equal = principal_ideal_lattice(power) == principal_ideal_lattice(p_elem);
  r.unit_quotient = exact_divide(p_elem, power);
  r.unit_norm = r.unit_quotient ? norm(*r.unit_quotient) : Int(0);
  r.quotient_is_unit = r.unit_quotient && abs(r.unit_norm) == 1;
  const SplitReport split = split_prime(F, Int(ctx.p));
  r.single_prime = split.primes.size() == 1 && split.primes[0].residue_degree == 1 &&
                   split.primes[0].ramification == ctx.p - 1;
  r.ramification = split.primes.empty() ? 0 : split.primes[0].ramification;
  r.residue_degree = split.primes.empty() ? 0 : split.primes[0].residue_degree;
  r.passed = r.norm_is_p && r.lattices_equal && r.quotient_is_unit && r.single_prime;
  return r;
}

RootCount pth_root_count(const Int& p, const Int& q) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, p.get_str() + " is not an odd prime");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  if (p == q) throw Error(ErrorKind::SamePrime, "q must differ from p");
  RootCount r{static_cast<int>(p.get_si()), q, 0, std::nullopt, gcd(p, q - 1)};
  if (q < kScanLimit) {
    const std::uint64_t qq = q.get_ui();
    const std::uint64_t pp = p.get_ui();
    long count = 0;
    for (std::uint64_t x = 1; x < qq; ++x) {
      std::uint64_t acc = 1, base = x, e = pp;
      while (e) {
        if (e & 1U) acc = acc * base % qq;
        base = base * base % qq;
        e >>= 1U;
      }
      if (acc == 1) ++count;
    }
    r.scan_count = Int(count);
    if (*r.scan_count != r.gcd_count)
      throw InvariantViolation("root count by scan (" + r.scan_count->get_str() + ") differs from gcd(p, q-1)");
  }
  r.count = r.scan_count.value_or(r.gcd_count);
  return r;
}

NormBoundProbe norm_bound_probe(const CyclotomicContext& ctx, const Int& q, const Int& a_in) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  const FieldPtr& F = ctx.field;
  if (poly_eval_mod(F->poly(), a_in, q) != 0)
    throw Error(ErrorKind::NotARoot, a_in.get_str() + " is not a root of the cyclotomic polynomial mod " + q.get_str());
  const Int a = mod(a_in, q);
  const auto p = static_cast<unsigned long>(ctx.p);

  NormBoundProbe r{};
  r.p = ctx.p;
  r.q = q;
  r.a = a;
  r.exact_norm = norm(ctx.zeta - FieldElement::from_int(F, a));
  const Int num = -pow(a, p) - 1;
  const Int den = -a - 1;
  r.printed_exact = mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
  r.printed_value = abs(Int(num / den));
  r.geometric_value = 0;
  for (unsigned long k = 0; k < p; ++k) r.geometric_value += pow(a, k);
  r.printed_matches = r.printed_exact && r.printed_value == r.exact_norm;
  r.geometric_matches = r.geometric_value == r.exact_norm;
  r.q_pow_p = pow(q, p);
  r.below_bound = abs(r.exact_norm) < r.q_pow_p;
  Int rest = abs(r.exact_norm);
  r.norm_q_valuation = rest == 0 ? -1 : static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t()));
  const FieldElement diff = ctx.zeta - FieldElement::from_int(F, a);
  for (const auto& root : roots_mod_q(F->poly(), q))
    r.valuations.push_back({root.root, valuation(degree_one_prime(F, q, root.root), diff)});
  return r;
}

// ---------------------------------------------------------------- lemma

namespace {

TraceStep step(int index, StepStatus status, Json values, std::string note = {}) {
  return {index, kLemmaStepNames[static_cast<std::size_t>(index - 1)], status, std::move(values), std::move(note)};
}

bool divides(const Int& d, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

LemmaTrace lemma_trace(const CyclotomicContext& ctx, const Int& q, const Int& x, const Int& y, const Int& z,
                       bool assume_p_less_z) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  if (x == 0 || y == 0 || z == 0) throw Error(ErrorKind::InvalidArgument, "x, y and z must be nonzero");

  const FieldPtr& F = ctx.field;
  const int p = ctx.p;
  const auto pu = static_cast<unsigned long>(p);
  LemmaTrace trace{p, q, x, y, z, assume_p_less_z, {}, std::nullopt, Json::object()};

  // (1) gcd(x, y, z) = 1
  {
    const Int g = gcd(gcd(x, y), z);
    trace.steps.push_back(step(1, g == 1 ? StepStatus::Pass : StepStatus::Fail, Json{{"gcd", int_json(g)}}));
  }

  // (2) x^p + y^p = z^p
  const Int lhs = pow(x, pu) + pow(y, pu);
  const Int rhs = pow(z, pu);
  trace.steps.push_back(step(2, lhs == rhs ? StepStatus::Pass : StepStatus::Fail,
                             Json{{"lhs", int_json(lhs)}, {"rhs", int_json(rhs)}, {"holds", lhs == rhs}},
                             lhs == rhs ? "" : "equation fails; later steps are evaluated hypothetically"));

  // (3) splitting of q
  const SplitReport split = split_prime(F, q);
  std::vector<Int> roots;
  std::vector<const PrimeIdealRep*> higher;
  {
    Json degrees = Json::array();
    Json root_list = Json::array();
    for (const auto& pr : split.primes) {
      degrees.push_back(pr.residue_degree);
      if (pr.is_degree_one()) {
        roots.push_back(pr.root());
        root_list.push_back(int_json(pr.root()));
      } else {
        higher.push_back(&pr);
      }
    }
    const bool factorizable = split.primes.size() > 1 || (split.primes.size() == 1 && split.primes[0].residue_degree < p - 1);
    int split_case = 0;
    if (factorizable) split_case = higher.empty() ? 1 : 2;
    Json v{{"q_mod_p", int_json(mod(q, Int(p)))},
           {"q_equals_p", q == p},
           {"residue_degrees", degrees},
           {"prime_count", split.primes.size()},
           {"roots", root_list},
           {"fully_split", split.fully_split},
           {"ramified", split.ramified},
           {"factorizable", factorizable},
           {"case", split_case}};
    if (q != p) {
      const RootCount rc = pth_root_count(Int(p), q);
      v["pth_root_count"] = int_json(rc.count);
      v["gcd_p_q_minus_1"] = int_json(rc.gcd_count);
    }
    trace.steps.push_back(step(3, (q != p && factorizable) ? StepStatus::Pass : StepStatus::Fail, std::move(v),
                               q == p ? "lemma requires q != p" : (factorizable ? "" : "q is inert")));
  }

  // (4) q | z and q does not divide x + y
  {
    const bool qz = divides(q, z);
    const bool qxy = divides(q, x + y);
    trace.steps.push_back(step(4, (qz && !qxy) ? StepStatus::Pass : StepStatus::Fail,
                               Json{{"q_divides_z", qz},
                                    {"q_divides_x_plus_y", qxy},
                                    {"q_divides_xp_plus_yp", divides(q, lhs)},
                                    {"x_plus_y", int_json(x + y)}}));
  }

  // (5) which primes above q divide x + zeta*y
  std::optional<Int> a1;
  {
    Json linear_primes = Json::array();
    for (const auto& a : roots) {
      const Int residue = mod(x + a * y, q);
      linear_primes.push_back(Json{{"root", int_json(a)}, {"residue", int_json(residue)}, {"divides", residue == 0}});
      if (residue == 0 && !a1) a1 = a;
    }
    Json higher_primes = Json::array();
    bool any_higher = false;
    for (const PrimeIdealRep* pr : higher) {
      const IntMatrix b = companion_matrix(pr->phi);
      const IntMatrix m = mod(IntMatrix(Int(x) * IntMatrix::Identity(b.rows(), b.cols()) + Int(y) * b), q);
      const bool zero = is_zero(m);
      const bool x_div = divides(q, x);
      any_higher = any_higher || zero;
      higher_primes.push_back(Json{{"phi", to_string(pr->phi)},
                                   {"degree", pr->residue_degree},
                                   {"matrix_congruence_holds", zero},
                                   {"x_divisible_by_q", x_div},
                                   {"implication_held", !zero || x_div}});
    }
    StepStatus status = StepStatus::NotApplicable;
    if (!split.primes.empty()) status = (a1 || any_higher) ? StepStatus::Pass : StepStatus::Fail;
    trace.steps.push_back(step(5, status, Json{{"linear_primes", linear_primes}, {"higher_degree_primes", higher_primes}},
                               status == StepStatus::Fail ? "no prime above q divides x + zeta*y" : ""));
  }

  // (6) x = -a1*y mod q^p, the consequence drawn from the refuted congruence
  const std::optional<Int> probe_root = a1 ? a1 : (roots.empty() ? std::nullopt : std::optional<Int>(roots.front()));
  if (probe_root) {
    const Int qp = pow(q, pu);
    const Int residue = mod(x + *probe_root * y, qp);
    const PrimeIdealRep pi1 = degree_one_prime(F, q, *probe_root);
    SearchOptions opts;
    opts.trials = 1;
    const auto certs = search_counterexamples(pi1, p, opts);
    if (!certs.empty()) trace.linked_certificate = certs.front();
    trace.steps.push_back(step(6, residue == 0 ? StepStatus::Pass : StepStatus::Fail,
                               Json{{"a1", int_json(*probe_root)},
                                    {"a1_divides", a1.has_value()},
                                    {"modulus", int_json(qp)},
                                    {"residue", int_json(residue)},
                                    {"holds", residue == 0},
                                    {"depends_on_refuted_premise", true},
                                    {"certificate_linked", trace.linked_certificate.has_value()}},
                               "rests on the congruence c(a) = 0 mod q^s, which the linked certificate refutes"));
  } else {
    trace.steps.push_back(step(6, StepStatus::NotApplicable, Json{{"depends_on_refuted_premise", true}},
                               "no degree-one prime above q"));
  }

  // (7) norm bound at a1
  if (probe_root) {
    const NormBoundProbe nb = norm_bound_probe(ctx, q, *probe_root);
    trace.steps.push_back(step(7, nb.below_bound ? StepStatus::Pass : StepStatus::Fail,
                               Json{{"a", int_json(nb.a)},
                                    {"exact_norm", int_json(nb.exact_norm)},
                                    {"printed_value", int_json(nb.printed_value)},
                                    {"geometric_value", int_json(nb.geometric_value)},
                                    {"printed_matches", nb.printed_matches},
                                    {"geometric_matches", nb.geometric_matches},
                                    {"q_pow_p", int_json(nb.q_pow_p)},
                                    {"below_bound", nb.below_bound}}));
  } else {
    trace.steps.push_back(step(7, StepStatus::NotApplicable, Json::object(), "no degree-one prime above q"));
  }

  // (8) valuations at (p, theta - 1) when q = p
  if (q == p) {
    const PrimeIdealRep above_p = degree_one_prime(F, Int(p), Int(1));
    Json vals = Json::array();
    bool all_one = true;
    FieldElement zeta_i = FieldElement::from_int(F, Int(1));
    for (int i = 0; i < p; ++i) {
      const FieldElement factor = FieldElement::from_int(F, x) + zeta_i * FieldElement::from_int(F, y);
      zeta_i = zeta_i * ctx.zeta;
      if (factor.is_zero()) {
        vals.push_back(Json{{"i", i}, {"valuation", nullptr}});
        if (i > 0) all_one = false;
        continue;
      }
      const Valuation v = valuation(above_p, factor);
      vals.push_back(Json{{"i", i}, {"valuation", v.value}, {"saturated", v.saturated}});
      if (i > 0 && v.value != 1) all_one = false;
    }
    trace.steps.push_back(step(8, all_one ? StepStatus::Pass : StepStatus::Fail, Json{{"valuations", vals}},
                               "expectation (valuation 1) applies to i >= 1; i = 0 is the rational factor x + y"));
  } else {
    trace.steps.push_back(step(8, StepStatus::NotApplicable, Json::object(), "only evaluated for q = p"));
  }

  // (9) scalar arithmetic of the closing inequality chain
  {
    const Int two_p_z = 2 * p * z;
    const Int z_pow_p = pow(z, pu);
    const bool relation = two_p_z >= z_pow_p;
    const bool z_sq_le_2p = z * z <= 2 * p;
    const bool p_lt_z = p < z;
    trace.steps.push_back(step(9, relation ? StepStatus::Pass : StepStatus::Fail,
                               Json{{"two_p_z", int_json(two_p_z)},
                                    {"z_pow_p", int_json(z_pow_p)},
                                    {"relation_holds", relation},
                                    {"z_squared_le_2p", z_sq_le_2p},
                                    {"assume_p_less_z", assume_p_less_z},
                                    {"p_less_than_z", p_lt_z},
                                    {"p_less_than_2", p < 2},
                                    {"contradiction_chain_applies", assume_p_less_z && relation && z_sq_le_2p}},
                               "arithmetic only; p < z is an input assumption"));
  }

  int passed = 0, failed = 0, na = 0;
  Json broken = nullptr;
  for (const auto& s : trace.steps) {
    if (s.status == StepStatus::Pass) ++passed;
    if (s.status == StepStatus::Fail) ++failed;
    if (s.status == StepStatus::NotApplicable) ++na;
    const bool premise = s.index == 1 || s.index == 3 || s.index == 4 || s.index == 5;
    if (premise && s.status == StepStatus::Fail && broken.is_null()) broken = s.index;
  }
  trace.summary = Json{{"equation_holds", lhs == rhs},
                       {"premise_chain_broken_at", broken},
                       {"steps_passed", passed},
                       {"steps_failed", failed},
                       {"steps_not_applicable", na},
                       {"lemma_conclusion_asserted", false}};
  return trace;
}

}  // namespace idealforge
