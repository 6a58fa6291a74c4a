#include "idealforge/report.hpp"

#include <sstream>

namespace idealforge {
namespace {

Json opt_int(const std::optional<Int>& v) { return v ? int_json(*v) : Json(nullptr); }

bool scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string leaf(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && (j.empty() || scalar_array(j))) {
    out << path << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << leaf(j[i]);
    out << "]\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << leaf(j) << "\n";
  }
}

}  // namespace

Json to_json(const NumberField& field) {
  return Json{{"poly", to_string(field.poly())},
              {"degree", field.degree()},
              {"discriminant", int_json(field.discriminant())},
              {"irreducibility", field.irreducibility() == Irreducibility::Certified ? "certified" : "assumed"},
              {"witness_prime", opt_int(field.witness_prime())}};
}

Json to_json(const FieldElement& alpha) {
  return Json{{"coords", vector_json(alpha.coords())}, {"poly", to_string(alpha.as_poly())}};
}

Json to_json(const PrimeIdealRep& prime) {
  Json j{{"q", int_json(prime.q)},
         {"phi", to_string(prime.phi)},
         {"residue_degree", prime.residue_degree},
         {"ramification", prime.ramification}};
  j["root"] = prime.is_degree_one() ? int_json(prime.root()) : Json(nullptr);
  return j;
}

Json to_json(const SplitReport& report) {
  Json primes = Json::array();
  int sum_ef = 0;
  for (const auto& p : report.primes) {
    primes.push_back(to_json(p));
    sum_ef += p.residue_degree * p.ramification;
  }
  return Json{{"q", int_json(report.q)},
              {"prime_count", report.primes.size()},
              {"primes", primes},
              {"sum_ef", sum_ef},
              {"fully_split", report.fully_split},
              {"ramified", report.ramified},
              {"q_maximal", report.q_maximal}};
}

Json to_json(const IdealPowerModule& module) {
  return Json{{"s", module.s},
              {"modulus", int_json(pow(module.prime.q, static_cast<unsigned long>(module.s)))},
              {"index", int_json(lattice_index(module.basis))},
              {"basis", matrix_json(module.basis.basis())}};
}

Json to_json(const Valuation& v) { return Json{{"value", v.value}, {"saturated", v.saturated}}; }

Json to_json(const ProofStepProbe& probe) {
  return Json{{"applicable", probe.applicable},
              {"quotient_integral", probe.quotient_integral},
              {"quotient_residue", opt_int(probe.quotient_residue)},
              {"claimed_integral", probe.claimed_integral},
              {"claimed_residue", opt_int(probe.claimed_residue)},
              {"step_holds", probe.step_holds}};
}

Json to_json(const Theorem2Verdict& verdict) {
  return Json{{"element", to_json(verdict.element)},
              {"prime", to_json(verdict.prime)},
              {"s", verdict.s},
              {"residue", int_json(verdict.residue)},
              {"condition_holds", verdict.condition_holds},
              {"member", verdict.member},
              {"classification", std::string(to_string(verdict.classification))},
              {"coefficients", verdict.coefficients ? vector_json(*verdict.coefficients) : Json(nullptr)}};
}

Json to_json(const CounterexampleCertificate& cert) {
  return Json{{"trial", cert.trial},
              {"field_poly", to_string(cert.field_poly)},
              {"q", int_json(cert.q)},
              {"a", int_json(cert.a)},
              {"s", cert.s},
              {"element", vector_json(cert.element)},
              {"residue", int_json(cert.residue)},
              {"coefficients", vector_json(cert.coefficients)},
              {"basis", matrix_json(cert.basis)},
              {"proof_step", to_json(cert.proof_step)}};
}

Json to_json(const RamificationReport& r) {
  return Json{{"p", r.p},
              {"norm_one_minus_zeta", int_json(r.norm_one_minus_zeta)},
              {"norm_is_p", r.norm_is_p},
              {"lattices_equal", r.lattices_equal},
              {"unit_quotient", r.unit_quotient ? to_json(*r.unit_quotient) : Json(nullptr)},
              {"unit_norm", int_json(r.unit_norm)},
              {"quotient_is_unit", r.quotient_is_unit},
              {"single_prime", r.single_prime},
              {"ramification", r.ramification},
              {"residue_degree", r.residue_degree},
              {"passed", r.passed}};
}

Json to_json(const RootCount& c) {
  return Json{{"p", c.p},
              {"q", int_json(c.q)},
              {"count", int_json(c.count)},
              {"scan_count", opt_int(c.scan_count)},
              {"gcd_count", int_json(c.gcd_count)}};
}

Json to_json(const NormBoundProbe& probe) {
  Json vals = Json::array();
  for (const auto& v : probe.valuations)
    vals.push_back(Json{{"root", int_json(v.root)}, {"valuation", v.valuation.value}, {"saturated", v.valuation.saturated}});
  return Json{{"p", probe.p},
              {"q", int_json(probe.q)},
              {"a", int_json(probe.a)},
              {"exact_norm", int_json(probe.exact_norm)},
              {"printed_value", int_json(probe.printed_value)},
              {"printed_exact", probe.printed_exact},
              {"geometric_value", int_json(probe.geometric_value)},
              {"printed_matches", probe.printed_matches},
              {"geometric_matches", probe.geometric_matches},
              {"q_pow_p", int_json(probe.q_pow_p)},
              {"below_bound", probe.below_bound},
              {"norm_q_valuation", probe.norm_q_valuation},
              {"valuations", vals}};
}

Json to_json(const TraceStep& step) {
  return Json{{"index", step.index},
              {"name", step.name},
              {"status", std::string(to_string(step.status))},
              {"values", step.values},
              {"note", step.note}};
}

Json to_json(const LemmaTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return Json{{"p", trace.p},
              {"q", int_json(trace.q)},
              {"x", int_json(trace.x)},
              {"y", int_json(trace.y)},
              {"z", int_json(trace.z)},
              {"assume_p_less_z", trace.assume_p_less_z},
              {"steps", steps},
              {"linked_certificate", trace.linked_certificate ? to_json(*trace.linked_certificate) : Json(nullptr)},
              {"summary", trace.summary}};
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace idealforge
