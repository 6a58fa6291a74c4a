#include "idealforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "idealforge/report.hpp"

namespace idealforge::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string poly, p, q, a, phi, elem, x, y, z;
  std::string seed;
  std::string bound = std::to_string(kDefaultBound);
  std::optional<int> s;
  std::int64_t trials = kDefaultTrials;
  unsigned workers = 1;
  int cap = kDefaultValuationCap;
  bool assume_p_less_z = false;
  std::string format = "json";
};

Int parse_int(const std::string& name, const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  Int v;
  const bool digits = !t.empty() && std::all_of(t.begin() + (t.front() == '-' ? 1 : 0), t.end(), ::isdigit) &&
                      t != "-";
  if (!digits || v.set_str(t, 10) != 0) throw Error(ErrorKind::ParseError, "--" + name + ": not an integer: '" + text + "'");
  return v;
}

Int need_int(const std::string& name, const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "--" + name + " is required");
  return parse_int(name, text);
}

// Integer roots force reducibility; only checked when no prime certified f.
void reject_integer_roots(const NumberField& field) {
  const Int c0 = abs(field.poly().coeff(0));
  if (c0 == 0) throw Error(ErrorKind::InvalidArgument, "reducible polynomial: root 0");
  if (c0 > Int(1) << 24) return;
  const long n = c0.get_si();
  for (long r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    for (long cand : {r, -r})
      if (field.poly().eval(Int(cand)) == 0)
        throw Error(ErrorKind::InvalidArgument, "reducible polynomial: integer root " + std::to_string(cand));
  }
}

FieldPtr build_field(const RunConfig& cfg) {
  if (cfg.poly.empty() == cfg.p.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --poly or --p");
  if (!cfg.p.empty()) return cyclotomic_field(parse_int("p", cfg.p)).field;
  FieldPtr field = make_field(parse_poly(cfg.poly));
  if (field->discriminant() == 0)
    throw Error(ErrorKind::InvalidArgument, "degenerate polynomial " + to_string(field->poly()) + ": zero discriminant");
  if (field->irreducibility() == Irreducibility::Assumed) reject_integer_roots(*field);
  return field;
}

CyclotomicContext build_cyclotomic(const RunConfig& cfg) { return cyclotomic_field(need_int("p", cfg.p)); }

PrimeIdealRep choose_prime(const FieldPtr& field, const RunConfig& cfg, bool degree_one) {
  const Int q = need_int("q", cfg.q);
  if (!cfg.a.empty() && !cfg.phi.empty()) throw Error(ErrorKind::InvalidArgument, "give at most one of --a or --phi");
  if (!cfg.a.empty()) return degree_one_prime(field, q, parse_int("a", cfg.a));
  if (!cfg.phi.empty()) {
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
    return prime_above(field, ModPoly(parse_poly(cfg.phi), q));
  }
  const SplitReport split = split_prime(field, q);
  for (const auto& pr : split.primes)
    if (!degree_one || pr.is_degree_one()) return pr;
  throw Error(ErrorKind::DegreeNotOne, "no degree-one prime above " + q.get_str());
}

FieldElement need_element(const FieldPtr& field, const RunConfig& cfg) {
  if (cfg.elem.empty()) throw Error(ErrorKind::InvalidArgument, "--elem is required");
  return parse_element(field, cfg.elem);
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  std::string text = cfg.seed;
  std::string source = "--seed";
  if (text.empty()) {
    const char* env = std::getenv("IDEALFORGE_SEED");
    if (env == nullptr || *env == '\0') return 1;
    text = env;
    source = "IDEALFORGE_SEED";
  }
  const Int v = parse_int(source == "--seed" ? "seed" : source, text);
  if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, source + " must be in [0, 2^64)");
  return v.get_ui();
}

Json dispatch(const RunConfig& cfg, Json& doc) {
  const std::string& cmd = cfg.command;

  if (cmd == "split") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    return to_json(split_prime(F, need_int("q", cfg.q)));
  }
  if (cmd == "divides") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    const PrimeIdealRep prime = choose_prime(F, cfg, false);
    const FieldElement alpha = need_element(F, cfg);
    const bool matrix = divides_prime_matrix(prime, alpha);
    const bool poly = divides_prime_poly(prime, alpha);
    Json criteria{{"residue", prime.is_degree_one() ? Json(divides_prime_residue(prime, alpha)) : Json(nullptr)},
                  {"matrix", matrix},
                  {"poly", poly}};
    const bool agree = matrix == poly && (criteria["residue"].is_null() || criteria["residue"] == matrix);
    if (!agree) throw InvariantViolation("divisibility criteria disagree");
    return Json{{"prime", to_json(prime)}, {"element", to_json(alpha)}, {"divides", matrix}, {"criteria", criteria}};
  }
  if (cmd == "member") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    const PrimeIdealRep prime = choose_prime(F, cfg, false);
    const FieldElement alpha = need_element(F, cfg);
    const IdealPowerModule module = ideal_power_module(prime, cfg.s.value_or(1));
    const auto coeffs = ideal_power_coefficients(module, alpha);
    return Json{{"prime", to_json(prime)},
                {"element", to_json(alpha)},
                {"module", to_json(module)},
                {"member", coeffs.has_value()},
                {"coefficients", coeffs ? vector_json(*coeffs) : Json(nullptr)}};
  }
  if (cmd == "valuation") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    const PrimeIdealRep prime = choose_prime(F, cfg, false);
    const FieldElement alpha = need_element(F, cfg);
    return Json{{"prime", to_json(prime)},
                {"element", to_json(alpha)},
                {"cap", cfg.cap},
                {"valuation", to_json(valuation(prime, alpha, cfg.cap))}};
  }
  if (cmd == "thm2-check") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    const PrimeIdealRep prime = choose_prime(F, cfg, true);
    const FieldElement alpha = need_element(F, cfg);
    const int s = cfg.s.value_or(2);
    Json result = to_json(verify_instance(prime, s, alpha));
    result["proof_step"] = to_json(probe_proof_step(prime, s, alpha));
    return result;
  }
  if (cmd == "thm2-search") {
    const FieldPtr F = build_field(cfg);
    doc["field"] = to_json(*F);
    const PrimeIdealRep prime = choose_prime(F, cfg, true);
    SearchOptions opts;
    opts.trials = cfg.trials;
    opts.seed = resolve_seed(cfg);
    opts.bound = parse_int("bound", cfg.bound);
    opts.workers = cfg.workers;
    const int s = cfg.s.value_or(2);
    const auto certs = search_counterexamples(prime, s, opts);
    Json list = Json::array();
    for (const auto& c : certs) {
      Json j = to_json(c);
      j["reverified"] = reverify(c);
      if (!j["reverified"].get<bool>()) throw InvariantViolation("certificate failed re-verification");
      list.push_back(std::move(j));
    }
    return Json{{"prime", to_json(prime)},
                {"s", s},
                {"trials", opts.trials},
                {"seed", opts.seed},
                {"bound", int_json(opts.bound)},
                {"certificate_count", certs.size()},
                {"certificates", list}};
  }
  if (cmd == "cyclo-norms") {
    const CyclotomicContext ctx = build_cyclotomic(cfg);
    doc["field"] = to_json(*ctx.field);
    Json result{{"p", ctx.p}, {"norm_one_minus_zeta", int_json(norm(FieldElement::from_int(ctx.field, Int(1)) - ctx.zeta))}};
    if (!cfg.x.empty() || !cfg.y.empty()) {
      const Int x = need_int("x", cfg.x);
      const Int y = need_int("y", cfg.y);
      const auto pu = static_cast<unsigned long>(ctx.p);
      result["pair"] = Json{{"x", int_json(x)},
                            {"y", int_json(y)},
                            {"product", int_json(product_identity(ctx, x, y))},
                            {"x_pow_p_plus_y_pow_p", int_json(pow(x, pu) + pow(y, pu))},
                            {"norm_linear", int_json(norm_linear(ctx, x, y))}};
    }
    if (!cfg.q.empty()) {
      const Int q = parse_int("q", cfg.q);
      Json probes = Json::array();
      if (!cfg.a.empty()) {
        probes.push_back(to_json(norm_bound_probe(ctx, q, parse_int("a", cfg.a))));
      } else {
        if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
        for (const auto& r : roots_mod_q(ctx.field->poly(), q)) probes.push_back(to_json(norm_bound_probe(ctx, q, r.root)));
      }
      result["norm_bound"] = probes;
    }
    return result;
  }
  if (cmd == "ramify") {
    const CyclotomicContext ctx = build_cyclotomic(cfg);
    doc["field"] = to_json(*ctx.field);
    return to_json(ramification_check(ctx));
  }
  if (cmd == "lemma-trace") {
    const CyclotomicContext ctx = build_cyclotomic(cfg);
    doc["field"] = to_json(*ctx.field);
    return to_json(lemma_trace(ctx, need_int("q", cfg.q), need_int("x", cfg.x), need_int("y", cfg.y),
                               need_int("z", cfg.z), cfg.assume_p_less_z));
  }
  if (cmd == "roots-count") return to_json(pth_root_count(need_int("p", cfg.p), need_int("q", cfg.q)));
  throw Error(ErrorKind::ParseError, "unknown command " + cmd);
}

bool wants_text(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=text") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "text") return true;
  }
  return false;
}

Json base_doc(const std::string& command) {
  return Json{{"schema_version", kReportSchemaVersion}, {"command", command}, {"ok", true}};
}

int fail(std::ostream& out, std::ostream& err, bool text, const std::string& command, const std::string& kind,
         const std::string& message, int code) {
  err << "error: " << kind << ": " << message << "\n";
  if (!text) {
    Json doc = base_doc(command.empty() ? "none" : command);
    doc["ok"] = false;
    doc["error"] = Json{{"kind", kind}, {"message", message}};
    out << doc.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact prime-ideal and divisibility checks in monogenic number fields", "idealforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly, "Monic integer polynomial, e.g. \"x^2+x+1\"");
    sub->add_option("--p", cfg.p, "Odd prime p: use the cyclotomic field Q(zeta_p)");
  };
  auto prime_opts = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Rational prime q")->required();
    sub->add_option("--a", cfg.a, "Root a of f mod q, selecting (q, theta - a)");
    sub->add_option("--phi", cfg.phi, "Irreducible factor of f mod q, selecting (q, phi(theta))");
  };
  auto elem_opt = [&](CLI::App* sub) {
    sub->add_option("--elem", cfg.elem, "Element: coordinate list \"[3,-5]\" or polynomial in theta")->required();
  };
  auto s_opt = [&](CLI::App* sub) { sub->add_option("--s", cfg.s, "Ideal power s"); };

  auto* split = app.add_subcommand("split", "Factor (q) into prime ideals");
  field_opts(split);
  split->add_option("--q", cfg.q, "Rational prime q")->required();

  auto* divides = app.add_subcommand("divides", "Test whether a prime ideal divides an element");
  field_opts(divides);
  prime_opts(divides);
  elem_opt(divides);

  auto* member = app.add_subcommand("member", "Membership of an element in pi^s");
  field_opts(member);
  prime_opts(member);
  elem_opt(member);
  s_opt(member);

  auto* val = app.add_subcommand("valuation", "Valuation of an element at a prime ideal");
  field_opts(val);
  prime_opts(val);
  elem_opt(val);
  val->add_option("--cap", cfg.cap, "Largest power tried");

  auto* check = app.add_subcommand("thm2-check", "Compare the congruence c(a) = 0 mod q^s with membership in pi^s");
  field_opts(check);
  prime_opts(check);
  elem_opt(check);
  s_opt(check);

  auto* search = app.add_subcommand("thm2-search", "Search pi^s for elements violating the congruence");
  field_opts(search);
  prime_opts(search);
  s_opt(search);
  search->add_option("--trials", cfg.trials, "Number of trials");
  search->add_option("--seed", cfg.seed, "Seed (default: IDEALFORGE_SEED, else 1)");
  search->add_option("--bound", cfg.bound, "Coefficient bound for sampling");
  search->add_option("--workers", cfg.workers, "Worker threads");

  auto* cyclo = app.add_subcommand("cyclo-norms", "Norm identities in Z[zeta_p]");
  cyclo->add_option("--p", cfg.p, "Odd prime p")->required();
  cyclo->add_option("--x", cfg.x, "x for the pair (x, y)");
  cyclo->add_option("--y", cfg.y, "y for the pair (x, y)");
  cyclo->add_option("--q", cfg.q, "Prime q for the norm-bound probe");
  cyclo->add_option("--a", cfg.a, "Root a for the norm-bound probe (default: all roots)");

  auto* ramify = app.add_subcommand("ramify", "Ramification of (p) in Z[zeta_p]");
  ramify->add_option("--p", cfg.p, "Odd prime p")->required();

  auto* lemma = app.add_subcommand("lemma-trace", "Step-by-step trace of the cyclotomic lemma for concrete inputs");
  lemma->add_option("--p", cfg.p, "Odd prime p")->required();
  lemma->add_option("--q", cfg.q, "Prime q")->required();
  lemma->add_option("--x", cfg.x, "x")->required();
  lemma->add_option("--y", cfg.y, "y")->required();
  lemma->add_option("--z", cfg.z, "z")->required();
  lemma->add_flag("--assume-p-less-z", cfg.assume_p_less_z, "Record p < z as an assumption");

  auto* roots = app.add_subcommand("roots-count", "Count solutions of x^p = 1 mod q");
  roots->add_option("--p", cfg.p, "Odd prime p")->required();
  roots->add_option("--q", cfg.q, "Prime q")->required();

  const bool text_hint = wants_text(args);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    return fail(out, err, text_hint, command, "ParseError", e.what(), 1);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  const bool text = cfg.format == "text";
  Json doc = base_doc(cfg.command);
  try {
    doc["result"] = dispatch(cfg, doc);
  } catch (const Error& e) {
    return fail(out, err, text, cfg.command, std::string(to_string(e.kind())), e.message(), 1);
  } catch (const InvariantViolation& e) {
    return fail(out, err, text, cfg.command, "InvariantViolation", e.what(), 2);
  } catch (const std::exception& e) {
    return fail(out, err, text, cfg.command, "InvariantViolation", e.what(), 2);
  }
  if (text) {
    out << render_text(doc);
  } else {
    out << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace idealforge::cli
