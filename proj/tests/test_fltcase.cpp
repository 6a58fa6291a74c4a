#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "idealforge/fltcase.hpp"
#include "oracles.hpp"

using namespace idealforge;

namespace {

// prod_{k=1}^{p-1} (zeta^k - a) over the complex embeddings.
double embedded_norm(int p, double a) {
  std::complex<double> acc = 1.0;
  for (int k = 1; k < p; ++k) acc *= std::polar(1.0, 2.0 * std::numbers::pi * k / p) - a;
  return acc.real();
}

const TraceStep& step_at(const LemmaTrace& t, int index) { return t.steps.at(static_cast<std::size_t>(index - 1)); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("cyclotomic_field") {
  const auto ctx = cyclotomic_field(Int(5));
  CHECK(ctx.p == 5);
  CHECK(ctx.field->degree() == 4);
  CHECK(to_string(ctx.field->poly()) == "x^4+x^3+x^2+x+1");
  CHECK(pow(ctx.zeta, 5) == FieldElement::from_int(ctx.field, Int(1)));
  CHECK(kind_of([] { cyclotomic_field(Int(2)); }) == ErrorKind::NotOddPrime);
  CHECK(kind_of([] { cyclotomic_field(Int(9)); }) == ErrorKind::NotOddPrime);
}

TEST_CASE("product_identity and norm_linear") {
  const auto c3 = cyclotomic_field(Int(3));
  CHECK(product_identity(c3, Int(2), Int(1)) == 9);
  CHECK(norm_linear(c3, Int(2), Int(1)) == 3);
  const auto c5 = cyclotomic_field(Int(5));
  CHECK(norm_linear(c5, Int(1), Int(-1)) == 5);
  CHECK(kind_of([&] { norm_linear(c5, Int(0), Int(0)); }) == ErrorKind::DegenerateSum);
  CHECK(norm_linear(c5, Int(2), Int(-2)) == 5 * 16);

  for (int p : {3, 5, 7, 11}) {
    const auto ctx = cyclotomic_field(Int(p));
    for (long x = -4; x <= 4; ++x) {
      for (long y = -4; y <= 4; ++y) {
        const long sum = oracle::ipow(x, p) + oracle::ipow(y, p);
        CHECK(product_identity(ctx, Int(x), Int(y)) == sum);
        if (x + y != 0) CHECK(norm_linear(ctx, Int(x), Int(y)) == sum / (x + y));
      }
    }
  }
}

TEST_CASE("ramification_check") {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto r = ramification_check(cyclotomic_field(Int(p)));
    CHECK(r.passed);
    CHECK(r.norm_one_minus_zeta == p);
    CHECK(abs(r.unit_norm) == 1);
    CHECK(r.ramification == p - 1);
    CHECK(r.residue_degree == 1);
  }
}

TEST_CASE("pth_root_count") {
  CHECK(pth_root_count(Int(3), Int(7)).count == 3);
  CHECK(pth_root_count(Int(5), Int(7)).count == 1);
  CHECK(pth_root_count(Int(5), Int(11)).count == 5);
  CHECK(kind_of([] { pth_root_count(Int(3), Int(3)); }) == ErrorKind::SamePrime);
  CHECK(kind_of([] { pth_root_count(Int(4), Int(7)); }) == ErrorKind::NotOddPrime);
  CHECK(kind_of([] { pth_root_count(Int(3), Int(8)); }) == ErrorKind::NotPrime);

  const auto big = pth_root_count(Int(7), Int("1000000007"));
  CHECK_FALSE(big.scan_count.has_value());
  CHECK(big.count == 1);

  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long q = 2; q < 400; ++q) {
      if (!oracle::is_small_prime(q) || q == p) continue;
      std::vector<long> c(static_cast<std::size_t>(p) + 1, 0);
      c[0] = -1;
      c.back() = 1;
      CHECK(pth_root_count(Int(p), Int(q)).count == static_cast<long>(oracle::scan_roots(c, q).size()));
    }
  }
}

TEST_CASE("norm_bound_probe") {
  const auto c3 = cyclotomic_field(Int(3));
  const auto a2 = norm_bound_probe(c3, Int(7), Int(2));
  CHECK(a2.exact_norm == 7);
  CHECK(a2.printed_value == 3);
  CHECK_FALSE(a2.printed_matches);
  CHECK(a2.geometric_matches);
  CHECK(a2.below_bound);
  CHECK(a2.norm_q_valuation == 1);

  const auto a4 = norm_bound_probe(c3, Int(7), Int(4));
  CHECK(a4.exact_norm == 21);
  CHECK(a4.norm_q_valuation == 1);

  const auto c5 = cyclotomic_field(Int(5));
  const auto b = norm_bound_probe(c5, Int(11), Int(3));
  CHECK(b.exact_norm == 121);
  CHECK(b.norm_q_valuation == 2);
  CHECK(b.valuations.size() == 4);
  for (const auto& v : b.valuations) CHECK(v.valuation.value == (v.root == 3 ? 2 : 0));

  CHECK(kind_of([&] { norm_bound_probe(c3, Int(7), Int(3)); }) == ErrorKind::NotARoot);

  for (int p : {3, 5, 7}) {
    const auto ctx = cyclotomic_field(Int(p));
    for (long q = 2; q < 120; ++q) {
      if (!oracle::is_small_prime(q)) continue;
      std::vector<long> f(static_cast<std::size_t>(p), 1);
      for (long a : oracle::scan_roots(f, q)) {
        const auto probe = norm_bound_probe(ctx, Int(q), Int(a));
        CHECK(probe.exact_norm.get_d() == doctest::Approx(embedded_norm(p, static_cast<double>(a))).epsilon(1e-9));
        CHECK(probe.geometric_matches);
        CHECK(probe.norm_q_valuation >= 1);
        long sum = 0;
        for (const auto& v : probe.valuations) sum += v.valuation.value;
        CHECK(sum == probe.norm_q_valuation);
      }
    }
  }
}

TEST_CASE("lemma_trace breaks at step 5 for (3, 7, 1, 2, 14)") {
  const auto t = lemma_trace(cyclotomic_field(Int(3)), Int(7), Int(1), Int(2), Int(14), false);
  REQUIRE(t.steps.size() == 9);
  for (std::size_t i = 0; i < t.steps.size(); ++i) CHECK(t.steps[i].name == kLemmaStepNames[i]);
  CHECK(step_at(t, 1).status == StepStatus::Pass);
  CHECK(step_at(t, 2).status == StepStatus::Fail);
  CHECK(step_at(t, 3).status == StepStatus::Pass);
  CHECK(step_at(t, 4).status == StepStatus::Pass);
  CHECK(step_at(t, 5).status == StepStatus::Fail);
  const auto& lin = step_at(t, 5).values["linear_primes"];
  REQUIRE(lin.size() == 2);
  CHECK(lin[0]["root"] == 2);
  CHECK(lin[0]["residue"] == 5);
  CHECK(lin[1]["root"] == 4);
  CHECK(lin[1]["residue"] == 2);  // 1 + 4*2 = 9
  CHECK(step_at(t, 8).status == StepStatus::NotApplicable);
  CHECK(t.summary["premise_chain_broken_at"] == 5);
  CHECK(t.summary["lemma_conclusion_asserted"] == false);
  REQUIRE(t.linked_certificate.has_value());
  CHECK(reverify(*t.linked_certificate));
}

TEST_CASE("lemma_trace (3, 7, 3, 4, 7)") {
  const auto t = lemma_trace(cyclotomic_field(Int(3)), Int(7), Int(3), Int(4), Int(7), false);
  CHECK(step_at(t, 4).status == StepStatus::Fail);
  CHECK(step_at(t, 4).values["q_divides_x_plus_y"] == true);
  CHECK(step_at(t, 4).values["q_divides_xp_plus_yp"] == true);  // 91 = 7 * 13
  CHECK(t.summary["premise_chain_broken_at"] == 4);
}

TEST_CASE("lemma_trace (3, 13, 2, 3, 5)") {
  const auto t = lemma_trace(cyclotomic_field(Int(3)), Int(13), Int(2), Int(3), Int(5), true);
  const auto& lin = step_at(t, 5).values["linear_primes"];
  REQUIRE(lin.size() == 2);
  CHECK(lin[0]["root"] == 3);
  CHECK(lin[0]["residue"] == 11);
  CHECK(lin[1]["root"] == 9);
  CHECK(lin[1]["residue"] == 3);
  CHECK(step_at(t, 9).values["assume_p_less_z"] == true);
}

TEST_CASE("lemma_trace inert and ramified q") {
  const auto c3 = cyclotomic_field(Int(3));
  const auto inert = lemma_trace(c3, Int(5), Int(1), Int(4), Int(5), false);
  CHECK(step_at(inert, 3).status == StepStatus::Fail);
  CHECK(step_at(inert, 6).status == StepStatus::NotApplicable);
  CHECK(step_at(inert, 5).values["higher_degree_primes"].size() == 1);

  const auto ram = lemma_trace(c3, Int(3), Int(1), Int(2), Int(3), false);
  CHECK(step_at(ram, 3).status == StepStatus::Fail);
  CHECK(step_at(ram, 8).status != StepStatus::NotApplicable);

  CHECK(kind_of([&] { lemma_trace(c3, Int(6), Int(1), Int(2), Int(3), false); }) == ErrorKind::NotPrime);
  CHECK(kind_of([&] { lemma_trace(c3, Int(7), Int(0), Int(2), Int(3), false); }) == ErrorKind::InvalidArgument);
}
