#include "idealforge/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>

namespace idealforge {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Int& c, int k) {
  std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Int IntPoly::eval(const Int& a) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> r = a.coeffs_;
  for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(r));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  std::vector<Int> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& num, const IntPoly& den) {
  if (!den.is_monic()) throw Error(ErrorKind::NotMonic, "divisor must be monic");
  const int dn = den.degree();
  std::vector<Int> rem = num.coeffs();
  if (num.degree() < dn) return {IntPoly{}, num};
  std::vector<Int> quot(static_cast<std::size_t>(num.degree() - dn + 1), Int(0));
  for (int k = num.degree(); k >= dn; --k) {
    const Int c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dn)] = c;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k - dn + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly pow(const IntPoly& base, unsigned e) {
  IntPoly result{1};
  IntPoly b = base;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(Int q, std::vector<Int> ascending) : q_(std::move(q)), coeffs_(std::move(ascending)) {
  if (q_ < 2) throw Error(ErrorKind::BadModulus, "modulus must be at least 2");
  for (auto& c : coeffs_) c = mod(c, q_);
  trim();
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int ModPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Int inv;
  mpz_invert(inv.get_mpz_t(), leading().get_mpz_t(), q_.get_mpz_t());
  return inv * *this;
}

ModPoly ModPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return ModPoly(q_, std::move(d));
}

Int ModPoly::eval(const Int& a) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mod(acc * a + *it, q_);
  return acc;
}

namespace {

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::ModulusMismatch, "polynomials over different prime fields");
}

}  // namespace

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return ModPoly(a.q_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return ModPoly(a.q_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.q_);
  std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ModPoly(a.q_, std::move(r));
}

ModPoly operator*(const Int& c, const ModPoly& a) {
  std::vector<Int> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return ModPoly(a.q_, std::move(r));
}

std::pair<ModPoly, ModPoly> poly_divrem_mod_q(const ModPoly& num, const ModPoly& den) {
  require_same_modulus(num, den);
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const Int& q = num.modulus();
  const int dn = den.degree();
  if (num.degree() < dn) return {ModPoly(q), num};
  Int inv;
  mpz_invert(inv.get_mpz_t(), den.leading().get_mpz_t(), q.get_mpz_t());
  std::vector<Int> rem = num.coeffs();
  std::vector<Int> quot(static_cast<std::size_t>(num.degree() - dn + 1), Int(0));
  for (int k = num.degree(); k >= dn; --k) {
    const Int c = mod(rem[static_cast<std::size_t>(k)] * inv, q);
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dn)] = c;
    for (int j = 0; j <= dn; ++j) {
      Int& slot = rem[static_cast<std::size_t>(k - dn + j)];
      slot = mod(slot - c * den.coeffs()[static_cast<std::size_t>(j)], q);
    }
  }
  return {ModPoly(q, std::move(quot)), ModPoly(q, std::move(rem))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a;
  ModPoly y = b;
  while (!y.is_zero()) {
    ModPoly r = poly_divrem_mod_q(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
  ModPoly result = poly_divrem_mod_q(ModPoly::one(m.modulus()), m).second;
  ModPoly b = poly_divrem_mod_q(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_divrem_mod_q(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_divrem_mod_q(result * b, m).second;
  }
  return result;
}

Int poly_eval_mod(const IntPoly& c, const Int& a, const Int& m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "evaluation modulus must be at least 2");
  Int acc = 0;
  const Int ar = mod(a, m);
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) acc = mod(acc * ar + *it, m);
  return acc;
}

// ---------------------------------------------------------- factorization

namespace {

ModPoly exact_quotient(const ModPoly& a, const ModPoly& b) { return poly_divrem_mod_q(a, b).first; }

// Coefficients at exponents k*q become exponents k (Frobenius is the identity
// on F_q).
ModPoly pth_root(const ModPoly& f) {
  const unsigned long q = f.modulus().get_ui();
  std::vector<Int> r;
  for (std::size_t k = 0; k < f.coeffs().size(); k += q) r.push_back(f.coeffs()[k]);
  return ModPoly(f.modulus(), std::move(r));
}

void squarefree_parts(const ModPoly& f, int scale, std::vector<std::pair<ModPoly, int>>& out) {
  if (f.degree() <= 0) return;
  const ModPoly fp = f.derivative();
  if (fp.is_zero()) {
    // f = g^q, which forces q <= deg f, so q fits in an int here.
    squarefree_parts(pth_root(f), scale * static_cast<int>(f.modulus().get_ui()), out);
    return;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = exact_quotient(f, c);
  int i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = exact_quotient(w, y);
    if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (!c.is_one()) squarefree_parts(pth_root(c), scale * static_cast<int>(f.modulus().get_ui()), out);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<int, ModPoly>> distinct_degree(const ModPoly& g) {
  const Int& q = g.modulus();
  const ModPoly x = ModPoly::x(q);
  std::vector<std::pair<int, ModPoly>> blocks;
  ModPoly rest = g;
  ModPoly h = poly_divrem_mod_q(x, rest).second;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, rest);
    ModPoly u = gcd(rest, h - x);
    if (!u.is_one()) {
      blocks.emplace_back(d, u);
      rest = exact_quotient(rest, u);
      h = poly_divrem_mod_q(h, rest).second;
    }
  }
  if (rest.degree() > 0) blocks.emplace_back(rest.degree(), rest);
  return blocks;
}

// Linear factors of a squarefree product of linears, by exhaustive scan.
void split_linear_by_scan(const ModPoly& u, std::vector<ModPoly>& out) {
  const std::uint64_t q = u.modulus().get_ui();
  std::vector<std::uint64_t> c;
  for (const auto& k : u.coeffs()) c.push_back(k.get_ui());
  int found = 0;
  for (std::uint64_t a = 0; a < q && found < u.degree(); ++a) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * a + *it) % q;
    if (acc == 0) {
      out.push_back(ModPoly(u.modulus(), {Int(0) - Int(static_cast<unsigned long>(a)), Int(1)}));
      ++found;
    }
  }
}

// Cantor-Zassenhaus equal-degree splitting; u is a product of distinct
// irreducibles of degree d.
void equal_degree(const ModPoly& u, int d, Rng& gen, std::vector<ModPoly>& out) {
  if (u.degree() == d) {
    out.push_back(u.monic());
    return;
  }
  const Int& q = u.modulus();
  Int half;
  if (q != 2) half = (pow(q, static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    std::vector<Int> hc;
    for (int k = 0; k < u.degree(); ++k) hc.push_back(uniform_below(gen, q));
    ModPoly h(q, std::move(hc));
    if (h.degree() < 1) continue;
    ModPoly w(q);
    if (q == 2) {
      ModPoly t = h;
      w = h;
      for (int i = 1; i < d; ++i) {
        t = poly_divrem_mod_q(t * t, u).second;
        w = w + t;
      }
    } else {
      w = powmod(h, half, u) - ModPoly::one(q);
    }
    ModPoly v = gcd(u, w);
    if (v.degree() > 0 && v.degree() < u.degree()) {
      equal_degree(v, d, gen, out);
      equal_degree(exact_quotient(u, v), d, gen, out);
      return;
    }
  }
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.phi.degree() != b.phi.degree()) return a.phi.degree() < b.phi.degree();
  if (a.phi.degree() == 1) {
    const Int ra = mod(-a.phi.coeff(0), a.phi.modulus());
    const Int rb = mod(-b.phi.coeff(0), b.phi.modulus());
    if (ra != rb) return ra < rb;
  } else {
    for (int k = a.phi.degree(); k >= 0; --k)
      if (a.phi.coeff(k) != b.phi.coeff(k)) return a.phi.coeff(k) < b.phi.coeff(k);
  }
  return a.multiplicity < b.multiplicity;
}

FactorizationModQ factor_monic(const ModPoly& f, Rng& gen) {
  FactorizationModQ result{f.modulus(), {}};
  std::vector<std::pair<ModPoly, int>> parts;
  squarefree_parts(f, 1, parts);
  for (const auto& [g, m] : parts) {
    for (const auto& [d, block] : distinct_degree(g)) {
      std::vector<ModPoly> irreducibles;
      if (d == 1 && f.modulus() < kScanLimit)
        split_linear_by_scan(block, irreducibles);
      else
        equal_degree(block, d, gen, irreducibles);
      for (auto& phi : irreducibles) result.factors.push_back({std::move(phi), m});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> r;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    r.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace

FactorizationModQ factor_mod_q(const IntPoly& f, const Int& q, Rng& gen) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "factor_mod_q needs a monic polynomial, got " + to_string(f));
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  return factor_monic(ModPoly(f, q), gen);
}

FactorizationModQ factor_mod_q(const IntPoly& f, const Int& q) {
  Rng gen(0x5eedULL);
  return factor_mod_q(f, q, gen);
}

bool is_irreducible_mod_q(const ModPoly& phi) {
  const int d = phi.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const ModPoly m = phi.monic();
  const Int& q = m.modulus();
  const ModPoly x = ModPoly::x(q);
  // frob[k] = x^(q^k) mod m
  std::vector<ModPoly> frob{poly_divrem_mod_q(x, m).second};
  for (int k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), q, m));
  for (int r : prime_divisors(d))
    if (!gcd(m, frob[static_cast<std::size_t>(d / r)] - x).is_one()) return false;
  return (frob[static_cast<std::size_t>(d)] - x).is_zero();
}

std::vector<RootMod> roots_mod_q(const IntPoly& f, const Int& q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, q.get_str() + " is not prime");
  const ModPoly fq(f, q);
  if (fq.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial vanishes identically mod " + q.get_str());
  std::vector<RootMod> roots;
  if (q < kScanLimit) {
    for (unsigned long a = 0; a < q.get_ui(); ++a) {
      if (fq.eval(Int(a)) != 0) continue;
      const ModPoly lin(q, {Int(q - a), Int(1)});
      ModPoly rest = fq;
      int mult = 0;
      for (;;) {
        auto [quot, rem] = poly_divrem_mod_q(rest, lin);
        if (!rem.is_zero()) break;
        ++mult;
        rest = std::move(quot);
      }
      roots.push_back({Int(a), mult});
    }
    return roots;
  }
  Rng gen(0x5eedULL);
  for (const auto& fac : factor_monic(fq.monic(), gen).factors)
    if (fac.phi.degree() == 1) roots.push_back({mod(-fac.phi.coeff(0), q), fac.multiplicity});
  std::sort(roots.begin(), roots.end(), [](const RootMod& a, const RootMod& b) { return a.root < b.root; });
  return roots;
}

// ------------------------------------------------------------------- text

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
      continue;
    }
    // U+03B8 GREEK SMALL LETTER THETA
    if (c == 0xCE && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB8) {
      s.push_back('x');
      i += 1;
      continue;
    }
    if (std::isspace(c)) continue;
    s.push_back(static_cast<char>(c == 't' ? 'x' : c));
  }
  return s;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

Int parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) parse_fail(whole, "expected an integer");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail(whole, "bad integer '" + std::string(digits) + "'");
  return Int(std::string(digits));
}

IntPoly parse_list(const std::string& s, std::string_view whole) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') parse_fail(whole, "unbalanced brackets");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Int> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = body.find(',', start);
    std::string_view item(body.data() + start, (comma == std::string::npos ? body.size() : comma) - start);
    bool neg = false;
    if (!item.empty() && (item.front() == '-' || item.front() == '+')) {
      neg = item.front() == '-';
      item.remove_prefix(1);
    }
    Int v = parse_int(item, whole);
    coeffs.push_back(neg ? Int(-v) : v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  const std::string s = normalize(text);
  if (s.empty()) parse_fail(text, "empty input");
  if (s.find(',') != std::string::npos || s.front() == '[') return parse_list(s, text);

  std::vector<Int> coeffs;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      parse_fail(text, "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Int c = 1;
    const bool has_coeff = j > i;
    if (has_coeff) c = Int(s.substr(i, j - i));
    i = j;
    int k = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) parse_fail(text, "'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'x') parse_fail(text, "expected 'x' after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e = i;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        const Int exp = parse_int(std::string_view(s).substr(i, e - i), text);
        if (exp > 100000) parse_fail(text, "exponent too large");
        k = static_cast<int>(exp.get_si());
        i = e;
      }
    } else if (!has_coeff) {
      parse_fail(text, "expected a term at position " + std::to_string(i));
    }
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1, Int(0));
    coeffs[static_cast<std::size_t>(k)] += neg ? Int(-c) : c;
  }
  return IntPoly(std::move(coeffs));
}

namespace {

std::string format_terms(const std::vector<Int>& coeffs) {
  std::string out;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    const Int& c = coeffs[idx];
    if (c == 0) continue;
    const Int a = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (idx == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += 'x';
    if (idx > 1) out += "^" + std::to_string(idx);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const IntPoly& f) { return format_terms(f.coeffs()); }
std::string to_string(const ModPoly& f) { return format_terms(f.coeffs()); }

}  // namespace idealforge
