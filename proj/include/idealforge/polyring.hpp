#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealforge/error.hpp"
#include "idealforge/random.hpp"
#include "idealforge/types.hpp"

namespace idealforge {

/// Polynomial with integer coefficients, stored in ascending degree with no
/// trailing zeros. The zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, int k);
  /// x - a
  static IntPoly linear(const Int& a) { return IntPoly(std::vector<Int>{-a, 1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Int coeff(int k) const;
  const Int& leading() const { return coeffs_.back(); }

  Int eval(const Int& a) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& a);

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Division by a monic divisor over Z: num = den*quot + rem, deg rem < deg den.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& num, const IntPoly& den);

IntPoly pow(const IntPoly& base, unsigned e);

/// Polynomial over F_q, q prime. Coefficients are residues in [0, q).
class ModPoly {
 public:
  explicit ModPoly(Int q) : q_(std::move(q)) {}
  ModPoly(Int q, std::vector<Int> ascending);
  ModPoly(const IntPoly& f, Int q) : ModPoly(std::move(q), f.coeffs()) {}

  static ModPoly one(const Int& q) { return ModPoly(q, {Int(1)}); }
  static ModPoly x(const Int& q) { return ModPoly(q, {Int(0), Int(1)}); }

  const Int& modulus() const { return q_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int k) const;
  const Int& leading() const { return coeffs_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  Int eval(const Int& a) const;
  /// Representative with coefficients in [0, q).
  IntPoly lift() const { return IntPoly(coeffs_); }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;
  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const Int& c, const ModPoly& a);

 private:
  void trim();
  Int q_;
  std::vector<Int> coeffs_;
};

/// num = den*quotient + remainder over F_q. Throws DivisionByZeroPoly,
/// ModulusMismatch.
std::pair<ModPoly, ModPoly> poly_divrem_mod_q(const ModPoly& num, const ModPoly& den);

/// Monic gcd (zero if both are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

/// c(a) mod m, in [0, m). Throws BadModulus when m < 2.
Int poly_eval_mod(const IntPoly& c, const Int& a, const Int& m);

struct Factor {
  ModPoly phi;
  int multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization into monic irreducibles, sorted by degree, then by
/// root for linear factors and by coefficients (highest first) otherwise.
struct FactorizationModQ {
  Int q;
  std::vector<Factor> factors;
};

/// Factorization of a monic integer polynomial modulo a prime.
/// Throws NotMonic, NotPrime.
FactorizationModQ factor_mod_q(const IntPoly& f, const Int& q);
FactorizationModQ factor_mod_q(const IntPoly& f, const Int& q, Rng& gen);

/// Rabin's test.
bool is_irreducible_mod_q(const ModPoly& phi);

struct RootMod {
  Int root;
  int multiplicity;
  friend bool operator==(const RootMod&, const RootMod&) = default;
};

/// All roots of f in F_q, ascending, with multiplicities. Throws NotPrime.
std::vector<RootMod> roots_mod_q(const IntPoly& f, const Int& q);

/// Residues below this bound use exhaustive scans.
inline const Int kScanLimit = Int(1) << 16;

// Text forms. Accepted input: terms "x^k", "c*x^k", "c*x", "c", joined by
// '+'/'-' (U+2212 is accepted as minus), or an ascending coefficient list
// "c0, c1, ..." optionally wrapped in brackets. Output is the descending form.
IntPoly parse_poly(std::string_view text);
std::string to_string(const IntPoly& f);
std::string to_string(const ModPoly& f);

}  // namespace idealforge
