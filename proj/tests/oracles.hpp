#pragma once
// Test-only brute-force oracles. Deliberately independent of the library's
// HNF, factorization and norm code paths.

#include <set>
#include <vector>

#include "idealforge/types.hpp"

namespace oracle {

using idealforge::Int;
using Residues = std::vector<long>;

/// Subgroup of (Z/D)^n generated by `gens`, by closure. Only for tiny D^n.
inline std::set<Residues> subgroup_mod(const std::vector<std::vector<long>>& gens, long d) {
  const std::size_t n = gens.front().size();
  std::set<Residues> seen{Residues(n, 0)};
  std::vector<Residues> frontier{Residues(n, 0)};
  while (!frontier.empty()) {
    std::vector<Residues> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Residues w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = (((v[k] + g[k]) % d) + d) % d;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Multiplicative order of q modulo p (gcd(p, q) = 1), by iteration.
inline int multiplicative_order(long q, long p) {
  long x = q % p;
  int k = 1;
  while (x != 1) {
    x = (x * q) % p;
    ++k;
  }
  return k;
}

/// Roots of a polynomial (ascending long coefficients) modulo small q by scan.
inline std::vector<long> scan_roots(const std::vector<long>& c, long q) {
  std::vector<long> roots;
  for (long a = 0; a < q; ++a) {
    long acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ((acc * a + *it) % q + q) % q;
    if (acc == 0) roots.push_back(a);
  }
  return roots;
}

inline bool is_small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
