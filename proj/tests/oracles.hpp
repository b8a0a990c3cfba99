#pragma once

// Reference computations used by the tests.  They are written directly
// from the definitions and share no code with the library.

#include <cstdint>
#include <random>
#include <vector>

#include "pfmirror/exactnum.hpp"
#include "pfmirror/polyalg.hpp"

namespace oracle {

// Extended Euclid: inverse of a modulo m, or 0 if none exists.
inline pfm::BigInt inverse(pfm::BigInt a, const pfm::BigInt& m) {
  pfm::BigInt r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    pfm::BigInt q = r0 / r1;
    pfm::BigInt t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return 0;
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

inline pfm::BigRational frac(long n, long d) {
  pfm::BigRational q(n, d);
  q.canonicalize();
  return q;
}

// Random homogeneous polynomial of the given degree over F_p.
inline pfm::FpPoly random_poly(std::mt19937_64& rng, int degree, std::uint64_t p, int terms = 4) {
  const auto& monos = pfm::monomials_of_degree(degree);
  pfm::FpPoly f;
  for (int i = 0; i < terms; ++i) {
    f += pfm::FpPoly::term(monos[rng() % monos.size()], pfm::FieldElement(rng() % p, p));
  }
  return f;
}

// Naive n-variable expansion by repeated multiplication of linear forms.
inline pfm::FpPoly power(const pfm::FpPoly& f, int e, std::uint64_t p) {
  pfm::FpPoly r = pfm::FpPoly::constant(pfm::FieldElement(1, p));
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace oracle
