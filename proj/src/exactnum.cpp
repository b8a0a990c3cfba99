#include "pfmirror/exactnum.hpp"

#include <algorithm>
#include <set>

namespace pfm {

namespace modarith {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvalidInput("inverse of zero in F_" + std::to_string(p));
  // Extended Euclid on signed 128-bit to stay exact for p < 2^63.
  __int128 r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw InvalidInput("element not invertible");
  if (t0 < 0) t0 += p;
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t from_signed(std::int64_t v, std::uint64_t p) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t from_rational(const BigRational& q, std::uint64_t p) {
  BigInt P;
  mpz_set_ui(P.get_mpz_t(), p);
  BigInt n = q.get_num() % P;
  if (n < 0) n += P;
  BigInt d = q.get_den() % P;
  if (d == 0) throw InvalidInput("denominator divisible by " + std::to_string(p));
  return mul(n.get_ui(), inv(d.get_ui(), p), p);
}

}  // namespace modarith

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                           23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = modarith::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = modarith::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_admissible_prime(std::uint64_t p) {
  return p >= 10007 && p < (std::uint64_t{1} << 62) && is_prime_u64(p);
}

const std::vector<std::uint64_t>& vetted_primes() {
  static const std::vector<std::uint64_t> primes = {
      2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
      2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL,
      1000003ULL,    65537ULL,      10007ULL,      10009ULL,
      4611686018427387847ULL, 4611686018427387817ULL,
      4611686018427387787ULL,
  };
  return primes;
}

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus)
    : value_(value % modulus), modulus_(modulus) {}

FieldElement FieldElement::from_int(std::int64_t v, std::uint64_t modulus) {
  return FieldElement(modarith::from_signed(v, modulus), modulus);
}

FieldElement FieldElement::from_rational(const BigRational& q,
                                         std::uint64_t modulus) {
  return FieldElement(modarith::from_rational(q, modulus), modulus);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (modulus_ != o.modulus_) {
    throw DomainMismatch("F_" + std::to_string(modulus_) + " vs F_" +
                         std::to_string(o.modulus_));
  }
}

FieldElement FieldElement::inverse() const {
  return FieldElement(modarith::inv(value_, modulus_), modulus_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(modarith::pow(value_, e, modulus_), modulus_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ = modarith::add(value_, o.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ = modarith::sub(value_, o.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ = modarith::mul(value_, o.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  value_ = modarith::mul(value_, modarith::inv(o.value_, modulus_), modulus_);
  return *this;
}

CrtResult crt_combine(std::span<const Residue> rs) {
  if (rs.empty()) throw InvalidInput("empty residue system");
  std::set<BigInt> seen;
  for (const auto& r : rs) {
    if (r.prime <= 1) throw InvalidInput("modulus must exceed 1");
    if (r.residue < 0 || r.residue >= r.prime) {
      throw InvalidInput("residue out of range for modulus " + r.prime.get_str());
    }
    if (!seen.insert(r.prime).second) {
      throw InvalidInput("duplicate prime " + r.prime.get_str());
    }
  }
  // Sorting by prime makes the fold independent of the caller's ordering.
  std::vector<Residue> sorted(rs.begin(), rs.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Residue& a, const Residue& b) { return a.prime < b.prime; });
  BigInt value = sorted.front().residue;
  BigInt modulus = sorted.front().prime;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const auto& [r, p] = sorted[i];
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw InvalidInput("moduli not coprime");
    }
    BigInt t = ((r - value) % p) * inv % p;
    if (t < 0) t += p;
    value += modulus * t;
    modulus *= p;
  }
  return {value, modulus};
}

std::optional<BigRational> rational_reconstruct(const BigInt& residue,
                                                const BigInt& modulus) {
  if (residue < 0 || residue >= modulus) {
    throw InvalidInput("residue out of range in rational reconstruction");
  }
  BigInt bound;
  BigInt half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  // Remainder sequence r_i = t_i * residue (mod modulus); stop at the first
  // remainder within the bound.
  BigInt r0 = modulus, r1 = residue;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  BigInt num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) return std::nullopt;
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace pfm
