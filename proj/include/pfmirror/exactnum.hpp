#pragma once

// Exact scalars: word-size prime fields, GMP-backed rationals, Chinese
// remaindering and rational reconstruction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfm {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Base class for every failure the library reports.  `kind()` is a short
/// machine-readable tag that the command-line front end forwards verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DomainMismatch : public Error {
 public:
  explicit DomainMismatch(const std::string& what)
      : Error("domain_mismatch", what) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error("invalid_input", what) {}
};

/// The chosen specialization (prime, lambda) is degenerate; try another.
class BadSpecialization : public Error {
 public:
  explicit BadSpecialization(const std::string& what)
      : Error("bad_specialization", what) {}
};

/// Rational reconstruction did not fit the bound; more primes are needed.
class ReconstructionFailure : public Error {
 public:
  explicit ReconstructionFailure(const std::string& what)
      : Error("reconstruction_failure", what) {}
};

/// An exact check that must hold did not.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(std::string kind, const std::string& what)
      : Error(std::move(kind), what) {}
};

namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p < (std::uint64_t{1} << 32)) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse by extended Euclid; throws InvalidInput for a == 0 mod p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Reduces a signed integer into [0, p).
std::uint64_t from_signed(std::int64_t v, std::uint64_t p);
/// Maps a rational with denominator prime to p into F_p.
std::uint64_t from_rational(const BigRational& q, std::uint64_t p);

}  // namespace modarith

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// A prime is admissible when it is at least 10007 and below 2^62.
bool is_admissible_prime(std::uint64_t p);

/// Fixed list of admissible primes used by the multi-modular pipeline.
const std::vector<std::uint64_t>& vetted_primes();

/// Element of F_p.  Carries its modulus so that mixing fields is detected.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint64_t value, std::uint64_t modulus);
  static FieldElement from_int(std::int64_t v, std::uint64_t modulus);
  static FieldElement from_rational(const BigRational& q, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check_same(const FieldElement& o) const;

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

struct Residue {
  BigInt residue;
  BigInt prime;
};
using ResidueSystem = std::vector<Residue>;

struct CrtResult {
  BigInt value;
  BigInt modulus;
};

/// Combines residues modulo pairwise distinct primes.  The result does not
/// depend on the order of the pairs.
CrtResult crt_combine(std::span<const Residue> rs);

/// Half-extended-Euclid reconstruction with bound floor(sqrt(modulus / 2)).
/// Returns nullopt when no fraction within the bound exists, which means
/// more primes are needed.
std::optional<BigRational> rational_reconstruct(const BigInt& residue,
                                                const BigInt& modulus);

std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

}  // namespace pfm
