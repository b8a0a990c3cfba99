#pragma once

// Sparse homogeneous polynomials in x1..x6 over F_p or Q, plus the
// two-cubic family and its Jacobian rows.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfmirror/exactnum.hpp"

namespace pfm {

inline constexpr int kNumVars = 6;

/// Exponent vector packed one byte per variable (x1 in the low byte).
/// Products add the packed words, so total degree must stay below 256.
class Monomial {
 public:
  constexpr Monomial() = default;
  explicit Monomial(const std::array<int, kNumVars>& exps);
  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }
  static Monomial var(int i, int power = 1);

  int exponent(int i) const { return static_cast<int>((bits_ >> (8 * i)) & 0xFF); }
  std::array<int, kNumVars> exponents() const;
  int degree() const { return static_cast<int>((order_key() >> 40) & 0xFF); }
  std::uint64_t bits() const { return bits_; }

  /// Degree-reverse-lexicographic key with x1 > ... > x6: byte k holds the
  /// prefix sum e1 + ... + e(k+1), so integer comparison of keys is the
  /// monomial order and keys are additive under multiplication.
  std::uint64_t order_key() const {
    return (bits_ * 0x010101010101ULL) & 0xFFFFFFFFFFFFULL;
  }

  bool divides(const Monomial& other) const {
    constexpr std::uint64_t kGuard = 0x808080808080ULL;
    return (((other.bits_ | kGuard) - bits_) & kGuard) == kGuard;
  }
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    return from_bits(other.bits_ - bits_);
  }
  Monomial lcm(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return from_bits(a.bits_ + b.bits_);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }
  /// Monomial order (not bitwise order).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.order_key() < b.order_key();
  }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// All monomials of the given degree, largest first in the monomial order.
/// The returned reference stays valid for the program lifetime.
const std::vector<Monomial>& monomials_of_degree(int degree);

/// Position of `m` in monomials_of_degree(m.degree()).
std::size_t monomial_rank(const Monomial& m);

// Scalar adaptors so that Polynomial works over FieldElement and BigRational.
inline bool scalar_is_zero(const FieldElement& s) { return s.is_zero(); }
inline bool scalar_is_zero(const BigRational& s) { return sgn(s) == 0; }
inline FieldElement scalar_times(const FieldElement& s, std::int64_t k) {
  return s * FieldElement::from_int(k, s.modulus());
}
inline BigRational scalar_times(const BigRational& s, std::int64_t k) {
  return s * BigRational(static_cast<long>(k));
}
inline std::string scalar_string(const FieldElement& s) { return s.to_string(); }
inline std::string scalar_string(const BigRational& s) { return to_string(s); }

template <class Scalar>
struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial; terms kept strictly decreasing in the monomial order
/// with no zero coefficients.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Scalar& c) { return term(Monomial(), c); }
  static Polynomial term(const Monomial& m, const Scalar& c) {
    Polynomial p;
    if (!scalar_is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from arbitrary (possibly repeated, unordered) terms.
  static Polynomial from_terms(std::vector<Term<Scalar>> terms);

  const std::vector<Term<Scalar>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<Scalar>& leading() const { return terms_.front(); }

  /// Highest total degree, -1 for the zero polynomial.
  int degree() const;
  /// True for zero and for polynomials whose terms share one degree.
  bool is_homogeneous() const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }
  Polynomial scaled(const Scalar& c) const;
  Polynomial shifted(const Monomial& m) const;
  /// Partial derivative with respect to x_{var+1}.
  Polynomial derivative(int var) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const;

  template <class S>
  friend Polynomial<S> poly_mul(const Polynomial<S>& f, const Polynomial<S>& g);

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract);

  std::vector<Term<Scalar>> terms_;
};

template <class Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g);

template <class Scalar>
using PolyVector = std::vector<Polynomial<Scalar>>;

using FpPoly = Polynomial<FieldElement>;
using QPoly = Polynomial<BigRational>;
using FpVector = PolyVector<FieldElement>;
using QVector = PolyVector<BigRational>;

/// Sum over k of d(A_k)/d(x_k); A must have six components.
template <class Scalar>
Polynomial<Scalar> divergence(const PolyVector<Scalar>& a);

/// Common degree of the nonzero components, -1 if all vanish; throws when
/// the components disagree.
template <class Scalar>
int vector_degree(const PolyVector<Scalar>& v);

template <class Scalar>
bool vector_is_zero(const PolyVector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.is_zero(); });
}

/// Q1 = x1^3+x2^3+x3^3 - 3 lam x4x5x6, Q2 = x4^3+x5^3+x6^3 - 3 lam x1x2x3,
/// with J1, J2 their gradient rows.
template <class Scalar>
struct CubicPair {
  Scalar lambda;
  Polynomial<Scalar> q1, q2;
  PolyVector<Scalar> j1, j2;
};

template <class Scalar>
CubicPair<Scalar> build_family(const Scalar& lambda);

/// Product of the listed (0-based) variables, e.g. {0,1,2} -> x1 x2 x3.
Monomial product_of_vars(std::initializer_list<int> vars);

/// Binomial(d+5, 5): number of degree-d monomials in six variables.
std::size_t graded_dimension(int degree);

/// Reduces a rational polynomial modulo p.
FpPoly reduce_mod(const QPoly& f, std::uint64_t p);

extern template class Polynomial<FieldElement>;
extern template class Polynomial<BigRational>;

}  // namespace pfm
