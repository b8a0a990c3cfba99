#pragma once

// Enumerative cross-checks: Schubert calculus on the Grassmannian of lines,
// Euler characteristics of complete intersections, and the orbifold Euler
// characteristic of the two-cubic threefold modulo its order-81 symmetry
// group.

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfmirror/exactnum.hpp"

namespace pfm {

/// Integer combination of Schubert classes sigma_(a,b) on Gr(2, m), with
/// m-2 >= a >= b >= 0.
class SchubertClass {
 public:
  explicit SchubertClass(int m);
  static SchubertClass basis(int m, int a, int b);

  int ambient() const { return m_; }
  const std::map<std::pair<int, int>, BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(int a, int b) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(int a, int b, const BigInt& c);
  SchubertClass& operator+=(const SchubertClass& o);
  SchubertClass& operator-=(const SchubertClass& o);
  SchubertClass scaled(const BigInt& c) const;
  friend SchubertClass operator+(SchubertClass x, const SchubertClass& y) { return x += y; }
  friend bool operator==(const SchubertClass& x, const SchubertClass& y) {
    return x.m_ == y.m_ && x.coeffs_ == y.coeffs_;
  }

  /// e.g. "18*s(3,1) + 27*s(2,2)".
  std::string to_string() const;

 private:
  int m_;
  std::map<std::pair<int, int>, BigInt> coeffs_;
};

/// Pieri for sigma_1 and sigma_(1,1) plus Giambelli.  Throws DomainMismatch
/// for different Grassmannians.
SchubertClass class_mul(const SchubertClass& x, const SchubertClass& y);

/// Class of lines contained in a degree-d hypersurface of P^(m-1), as a
/// class on Gr(2, m).  Throws InvalidInput when the codimension d+1 exceeds
/// the dimension of the Grassmannian.
SchubertClass lines_incidence_class(int d, int m);

/// sigma_(a,b) on lines in P^n as the Omega_(p,q) cycle: (p, q) = (n-1-a, n-b).
std::pair<int, int> sigma_to_omega(int a, int b, int n);

/// Number of lines on a generic complete intersection of the given degrees
/// in P^n; requires sum (d_i + 1) = 2(n - 1).
BigInt line_count(const std::vector<int>& degrees, int n);

/// Euler characteristic of a smooth complete intersection in P^n.
BigInt ci_euler(const std::vector<int>& degrees, int n);

/// g_(alpha,beta,delta,epsilon,mu) acting diagonally by zeta_9 powers.
struct GroupElement {
  int alpha = 0, beta = 0, delta = 0, epsilon = 0, mu = 0;

  /// Exponents e_i in Z_9 with x_i -> zeta_9^(e_i) x_i.
  std::array<int, 6> exponents() const;
  bool is_identity() const;
  std::string to_string() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The 81 elements with alpha + beta = delta + epsilon = mu (mod 3).  The
/// postconditions (order, closure, invariance of Q1 and Q2, no two
/// elements proportional) are checked and a violation throws.
std::vector<GroupElement> enumerate_group();

/// A linear piece {x_i = 0 for i outside `support`} of a fixed set,
/// intersected with V at generic lambda.
struct FixedComponent {
  std::vector<int> support;  // 0-based coordinates allowed to be nonzero
  int dimension = -1;        // -1 when the intersection with V is empty
  BigInt euler;
  int points = 0;            // number of points when dimension == 0
};

struct FixedLocusReport {
  GroupElement element;
  std::vector<FixedComponent> components;  // nonempty pieces only

  int dimension() const;
  BigInt euler() const;
  int points() const;
};

/// Intersection of V with one coordinate subspace, classified by which
/// cubic terms survive.  Throws VerificationFailure("unclassifiable") for
/// patterns this classification does not cover.
FixedComponent classify_support(std::vector<int> support);

FixedLocusReport fixed_locus(const GroupElement& g);

/// Common fixed locus of several elements.
FixedLocusReport common_fixed_locus(std::span<const GroupElement> gs);

struct OrbifoldReport {
  BigInt chi_v;                       // Euler characteristic of V
  BigRational identity_term;          // (1/81) sum_g chi(V^g)
  int curve_elements = 0;             // non-identity, one-dimensional fixed set
  std::map<int, int> point_elements;  // fixed point count -> number of elements
  int empty_elements = 0;
  BigInt total_fixed_points;          // sum over elements with finite fixed sets
  BigRational curve_quotient_sum;     // sum of chi(V^g / G) over curve elements
  BigRational point_quotient_sum;     // same over point elements
  BigRational total;                  // orbifold Euler characteristic
};

/// Sum over g of chi(V^g / G), each quotient computed as
/// (1/81) sum_h chi(V^g cap V^h).  Throws VerificationFailure if the
/// result is not -chi(V).
OrbifoldReport orbifold_euler();

}  // namespace pfm
