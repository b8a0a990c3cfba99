#pragma once

// Griffiths-Dwork reduction for the two-cubic family over F_p, discovery of
// the fourth-order relation among omega_2..omega_6 by multi-modular
// sampling, and assembly of the Picard-Fuchs operator in Theta = z d/dz.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pfmirror/groebner.hpp"
#include "pfmirror/polyalg.hpp"

namespace pfm {

/// Numerator data of sum_k P_k / (Q1^k Q2^(n-k)) * Omega for k = 1..n-1.
/// numerators[k-1] is P_k; every P_k is homogeneous of degree 3(n-2).
struct PolePresentation {
  int pole_order = 2;
  FpVector numerators;
  std::optional<FieldElement> lambda;

  /// Builds a presentation from all n+1 numerators P_0..P_n; the pure
  /// powers P_0/Q2^n and P_n/Q1^n are exact and therefore dropped.
  static PolePresentation from_all_components(int n, const FpVector& all,
                                              std::optional<FieldElement> lambda = {});

  /// Same class written with pole order n+1 (every numerator times Q2).
  PolePresentation raised(const CubicPair<FieldElement>& fam) const;

  PolePresentation scaled(const FieldElement& c) const;
  /// Sum of two presentations of equal pole order.
  PolePresentation operator+(const PolePresentation& o) const;
};

/// Canonical coordinates: components[k] is the normal form m_k in the
/// row layout of K_k.
struct StandardForm {
  std::map<int, FpVector> components;

  bool is_zero() const;
  StandardForm scaled(const FieldElement& c) const;
  StandardForm operator+(const StandardForm& o) const;
  friend bool operator==(const StandardForm& a, const StandardForm& b);
  /// Flattened nonzero coefficients keyed by (k, row, monomial bits).
  std::map<std::tuple<int, std::size_t, std::uint64_t>, std::uint64_t> coordinates() const;
};

/// Columns of K_n = (B_n | Q1 I | Q2 I) acting on S^(n-1).  Row r (1-based)
/// holds numerators over Q1^(n-r) Q2^r.  For n = 2 this is (Q1, Q2) on S^1.
std::vector<FpVector> build_kn(int n, const FieldElement& lambda);

/// Literal omega_n: component i is (-1)^n (n-2)! lambda^n (x1x2x3)^(i-1) (x4x5x6)^(n-i-1).
PolePresentation omega_form(int n, const FieldElement& lambda);

/// The forms generated from omega_2 = lambda^2/(Q1 Q2) by
/// omega_(n+1) = Theta omega_n + (n/6) omega_n, i.e. component i equals
/// (-1)^n (n-2)!/2^(n-2) lambda^n (x4x5x6)^(i-1) (x1x2x3)^(n-i-1).
PolePresentation omega_chain_form(int n, const FieldElement& lambda);

/// Truncated Groebner bases of K_2..K_max_order at one specialization.
struct ReductionBases {
  FieldElement lambda;
  CubicPair<FieldElement> family;
  std::map<int, std::vector<FpVector>> columns;
  std::map<int, GroebnerBasis> bases;
};

ReductionBases prepare_bases(int max_order, const FieldElement& lambda);

struct ReductionStage {
  int pole_order;
  FpVector input;
  DivisionRecord record;
};

/// Reduces a presentation to standard form.  The certificate
/// p = m + K A is checked exactly at every pole order; a failure throws.
/// `trace`, when given, receives every stage.
StandardForm reduce_class(const PolePresentation& omega, const ReductionBases& bases,
                          std::vector<ReductionStage>* trace = nullptr);

/// Which normalization of omega_n the relation solver uses.
enum class OmegaKind { Literal, Chain };

struct PointRelation {
  FieldElement z;
  std::array<FieldElement, 4> h;  // h_2..h_5
};

/// Solves omega_6 = sum h_i omega_i in standard-form coordinates at
/// z0 = lambda^-6.  Throws BadSpecialization when z0 is 0 or 1 or the
/// omega_2..omega_5 classes are dependent.
PointRelation solve_relation_at_point(std::uint64_t p, const FieldElement& lambda,
                                      OmegaKind kind = OmegaKind::Chain);

/// a_i, b_i for i = 2..5 modulo one prime.
struct RelationResidues {
  std::uint64_t prime = 0;
  std::array<std::uint64_t, 4> a{};
  std::array<std::uint64_t, 4> b{};
};

/// Fits h_i(z)(z-1) = a_i z + b_i.  The first two samples determine the
/// coefficients and every further sample must agree exactly.
RelationResidues fit_relation(const std::vector<PointRelation>& samples);

struct RelationCoeffs {
  std::array<BigRational, 4> a;  // index i-2
  std::array<BigRational, 4> b;
  friend bool operator==(const RelationCoeffs&, const RelationCoeffs&) = default;
};

/// CRT plus rational reconstruction of every coefficient.  Needs at least
/// two distinct primes.  Throws ReconstructionFailure when the modulus is
/// too small and VerificationFailure if a denominator has a prime factor
/// other than 2 and 3.
RelationCoeffs lift_relation(const std::vector<RelationResidues>& per_prime);

/// h_i(z0) predicted by the lifted relation, reduced mod p.
std::array<FieldElement, 4> evaluate_relation(const RelationCoeffs& rel, const FieldElement& z);

/// sum_j z^j P_j(Theta); coefficients[j][k] multiplies z^j Theta^k.
struct PFOperator {
  std::vector<std::vector<BigRational>> coefficients;

  int theta_degree() const;
  int z_degree() const;
  BigRational coefficient(int theta_power, int z_power) const;
  std::string to_string() const;
  friend bool operator==(const PFOperator& a, const PFOperator& b);
};

/// Product of (Theta + r) over the given roots, as coefficients in Theta.
std::vector<BigRational> theta_product(const std::vector<BigRational>& roots);

/// (z-1) D_6 - sum_i (a_i z + b_i) D_i with D_2 = 1, D_(i+1) = (Theta + i/6) D_i,
/// scaled so that the z^0 Theta^4 coefficient is 1.
PFOperator assemble_pf(const RelationCoeffs& rel);

/// Roots of the z^0 part; throws InvalidInput unless it has degree 4 and
/// splits over Q.
std::vector<BigRational> indicial_exponents(const PFOperator& op);

/// Coefficients of L f for a truncated series f (same truncation).
std::vector<BigRational> apply_operator(const PFOperator& op, const std::vector<BigRational>& f);

struct LambdaSample {
  FieldElement lambda;
  std::optional<PointRelation> relation;
  std::string rejected;  // reason when relation is empty
};

struct PrimeRun {
  std::uint64_t prime;
  std::vector<LambdaSample> samples;
  RelationResidues residues;
};

struct PfDiscovery {
  std::vector<PrimeRun> runs;
  RelationCoeffs relation;
  std::uint64_t check_prime = 0;
  FieldElement check_lambda;
  PFOperator op;
  std::vector<BigRational> exponents;
  bool maximally_unipotent = false;
};

/// Full multi-modular workflow: lambda_count accepted samples per prime,
/// lift, verification at a prime outside `primes`, operator assembly.
PfDiscovery discover_relation(const std::vector<std::uint64_t>& primes, int lambda_count,
                              std::uint64_t seed, OmegaKind kind = OmegaKind::Chain);

}  // namespace pfm
