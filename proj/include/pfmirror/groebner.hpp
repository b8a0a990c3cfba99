#pragma once

// Groebner bases of submodules of S^m, S = F_p[x1..x6], with exact
// division certificates.
//
// Module order is position-over-term: position 0 is the most significant
// slot, ties broken by degrevlex on the monomial.  Inputs must be
// homogeneous (all nonzero entries of a column share one degree); the
// algorithm runs degree by degree and can stop at a degree bound, which is
// all that is needed to compute normal forms in degrees up to that bound.
//
// Every basis element remembers how it was produced (S-pair, reducers,
// interreduction) as a derivation DAG over the original columns.  Quotients
// for a normal form are pushed back through that DAG, so the certificate
// v = remainder + K * A is available without storing every basis element's
// full expression.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pfmirror/polyalg.hpp"

namespace pfm {

struct BuchbergerOptions {
  /// Discard S-pairs and generators above this degree.
  std::optional<int> max_degree;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t chain_pruned = 0;
};

namespace gbdetail {

struct Step {
  std::uint32_t src;  // derivation node
  Monomial shift;
  std::uint64_t coeff;
};

struct Node {
  int degree = 0;
  std::vector<Step> steps;  // empty for original columns
};

struct SparseTerm {
  std::uint32_t pos;
  Monomial mono;
  std::uint64_t coeff;
};

struct Element {
  std::vector<SparseTerm> terms;  // descending module order, monic
  int degree = 0;
  std::uint32_t node = 0;
};

}  // namespace gbdetail

class GroebnerBasis {
 public:
  std::uint64_t modulus() const { return modulus_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<FpVector>& columns() const { return columns_; }
  /// Degree up to which the basis is complete; nullopt when unbounded.
  std::optional<int> degree_bound() const { return bound_; }
  const BuchbergerStats& stats() const { return stats_; }

  FpVector element(std::size_t j) const;
  int element_degree(std::size_t j) const { return elements_.at(j).degree; }
  /// (position, monomial) of the leading term.
  std::pair<std::size_t, Monomial> leading(std::size_t j) const;

  /// Coefficients c_k with element(j) = sum_k c_k * columns()[k].
  std::vector<FpPoly> expression(std::size_t j) const;

 private:
  friend GroebnerBasis buchberger(std::span<const FpVector>, BuchbergerOptions);
  friend class GbEngine;
  friend struct NormalFormAccess;

  std::uint64_t modulus_ = 0;
  std::size_t rank_ = 0;
  std::vector<FpVector> columns_;
  std::vector<gbdetail::Element> elements_;
  std::vector<gbdetail::Node> nodes_;
  std::optional<int> bound_;
  BuchbergerStats stats_;
};

/// Exact quotient certificate: input = remainder + sum_k quotients[k] * column_k.
struct DivisionRecord {
  std::vector<FpPoly> quotients;
  FpVector remainder;
};

/// Reduced Groebner basis of the span of `columns`, tracking derivations.
/// Throws DomainMismatch for mixed moduli and InvalidInput for unequal
/// lengths or inhomogeneous columns.
GroebnerBasis buchberger(std::span<const FpVector> columns, BuchbergerOptions opts = {});

/// Canonical remainder of a homogeneous vector with its certificate.
std::pair<FpVector, DivisionRecord> normal_form(const FpVector& v, const GroebnerBasis& gb);

/// Number of standard (position, monomial) pairs of the given degree, i.e.
/// the dimension of that graded piece of the cokernel.
std::size_t graded_piece_dim(const GroebnerBasis& gb, int degree);

/// sum_k coeffs[k] * columns[k].
FpVector combine_columns(std::span<const FpVector> columns, std::span<const FpPoly> coeffs);

/// Checks input == remainder + K * quotients by exact arithmetic.
bool certificate_holds(const FpVector& input, const DivisionRecord& rec,
                       std::span<const FpVector> columns);

}  // namespace pfm
