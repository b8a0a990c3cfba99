#pragma once

// Frobenius solutions of hypergeometric Picard-Fuchs equations
// Theta^4 - z prod(Theta + a_i), the mirror map, the Yukawa coupling in the
// canonical coordinate q, and instanton numbers.  Everything is exact.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pfmirror/exactnum.hpp"

namespace pfm {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N.
using RationalSeries = std::vector<BigRational>;

struct HGParams {
  std::string label;
  std::vector<int> degrees;
  int ambient_dim = 0;
  std::array<BigRational, 4> a;

  /// Product of the degrees (the degree of the threefold).
  BigInt degree() const;
  /// prod d_i^d_i, the scale in s ~ log z - sum d_i log d_i.
  BigInt scale() const;
};

/// The five complete-intersection families, in table order.
const std::vector<HGParams>& hg_presets();

/// Looks up a preset by label ("3,3", "2,4", "2,2,2,2", "2,2,3", "5").
const HGParams& hg_preset(const std::string& label);

/// Parameters of a Calabi-Yau complete intersection of the given degrees in
/// P^(sum d_i - 1): the multiset {k/d : 0 < k < d} over all degrees d.
HGParams hg_from_degrees(std::vector<int> degrees);

RationalSeries series_mul(const RationalSeries& f, const RationalSeries& g);
/// f/g; g(0) must be nonzero.
RationalSeries series_div(const RationalSeries& f, const RationalSeries& g);
/// exp(f) for f(0) = 0.
RationalSeries series_exp(const RationalSeries& f);
/// f(g(t)) for g(0) = 0.
RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g);
/// Compositional inverse of f = c_1 t + ..., c_1 != 0.
RationalSeries series_revert(const RationalSeries& f);
/// Theta = t d/dt applied termwise.
RationalSeries series_theta(const RationalSeries& f);

/// Holomorphic solution F_0 normalized by F_0(0) = 1.
RationalSeries f0_series(const HGParams& params, int order);

/// G with F_1 = F_0 log z + G and G(0) = 0.
RationalSeries f1_series(const HGParams& params, int order);

/// Residual of Theta^4 - z prod(Theta + a_i) on F_0 log z + G, split into
/// the coefficient of log z and the log-free part.
struct LogResidual {
  RationalSeries log_part;
  RationalSeries plain_part;
};
LogResidual hg_residual(const HGParams& params, const RationalSeries& f0, const RationalSeries& g);

/// Residual of Theta^4 - z prod(Theta + a_i) on a plain series.
RationalSeries hg_apply(const HGParams& params, const RationalSeries& f);

struct MirrorMap {
  BigInt scale;          // C = prod d_i^d_i
  RationalSeries q_of_z; // q(z) = (z/C) exp(G/F_0)
  RationalSeries z_of_q; // its compositional inverse
};

MirrorMap mirror_map(const RationalSeries& f0, const RationalSeries& g, const HGParams& params);

/// kappa(z) = D / (F_0^2 (Theta s)^3 (1 - z)) with s = log(z/C) + G/F_0.
RationalSeries yukawa_z(const RationalSeries& f0, const RationalSeries& g, const HGParams& params);

/// kappa expressed in q by substituting z = z(q).
RationalSeries yukawa_q(const RationalSeries& f0, const RationalSeries& g,
                        const RationalSeries& z_of_q, const HGParams& params);

struct InstantonTable {
  BigInt leading;
  std::map<int, BigInt> n;  // degree -> n_d
};

/// Solves kappa = D + sum n_d d^3 q^d / (1 - q^d) for n_1..n_dmax.  Throws
/// VerificationFailure("integrality_violation") on a non-integral n_d.
InstantonTable extract_instantons(const RationalSeries& kappa, const BigInt& leading, int d_max);

struct YukawaResult {
  HGParams params;
  int order;
  RationalSeries f0, g;
  MirrorMap map;
  RationalSeries kappa;  // in q
  InstantonTable instantons;
};

/// Full chain for one family with truncation order d_max + 5.
YukawaResult compute_yukawa(const HGParams& params, int d_max);

}  // namespace pfm
