#include "pfmirror/mirrorseries.hpp"

#include <algorithm>
#include <numeric>

namespace pfm {

namespace {

BigRational frac(long n, long d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

HGParams make_preset(std::string label, std::vector<int> degrees, int ambient,
                     std::array<BigRational, 4> a) {
  return {std::move(label), std::move(degrees), ambient, std::move(a)};
}

// Evaluates prod_i (t + a_i).
BigRational pochhammer_factor(const std::array<BigRational, 4>& a, const BigRational& t) {
  BigRational r = 1;
  for (const auto& ai : a) r *= t + ai;
  return r;
}

// d/dt of prod_i (t + a_i).
BigRational pochhammer_factor_derivative(const std::array<BigRational, 4>& a, const BigRational& t) {
  BigRational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigRational term = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) term *= t + a[j];
    }
    r += term;
  }
  return r;
}

}  // namespace

BigInt HGParams::degree() const {
  BigInt d = 1;
  for (int x : degrees) d *= x;
  return d;
}

BigInt HGParams::scale() const {
  BigInt c = 1;
  for (int x : degrees) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(x));
    c *= p;
  }
  return c;
}

const std::vector<HGParams>& hg_presets() {
  static const std::vector<HGParams> presets = {
      make_preset("3,3", {3, 3}, 5, {frac(1, 3), frac(1, 3), frac(2, 3), frac(2, 3)}),
      make_preset("2,4", {2, 4}, 5, {frac(1, 4), frac(1, 2), frac(3, 4), frac(1, 2)}),
      make_preset("2,2,2,2", {2, 2, 2, 2}, 7, {frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)}),
      make_preset("2,2,3", {2, 2, 3}, 6, {frac(1, 2), frac(1, 2), frac(1, 3), frac(2, 3)}),
      make_preset("5", {5}, 4, {frac(1, 5), frac(2, 5), frac(3, 5), frac(4, 5)}),
  };
  return presets;
}

const HGParams& hg_preset(const std::string& label) {
  for (const auto& p : hg_presets()) {
    if (p.label == label) return p;
  }
  throw InvalidInput("unknown family '" + label + "'");
}

HGParams hg_from_degrees(std::vector<int> degrees) {
  if (degrees.empty()) throw InvalidInput("no degrees given");
  std::sort(degrees.begin(), degrees.end());
  std::vector<BigRational> a;
  int sum = 0;
  for (int d : degrees) {
    if (d < 2) throw InvalidInput("degrees must be at least 2");
    sum += d;
    for (int k = 1; k < d; ++k) a.push_back(frac(k, d));
  }
  if (a.size() != 4) {
    throw InvalidInput("degrees do not give a Calabi-Yau threefold (need sum(d_i - 1) = 4)");
  }
  HGParams out;
  out.degrees = degrees;
  out.ambient_dim = sum - 1;
  std::copy(a.begin(), a.end(), out.a.begin());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    out.label += (i ? "," : "") + std::to_string(degrees[i]);
  }
  return out;
}

RationalSeries series_mul(const RationalSeries& f, const RationalSeries& g) {
  const std::size_t n = std::min(f.size(), g.size());
  RationalSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(f[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

RationalSeries series_div(const RationalSeries& f, const RationalSeries& g) {
  if (g.empty() || sgn(g[0]) == 0) throw InvalidInput("series division by a non-unit");
  const std::size_t n = std::min(f.size(), g.size());
  RationalSeries out(n);
  for (std::size_t m = 0; m < n; ++m) {
    BigRational acc = f[m];
    for (std::size_t k = 1; k <= m; ++k) acc -= g[k] * out[m - k];
    out[m] = acc / g[0];
  }
  return out;
}

RationalSeries series_exp(const RationalSeries& f) {
  if (!f.empty() && sgn(f[0]) != 0) throw InvalidInput("exp needs a series without constant term");
  // E' = f' E, i.e. m e_m = sum_k k f_k e_(m-k).
  RationalSeries e(f.size());
  if (e.empty()) return e;
  e[0] = 1;
  for (std::size_t m = 1; m < f.size(); ++m) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += BigRational(static_cast<long>(k)) * f[k] * e[m - k];
    e[m] = acc / BigRational(static_cast<long>(m));
  }
  return e;
}

RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g) {
  if (!g.empty() && sgn(g[0]) != 0) throw InvalidInput("inner series must vanish at 0");
  const std::size_t n = std::min(f.size(), g.size());
  RationalSeries out(n);
  for (std::size_t k = f.size(); k-- > 0;) {
    out = series_mul(out, g);
    out.resize(n);
    if (n > 0) out[0] += f[k];
  }
  return out;
}

RationalSeries series_revert(const RationalSeries& f) {
  if (f.size() < 2 || sgn(f[0]) != 0 || sgn(f[1]) == 0) {
    throw InvalidInput("reversion needs f = c_1 t + ... with c_1 != 0");
  }
  // Lagrange: with f = t h(t), [t^m] f^(-1) = (1/m) [t^(m-1)] h^(-m).
  const std::size_t n = f.size();
  RationalSeries h(f.begin() + 1, f.end());
  RationalSeries one(h.size());
  one[0] = 1;
  const RationalSeries hinv = series_div(one, h);
  RationalSeries power = one;
  RationalSeries out(n);
  for (std::size_t m = 1; m < n; ++m) {
    power = series_mul(power, hinv);
    out[m] = power[m - 1] / BigRational(static_cast<long>(m));
  }
  return out;
}

RationalSeries series_theta(const RationalSeries& f) {
  RationalSeries out(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) out[m] = f[m] * BigRational(static_cast<long>(m));
  return out;
}

RationalSeries f0_series(const HGParams& params, int order) {
  if (order < 1) throw InvalidInput("series order must be at least 1");
  RationalSeries c(order + 1);
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    BigRational den(static_cast<long>(n + 1));
    den = den * den * den * den;
    c[n + 1] = c[n] * pochhammer_factor(params.a, BigRational(n)) / den;
  }
  return c;
}

RationalSeries f1_series(const HGParams& params, int order) {
  // d/d(eps) of the Frobenius coefficients c_n(eps) at eps = 0.
  const RationalSeries c = f0_series(params, order);
  RationalSeries g(order + 1);
  BigRational h = 0;
  for (int n = 1; n <= order; ++n) {
    const int k = n - 1;
    for (const auto& ai : params.a) h += 1 / (ai + k);
    h -= frac(4, k + 1);
    g[n] = c[n] * h;
  }
  return g;
}

RationalSeries hg_apply(const HGParams& params, const RationalSeries& f) {
  RationalSeries out(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    BigRational t(static_cast<long>(m));
    out[m] = t * t * t * t * f[m];
    if (m > 0) out[m] -= pochhammer_factor(params.a, BigRational(static_cast<long>(m - 1))) * f[m - 1];
  }
  return out;
}

LogResidual hg_residual(const HGParams& params, const RationalSeries& f0, const RationalSeries& g) {
  // L(f log z) = (L f) log z + 4 Theta^3 f - z P'(Theta) f.
  LogResidual r{hg_apply(params, f0), hg_apply(params, g)};
  const std::size_t n = std::min(f0.size(), g.size());
  r.plain_part.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    BigRational t(static_cast<long>(m));
    r.plain_part[m] += 4 * t * t * t * f0[m];
    if (m > 0) {
      r.plain_part[m] -=
          pochhammer_factor_derivative(params.a, BigRational(static_cast<long>(m - 1))) * f0[m - 1];
    }
  }
  return r;
}

MirrorMap mirror_map(const RationalSeries& f0, const RationalSeries& g, const HGParams& params) {
  MirrorMap mm;
  mm.scale = params.scale();
  const RationalSeries e = series_exp(series_div(g, f0));
  const std::size_t n = e.size();
  mm.q_of_z.assign(n, BigRational(0));
  for (std::size_t m = 1; m < n; ++m) mm.q_of_z[m] = e[m - 1] / BigRational(mm.scale);
  mm.z_of_q = series_revert(mm.q_of_z);
  return mm;
}

RationalSeries yukawa_z(const RationalSeries& f0, const RationalSeries& g, const HGParams& params) {
  const std::size_t n = std::min(f0.size(), g.size());
  RationalSeries theta_s = series_theta(series_div(g, f0));
  theta_s[0] += 1;
  RationalSeries den = series_mul(series_mul(f0, f0), theta_s);
  den = series_mul(series_mul(den, theta_s), theta_s);
  RationalSeries one_minus_z(n);
  one_minus_z[0] = 1;
  if (n > 1) one_minus_z[1] = -1;
  den = series_mul(den, one_minus_z);
  RationalSeries num(n);
  num[0] = BigRational(params.degree());
  return series_div(num, den);
}

RationalSeries yukawa_q(const RationalSeries& f0, const RationalSeries& g,
                        const RationalSeries& z_of_q, const HGParams& params) {
  return series_compose(yukawa_z(f0, g, params), z_of_q);
}

InstantonTable extract_instantons(const RationalSeries& kappa, const BigInt& leading, int d_max) {
  if (d_max < 1) throw InvalidInput("d_max must be at least 1");
  if (static_cast<int>(kappa.size()) <= d_max) {
    throw InvalidInput("kappa is truncated below degree " + std::to_string(d_max));
  }
  if (kappa[0] != BigRational(leading)) {
    throw VerificationFailure("leading_term_mismatch",
                              "kappa(0) = " + to_string(kappa[0]) + ", expected " + leading.get_str());
  }
  InstantonTable t;
  t.leading = leading;
  for (int d = 1; d <= d_max; ++d) {
    BigRational rest = kappa[d];
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) rest -= BigRational(t.n[e] * e * e * e);
    }
    rest /= BigRational(d * d * d);
    if (rest.get_den() != 1) {
      throw VerificationFailure("integrality_violation",
                                "n_" + std::to_string(d) + " = " + to_string(rest) + " is not an integer");
    }
    t.n[d] = rest.get_num();
  }
  return t;
}

YukawaResult compute_yukawa(const HGParams& params, int d_max) {
  if (d_max < 1) throw InvalidInput("d_max must be at least 1");
  YukawaResult r;
  r.params = params;
  r.order = d_max + 5;
  r.f0 = f0_series(params, r.order);
  r.g = f1_series(params, r.order);
  r.map = mirror_map(r.f0, r.g, params);
  r.kappa = yukawa_q(r.f0, r.g, r.map.z_of_q, params);
  r.instantons = extract_instantons(r.kappa, params.degree(), d_max);
  return r;
}

}  // namespace pfm
