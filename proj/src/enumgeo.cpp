#include "pfmirror/enumgeo.hpp"

#include <algorithm>
#include <set>

#include "pfmirror/polyalg.hpp"

namespace pfm {

SchubertClass::SchubertClass(int m) : m_(m) {
  if (m < 2) throw InvalidInput("Gr(2, m) needs m >= 2");
}

SchubertClass SchubertClass::basis(int m, int a, int b) {
  SchubertClass c(m);
  c.add(a, b, 1);
  return c;
}

BigInt SchubertClass::coefficient(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void SchubertClass::add(int a, int b, const BigInt& c) {
  if (b < 0 || a < b || a > m_ - 2) {
    throw InvalidInput("partition (" + std::to_string(a) + "," + std::to_string(b) +
                       ") is outside the box of Gr(2," + std::to_string(m_) + ")");
  }
  if (c == 0) return;
  BigInt& slot = coeffs_[{a, b}];
  slot += c;
  if (slot == 0) coeffs_.erase({a, b});
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  if (o.m_ != m_) throw DomainMismatch("Schubert classes on different Grassmannians");
  for (const auto& [ab, c] : o.coeffs_) add(ab.first, ab.second, c);
  return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& o) {
  return *this += o.scaled(-1);
}

SchubertClass SchubertClass::scaled(const BigInt& c) const {
  SchubertClass out(m_);
  for (const auto& [ab, v] : coeffs_) out.add(ab.first, ab.second, v * c);
  return out;
}

std::string SchubertClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  // Largest partitions first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [ab, c] = *it;
    BigInt v = c;
    if (!s.empty()) {
      s += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    }
    s += v.get_str() + "*s(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")";
  }
  return s;
}

namespace {

SchubertClass mul_sigma1(const SchubertClass& x) {
  const int top = x.ambient() - 2;
  SchubertClass out(x.ambient());
  for (const auto& [ab, c] : x.coeffs()) {
    const auto [a, b] = ab;
    if (a + 1 <= top) out.add(a + 1, b, c);
    if (b + 1 <= a) out.add(a, b + 1, c);
  }
  return out;
}

SchubertClass mul_sigma11(const SchubertClass& x) {
  const int top = x.ambient() - 2;
  SchubertClass out(x.ambient());
  for (const auto& [ab, c] : x.coeffs()) {
    if (ab.first + 1 <= top) out.add(ab.first + 1, ab.second + 1, c);
  }
  return out;
}

// x * sigma_k via sigma_k = sigma_1 sigma_(k-1) - sigma_(1,1) sigma_(k-2).
SchubertClass mul_special(const SchubertClass& x, int k) {
  if (k < 0) return SchubertClass(x.ambient());
  if (k == 0) return x;
  if (k == 1) return mul_sigma1(x);
  SchubertClass out = mul_sigma1(mul_special(x, k - 1));
  out -= mul_sigma11(mul_special(x, k - 2));
  return out;
}

// x * sigma_(a,b) with Giambelli sigma_(a,b) = sigma_a sigma_b - sigma_(a+1) sigma_(b-1).
SchubertClass mul_basis(const SchubertClass& x, int a, int b) {
  if (b == 0) return mul_special(x, a);
  SchubertClass out = mul_special(mul_special(x, b), a);
  out -= mul_special(mul_special(x, b - 1), a + 1);
  return out;
}

}  // namespace

SchubertClass class_mul(const SchubertClass& x, const SchubertClass& y) {
  if (x.ambient() != y.ambient()) {
    throw DomainMismatch("Gr(2," + std::to_string(x.ambient()) + ") vs Gr(2," +
                         std::to_string(y.ambient()) + ")");
  }
  SchubertClass out(x.ambient());
  for (const auto& [ab, c] : y.coeffs()) out += mul_basis(x, ab.first, ab.second).scaled(c);
  return out;
}

SchubertClass lines_incidence_class(int d, int m) {
  if (d < 1) throw InvalidInput("degree must be positive");
  if (m < 4) throw InvalidInput("need lines in at least P^3");
  if (d + 1 > 2 * (m - 2)) {
    throw InvalidInput("codimension " + std::to_string(d + 1) + " exceeds dim Gr(2," +
                       std::to_string(m) + "); no lines expected");
  }
  // c_top(Sym^d S*) = prod_i (i a + (d-i) b); pairing i with d-i gives
  // i(d-i) e1^2 + (d-2i)^2 e2, and the middle factor (d/2) e1 for even d.
  const SchubertClass e1 = SchubertClass::basis(m, 1, 0);
  const SchubertClass e2 = SchubertClass::basis(m, 1, 1);
  SchubertClass out = SchubertClass::basis(m, 0, 0);
  for (int i = 0; 2 * i < d; ++i) {
    SchubertClass factor = class_mul(e1, e1).scaled(i * (d - i));
    factor += e2.scaled((d - 2 * i) * (d - 2 * i));
    out = class_mul(out, factor);
  }
  if (d % 2 == 0) out = class_mul(out, e1.scaled(d / 2));
  return out;
}

std::pair<int, int> sigma_to_omega(int a, int b, int n) { return {n - 1 - a, n - b}; }

BigInt line_count(const std::vector<int>& degrees, int n) {
  int codim = 0;
  for (int d : degrees) codim += d + 1;
  if (codim != 2 * (n - 1)) {
    throw InvalidInput("sum(d_i + 1) = " + std::to_string(codim) + " but dim Gr = " +
                       std::to_string(2 * (n - 1)) + "; the line count is not finite");
  }
  SchubertClass c = SchubertClass::basis(n + 1, 0, 0);
  for (int d : degrees) c = class_mul(c, lines_incidence_class(d, n + 1));
  return c.coefficient(n - 1, n - 1);
}

BigInt ci_euler(const std::vector<int>& degrees, int n) {
  const int k = static_cast<int>(degrees.size());
  const int dim = n - k;
  if (dim < 0) throw InvalidInput("more equations than the ambient dimension");
  // Total Chern class (1+h)^(n+1) / prod(1 + d h), truncated at h^dim.
  std::vector<BigInt> c(dim + 1);
  BigInt binom = 1;
  for (int j = 0; j <= dim; ++j) {
    c[j] = binom;
    binom = binom * (n + 1 - j) / (j + 1);
  }
  BigInt deg = 1;
  for (int d : degrees) {
    if (d < 1) throw InvalidInput("degrees must be positive");
    deg *= d;
    for (int j = 1; j <= dim; ++j) c[j] -= d * c[j - 1];
  }
  return deg * c[dim];
}

std::array<int, 6> GroupElement::exponents() const {
  auto m9 = [](int v) { return ((v % 9) + 9) % 9; };
  return {m9(3 * alpha + mu), m9(3 * beta + mu), m9(mu),
          m9(-3 * delta - mu), m9(-3 * epsilon - mu), m9(-mu)};
}

bool GroupElement::is_identity() const {
  return alpha == 0 && beta == 0 && delta == 0 && epsilon == 0 && mu == 0;
}

std::string GroupElement::to_string() const {
  return "g(" + std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(delta) +
         "," + std::to_string(epsilon) + "," + std::to_string(mu) + ")";
}

std::vector<GroupElement> enumerate_group() {
  std::vector<GroupElement> g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d)
        for (int e = 0; e < 3; ++e)
          for (int mu = 0; mu < 9; ++mu) {
            if ((a + b) % 3 == mu % 3 && (d + e) % 3 == mu % 3) g.push_back({a, b, d, e, mu});
          }
  if (g.size() != 81) throw VerificationFailure("group_check", "group order " + std::to_string(g.size()));

  std::set<std::array<int, 6>> exact, projective;
  for (const auto& x : g) {
    auto e = x.exponents();
    exact.insert(e);
    std::array<int, 6> shifted{};
    for (int i = 0; i < 6; ++i) shifted[i] = (e[i] - e[0] + 9) % 9;
    projective.insert(shifted);
  }
  if (projective.size() != 81) {
    throw VerificationFailure("group_check", "two elements act by proportional matrices");
  }
  for (const auto& x : g) {
    for (const auto& y : g) {
      auto ex = x.exponents(), ey = y.exponents();
      std::array<int, 6> s{};
      for (int i = 0; i < 6; ++i) s[i] = (ex[i] + ey[i]) % 9;
      if (!exact.count(s)) {
        throw VerificationFailure("group_check", x.to_string() + " * " + y.to_string() + " not in the group");
      }
    }
  }
  // Each Q_i must pick up a single scalar: every monomial gets the same weight.
  const auto fam = build_family(BigRational(1));
  for (const auto& x : g) {
    const auto e = x.exponents();
    for (const QPoly* q : {&fam.q1, &fam.q2}) {
      std::set<int> weights;
      for (const auto& t : q->terms()) {
        int w = 0;
        for (int i = 0; i < 6; ++i) w += e[i] * t.mono.exponent(i);
        weights.insert(w % 9);
      }
      if (weights.size() != 1) {
        throw VerificationFailure("group_check", x.to_string() + " does not preserve a cubic");
      }
    }
  }
  return g;
}

FixedComponent classify_support(std::vector<int> support) {
  std::sort(support.begin(), support.end());
  FixedComponent c;
  c.support = support;
  int na = 0, nb = 0;
  for (int i : support) (i < 3 ? na : nb) += 1;
  // On the subspace, Q1 keeps the Fermat terms of x1..x3 present and keeps
  // -3 lam x4x5x6 only if nb == 3; symmetrically for Q2.
  auto points = [&](int k) {
    c.dimension = 0;
    c.points = k;
    c.euler = k;
  };
  if (na == 3 && nb == 3) {
    c.dimension = 3;
    c.euler = ci_euler({3, 3}, 5);
  } else if ((na == 3 && nb == 1) || (na == 1 && nb == 3)) {
    // Two cubic surfaces in P^3.
    c.dimension = 1;
    c.euler = ci_euler({3, 3}, 3);
  } else if ((na == 3 && nb == 0) || (na == 0 && nb == 3)) {
    // Fermat plane cubic meeting x_i x_j x_k = 0: three points per line.
    points(9);
  } else if ((na == 2 && nb == 0) || (na == 0 && nb == 2) || (na == 2 && nb == 1) ||
             (na == 1 && nb == 2)) {
    // A lone variable must vanish; a binary Fermat cubic has 3 roots.
    points(3);
  } else if (na + nb == 0 || (na <= 1 && nb <= 1)) {
    c.dimension = -1;
    c.euler = 0;
  } else {
    throw VerificationFailure("unclassifiable", "fixed subspace with " + std::to_string(na) +
                                                    " + " + std::to_string(nb) + " coordinates");
  }
  return c;
}

int FixedLocusReport::dimension() const {
  int d = -1;
  for (const auto& c : components) d = std::max(d, c.dimension);
  return d;
}

BigInt FixedLocusReport::euler() const {
  BigInt s = 0;
  for (const auto& c : components) s += c.euler;
  return s;
}

int FixedLocusReport::points() const {
  int s = 0;
  for (const auto& c : components) s += c.points;
  return s;
}

FixedLocusReport common_fixed_locus(std::span<const GroupElement> gs) {
  // Projective fixed points of commuting diagonal maps: coordinates sharing
  // an eigenvalue under every map span one fixed subspace.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> key;
    for (const auto& g : gs) key.push_back(g.exponents()[i]);
    groups[key].push_back(i);
  }
  FixedLocusReport r;
  if (!gs.empty()) r.element = gs.front();
  for (const auto& [key, support] : groups) {
    auto c = classify_support(support);
    if (c.dimension >= 0) r.components.push_back(std::move(c));
  }
  return r;
}

FixedLocusReport fixed_locus(const GroupElement& g) {
  return common_fixed_locus(std::span<const GroupElement>(&g, 1));
}

OrbifoldReport orbifold_euler() {
  const auto group = enumerate_group();
  const BigRational order(static_cast<long>(group.size()));
  OrbifoldReport r;
  r.chi_v = ci_euler({3, 3}, 5);
  BigRational fixed_sum = 0;
  for (const auto& g : group) {
    const auto loc = fixed_locus(g);
    fixed_sum += BigRational(loc.euler());
    if (g.is_identity()) continue;
    const int dim = loc.dimension();
    if (dim == 1) {
      ++r.curve_elements;
    } else if (dim == 0) {
      ++r.point_elements[loc.points()];
      r.total_fixed_points += loc.points();
    } else if (dim < 0) {
      ++r.empty_elements;
      continue;
    } else {
      throw VerificationFailure("unclassifiable", g.to_string() + " fixes a surface");
    }
    // chi(V^g / G) = (1/|G|) sum_h chi((V^g)^h).
    BigRational q = 0;
    for (const auto& h : group) {
      const std::array<GroupElement, 2> pair{g, h};
      q += BigRational(common_fixed_locus(pair).euler());
    }
    q /= order;
    if (q.get_den() != 1) {
      throw VerificationFailure("census_mismatch", "non-integral quotient Euler characteristic for " +
                                                       g.to_string());
    }
    (dim == 1 ? r.curve_quotient_sum : r.point_quotient_sum) += q;
  }
  r.identity_term = fixed_sum / order;
  r.total = r.identity_term + r.curve_quotient_sum + r.point_quotient_sum;
  // Counts that the averaging formula for the identity term relies on.
  if (r.curve_elements != 12 || r.total_fixed_points != 360 || sgn(r.identity_term) != 0) {
    throw VerificationFailure("census_mismatch",
                              "curve elements " + std::to_string(r.curve_elements) +
                                  ", fixed points " + r.total_fixed_points.get_str() +
                                  ", identity term " + to_string(r.identity_term));
  }
  if (r.total != BigRational(-r.chi_v)) {
    throw VerificationFailure("mirror_test_failed",
                              "orbifold Euler characteristic " + to_string(r.total) +
                                  " is not -chi(V) = " + BigInt(-r.chi_v).get_str());
  }
  return r;
}

}  // namespace pfm
