#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pfmirror/enumgeo.hpp"
#include "pfmirror/mirrorseries.hpp"

using namespace pfm;

namespace {

using Poly2 = std::vector<std::vector<BigInt>>;  // c[i][j] x1^i x2^j

Poly2 mul2(const Poly2& a, const Poly2& b) {
  Poly2 c(a.size() + b.size() - 1, std::vector<BigInt>(a[0].size() + b[0].size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].size(); ++l) c[i + k][j + l] += a[i][j] * b[k][l];
  return c;
}

Poly2 linear(long u, long v) { return {{0, v}, {u, 0}}; }

// Integral over Gr(2, m) of f(x1, x2) in the Chern roots of the dual
// tautological bundle: (1/2) [x1^(m-1) x2^(m-1)] f * (x1-x2)(x2-x1).
BigInt grassmann_integral(const Poly2& f, int m) {
  const Poly2 vdm = mul2(linear(1, -1), linear(-1, 1));
  const Poly2 g = mul2(f, vdm);
  const std::size_t e = static_cast<std::size_t>(m - 1);
  if (g.size() <= e || g[e].size() <= e) return 0;
  return g[e][e] / 2;
}

// Lines on a complete intersection: integrate prod_d prod_i (i x1 + (d-i) x2).
BigInt lines_oracle(const std::vector<int>& degrees, int n) {
  Poly2 f = {{1}};
  for (int d : degrees)
    for (int i = 0; i <= d; ++i) f = mul2(f, linear(i, d - i));
  return grassmann_integral(f, n + 1);
}

// Repeated Pieri for sigma_1 on partitions in a 2 x (m-2) box.
BigInt sigma1_power_degree(int m) {
  std::map<std::pair<int, int>, BigInt> cur = {{{0, 0}, 1}};
  for (int step = 0; step < 2 * (m - 2); ++step) {
    std::map<std::pair<int, int>, BigInt> nxt;
    for (const auto& [ab, c] : cur) {
      const auto [a, b] = ab;
      if (a + 1 <= m - 2) nxt[{a + 1, b}] += c;
      if (b + 1 <= a) nxt[{a, b + 1}] += c;
    }
    cur = nxt;
  }
  return cur[{m - 2, m - 2}];
}

SchubertClass s(int m, int a, int b) { return SchubertClass::basis(m, a, b); }

SchubertClass random_class(std::mt19937_64& rng, int m) {
  SchubertClass c(m);
  for (int a = 0; a <= m - 2; ++a)
    for (int b = 0; b <= a; ++b) c.add(a, b, static_cast<long>(rng() % 7) - 3);
  return c;
}

std::array<int, 6> projective(std::array<int, 6> e) {
  const int base = e[0];
  for (auto& x : e) x = (x - base + 9) % 9;
  return e;
}

}  // namespace

TEST_SUITE("enumgeo") {

TEST_CASE("Pieri on Gr(2,4) and Gr(2,8)") {
  CHECK(class_mul(s(4, 1, 0), s(4, 1, 0)) == s(4, 2, 0) + s(4, 1, 1));
  auto p = s(4, 0, 0);
  for (int i = 0; i < 4; ++i) p = class_mul(p, s(4, 1, 0));
  CHECK(p == s(4, 2, 2).scaled(2));
  CHECK(class_mul(s(8, 1, 1), s(8, 1, 0)) == s(8, 2, 1));
  CHECK(class_mul(s(4, 2, 2), s(4, 1, 0)).is_zero());
  CHECK_THROWS_AS(class_mul(s(4, 1, 0), s(5, 1, 0)), DomainMismatch);
  CHECK_THROWS_AS(s(4, 3, 0), InvalidInput);
}

TEST_CASE("degree of the Grassmannian") {
  for (int m = 3; m <= 7; ++m) {
    auto p = s(m, 0, 0);
    for (int i = 0; i < 2 * (m - 2); ++i) p = class_mul(p, s(m, 1, 0));
    CHECK(p.coefficient(m - 2, m - 2) == sigma1_power_degree(m));
  }
  CHECK(sigma1_power_degree(5) == 5);
}

TEST_CASE("Schubert ring axioms on Gr(2,6)") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_class(rng, 6), y = random_class(rng, 6), z = random_class(rng, 6);
    CHECK(class_mul(x, y) == class_mul(y, x));
    CHECK(class_mul(class_mul(x, y), z) == class_mul(x, class_mul(y, z)));
    auto yz = y;
    yz += z;
    auto sum = class_mul(x, y);
    sum += class_mul(x, z);
    CHECK(class_mul(x, yz) == sum);
  }
}

TEST_CASE("Poincare duality") {
  for (int m = 4; m <= 8; ++m) {
    const int k = m - 2;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= c; ++d) {
            if (a + b + c + d != 2 * k) continue;
            const auto prod = class_mul(s(m, a, b), s(m, c, d));
            const bool dual = (c == k - b && d == k - a);
            CHECK(prod == (dual ? s(m, k, k) : SchubertClass(m)));
          }
  }
}

TEST_CASE("incidence classes of lines on hypersurfaces") {
  CHECK(lines_incidence_class(2, 8) == s(8, 2, 1).scaled(4));
  CHECK(sigma_to_omega(2, 1, 7) == std::make_pair(4, 6));

  auto cubic = s(7, 3, 1).scaled(18);
  cubic += s(7, 2, 2).scaled(27);
  CHECK(lines_incidence_class(3, 7) == cubic);
  CHECK(sigma_to_omega(3, 1, 6) == std::make_pair(2, 5));
  CHECK(sigma_to_omega(2, 2, 6) == std::make_pair(3, 4));
  CHECK(cubic.to_string() == "18*s(3,1) + 27*s(2,2)");

  CHECK(lines_incidence_class(2, 7) == s(7, 2, 1).scaled(4));
  CHECK(sigma_to_omega(2, 1, 6) == std::make_pair(3, 5));

  for (int d = 1; d <= 6; ++d) {
    const auto c = lines_incidence_class(d, 10);
    CHECK_FALSE(c.is_zero());
    for (const auto& [ab, coeff] : c.coeffs()) {
      CHECK(ab.first + ab.second == d + 1);
      CHECK(ab.second >= 1);
      CHECK(coeff % (d * d) == 0);
    }
  }
  CHECK_THROWS_AS(lines_incidence_class(5, 4), InvalidInput);
}

TEST_CASE("line counts") {
  CHECK(line_count({2, 2, 2, 2}, 7) == 512);
  CHECK(line_count({2, 2, 3}, 6) == 720);
  CHECK(line_count({3, 3}, 5) == 1053);
  CHECK(line_count({2, 4}, 5) == 1280);
  CHECK(line_count({5}, 4) == 2875);
  CHECK(lines_oracle({5}, 4) == 2875);
  CHECK(lines_oracle({2, 2, 2, 2}, 7) == 512);
  for (const auto& h : hg_presets()) {
    CAPTURE(h.label);
    CHECK(line_count(h.degrees, h.ambient_dim) == lines_oracle(h.degrees, h.ambient_dim));
    CHECK(line_count(h.degrees, h.ambient_dim) == compute_yukawa(h, 1).instantons.n.at(1));
  }
  // Lines on a cubic surface.
  CHECK(line_count({3}, 3) == 27);
  CHECK_THROWS_AS(line_count({3, 3}, 6), InvalidInput);
}

TEST_CASE("Euler characteristics of complete intersections") {
  CHECK(ci_euler({3, 3}, 5) == -144);
  CHECK(ci_euler({3, 3}, 3) == -18);
  CHECK(ci_euler({}, 1) == 2);
  CHECK(ci_euler({5}, 4) == -200);
  CHECK(ci_euler({2, 2, 2, 2}, 7) == -128);
  CHECK(ci_euler({2, 2, 3}, 6) == -144);
  CHECK(ci_euler({2, 4}, 5) == -176);
  CHECK(ci_euler({3}, 2) == 0);
  CHECK(ci_euler({3}, 3) == 9);
}

TEST_CASE("the symmetry group") {
  const auto g = enumerate_group();
  CHECK(g.size() == 81);
  CHECK(std::count_if(g.begin(), g.end(), [](const auto& x) { return x.is_identity(); }) == 1);
  for (const auto& x : g) {
    const auto e = x.exponents();
    // Weights of x1^3, x2^3, x3^3, x4x5x6 and of x4^3, x5^3, x6^3, x1x2x3.
    CHECK((3 * e[0]) % 9 == (3 * e[1]) % 9);
    CHECK((3 * e[1]) % 9 == (3 * e[2]) % 9);
    CHECK((3 * e[2]) % 9 == (e[3] + e[4] + e[5]) % 9);
    CHECK((3 * e[3]) % 9 == (3 * e[4]) % 9);
    CHECK((3 * e[4]) % 9 == (3 * e[5]) % 9);
    CHECK((3 * e[5]) % 9 == (e[0] + e[1] + e[2]) % 9);
  }
}

TEST_CASE("fixed loci") {
  const auto id = fixed_locus(GroupElement{});
  REQUIRE(id.components.size() == 1);
  CHECK(id.dimension() == 3);
  CHECK(id.euler() == -144);

  // Elements fixing the curve x1 = x2 = 0 pointwise.
  int stabilizer = 0;
  for (const auto& x : enumerate_group()) {
    const auto e = x.exponents();
    if (e[2] != e[3] || e[3] != e[4] || e[4] != e[5]) continue;
    ++stabilizer;
    if (x.is_identity()) continue;
    const auto loc = fixed_locus(x);
    CHECK(loc.dimension() == 1);
    bool found = false;
    for (const auto& c : loc.components) {
      if (c.support == std::vector<int>{2, 3, 4, 5}) {
        found = true;
        CHECK(c.dimension == 1);
        CHECK(c.euler == -18);
      }
    }
    CHECK(found);
  }
  CHECK(stabilizer == 3);

  CHECK_THROWS_AS(classify_support({0, 1, 3, 4}), VerificationFailure);
  CHECK(classify_support({0, 3}).dimension == -1);
  CHECK(classify_support({0, 1, 2}).points == 9);
  CHECK(classify_support({0, 1}).points == 3);
}

TEST_CASE("stabilizers") {
  const auto g = enumerate_group();
  std::set<std::array<int, 6>> classes;
  for (const auto& x : g) classes.insert(projective(x.exponents()));
  CHECK(classes.size() == 81);

  // Every curve x_i = x_j = 0 inside one coordinate triple has a stabilizer of order 3.
  const std::vector<std::vector<int>> curves = {{2, 3, 4, 5}, {1, 3, 4, 5}, {0, 3, 4, 5},
                                                {0, 1, 2, 5}, {0, 1, 2, 4}, {0, 1, 2, 3}};
  for (const auto& support : curves) {
    int count = 0;
    for (const auto& x : g) {
      const auto e = x.exponents();
      bool fixes = true;
      for (int i : support) fixes = fixes && e[i] == e[support[0]];
      count += fixes;
    }
    CHECK(count == 3);
  }

  // Points with x3 = x4 = x5 = x6 = 0 and x1^3 + x2^3 = 0.
  int order = 0, curve = 0, other = 0;
  for (const auto& x : g) {
    const auto e = x.exponents();
    if (e[0] != e[1]) continue;
    ++order;
    if (x.is_identity()) continue;
    (fixed_locus(x).dimension() == 1 ? curve : other) += 1;
  }
  CHECK(order == 27);
  CHECK(curve == 6);
  CHECK(other == 20);
}

TEST_CASE("census of fixed loci") {
  const auto r = orbifold_euler();
  CHECK(r.chi_v == -144);
  CHECK(r.curve_elements == 12);
  CHECK(r.point_elements == std::map<int, int>{{6, 54}, {18, 2}});
  CHECK(r.empty_elements == 12);
  CHECK(r.total_fixed_points == 360);
  CHECK(r.identity_term == 0);
  CHECK(BigRational(-144 + 360 + 12 * (-18)) / 81 == 0);
}

TEST_CASE("orbifold Euler characteristic") {
  const auto r = orbifold_euler();
  CHECK(r.curve_quotient_sum == 24);
  CHECK(r.point_quotient_sum == 120);
  CHECK(r.total == 144);
  CHECK(r.total == BigRational(-r.chi_v));
}

}
