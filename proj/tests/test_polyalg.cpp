#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pfmirror/polyalg.hpp"

using namespace pfm;

namespace {

constexpr std::uint64_t P = 10007;

FieldElement fe(std::int64_t v) { return FieldElement::from_int(v, P); }

FpPoly x(int i) { return FpPoly::term(Monomial::var(i), fe(1)); }

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("multiplication") {
  const FpPoly s = x(0) + x(1);
  const FpPoly expect = FpPoly::term(Monomial::var(0, 2), fe(1)) +
                        FpPoly::term(Monomial::var(0) * Monomial::var(1), fe(2)) +
                        FpPoly::term(Monomial::var(1, 2), fe(1));
  CHECK(s * s == expect);
  CHECK(s * FpPoly::constant(fe(1)) == s);
  CHECK((s * FpPoly()).is_zero());
}

TEST_CASE("Euler identity for Q1 Q2") {
  const auto fam = build_family(fe(1));
  const FpPoly f = fam.q1 * fam.q2;
  FpPoly lhs;
  for (int i = 0; i < kNumVars; ++i) lhs += x(i) * f.derivative(i);
  CHECK(lhs == f.scaled(fe(6)));
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 6);
}

TEST_CASE("family at lambda = 0 and lambda = 1") {
  const auto f0 = build_family(fe(0));
  for (int i = 0; i < 3; ++i) CHECK(f0.j1[i] == FpPoly::term(Monomial::var(i, 2), fe(3)));
  for (int i = 3; i < 6; ++i) CHECK(f0.j1[i].is_zero());

  const auto f1 = build_family(fe(1));
  CHECK(f1.q1.coefficient(product_of_vars({3, 4, 5})) == fe(-3));
  CHECK(f1.q2.coefficient(product_of_vars({0, 1, 2})) == fe(-3));

  const auto fq = build_family(BigRational(2, 7));
  CHECK(fq.q1.coefficient(product_of_vars({3, 4, 5})) == BigRational(-6, 7));
}

TEST_CASE("Euler identity for the gradient rows") {
  for (std::int64_t lam : {0, 1, 5, 9999}) {
    const auto fam = build_family(fe(lam));
    FpPoly s1, s2;
    for (int i = 0; i < kNumVars; ++i) {
      s1 += x(i) * fam.j1[i];
      s2 += x(i) * fam.j2[i];
    }
    CHECK(s1 == fam.q1.scaled(fe(3)));
    CHECK(s2 == fam.q2.scaled(fe(3)));
  }
}

TEST_CASE("divergence") {
  FpVector a(6);
  a[0] = FpPoly::term(Monomial::var(0, 2), fe(1));
  CHECK(divergence(a) == x(0).scaled(fe(2)));

  const auto fam = build_family(fe(0));
  CHECK(divergence(fam.j1) == (x(0) + x(1) + x(2)).scaled(fe(6)));
  CHECK(divergence(FpVector(6)).is_zero());
  CHECK_THROWS_AS(divergence(FpVector(5)), InvalidInput);
}

TEST_CASE("Leibniz rule for divergence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const FpPoly f = oracle::random_poly(rng, 2, P);
    FpVector a(6);
    for (auto& c : a) c = oracle::random_poly(rng, 3, P, 3);
    FpVector fa(6);
    FpPoly rhs = f * divergence(a);
    for (int k = 0; k < 6; ++k) {
      fa[k] = f * a[k];
      rhs += f.derivative(k) * a[k];
    }
    CHECK(divergence(fa) == rhs);
  }
}

TEST_CASE("homogeneity is preserved") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FpPoly f = oracle::random_poly(rng, 2, P);
    const FpPoly g = oracle::random_poly(rng, 4, P);
    const FpPoly h = f * g;
    if (h.is_zero()) continue;
    CHECK(h.is_homogeneous());
    CHECK(h.degree() == 6);
  }
  FpVector v = {x(0), x(1) * x(2)};
  CHECK_THROWS_AS(vector_degree(v), InvalidInput);
  CHECK(vector_degree(FpVector(3)) == -1);
}

TEST_CASE("monomial enumeration") {
  const int binom[] = {1, 6, 21, 56, 126, 252, 462};
  for (int d = 0; d <= 6; ++d) {
    const auto& ms = monomials_of_degree(d);
    CHECK(ms.size() == static_cast<std::size_t>(binom[d]));
    CHECK(graded_dimension(d) == static_cast<std::size_t>(binom[d]));
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(ms[i].degree() == d);
      CHECK(monomial_rank(ms[i]) == i);
      seen.insert(ms[i].bits());
    }
    CHECK(seen.size() == ms.size());
  }
  CHECK(graded_dimension(12) == 6188);
}

TEST_CASE("degrevlex with x1 > ... > x6") {
  // Same degree: the smaller power of the last variable wins.
  const Monomial a = Monomial({1, 0, 0, 0, 0, 1});
  const Monomial b = Monomial({0, 1, 1, 0, 0, 0});
  CHECK(a < b);
  CHECK(Monomial::var(5) < Monomial::var(0));
  CHECK(Monomial::var(0) < Monomial::var(0, 2));
  const auto& ms = monomials_of_degree(3);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i] < ms[i - 1]);
}

TEST_CASE("divisibility and lcm") {
  const Monomial a({2, 0, 1, 0, 0, 0});
  const Monomial b({3, 1, 1, 0, 0, 2});
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(a * a.quotient_of(b) == b);
  CHECK(a.lcm(Monomial({0, 4, 0, 0, 0, 0})) == Monomial({2, 4, 1, 0, 0, 0}));
}

TEST_CASE("reduction of rational polynomials") {
  const QPoly f = QPoly::term(Monomial::var(0), oracle::frac(1, 3));
  const FpPoly g = reduce_mod(f, P);
  CHECK(g.coefficient(Monomial::var(0)) * fe(3) == fe(1));
}

}
