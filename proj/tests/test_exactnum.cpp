#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pfmirror/exactnum.hpp"

using namespace pfm;

TEST_SUITE("exactnum") {

TEST_CASE("crt small cases") {
  std::vector<Residue> rs = {{2, 5}, {3, 7}};
  auto r = crt_combine(rs);
  CHECK(r.value == 17);
  CHECK(r.modulus == 35);

  std::vector<Residue> zero = {{0, 5}, {0, 7}};
  r = crt_combine(zero);
  CHECK(r.value == 0);
  CHECK(r.modulus == 35);
}

TEST_CASE("crt of 1/81 matches the extended Euclid inverse") {
  const BigInt p1 = 2147483647, p2 = 2147483629;
  std::vector<Residue> rs = {{oracle::inverse(81, p1), p1}, {oracle::inverse(81, p2), p2}};
  auto r = crt_combine(rs);
  CHECK(r.modulus == p1 * p2);
  CHECK(BigInt(81 * r.value % r.modulus) == 1);
  CHECK(r.value == oracle::inverse(81, p1 * p2));
}

TEST_CASE("crt does not depend on ordering") {
  std::vector<Residue> rs = {{4, 10007}, {77, 10009}, {12345, 65537}};
  const auto ref = crt_combine(rs);
  std::sort(rs.begin(), rs.end(), [](const Residue& a, const Residue& b) { return a.prime < b.prime; });
  do {
    auto r = crt_combine(rs);
    CHECK(r.value == ref.value);
    CHECK(r.modulus == ref.modulus);
  } while (std::next_permutation(rs.begin(), rs.end(),
                                 [](const Residue& a, const Residue& b) { return a.prime < b.prime; }));
}

TEST_CASE("crt rejects a repeated modulus") {
  std::vector<Residue> rs = {{1, 10007}, {2, 10007}};
  CHECK_THROWS_AS(crt_combine(rs), Error);
}

TEST_CASE("rational reconstruction examples") {
  auto q = rational_reconstruct(12, 35);
  REQUIRE(q);
  CHECK(*q == oracle::frac(1, 3));
  CHECK(BigInt(3 * 12 % 35) == 1);

  q = rational_reconstruct(0, BigInt(1000003));
  REQUIRE(q);
  CHECK(*q == 0);

  q = rational_reconstruct(5, 10007);
  REQUIRE(q);
  CHECK(*q == 5);
}

TEST_CASE("rational reconstruction fails without a small preimage") {
  // 1/81 needs a modulus above 2 * 81^2.
  const BigInt m = 10007;
  const BigInt r = oracle::inverse(81, m);
  CHECK_FALSE(rational_reconstruct(r, m).has_value());
}

TEST_CASE("crt plus reconstruction round trip") {
  std::mt19937_64 rng(7);
  const std::vector<std::uint64_t> primes = {10007, 65537};
  for (int trial = 0; trial < 400; ++trial) {
    long n = static_cast<long>(rng() % 20001) - 10000;
    long d = static_cast<long>(rng() % 10000) + 1;
    const BigRational x = oracle::frac(n, d);
    std::vector<Residue> rs;
    for (auto p : primes) {
      const BigInt den = oracle::inverse(BigInt(x.get_den()), p);
      BigInt res = BigInt(x.get_num()) * den % BigInt(p);
      if (res < 0) res += p;
      rs.push_back({res, p});
    }
    const auto c = crt_combine(rs);
    auto back = rational_reconstruct(c.value, c.modulus);
    REQUIRE(back);
    CHECK(*back == x);
  }
}

TEST_CASE("field inverses") {
  for (std::uint64_t p : {10007ULL, 65537ULL}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      FieldElement x(a, p);
      if ((x * x.inverse()).value() != 1) FAIL("bad inverse of " << a << " mod " << p);
    }
    CHECK_THROWS_AS(FieldElement(0, p).inverse(), Error);
  }
  const std::uint64_t big = 4611686018427387847ULL;
  FieldElement x(123456789123ULL, big);
  CHECK((x * x.inverse()).value() == 1);
}

TEST_CASE("field elements over different primes do not mix") {
  CHECK_THROWS_AS(FieldElement(1, 10007) + FieldElement(1, 10009), DomainMismatch);
}

TEST_CASE("from_rational agrees with the oracle inverse") {
  const std::uint64_t p = 2147483647;
  const auto x = FieldElement::from_rational(oracle::frac(-65, 216), p);
  BigInt expect = BigInt(-65) * oracle::inverse(216, p) % BigInt(p);
  if (expect < 0) expect += p;
  CHECK(BigInt(static_cast<unsigned long>(x.value())) == expect);
}

TEST_CASE("vetted primes are admissible") {
  for (auto p : vetted_primes()) {
    CHECK(is_prime_u64(p));
    CHECK(is_admissible_prime(p));
  }
  CHECK_FALSE(is_admissible_prime(10037 * 3));
  CHECK_FALSE(is_admissible_prime(7));
}

TEST_CASE("decimal strings") {
  CHECK(to_string(oracle::frac(-7, 3)) == "-7/3");
  CHECK(to_string(BigRational(5)) == "5");
  CHECK(to_string(BigInt("3110686153486233022944")) == "3110686153486233022944");
}

}
