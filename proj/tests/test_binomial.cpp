#include <gwnb/binomial.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace gwnb;

TEST_CASE("binomial basics") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, 5) == 1);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(20, 10) == 184756);
  CHECK(binom(60, 30) == 118264581564861424LL);
  CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("generalized rows at -1 and -2") {
  CHECK(binom(-1, 0) == 1);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-1, 4) == 1);
  CHECK(binom(-2, 0) == 1);
  CHECK(binom(-2, 1) == -2);
  CHECK(binom(-2, 2) == 3);
  CHECK(binom(-2, 3) == -4);
  CHECK(binom(-1, -1) == 0);
  CHECK(binom(-2, -2) == 0);
  CHECK_THROWS_AS(binom(-3, 0), std::domain_error);
}

TEST_CASE("Pascal's rule holds on the whole supported lattice") {
  for (long long n = -1; n <= 14; ++n)
    for (long long k = 0; k <= 16; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
}

TEST_CASE("symmetry on the non-negative lattice") {
  for (long long n = 0; n <= 12; ++n)
    for (long long k = 0; k <= n; ++k) CHECK(binom(n, k) == binom(n, n - k));
}
