#include <catch2/catch_amalgamated.hpp>

#include <gwnb/mobius.hpp>
#include <gwnb/params.hpp>
#include <gwnb/pgf.hpp>

#include <cmath>
#include <cstdint>
#include <random>

using gwnb::BigRat;
using gwnb::MobiusMap;
using gwnb::ParamsD;
using gwnb::ParamsQ;

TEST_CASE("map entries and first iterates at r=2, zeta=1/2", "[mobius]") {
  auto p = gwnb::make_params(2, BigRat(1, 2));
  auto m = gwnb::mobius_from_params(p);
  CHECK(m(BigRat(0)) == BigRat(2, 11));
  CHECK(m(m(BigRat(0))) == BigRat(8, 35));
  m.normalize();
  CHECK(m.a == 1);
  CHECK(m.b == 2);
  CHECK(m.c == -8);
  CHECK(m.d == 11);
}

TEST_CASE("map agrees with the direct pgf formula", "[mobius]") {
  auto p = gwnb::make_params(3, BigRat(2, 5));
  auto m = gwnb::mobius_from_params(p);
  for (int i = 0; i <= 10; ++i) {
    BigRat x(i, 10);
    CHECK(m(x) == gwnb::phi_fl(p, x));
  }
}

TEST_CASE("fixed points at zeta^r and 1", "[mobius]") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + static_cast<int>(eng() % 11);
    const int num = 1 + static_cast<int>(eng() % 98);
    auto p = gwnb::make_params(r, BigRat(num, 100));
    auto m = gwnb::mobius_from_params(p);
    CHECK(m(gwnb::p_inf(p)) == gwnb::p_inf(p));
    CHECK(m(BigRat(1)) == BigRat(1));
  }
}

TEST_CASE("matrix power equals sequential composition, exact", "[mobius]") {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + static_cast<int>(eng() % 11);
    const int num = 1 + static_cast<int>(eng() % 98);
    auto p = gwnb::make_params(r, BigRat(num, 100));
    const BigRat a = gwnb::iterate_fl(p, 50, BigRat(0));
    const BigRat b = gwnb::iterate_fl_sequential(p, 50, BigRat(0));
    CHECK(a == b);
  }
}

TEST_CASE("matrix power equals sequential composition, float", "[mobius]") {
  std::mt19937_64 eng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + static_cast<int>(eng() % 11);
    const double zeta = 0.01 * (1 + static_cast<int>(eng() % 98));
    auto p = gwnb::make_params(r, zeta);
    const double a = gwnb::iterate_fl(p, 50, 0.0);
    const double b = gwnb::iterate_fl_sequential(p, 50, 0.0);
    CHECK(std::abs(a - b) < 1e-12);
  }
}

TEST_CASE("zero iterations is the identity", "[mobius]") {
  auto p = gwnb::make_params(2, BigRat(1, 2));
  CHECK(gwnb::iterate_fl(p, 0, BigRat(3, 7)) == BigRat(3, 7));
}

TEST_CASE("pole detection", "[mobius]") {
  auto p = gwnb::make_params(2, BigRat(1, 2));
  auto m = gwnb::mobius_from_params(p);
  // c x + d = 0 at x = 11/8 for these parameters
  CHECK_THROWS_AS(m(BigRat(11, 8)), std::domain_error);
}

TEST_CASE("composition is associative under the action", "[mobius]") {
  auto p = gwnb::make_params(4, BigRat(3, 10));
  auto m = gwnb::mobius_from_params(p);
  const BigRat x(1, 3);
  CHECK(((m * m) * m)(x) == (m * (m * m))(x));
  CHECK((m * m)(x) == m(m(x)));
  auto m3 = m.pow(3);
  CHECK(m3(x) == m(m(m(x))));
}

TEST_CASE("iterates increase to the extinction probability", "[mobius]") {
  auto p = gwnb::make_params(3, 0.7);
  const double limit = gwnb::p_inf(p);
  double prev = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double v = gwnb::iterate_fl(p, static_cast<std::uint64_t>(n), 0.0);
    CHECK(v > prev - 1e-15);
    CHECK(v < limit + 1e-12);
    prev = v;
  }
  CHECK(std::abs(prev - limit) < 1e-6);
}
