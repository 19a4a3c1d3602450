#include <catch2/catch_amalgamated.hpp>

#include <gwnb/params.hpp>
#include <gwnb/pgf.hpp>

#include <cmath>
#include <stdexcept>

using gwnb::BigRat;
using gwnb::ParamsD;
using gwnb::ParamsQ;

namespace {
ParamsQ half2() { return gwnb::make_params(2, BigRat(1, 2)); }
}  // namespace

TEST_CASE("derived parameters at r=2, zeta=1/2", "[pgf]") {
  auto p = half2();
  CHECK(gwnb::p_inf(p) == BigRat(1, 4));
  CHECK(gwnb::zhat(p) == BigRat(3, 2));
  CHECK(gwnb::nb_success(p) == BigRat(3, 7));
  CHECK(gwnb::mean_offspring(p) == BigRat(8, 3));
  CHECK(gwnb::supercritical(p));
}

TEST_CASE("parameter validation", "[pgf]") {
  CHECK_THROWS_AS(gwnb::make_params(1, BigRat(1, 2)), std::domain_error);
  CHECK_THROWS_AS(gwnb::make_params(2, BigRat(0)), std::domain_error);
  CHECK_THROWS_AS(gwnb::make_params(2, BigRat(1)), std::domain_error);
  CHECK_THROWS_AS(gwnb::make_params(3, BigRat(7, 5)), std::domain_error);
}

TEST_CASE("worked rational values at r=2, zeta=1/2", "[pgf]") {
  auto p = half2();
  CHECK(gwnb::y_of_x(p, BigRat(0)) == BigRat(1, 6));
  CHECK(gwnb::y_of_x(p, BigRat(1)) == BigRat(-1, 2));
  CHECK(gwnb::phi_nb(p, BigRat(0)) == BigRat(9, 49));
  CHECK(gwnb::phi_fl(p, BigRat(0)) == BigRat(2, 11));
  CHECK(gwnb::phi_nb(p, BigRat(0)) - gwnb::phi_fl(p, BigRat(0)) ==
        BigRat(1, 539));
  CHECK(gwnb::f_nb(p, BigRat(0)) == BigRat(1, 72));
  CHECK(gwnb::g_nb(p, BigRat(1, 6)) == BigRat(1, 27));
  CHECK(gwnb::phi_nb(p, BigRat(1, 3)) == BigRat(81, 289));
  CHECK(gwnb::phi_fl(p, BigRat(1, 3)) == BigRat(7, 25));
  CHECK(gwnb::phi_nb(p, BigRat(1)) == 1);
  CHECK(gwnb::phi_fl(p, BigRat(1)) == 1);
  CHECK(gwnb::phi_nb(p, gwnb::p_inf(p)) == gwnb::p_inf(p));
  CHECK(gwnb::phi_fl(p, gwnb::p_inf(p)) == gwnb::p_inf(p));
}

TEST_CASE("standard-form pgf agrees with the shifted form", "[pgf]") {
  auto p = gwnb::make_params(3, BigRat(2, 5));
  for (int i = 0; i <= 10; ++i) {
    BigRat x(i, 10);
    CHECK(gwnb::phi_nb_standard(p, x) == gwnb::phi_nb(p, x));
  }
  auto pd = gwnb::to_double_params(p);
  CHECK(gwnb::phi_nb_standard(pd, 0.37) ==
        Catch::Approx(gwnb::phi_nb(pd, 0.37)).epsilon(1e-13));
}

TEST_CASE("series coefficients of the correction term", "[pgf]") {
  CHECK(gwnb::c_g(2, 0, BigRat(1, 2)) == BigRat(1, 2));
  CHECK(gwnb::c_g(2, 0, BigRat(1, 3)) == BigRat(1, 2));
  CHECK(gwnb::c_g(2, 1, BigRat(1, 2)) == BigRat(2));
  auto rf = gwnb::c_g_exact(2, 1);
  CHECK(rf.denom_pow == 1);
  CHECK(rf.num == gwnb::BiPoly::constant(1, rf.num.var0(), rf.num.var1()));
  CHECK(rf.eval(BigRat(1, 2)) == BigRat(2));
  for (int r = 2; r <= 6; ++r) {
    for (int j = 0; j <= r - 2; ++j) {
      BigRat z(3, 7);
      CHECK(gwnb::c_g_exact(r, j).eval(z) == gwnb::c_g(r, j, z));
    }
  }
}

TEST_CASE("both routes to the reduced gap function agree", "[pgf]") {
  auto p = gwnb::make_params(5, BigRat(1, 3));
  BigRat u(2, 7);
  BigRat a = gwnb::g_tilde(p, u);
  BigRat b = gwnb::g_tilde_series(p, u);
  CHECK(a == b);
  CHECK(a > 0);
  // at u = 1 - zeta the quotient route divides by zero
  CHECK_THROWS_AS(gwnb::g_tilde(p, BigRat(2, 3)), std::domain_error);
  CHECK(gwnb::g_tilde_series(p, BigRat(2, 3)) > 0);
}

TEST_CASE("reduced variable transform", "[pgf]") {
  auto p = half2();
  // u = y + (1 - zeta)
  CHECK(gwnb::u_of_x(p, BigRat(0)) == BigRat(2, 3));
  CHECK(gwnb::u_of_x(p, gwnb::p_inf(p)) == BigRat(1, 2));
}

TEST_CASE("small-argument bound chain in floating point", "[pgf]") {
  for (int r = 2; r <= 12; ++r) {
    for (int i = 1; i <= 19; ++i) {
      double zeta = 0.05 * i;
      auto p = gwnb::make_params(r, zeta);
      double y0 = gwnb::y_of_x(p, 0.0);
      double mid = std::pow(zeta, 0.5 * (r + 1)) / r;
      CHECK(y0 < mid);
      CHECK(mid < 1.0 / r);
    }
  }
}

TEST_CASE("pgfs are increasing and convex on the unit interval", "[pgf]") {
  auto p = gwnb::make_params(3, 0.6);
  const int N = 200;
  double prev_nb = gwnb::phi_nb(p, 0.0);
  double prev_fl = gwnb::phi_fl(p, 0.0);
  double prev_dnb = 0, prev_dfl = 0;
  for (int i = 1; i <= N; ++i) {
    double x = static_cast<double>(i) / N;
    double nb = gwnb::phi_nb(p, x);
    double fl = gwnb::phi_fl(p, x);
    CHECK(nb > prev_nb);
    CHECK(fl > prev_fl);
    if (i >= 2) {
      CHECK(nb - prev_nb >= prev_dnb - 1e-12);
      CHECK(fl - prev_fl >= prev_dfl - 1e-12);
    }
    prev_dnb = nb - prev_nb;
    prev_dfl = fl - prev_fl;
    prev_nb = nb;
    prev_fl = fl;
  }
}

TEST_CASE("domain errors", "[pgf]") {
  auto p = half2();
  CHECK_THROWS_AS(gwnb::y_of_x(p, BigRat(3, 2)), std::domain_error);
  CHECK_THROWS_AS(gwnb::y_of_x(p, BigRat(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(gwnb::f_nb(p, BigRat(1)), std::domain_error);
  CHECK_THROWS_AS(gwnb::c_g(2, 3, BigRat(1, 2)), std::out_of_range);
  CHECK_THROWS_AS(gwnb::c_g(2, -1, BigRat(1, 2)), std::out_of_range);
}
