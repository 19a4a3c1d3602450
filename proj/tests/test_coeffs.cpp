#include <catch2/catch_amalgamated.hpp>

#include <gwnb/binomial.hpp>
#include <gwnb/coeffs.hpp>

#include <map>
#include <utility>
#include <vector>

using gwnb::BigInt;
using gwnb::BigRat;
using gwnb::binom;

namespace {

// Frozen via an independent polynomial-expansion oracle (expand the gap
// numerator, shift, divide out the double root, read off coefficients).
const std::map<int, std::map<int, std::vector<long long>>> kFrozenTables = {
    {2, {{1, {1}}}},
    {3, {{1, {1, 4, 1}}, {2, {2, 1}}}},
    {4, {{1, {1, 4, 10, 4, 1}}, {2, {2, 10, 6, 2}}, {3, {3, 2, 1}}}},
    {5,
     {{1, {1, 4, 10, 20, 10, 4, 1}},
      {2, {2, 10, 30, 20, 10, 3}},
      {3, {3, 18, 13, 8, 3}},
      {4, {4, 3, 2, 1}}}},
};

}  // namespace

TEST_CASE("closed-form coefficients match frozen tables", "[coeffs]") {
  for (const auto& [r, rows] : kFrozenTables) {
    for (const auto& [k, vals] : rows) {
      REQUIRE(static_cast<int>(vals.size()) == 2 * r - 2 - k);
      for (int n = 0; n < static_cast<int>(vals.size()); ++n) {
        INFO("r=" << r << " k=" << k << " n=" << n);
        CHECK(gwnb::cgt_closed(r, k, n) == BigRat(vals[n]));
        CHECK(gwnb::cgt_summation(r, k, n) == BigRat(vals[n]));
      }
    }
  }
}

TEST_CASE("coefficients vanish outside the index box", "[coeffs]") {
  for (int r = 2; r <= 7; ++r) {
    for (int k = 1; k < r; ++k) {
      CHECK(gwnb::cgt_closed(r, k, -1) == 0);
      CHECK(gwnb::cgt_closed(r, k, 2 * r - 2 - k) == 0);
      CHECK(gwnb::cgt_closed(r, k, 2 * r - 1 - k) == 0);
    }
    CHECK(gwnb::cgt_closed(r, 0, 1) == 0);
    CHECK(gwnb::cgt_closed(r, r, 0) == 0);
  }
}

TEST_CASE("edge columns of the table", "[coeffs]") {
  for (int r = 2; r <= 12; ++r) {
    for (int k = 1; k < r; ++k) {
      CHECK(gwnb::cgt_closed(r, k, 0) == BigRat(k));
      CHECK(gwnb::cgt_top(r, k) == gwnb::binom_q(r - 2, k - 1));
      CHECK(gwnb::cgt_closed(r, k, 2 * r - 3 - k) == gwnb::binom_q(r - 2, k - 1));
      // top entry re-expressed through the r-row binomial
      CHECK(gwnb::cgt_top(r, k) * BigRat(r) * BigRat(r - 1) ==
            gwnb::binom_q(r, k + 1) * BigRat(k) * BigRat(k + 1));
    }
  }
}

TEST_CASE("value at the case boundary n = r", "[coeffs]") {
  for (int r = 4; r <= 12; ++r) {
    for (int k = 1; k <= r - 3; ++k) {
      INFO("r=" << r << " k=" << k);
      CHECK(gwnb::cgt_at_n_r(r, k) == gwnb::cgt_closed(r, k, r));
      CHECK(gwnb::cgt_at_n_r(r, k) ==
            gwnb::binom_q(r, k + 1) * BigRat(BigInt(r - k - 2) * k - 2, k + 2) +
                BigRat(r - k));
    }
  }
  // r=4, k=1, n=4 sits exactly on the boundary and equals 1
  CHECK(gwnb::cgt_closed(4, 1, 4) == 1);
  CHECK(gwnb::cgt_at_n_r(4, 1) == 1);
}

TEST_CASE("summation kernels at the base row", "[coeffs]") {
  // m = 0 term of the first-case kernel, all n in range
  for (int r = 2; r <= 9; ++r) {
    for (int k = 1; k < r; ++k) {
      for (int n = 0; n <= r - 1; ++n) {
        BigRat expect = BigRat(r - n) - BigRat(r + 1, k + 2);
        CHECK(gwnb::cgt1_coeff(r, k, n, 0) == expect);
      }
    }
  }
}

TEST_CASE("kernel range discipline", "[coeffs]") {
  CHECK_THROWS_AS(gwnb::cgt1_coeff(5, 1, 5, 0), std::out_of_range);
  CHECK_THROWS_AS(gwnb::cgt1_coeff(5, 1, 2, -1), std::out_of_range);
  CHECK_THROWS_AS(gwnb::cgt2_coeff(5, 1, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(gwnb::cgt2_coeff(5, 1, 5, 0), std::out_of_range);
}

TEST_CASE("documented non-alternation at the base of the first kernel", "[coeffs]") {
  // consecutive positive entries: the strict sign flip only starts at m >= 1
  CHECK(gwnb::cgt1_coeff(5, 1, 2, 0) == 1);
  CHECK(gwnb::cgt1_coeff(5, 1, 2, 1) == 1);
}

TEST_CASE("top-degree cancellation in the second kernel", "[coeffs]") {
  // at n = 2r-2-k the lone surviving term cancels inside its bracket
  CHECK(gwnb::cgt2_coeff(5, 1, 7, 3) == 0);
  for (int r = 4; r <= 10; ++r) {
    for (int k = 1; k <= r - 3; ++k) {
      CHECK(gwnb::cgt2_coeff(r, k, 2 * r - 2 - k, r - 1 - k) == 0);
    }
  }
}

TEST_CASE("gamma sums match their closed forms", "[coeffs][gamma]") {
  for (int r = 2; r <= 10; ++r) {
    for (int i = 0; i < r; ++i) {
      for (int n = 0; n <= r - 1 + i; ++n) {
        auto g = gwnb::gamma_sums(r, n, i);
        if (n <= r - 1) {
          REQUIRE(g.g1.has_value());
          REQUIRE(g.g2.has_value());
          CHECK(*g.g1 == gwnb::gamma1_closed(n, i));
          CHECK(*g.g2 == gwnb::gamma2_closed(n, i));
          if (n == 0) CHECK(*g.g2 == 0);
        }
        if (n >= r && n <= r - 1 + i) {
          REQUIRE(g.g3.has_value());
          REQUIRE(g.g4.has_value());
          CHECK(*g.g3 == gwnb::gamma3_closed(r, n, i));
          CHECK(*g.g4 == gwnb::gamma4_closed(r, n, i));
        }
      }
    }
  }
}

TEST_CASE("gamma spot values", "[coeffs][gamma]") {
  CHECK(gwnb::gamma1_closed(1, 3) == 2);
  CHECK(gwnb::gamma2_closed(0, 5) == 0);
  CHECK(gwnb::gamma4_closed(7, 7, 1) == 6);
  for (int r = 3; r <= 9; ++r) CHECK(gwnb::gamma4_closed(r, r, 1) == r - 1);
  CHECK_THROWS_AS(gwnb::gamma_sums(5, 10, 2), std::out_of_range);
}

TEST_CASE("second kernel splits into boundary and excess parts", "[coeffs]") {
  for (int r = 4; r <= 10; ++r) {
    for (int k = 1; k < r; ++k) {
      for (int n = r; n <= 2 * r - 3 - k; ++n) {
        INFO("r=" << r << " k=" << k << " n=" << n);
        CHECK(gwnb::cgt_closed(r, k, n) ==
              gwnb::cgt_case_b(r, k, n) + gwnb::cgt_case_c_extra(r, k, n));
      }
    }
  }
}
