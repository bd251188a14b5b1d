#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/qseries.hpp"
#include "hilb/surface.hpp"

using namespace hilb;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

long parity(long x) { return ((x % 2) + 2) % 2; }

}  // namespace

TEST_CASE("series examples") {
  CHECK(eta_product_series(-1, 0, 6).c == ints({1, 1, 2, 3, 5, 7, 11}));
  CHECK(eta_product_series(0, -2, 6).c == ints({1, 0, 2, 0, 5, 0, 10}));
  CHECK(eta_product_series(1, -2, 6).c == ints({1, -1, 1, -2, 3, -4, 5}));
  CHECK(eta_product_series(0, 0, 4).c == ints({1, 0, 0, 0, 0}));
  CHECK(eta_product_series(1, 0, 8).c ==
        ints({1, -1, -1, 0, 0, 1, 0, 1, 0}));  // pentagonal numbers
  CHECK(k3_euler_series(3).c == ints({1, 24, 324, 3200}));
  CHECK_THROWS_AS(eta_product_series(1, 1, -1), precondition_error);
}

TEST_CASE("the convolution and binomial routes agree") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 20; ++trial) {
    long a = d(rng);
    long b = d(rng);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(eta_product_series(a, b, 40).c ==
          eta_product_series_binomial(a, b, 40).c);
  }
}

TEST_CASE("k3 degree-one page is the centered hodge square") {
  TriSeries t = goettsche_series(*find_preset("k3"), 2);
  const LaurentXY& p1 = t.pages[1];
  CHECK(p1.at(-1, -1) == 1);
  CHECK(p1.at(1, 1) == 1);
  CHECK(p1.at(-1, 1) == 1);
  CHECK(p1.at(1, -1) == 1);
  CHECK(p1.at(0, 0) == 20);
  CHECK(p1.at(0, 1) == 0);
  CHECK(p1.at(1, 0) == 0);
  CHECK(t.pages[0].at(0, 0) == 1);
  CHECK_THROWS_AS(t.pages[1].at(5, 0), std::out_of_range);
}

TEST_CASE("pages carry the two index symmetries") {
  TriSeries t = goettsche_series(*find_preset("abelian_blowup1"), 6);
  for (long n = 0; n <= 6; ++n) {
    const LaurentXY& pg = t.pages[static_cast<size_t>(n)];
    for (long i = pg.xmin; i <= pg.xmax; ++i) {
      for (long j = pg.ymin; j <= pg.ymax; ++j) {
        REQUIRE(pg.at(i, j) == pg.at(j, i));
        REQUIRE(pg.at(i, j) == pg.at(-i, -j));
      }
    }
  }
}

TEST_CASE("sign specializations match their eta quotients") {
  for (const auto& [name, s] : surface_presets()) {
    CAPTURE(name);
    long chi = s.euler();
    long sigma = s.signature();
    CHECK(z_specialized_series(s, 1, 1, 12).c ==
          eta_product_series(-chi, 0, 12).c);
    CHECK(z_specialized_series(s, 1, -1, 12).c ==
          eta_product_series(sigma, s.capital_lambda(), 12).c);
    CHECK(z_specialized_series(s, -1, -1, 12).c ==
          eta_product_series(-(chi + 8 * s.h10), 4 * s.h10, 12).c);
  }
  CHECK_THROWS_AS(z_specialized_series(*find_preset("k3"), 0, 1, 4),
                  precondition_error);
}

TEST_CASE("specializations equal signed page sums") {
  SurfaceHodge s = *find_preset("abelian_blowup1");
  const long order = 6;
  TriSeries t = goettsche_series(s, order);
  IntSeries z11 = z_specialized_series(s, 1, 1, order);
  IntSeries z1m1 = z_specialized_series(s, 1, -1, order);
  IntSeries zm1m1 = z_specialized_series(s, -1, -1, order);
  for (long n = 0; n <= order; ++n) {
    const LaurentXY& pg = t.pages[static_cast<size_t>(n)];
    Integer s11 = 0, s1m1 = 0, sm1m1 = 0;
    for (long i = pg.xmin; i <= pg.xmax; ++i) {
      for (long j = pg.ymin; j <= pg.ymax; ++j) {
        const Integer& v = pg.at(i, j);
        s11 += v;
        s1m1 += (parity(j) == 1) ? -v : v;
        sm1m1 += (parity(i + j) == 1) ? -v : v;
      }
    }
    CHECK(z11.at(n) == s11);
    CHECK(z1m1.at(n) == s1m1);
    CHECK(zm1m1.at(n) == sm1m1);
  }
}

TEST_CASE("pure eta(2t) series collapse to even indices") {
  for (long beta : {-1L, -2L, -7L}) {
    IntSeries dbl = eta_product_series(0, beta, 200);
    IntSeries base = eta_product_series(beta, 0, 100);
    for (long n = 0; n <= 100; ++n) REQUIRE(dbl.at(2 * n) == base.at(n));
    for (long n = 0; n < 100; ++n) REQUIRE(dbl.at(2 * n + 1) == 0);
  }
}

TEST_CASE("parity class sums recombine to the specializations") {
  SurfaceHodge s = *find_preset("c2p1_blowup2");
  const long order = 25;
  ParitySums ps = parity_sums(s, order);
  IntSeries z11 = z_specialized_series(s, 1, 1, order);
  IntSeries z1m1 = z_specialized_series(s, 1, -1, order);
  for (long n = 0; n <= order; ++n) {
    CHECK(ps.b[0].at(n) + ps.b[1].at(n) == z11.at(n));
    Integer csum = 0;
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) csum += ps.c[r1][r2].at(n);
    }
    CHECK(csum == z11.at(n));
    Integer sig = (n % 2 == 0) ? z1m1.at(n) : -z1m1.at(n);
    CHECK(ps.b_sig[0].at(n) + ps.b_sig[1].at(n) == sig);
  }
  // construction is the divisibility assertion: it must not throw anywhere
  for (const auto& [name, hodge] : surface_presets()) {
    CAPTURE(name);
    CHECK_NOTHROW(parity_sums(hodge, 12));
  }
}

TEST_CASE("quarter combinations equal parity class page sums") {
  SurfaceHodge s = *find_preset("abelian_blowup1");  // h10 = 2 > 0
  const long order = 8;
  TriSeries t = goettsche_series(s, order);
  ParitySums ps = parity_sums(s, order);
  for (long n = 0; n <= order; ++n) {
    const LaurentXY& pg = t.pages[static_cast<size_t>(n)];
    for (int r1 = 0; r1 < 2; ++r1) {
      Integer bacc = 0;
      for (long i = pg.xmin; i <= pg.xmax; ++i) {
        for (long j = pg.ymin; j <= pg.ymax; ++j) {
          if (parity(j) == r1) bacc += pg.at(i, j);
        }
      }
      CHECK(ps.b[r1].at(n) == bacc);
      for (int r2 = 0; r2 < 2; ++r2) {
        Integer acc = 0;
        for (long i = pg.xmin; i <= pg.xmax; ++i) {
          for (long j = pg.ymin; j <= pg.ymax; ++j) {
            if (parity(i) == r2 && parity(j) == r1) acc += pg.at(i, j);
          }
        }
        CHECK(ps.c[r1][r2].at(n) == acc);
      }
    }
  }
}

TEST_CASE("theta ratios for the reference surface") {
  SurfaceHodge s = *find_preset("c2p1_blowup2");
  ThetaTables th = theta_ratios(parity_sums(s, 25));
  CHECK(*th.theta_b[0][5] == make_rational(4, 7));
  CHECK(*th.theta_b[1][5] == make_rational(-3, 7));
  CHECK(*th.theta_b[0][10] == make_rational(47, 93));
  CHECK(*th.theta_b[1][10] == make_rational(-46, 93));
  CHECK(*th.theta_b[0][15] == make_rational(106, 213));
  CHECK(*th.theta_b[1][15] == make_rational(-107, 213));
  CHECK(*th.theta_b[0][20] == make_rational(399, 799));
  CHECK(*th.theta_b[0][25] == make_rational(1, 2));
  CHECK(*th.theta_b[1][25] == make_rational(-1, 2));
  // normalization: defined cells sum to 1 in absolute value
  for (long n = 1; n <= 25; ++n) {
    if (!th.theta_b[0][n]) continue;
    CHECK(abs(*th.theta_b[0][n]) + abs(*th.theta_b[1][n]) == 1);
    Rational total = 0;
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) total += abs(*th.theta_c[r1][r2][n]);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("degenerate normalizers are reported as undefined") {
  // chi = sigma = 0: both b-class sums vanish identically for n >= 1,
  // while the four c-cells survive at exactly +-1/4
  SurfaceHodge s{1, 0, 2};
  REQUIRE(s.euler() == 0);
  REQUIRE(s.signature() == 0);
  ThetaTables th = theta_ratios(parity_sums(s, 15));
  for (long n = 1; n <= 15; ++n) {
    CHECK(!th.theta_b[0][n].has_value());
    CHECK(!th.theta_b[1][n].has_value());
    REQUIRE(th.theta_c[0][0][n].has_value());
    CHECK(abs(*th.theta_c[0][0][n]) == make_rational(1, 4));
    CHECK(*th.theta_c[0][0][n] == *th.theta_c[1][1][n]);
    CHECK(*th.theta_c[0][1][n] == *th.theta_c[1][0][n]);
    CHECK(*th.theta_c[0][1][n] == -*th.theta_c[0][0][n]);
  }
}
