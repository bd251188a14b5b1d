#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/qseries.hpp"
#include "hilb/rademacher.hpp"
#include "hilb/surface.hpp"
#include "hilb/surfaces.hpp"

using namespace hilb;

TEST_CASE("preset surfaces carry the expected invariants") {
  struct Expect {
    const char* name;
    long chi;
    long sigma;
    long lambda;
  };
  const std::vector<Expect> table = {
      {"k3", 24, -16, -4},          {"p2", 3, 1, -2},
      {"hirzebruch0", 4, 0, -2},    {"abelian_blowup1", 1, -1, 0},
      {"c2p1_blowup2", -2, -2, 2},  {"enriques", 12, -8, -2},
  };
  for (const Expect& x : table) {
    CAPTURE(x.name);
    auto s = find_preset(x.name);
    REQUIRE(s.has_value());
    CHECK(s->euler() == x.chi);
    CHECK(s->signature() == x.sigma);
    CHECK(s->capital_lambda() == x.lambda);
  }
  CHECK(!find_preset("nope").has_value());
}

TEST_CASE("specialization exponents at the three corners") {
  auto exps = [](const char* name, int sx, int sy) {
    SurfaceHodge s = *find_preset(name);
    return specialization_exponents(s, sx, sy);
  };
  // (1,1) evaluates to the Euler-characteristic quotient
  EtaExponents k3_11 = exps("k3", 1, 1);
  CHECK(k3_11.alpha == -24);
  CHECK(k3_11.beta == 0);
  // (1,-1) evaluates to the signature quotient
  EtaExponents ab1 = exps("abelian_blowup1", 1, -1);
  CHECK(ab1.alpha == -1);
  CHECK(ab1.beta == 0);
  EtaExponents h0 = exps("hirzebruch0", 1, -1);
  CHECK(h0.alpha == 0);
  CHECK(h0.beta == -2);
  EtaExponents p2 = exps("p2", 1, -1);
  CHECK(p2.alpha == 1);
  CHECK(p2.beta == -2);
  EtaExponents enq = exps("enriques", 1, -1);
  CHECK(enq.alpha == -8);
  CHECK(enq.beta == -2);
  // (-1,-1)
  EtaExponents k3_mm = exps("k3", -1, -1);
  CHECK(k3_mm.alpha == -24);
  CHECK(k3_mm.beta == 0);
  EtaExponents ab1_mm = exps("abelian_blowup1", -1, -1);
  CHECK(ab1_mm.alpha == -(1 + 8 * 2));
  CHECK(ab1_mm.beta == 4 * 2);
}

TEST_CASE("admissibility of the specialized exponents") {
  std::mt19937 rng(0x511b);  // fixed seed
  std::uniform_int_distribution<long> d10(0, 3), d20(0, 3), d11(1, 30);
  int tried = 0;
  while (tried < 1000) {
    SurfaceHodge s{d10(rng), d20(rng), d11(rng)};
    if (s.euler() < s.signature()) continue;  // h11 < 2 h10
    ++tried;
    // the weight constraint alpha + 2 beta = -chi holds for every sign
    // choice; the growth hypothesis alpha + beta <= 0 is specific to the
    // mixed-sign specialization, where it equals (sigma - chi)/2
    for (auto [sx, sy] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
      EtaExponents e = specialization_exponents(s, sx, sy);
      REQUIRE(e.alpha + 2 * e.beta == -s.euler());
    }
    EtaExponents mixed = specialization_exponents(s, -1, 1);
    REQUIRE(2 * (mixed.alpha + mixed.beta) == s.signature() - s.euler());
    REQUIRE(mixed.alpha + mixed.beta <= 0);
  }
}

TEST_CASE("analytic and series routes agree on the invariants") {
  for (const char* name :
       {"k3", "p2", "hirzebruch0", "abelian_blowup1", "enriques"}) {
    SurfaceHodge s = *find_preset(name);
    for (long n = 1; n <= 10; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      Integer chi_series = euler_hilb(s, n, Method::kSeries);
      if (24 * n > s.euler()) {
        CHECK(euler_hilb(s, n, Method::kExact) == chi_series);
      }
      Integer sig_series = signature_hilb(s, n, Method::kSeries);
      if (24 * n > s.euler()) {
        CHECK(signature_hilb(s, n, Method::kExact) == sig_series);
      }
    }
  }
}

TEST_CASE("invariant reference points") {
  SurfaceHodge ab1 = *find_preset("abelian_blowup1");
  CHECK(euler_hilb(ab1, 5, Method::kSeries) == 7);
  CHECK(euler_hilb(ab1, 5, Method::kExact) == 7);
  SurfaceHodge k3 = *find_preset("k3");
  CHECK(euler_hilb(k3, 2, Method::kExact) == 324);
  SurfaceHodge h0 = *find_preset("hirzebruch0");
  CHECK(signature_hilb(h0, 6, Method::kSeries) == 10);
  SurfaceHodge p2 = *find_preset("p2");
  CHECK(signature_hilb(p2, 5, Method::kExact) == 4);
  CHECK(euler_hilb(p2, 0, Method::kExact) == 1);
  CHECK(signature_hilb(k3, 0, Method::kSeries) == 1);
  CHECK_THROWS_WITH_AS(euler_hilb(p2, -1, Method::kSeries),
                       "n >= 0 violated", precondition_error);
}

TEST_CASE("negative Euler characteristic restricts only the analytic route") {
  SurfaceHodge c2 = *find_preset("c2p1_blowup2");
  REQUIRE(c2.euler() == -2);
  IntSeries oracle = eta_product_series(2, 0, 8);
  for (long n = 1; n <= 8; ++n) {
    CHECK(euler_hilb(c2, n, Method::kSeries) == oracle.at(n));
  }
  CHECK_THROWS_AS(euler_hilb(c2, 3, Method::kExact), precondition_error);
  // the signature hypothesis sigma <= chi still holds here, so the
  // analytic route works for the signature
  for (long n = 1; n <= 6; ++n) {
    CHECK(signature_hilb(c2, n, Method::kExact) ==
          signature_hilb(c2, n, Method::kSeries));
  }
}

TEST_CASE("even-index thinning of the signature series") {
  SurfaceHodge h0 = *find_preset("hirzebruch0");  // (sigma, Lambda) = (0, -2)
  IntSeries base = eta_product_series(-2, 0, 50);
  for (long n = 0; n <= 50; ++n) {
    CHECK(signature_hilb(h0, 2 * n, Method::kSeries) == base.at(n));
    if (n >= 1) CHECK(signature_hilb(h0, 2 * n - 1, Method::kSeries) == 0);
  }
}

TEST_CASE("coefficient asymptotics approach the oracle") {
  EtaExponents part{-1, 0};
  IntSeries oracle = eta_product_series(-1, 0, 500);
  double prev = 1e300;
  for (long n : {100L, 200L, 500L}) {
    Real est = asymptotic_estimate(part, n, 192);
    double ratio =
        (Real::of(oracle.at(n), est.bits()) / est).to_double();
    double err = std::abs(ratio - 1.0);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.05);

  CHECK(asymptotic_estimate(EtaExponents{0, -2}, 7, 128).is_zero());
  CHECK(!asymptotic_estimate(EtaExponents{0, -2}, 8, 128).is_zero());
  CHECK_THROWS_AS(asymptotic_estimate(EtaExponents{0, 0}, 5, 128),
                  unsupported_hypothesis_error);
  CHECK_THROWS_AS(asymptotic_estimate(EtaExponents{1, 1}, 5, 128),
                  precondition_error);
}

TEST_CASE("surface asymptotics cover the case split") {
  SurfaceHodge h0 = *find_preset("hirzebruch0");
  // chi > 0, sigma = 0: odd indices vanish
  CHECK(surface_asymptotics(h0, SurfaceInvariant::kSignature, 7, 128)
            .is_zero());
  CHECK(!surface_asymptotics(h0, SurfaceInvariant::kSignature, 8, 128)
             .is_zero());
  SurfaceHodge zero{1, 0, 2};  // chi = 0
  CHECK(surface_asymptotics(zero, SurfaceInvariant::kEuler, 9, 128)
            .is_zero());
  CHECK(surface_asymptotics(zero, SurfaceInvariant::kSignature, 9, 128)
            .is_zero());
  SurfaceHodge c2 = *find_preset("c2p1_blowup2");
  CHECK_THROWS_AS(surface_asymptotics(c2, SurfaceInvariant::kEuler, 9, 128),
                  unsupported_hypothesis_error);
  SurfaceHodge pos_sig{3, 0, 1};  // sigma - chi = 10 > 0
  CHECK_THROWS_AS(
      surface_asymptotics(pos_sig, SurfaceInvariant::kSignature, 9, 128),
      unsupported_hypothesis_error);

  SurfaceHodge k3 = *find_preset("k3");
  double prev = 1e300;
  for (long n : {50L, 100L}) {
    Real est = surface_asymptotics(k3, SurfaceInvariant::kEuler, n, 192);
    Integer truth = euler_hilb(k3, n, Method::kSeries);
    double err =
        std::abs((Real::of(truth, est.bits()) / est).to_double() - 1.0);
    CHECK(err < prev);
    prev = err;
  }

  SurfaceHodge p2 = *find_preset("p2");
  prev = 1e300;
  for (long n : {50L, 100L}) {
    Real est = surface_asymptotics(p2, SurfaceInvariant::kSignature, n, 192);
    Integer truth = signature_hilb(p2, n, Method::kSeries);
    double err =
        std::abs((Real::of(truth, est.bits()) / est).to_double() - 1.0);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("equidistribution limits follow the sign of chi plus sigma") {
  SurfaceHodge c2 = *find_preset("c2p1_blowup2");  // chi + sigma = -4 < 0
  EquidistributionReport rc = equidistribution_report(c2, {5, 25});
  CHECK(rc.limit_b[0] == make_rational(1, 2));
  CHECK(rc.limit_b[1] == make_rational(-1, 2));
  CHECK(rc.limit_c[0][0] == make_rational(1, 4));
  CHECK(rc.limit_c[0][1] == make_rational(-1, 4));
  CHECK(rc.limit_c[1][0] == make_rational(-1, 4));
  CHECK(rc.limit_c[1][1] == make_rational(1, 4));
  REQUIRE(rc.ns == std::vector<long>{5, 25});
  REQUIRE(rc.theta_b[0].size() == 2);
  REQUIRE(rc.theta_b[0][1].has_value());
  CHECK(*rc.theta_b[0][1] == make_rational(1, 2));

  SurfaceHodge h0 = *find_preset("hirzebruch0");  // chi + sigma = 4 > 0, h10 = 0
  EquidistributionReport rh = equidistribution_report(h0, {10});
  CHECK(rh.limit_b[0] == make_rational(1, 2));
  CHECK(rh.limit_b[1] == make_rational(1, 2));
  CHECK(rh.limit_c[0][0] == make_rational(1, 2));
  CHECK(rh.limit_c[1][1] == make_rational(1, 2));
  CHECK(rh.limit_c[0][1] == 0);
  CHECK(rh.limit_c[1][0] == 0);

  SurfaceHodge ab1 = *find_preset("abelian_blowup1");  // chi + sigma = 0, h10 > 0
  EquidistributionReport ra = equidistribution_report(ab1, {10});
  CHECK(ra.limit_b[0] == 1);
  CHECK(ra.limit_b[1] == 0);
  CHECK(ra.limit_c[0][0] == make_rational(1, 4));
  CHECK(ra.limit_c[0][1] == make_rational(-1, 4));
  CHECK(ra.limit_c[1][1] == make_rational(1, 4));

  SurfaceHodge k3 = *find_preset("k3");  // chi + sigma = 8 > 0, h10 = 0
  EquidistributionReport rk = equidistribution_report(k3, {10});
  CHECK(rk.limit_b[0] == make_rational(1, 2));
  CHECK(rk.limit_b[1] == make_rational(1, 2));
  CHECK(rk.limit_c[0][1] == 0);

  SurfaceHodge pos_sig{3, 0, 1};  // chi < sigma
  CHECK_THROWS_AS(equidistribution_report(pos_sig, {5}),
                  unsupported_hypothesis_error);
  CHECK_THROWS_WITH_AS(equidistribution_report(k3, {}),
                       "nonempty n list violated", precondition_error);
  CHECK_THROWS_AS(equidistribution_report(k3, {-3}), precondition_error);
}
