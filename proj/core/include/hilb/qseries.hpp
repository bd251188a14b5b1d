#pragma once

#include <array>
#include <vector>

#include "hilb/rational.hpp"
#include "hilb/surface.hpp"

namespace hilb {

// Power series in q with exact integer coefficients, stored densely from
// q^0 through q^order.
struct IntSeries {
  std::vector<Integer> c;

  long order() const { return static_cast<long>(c.size()) - 1; }
  const Integer& at(long n) const { return c.at(static_cast<size_t>(n)); }
};

// Coefficients of prod_{m>=1} (1-q^m)^{alpha} (1-q^{2m})^{beta} up to
// q^order (so alpha = -1, beta = 0 is the partition series). Computed by
// the sigma-weighted convolution that the logarithmic derivative of the
// product satisfies; exact integers throughout.
IntSeries eta_product_series(long alpha, long beta, long order);

// Same coefficients assembled factor by factor from binomial expansions of
// each (1-q^j)^{+-e}. Quadratically slower; kept as an independent route
// for cross-checking eta_product_series.
IntSeries eta_product_series_binomial(long alpha, long beta, long order);

// Euler characteristics of Hilbert schemes of points on a K3 surface:
// coefficients of prod (1-q^m)^{-24} shifted so entry n is chi(Hilb^n).
IntSeries k3_euler_series(long order);

// Laurent polynomial in x, y (dense rectangular grid) for each power of q.
// Monomial x^i y^j sits at xy[(i - xmin) + width * (j - ymin)].
struct LaurentXY {
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::vector<Integer> xy;

  long width() const { return xmax - xmin + 1; }
  long height() const { return ymax - ymin + 1; }
  const Integer& at(long i, long j) const;
  Integer& ref(long i, long j);
  bool in_range(long i, long j) const {
    return i >= xmin && i <= xmax && j >= ymin && j <= ymax;
  }
};

// Three-variable series: one Laurent page per power of q, q^0..q^order.
struct TriSeries {
  std::vector<LaurentXY> pages;

  long order() const { return static_cast<long>(pages.size()) - 1; }
};

// Hodge polynomial generating series of the Hilbert schemes of points of a
// connected surface: the q^n page holds the Laurent polynomial
//   sum_{s,t} (-1)^{s+t} h^{s,t}(Hilb^n) x^{s-n} y^{t-n},
// i.e. the Hodge diamond of Hilb^n centered at the origin, which is where
// the product formula naturally lives (its factors carry x,y exponents in
// {-1,0,1} only). Every page-n monomial has both exponents in [-n, n], and
// Serre duality / Hodge symmetry become the index flips
// at(i,j) == at(-i,-j) == at(j,i).
TriSeries goettsche_series(const SurfaceHodge& s, long order);

// One-variable specialization of the generating series at x = sx, y = sy
// (sx, sy in {+1,-1}), assembled by substituting into each product factor
// (so every sign lands where the product puts it) and multiplying the
// resulting (1 -+ q^m)^{e} factors together. Deliberately does not reuse
// goettsche_series' page summation; the two routes cross-check each other.
IntSeries z_specialized_series(const SurfaceHodge& s, int sx, int sy,
                               long order);

// Parity-class sums of the centered Hodge coefficients of Hilb^n: with
// Z(x,y)[n] the q^n page of the generating series,
//   b[r][n]      = (Z(1,1)[n] + (-1)^r     Z(1,-1)[n]) / 2
//   c[r1][r2][n] = (Z(1,1)[n] + ((-1)^{r1} + (-1)^{r2}) Z(1,-1)[n]
//                             + (-1)^{r1+r2} Zm(-1,-1)[n]) / 4,
// equivalently the sums of page coefficients over exponent parity classes.
// Divisibility is exact (asserted). Rows satisfy
//   b[0][n] + b[1][n] = chi(Hilb^n) and sum of all four c = chi(Hilb^n).
struct ParitySums {
  std::array<IntSeries, 2> b;
  std::array<std::array<IntSeries, 2>, 2> c;
  // Variant weighting the two terms by (-1)^n so rows sum to sigma(Hilb^n)
  // instead: b_sig[r][n] = ((-1)^n Z(1,-1)[n] + (-1)^r Z(-1,-1)[n]) / 2.
  std::array<IntSeries, 2> b_sig;
};

ParitySums parity_sums(const SurfaceHodge& s, long order);

// Normalized proportions Theta^r(n) = b[r][n] / (|b[0][n]| + |b[1][n]|)
// and the four-cell analogue for c. Exact rationals; entries where the
// denominator vanishes are left empty.
struct ThetaTables {
  std::array<std::vector<std::optional<Rational>>, 2> theta_b;
  std::array<std::array<std::vector<std::optional<Rational>>, 2>, 2> theta_c;
};

ThetaTables theta_ratios(const ParitySums& ps);

}  // namespace hilb
