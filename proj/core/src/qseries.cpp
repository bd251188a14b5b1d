#include "hilb/qseries.hpp"

#include <stdexcept>

#include "hilb/errors.hpp"

namespace hilb {

namespace {

void require_order(long order) {
  if (order < 0) throw precondition_error("order >= 0 violated");
}

std::vector<long> sigma1_table(long order) {
  std::vector<long> sig(static_cast<size_t>(order) + 1, 0);
  for (long d = 1; d <= order; ++d) {
    for (long m = d; m <= order; m += d) sig[static_cast<size_t>(m)] += d;
  }
  return sig;
}

// Coefficients c_l of (1 - u)^E through u^max_l. For E >= 0 the expansion
// is the finite alternating binomial row; for E < 0 it is the nonnegative
// row C(|E|+l-1, l).
std::vector<Integer> one_minus_u_pow(long E, long max_l) {
  std::vector<Integer> c(static_cast<size_t>(max_l) + 1, Integer(0));
  if (E >= 0) {
    long top = std::min(E, max_l);
    for (long l = 0; l <= top; ++l) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(E),
                   static_cast<unsigned long>(l));
      c[static_cast<size_t>(l)] = (l % 2 == 0) ? b : -b;
    }
  } else {
    for (long l = 0; l <= max_l; ++l) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(-E + l - 1),
                   static_cast<unsigned long>(l));
      c[static_cast<size_t>(l)] = b;
    }
  }
  return c;
}

// In-place multiply of a dense q-series by (1 - eps q^m)^E, truncated at
// q^order. The factor's constant term is 1, so updating pages from the top
// down only ever reads not-yet-updated (old) lower coefficients.
void multiply_factor(std::vector<Integer>& a, long E, long m, int eps,
                     long order) {
  if (E == 0 || m > order) return;
  std::vector<Integer> c = one_minus_u_pow(E, order / m);
  for (long n = order; n >= m; --n) {
    Integer acc = a[static_cast<size_t>(n)];
    for (long l = 1; l * m <= n; ++l) {
      if (c[static_cast<size_t>(l)] == 0) continue;
      Integer t = c[static_cast<size_t>(l)] * a[static_cast<size_t>(n - l * m)];
      if (eps == -1 && (l % 2 != 0)) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    a[static_cast<size_t>(n)] = acc;
  }
}

// The nine factor shapes of the product formula for a connected surface:
// (1 - x^a y^b q^m)^E for every m >= 1, with (a,b) independent of m.
struct FactorShape {
  int a;
  int b;
  long E;
};

std::vector<FactorShape> factor_shapes(const SurfaceHodge& s) {
  return {
      {-1, -1, -1},      // h^{0,0} = 1
      {+1, +1, -1},      // h^{2,2} = 1
      {0, 0, -s.h11},    // h^{1,1}
      {-1, +1, -s.h20},  // h^{0,2}
      {+1, -1, -s.h20},  // h^{2,0}
      {-1, 0, s.h10},    // h^{0,1}
      {+1, 0, s.h10},    // h^{2,1}
      {0, -1, s.h10},    // h^{1,0}
      {0, +1, s.h10},    // h^{1,2}
  };
}

}  // namespace

IntSeries eta_product_series(long alpha, long beta, long order) {
  require_order(order);
  std::vector<long> sig = sigma1_table(order);
  std::vector<Integer> g(static_cast<size_t>(order) + 1, Integer(0));
  for (long i = 1; i <= order; ++i) {
    Integer v = Integer(-alpha) * sig[static_cast<size_t>(i)];
    if (i % 2 == 0) v -= Integer(2 * beta) * sig[static_cast<size_t>(i / 2)];
    g[static_cast<size_t>(i)] = v;
  }
  IntSeries out;
  out.c.assign(static_cast<size_t>(order) + 1, Integer(0));
  out.c[0] = 1;
  for (long n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (long i = 1; i <= n; ++i) {
      acc += g[static_cast<size_t>(i)] * out.c[static_cast<size_t>(n - i)];
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                Integer(n).get_mpz_t());
    if (r != 0) {
      throw std::logic_error("eta series recurrence divisibility violated");
    }
    out.c[static_cast<size_t>(n)] = q;
  }
  return out;
}

IntSeries eta_product_series_binomial(long alpha, long beta, long order) {
  require_order(order);
  std::vector<Integer> a(static_cast<size_t>(order) + 1, Integer(0));
  a[0] = 1;
  for (long m = 1; m <= order; ++m) {
    multiply_factor(a, alpha, m, +1, order);
    if (2 * m <= order) multiply_factor(a, beta, 2 * m, +1, order);
  }
  IntSeries out;
  out.c = std::move(a);
  return out;
}

IntSeries k3_euler_series(long order) {
  return eta_product_series(-24, 0, order);
}

const Integer& LaurentXY::at(long i, long j) const {
  if (!in_range(i, j)) throw std::out_of_range("LaurentXY::at out of range");
  return xy[static_cast<size_t>((i - xmin) + width() * (j - ymin))];
}

Integer& LaurentXY::ref(long i, long j) {
  if (!in_range(i, j)) throw std::out_of_range("LaurentXY::ref out of range");
  return xy[static_cast<size_t>((i - xmin) + width() * (j - ymin))];
}

TriSeries goettsche_series(const SurfaceHodge& s, long order) {
  require_order(order);
  TriSeries z;
  z.pages.resize(static_cast<size_t>(order) + 1);
  for (long n = 0; n <= order; ++n) {
    LaurentXY& page = z.pages[static_cast<size_t>(n)];
    page.xmin = page.ymin = -n;
    page.xmax = page.ymax = n;
    page.xy.assign(static_cast<size_t>((2 * n + 1) * (2 * n + 1)), Integer(0));
  }
  z.pages[0].xy[0] = 1;

  // Every factor has |a|, |b| <= 1 and q-degree m >= 1, so a q^n monomial
  // accumulated from exponents sum(l_i m_i) = n keeps both Laurent degrees
  // within sum(l_i) <= n: the preallocated [-n, n] grids never overflow,
  // even mid-product.
  for (const FactorShape& f : factor_shapes(s)) {
    if (f.E == 0) continue;
    for (long m = 1; m <= order; ++m) {
      std::vector<Integer> c = one_minus_u_pow(f.E, order / m);
      for (long n = order; n >= m; --n) {
        LaurentXY& dst = z.pages[static_cast<size_t>(n)];
        for (long l = 1; l * m <= n; ++l) {
          const Integer& cl = c[static_cast<size_t>(l)];
          if (cl == 0) continue;
          const LaurentXY& src = z.pages[static_cast<size_t>(n - l * m)];
          long di = l * f.a, dj = l * f.b;
          for (long j = src.ymin; j <= src.ymax; ++j) {
            for (long i = src.xmin; i <= src.xmax; ++i) {
              const Integer& v = src.at(i, j);
              if (v == 0) continue;
              dst.ref(i + di, j + dj) += cl * v;
            }
          }
        }
      }
    }
  }
  return z;
}

IntSeries z_specialized_series(const SurfaceHodge& s, int sx, int sy,
                               long order) {
  require_order(order);
  if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1)) {
    throw precondition_error("sx, sy in {+1,-1} violated");
  }
  std::vector<Integer> a(static_cast<size_t>(order) + 1, Integer(0));
  a[0] = 1;
  for (const FactorShape& f : factor_shapes(s)) {
    if (f.E == 0) continue;
    int eps = 1;
    if (f.a != 0 && sx < 0) eps = -eps;
    if (f.b != 0 && sy < 0) eps = -eps;
    for (long m = 1; m <= order; ++m) {
      multiply_factor(a, f.E, m, eps, order);
    }
  }
  IntSeries out;
  out.c = std::move(a);
  return out;
}

namespace {

Integer exact_half(Integer v) {
  if (mpz_odd_p(v.get_mpz_t())) {
    throw std::logic_error("parity sum divisibility by 2 violated");
  }
  return v / 2;
}

Integer exact_quarter(const Integer& v) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
              Integer(4).get_mpz_t());
  if (r != 0) {
    throw std::logic_error("parity sum divisibility by 4 violated");
  }
  return q;
}

}  // namespace

ParitySums parity_sums(const SurfaceHodge& s, long order) {
  require_order(order);
  long chi = s.euler();
  IntSeries z11 = eta_product_series(-chi, 0, order);
  IntSeries z1m1 =
      eta_product_series(s.signature(), s.capital_lambda(), order);
  IntSeries zm1m1 =
      eta_product_series(-(chi + 8 * s.h10), 4 * s.h10, order);

  ParitySums ps;
  for (int r = 0; r < 2; ++r) {
    ps.b[r].c.resize(static_cast<size_t>(order) + 1);
    ps.b_sig[r].c.resize(static_cast<size_t>(order) + 1);
    for (int r2 = 0; r2 < 2; ++r2) {
      ps.c[r][r2].c.resize(static_cast<size_t>(order) + 1);
    }
  }
  for (long n = 0; n <= order; ++n) {
    size_t un = static_cast<size_t>(n);
    for (int r = 0; r < 2; ++r) {
      int sr = (r == 0) ? 1 : -1;
      ps.b[r].c[un] = exact_half(z11.c[un] + sr * z1m1.c[un]);
      int sn = (n % 2 == 0) ? 1 : -1;
      ps.b_sig[r].c[un] = exact_half(sn * z1m1.c[un] + sr * zm1m1.c[un]);
    }
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) {
        long w = ((r1 == 0) ? 1 : -1) + ((r2 == 0) ? 1 : -1);
        int sboth = ((r1 + r2) % 2 == 0) ? 1 : -1;
        ps.c[r1][r2].c[un] =
            exact_quarter(z11.c[un] + w * z1m1.c[un] + sboth * zm1m1.c[un]);
      }
    }
  }
  return ps;
}

ThetaTables theta_ratios(const ParitySums& ps) {
  ThetaTables t;
  size_t len = ps.b[0].c.size();
  for (int r = 0; r < 2; ++r) t.theta_b[r].resize(len);
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) t.theta_c[r1][r2].resize(len);
  }
  for (size_t n = 0; n < len; ++n) {
    Integer den_b = abs(ps.b[0].c[n]) + abs(ps.b[1].c[n]);
    if (den_b != 0) {
      for (int r = 0; r < 2; ++r) {
        t.theta_b[r][n] = make_rational(ps.b[r].c[n], den_b);
      }
    }
    Integer den_c = 0;
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) den_c += abs(ps.c[r1][r2].c[n]);
    }
    if (den_c != 0) {
      for (int r1 = 0; r1 < 2; ++r1) {
        for (int r2 = 0; r2 < 2; ++r2) {
          t.theta_c[r1][r2][n] = make_rational(ps.c[r1][r2].c[n], den_c);
        }
      }
    }
  }
  return t;
}

}  // namespace hilb
