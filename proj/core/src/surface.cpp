#include "hilb/surface.hpp"

#include "hilb/errors.hpp"

namespace hilb {

namespace {

// Number of integers j with 0 <= j < p.
long ceil_clip0(const Rational& p) {
  if (!(p > 0)) return 0;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

long EtaExponents::seed_count_direct() const { return ceil_clip0(p0()); }
long EtaExponents::seed_count_swapped() const { return ceil_clip0(p1()); }

long SurfaceHodge::capital_lambda() const {
  long s = signature() + euler();
  if (s % 2 != 0) {
    throw precondition_error("2 | (sigma + chi) violated in capital_lambda");
  }
  return -s / 2;
}

long SurfaceHodge::capital_lambda_prime() const {
  long d = signature() - euler();
  if (d % 2 != 0) {
    throw precondition_error(
        "2 | (sigma - chi) violated in capital_lambda_prime");
  }
  return d / 2;
}

const std::vector<std::pair<std::string, SurfaceHodge>>& surface_presets() {
  static const std::vector<std::pair<std::string, SurfaceHodge>> presets = {
      {"k3", {0, 1, 20}},
      {"p2", {0, 0, 1}},
      {"hirzebruch0", {0, 0, 2}},
      {"abelian_blowup1", {2, 1, 5}},
      {"c2p1_blowup2", {2, 0, 4}},
      {"enriques", {0, 0, 10}},
  };
  return presets;
}

std::optional<SurfaceHodge> find_preset(const std::string& name) {
  for (const auto& [key, hodge] : surface_presets()) {
    if (key == name) return hodge;
  }
  return std::nullopt;
}

EtaExponents specialization_exponents(const SurfaceHodge& s, int sx, int sy) {
  if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1)) {
    throw precondition_error("sx, sy in {+1,-1} violated");
  }
  long chi = s.euler();
  if (sx == 1 && sy == 1) return EtaExponents{-chi, 0};
  if (sx == -1 && sy == -1) {
    return EtaExponents{-(chi + 8 * s.h10), 4 * s.h10};
  }
  return EtaExponents{s.signature(), s.capital_lambda()};
}

}  // namespace hilb
