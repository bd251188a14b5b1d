#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/eta_exponents.hpp"

namespace hilb {

// Hodge numbers (h^{1,0}, h^{2,0}, h^{1,1}) of a smooth projective complex
// surface. Everything downstream only sees these three integers.
struct SurfaceHodge {
  long h10 = 0;
  long h20 = 0;
  long h11 = 1;

  long euler() const { return 2 - 4 * h10 + 2 * h20 + h11; }
  long signature() const { return 2 * h20 + 2 - h11; }

  // -(sigma+chi)/2 and (sigma-chi)/2; both integral because
  // chi + sigma = 4 - 4h10 + 4h20 and chi - sigma = 4 - 4h10 + 2h11... the
  // first is divisible by 4, and parity of the second matches 2h11. The
  // accessors assert integrality rather than silently truncating.
  long capital_lambda() const;
  long capital_lambda_prime() const;

  friend bool operator==(const SurfaceHodge&, const SurfaceHodge&) = default;
};

// Named surfaces used by the table commands. Lookup is case-sensitive.
const std::vector<std::pair<std::string, SurfaceHodge>>& surface_presets();
std::optional<SurfaceHodge> find_preset(const std::string& name);

// Exponents (alpha, beta) of the eta quotient obtained by specializing the
// two-variable generating series at (x, y) = (sx, sy), sx, sy in {+1, -1}.
// The (+1,+1) specialization collapses to a pure eta power (beta = 0); the
// mixed ones depend only on (sigma, Lambda); the (-1,-1) one keeps an h10
// correction.
EtaExponents specialization_exponents(const SurfaceHodge& s, int sx, int sy);

}  // namespace hilb
