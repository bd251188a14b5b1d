#pragma once

#include <string>
#include <vector>

#include "hilb/rademacher.hpp"
#include "hilb/surfaces.hpp"

namespace hilb {

enum class OutputFormat { kTable, kCsv, kJson };

// Knobs shared by every command. max_k = 0 means adaptive: double the
// truncation point until the value rounds cleanly to an integer.
struct RunConfig {
  long precision_bits = 128;
  InverseConvention convention = InverseConvention::kEven;
  double round_margin = 0.25;
  OutputFormat format = OutputFormat::kTable;
  long max_k = 0;
};

// All commands return the fully rendered output (trailing newline
// included) and throw precondition_error / nonconvergence_error upward;
// the binary maps those to exit codes. Rendering is deterministic:
// identical inputs produce byte-identical strings, except for the wall-time
// column of cmd_compare, which measures rather than computes.

// Coefficients a(alpha,beta;n) for each n: adaptively rounded integers
// when max_k = 0, truncated-sum values at fixed max_k otherwise.
std::string cmd_coeff(const RunConfig& cfg, long alpha, long beta,
                      const std::vector<long>& ns);

// chi or sigma of Hilb^n over an n-range by either method. Columns
// n, value, method, N_used (N_used empty for the series method).
std::string cmd_invariant(const RunConfig& cfg, const SurfaceHodge& s,
                          SurfaceInvariant inv, const std::vector<long>& ns,
                          Method method);

// Reference tables: 1 and 2 are truncated-formula values at max_k 2 and 75
// for the three standard exponent pairs at n = 1..6; 4 and 5 are the
// parity-proportion tables for the twice-blown-up C^2 x P^1 surface at
// n = 5,10,...,25. Values print truncated to 4 decimals.
std::string cmd_table(const RunConfig& cfg, int which);

// Error matrix |a_N(n) - a(n)| for n = 1..n_max over the truncation grid,
// one CSV row per (n, N) cell with the truncated value, the series-method
// integer, the absolute error as a decimal string, and the cell's wall
// time in milliseconds (the one nondeterministic column).
std::string cmd_compare(const RunConfig& cfg, long alpha, long beta,
                        long n_max, const std::vector<long>& k_grid);

}  // namespace hilb
