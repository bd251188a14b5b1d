// hilb: coefficients of eta-quotient generating functions, Hilbert-scheme
// invariants, reference tables, and formula-vs-series comparisons.
//
// Exit codes: 0 success, 2 precondition violation, 3 non-convergence.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilb/errors.hpp"
#include "hilb/render.hpp"

namespace {

using namespace hilb;

long default_precision() {
  if (const char* env = std::getenv("HILB_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return 128;
}

long parse_long(const std::string& text, const char* flag) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw precondition_error(std::string(flag) + " expects an integer, got '" +
                           text + "'");
}

// --n accepts a single index or an inclusive range "lo..hi".
std::vector<long> parse_n_range(const std::string& text) {
  size_t pos = text.find("..");
  if (pos == std::string::npos) return {parse_long(text, "--n")};
  long lo = parse_long(text.substr(0, pos), "--n");
  long hi = parse_long(text.substr(pos + 2), "--n");
  if (hi < lo) throw precondition_error("--n range needs lo <= hi");
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<long> parse_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_long(item, flag));
  if (out.empty()) throw precondition_error(std::string(flag) + " is empty");
  return out;
}

SurfaceHodge parse_surface(const std::string& text) {
  if (auto preset = find_preset(text)) return *preset;
  constexpr const char kPrefix[] = "custom:";
  if (text.rfind(kPrefix, 0) == 0) {
    std::vector<long> v =
        parse_list(text.substr(sizeof(kPrefix) - 1), "--surface");
    if (v.size() != 3) {
      throw precondition_error("--surface custom:h10,h20,h11 needs 3 values");
    }
    return SurfaceHodge{v[0], v[1], v[2]};
  }
  std::string known;
  for (const auto& [name, hodge] : surface_presets()) {
    (void)hodge;
    if (!known.empty()) known += ", ";
    known += name;
  }
  throw precondition_error("--surface '" + text +
                           "' is neither custom:h10,h20,h11 nor one of: " +
                           known);
}

InverseConvention parse_convention(const std::string& text) {
  if (text == "canonical") return InverseConvention::kCanonical;
  if (text == "even") return InverseConvention::kEven;
  throw precondition_error("--convention must be canonical or even");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw precondition_error("--format must be table, csv or json");
}

struct CommonFlags {
  long precision = default_precision();
  std::string convention = "even";
  std::string format = "table";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--precision", flags->precision,
                  "working precision in bits (auto-raised as needed)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--convention", flags->convention,
                  "negative-inverse representative: canonical or even")
      ->check(CLI::IsMember({"canonical", "even"}));
  cmd->add_option("--format", flags->format, "output format: table, csv, json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", flags->out_path,
                  "write output to a file instead of stdout");
}

RunConfig config_from(const CommonFlags& flags, long max_k) {
  RunConfig cfg;
  cfg.precision_bits = flags.precision;
  cfg.convention = parse_convention(flags.convention);
  cfg.format = parse_format(flags.format);
  cfg.max_k = max_k;
  return cfg;
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open --out path '" + flags.out_path +
                             "'");
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coefficients of eta-quotient generating functions and invariants of "
      "Hilbert schemes of points on surfaces"};
  app.require_subcommand(1);

  // coeff
  CLI::App* coeff = app.add_subcommand(
      "coeff", "a(alpha,beta;n) by the convergent formula");
  long alpha = 0;
  long beta = 0;
  std::string n_spec;
  long max_k = 0;
  bool adaptive = false;
  CommonFlags coeff_flags;
  coeff->add_option("-a,--alpha", alpha, "eta(tau) exponent")->required();
  coeff->add_option("-b,--beta", beta, "eta(2 tau) exponent")->required();
  coeff->add_option("--n", n_spec, "index n, or inclusive range lo..hi")
      ->required();
  CLI::Option* max_k_opt = coeff->add_option(
      "--max-k", max_k, "fixed truncation point N of the k-sums");
  coeff
      ->add_flag("--adaptive,--exact", adaptive,
                 "double N until the value rounds cleanly to an integer "
                 "(default)")
      ->excludes(max_k_opt);
  add_common(coeff, &coeff_flags);

  // invariant
  CLI::App* invariant = app.add_subcommand(
      "invariant", "chi or sigma of Hilb^n over an n-range");
  std::string surface_spec;
  bool want_euler = false;
  bool want_signature = false;
  std::string method_spec = "exact";
  std::string inv_n_spec;
  CommonFlags inv_flags;
  invariant
      ->add_option("--surface", surface_spec,
                   "preset name or custom:h10,h20,h11")
      ->required();
  CLI::Option* euler_opt =
      invariant->add_flag("--euler", want_euler, "Euler characteristic");
  invariant->add_flag("--signature", want_signature, "signature")
      ->excludes(euler_opt);
  invariant->add_option("--n", inv_n_spec, "index n, or inclusive range lo..hi")
      ->required();
  invariant
      ->add_option("--method", method_spec,
                   "exact (convergent formula) or oracle (power series)")
      ->check(CLI::IsMember({"exact", "oracle"}));
  add_common(invariant, &inv_flags);

  // table
  CLI::App* table =
      app.add_subcommand("table", "reference tables 1, 2, 4 or 5");
  int which = 0;
  CommonFlags table_flags;
  table->add_option("which", which, "table id: 1, 2, 4 or 5")->required();
  add_common(table, &table_flags);

  // compare
  CLI::App* compare = app.add_subcommand(
      "compare", "truncated formula vs series oracle over a (n, N) grid");
  long cmp_alpha = 0;
  long cmp_beta = 0;
  long n_max = 6;
  std::string k_grid_spec = "5,10,20,40,75";
  CommonFlags cmp_flags;
  compare->add_option("-a,--alpha", cmp_alpha, "eta(tau) exponent")
      ->required();
  compare->add_option("-b,--beta", cmp_beta, "eta(2 tau) exponent")
      ->required();
  compare->add_option("--n-max", n_max, "compare n = 1..n_max");
  compare->add_option("--k-grid", k_grid_spec,
                      "comma-separated truncation points N");
  add_common(compare, &cmp_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (coeff->parsed()) {
      RunConfig cfg = config_from(coeff_flags, adaptive ? 0 : max_k);
      emit(coeff_flags, cmd_coeff(cfg, alpha, beta, parse_n_range(n_spec)));
    } else if (invariant->parsed()) {
      if (want_euler == want_signature) {
        throw precondition_error("exactly one of --euler, --signature");
      }
      RunConfig cfg = config_from(inv_flags, 0);
      emit(inv_flags,
           cmd_invariant(cfg, parse_surface(surface_spec),
                         want_euler ? SurfaceInvariant::kEuler
                                    : SurfaceInvariant::kSignature,
                         parse_n_range(inv_n_spec),
                         method_spec == "exact" ? Method::kExact
                                                : Method::kSeries));
    } else if (table->parsed()) {
      RunConfig cfg = config_from(table_flags, 0);
      emit(table_flags, cmd_table(cfg, which));
    } else if (compare->parsed()) {
      RunConfig cfg = config_from(cmp_flags, 0);
      emit(cmp_flags, cmd_compare(cfg, cmp_alpha, cmp_beta, n_max,
                                  parse_list(k_grid_spec, "--k-grid")));
    }
    return 0;
  } catch (const nonconvergence_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    if (!ex.last_report.empty()) {
      std::cerr << ex.last_report << "\n";
    }
    return 3;
  } catch (const precondition_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
