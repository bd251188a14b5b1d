#include "hilb/render.hpp"

#include <chrono>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "hilb/errors.hpp"

namespace hilb {

namespace {

using nlohmann::json;

ExactOptions options_from(const RunConfig& cfg) {
  ExactOptions o;
  o.requested_bits = cfg.precision_bits;
  o.convention = cfg.convention;
  o.round_margin = cfg.round_margin;
  return o;
}

const char* method_name(Method m) {
  return m == Method::kExact ? "exact" : "oracle";
}

const char* invariant_name(SurfaceInvariant i) {
  return i == SurfaceInvariant::kEuler ? "euler" : "signature";
}

// Exact rational truncated toward zero to four decimals, sign preserved
// even when the truncated digits are all zero.
std::string trunc4(const Rational& q) {
  bool neg = q < 0;
  Integer scaled = abs(q.get_num()) * 10000;
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Integer ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), t.get_mpz_t(),
              Integer(10000).get_mpz_t());
  std::string frac = fp.get_str();
  frac.insert(0, 4 - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

// Monospace grid: first row is the header, first column left-aligned,
// everything else right-aligned, two spaces between columns.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      const std::string& cell = row[c];
      if (c > 0) out << "  ";
      if (c == 0) {
        out << cell << std::string(width[c] - cell.size(), ' ');
      } else {
        out << std::string(width[c] - cell.size(), ' ') << cell;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string format_ms(double ms) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << ms;
  return out.str();
}

}  // namespace

std::string cmd_coeff(const RunConfig& cfg, long alpha, long beta,
                      const std::vector<long>& ns) {
  EtaExponents e{alpha, beta};
  struct Row {
    long n;
    bool exact;
    Integer rounded;
    RademacherReport rep;
  };
  std::vector<Row> rows;
  Seeds seeds;
  bool have_seeds = false;
  for (long n : ns) {
    if (cfg.max_k == 0) {
      ExactResult r = exact_coefficient(e, n, options_from(cfg));
      rows.push_back(Row{n, true, r.value, std::move(r.report)});
    } else {
      if (!have_seeds) {
        seeds = seeds_for(e);
        have_seeds = true;
      }
      PrecisionContext ctx = suggested_context(e, n, cfg.precision_bits);
      rows.push_back(Row{n, false, Integer(0),
                         truncated_sum(e, n, cfg.max_k, ctx, cfg.convention,
                                       seeds)});
    }
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const Row& r : rows) {
        json row = json::parse(r.rep.json());
        if (r.exact) row["rounded"] = r.rounded.get_str();
        arr.push_back(std::move(row));
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "n,value,N,precision_bits\n";
      for (const Row& r : rows) {
        out << r.n << ","
            << (r.exact ? r.rounded.get_str() : r.rep.value.decimal()) << ","
            << r.rep.max_k << "," << r.rep.precision_bits << "\n";
      }
      return out.str();
    }
    case OutputFormat::kTable:
      break;
  }
  std::ostringstream head;
  head << "a(" << alpha << "," << beta << ";n), "
       << (cfg.max_k == 0 ? std::string("adaptive truncation")
                          : "max_k = " + std::to_string(cfg.max_k))
       << "\n";
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"n", "value", "N"});
  for (const Row& r : rows) {
    grid.push_back({std::to_string(r.n),
                    r.exact ? r.rounded.get_str()
                            : r.rep.value.fixed_truncated(4),
                    std::to_string(r.rep.max_k)});
  }
  return head.str() + render_grid(grid);
}

std::string cmd_invariant(const RunConfig& cfg, const SurfaceHodge& s,
                          SurfaceInvariant inv, const std::vector<long>& ns,
                          Method method) {
  struct Row {
    long n;
    InvariantComputation ic;
  };
  std::vector<Row> rows;
  for (long n : ns) {
    InvariantComputation ic =
        inv == SurfaceInvariant::kEuler
            ? euler_hilb_detail(s, n, method, options_from(cfg))
            : signature_hilb_detail(s, n, method, options_from(cfg));
    rows.push_back(Row{n, std::move(ic)});
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      json doc;
      doc["surface"] = {{"h10", s.h10}, {"h20", s.h20}, {"h11", s.h11}};
      doc["invariant"] = invariant_name(inv);
      doc["method"] = method_name(method);
      json arr = json::array();
      for (const Row& r : rows) {
        json row = {{"n", r.n}, {"value", r.ic.value.get_str()}};
        if (r.ic.max_k_used > 0) {
          row["N_used"] = r.ic.max_k_used;
        } else {
          row["N_used"] = nullptr;
        }
        arr.push_back(std::move(row));
      }
      doc["rows"] = std::move(arr);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "n,value,method,N_used\n";
      for (const Row& r : rows) {
        out << r.n << "," << r.ic.value.get_str() << "," << method_name(method)
            << ",";
        if (r.ic.max_k_used > 0) out << r.ic.max_k_used;
        out << "\n";
      }
      return out.str();
    }
    case OutputFormat::kTable:
      break;
  }
  std::ostringstream head;
  head << invariant_name(inv) << "(Hilb^n), surface (h10,h20,h11) = ("
       << s.h10 << "," << s.h20 << "," << s.h11 << "), method "
       << method_name(method) << "\n";
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"n", "value"});
  for (const Row& r : rows) {
    grid.push_back({std::to_string(r.n), r.ic.value.get_str()});
  }
  return head.str() + render_grid(grid);
}

namespace {

struct SeriesTableRow {
  std::string surface;
  EtaExponents e;
};

// The three rows shared by the reference tables, keyed to the presets whose
// signature specialization produces each exponent pair.
std::vector<SeriesTableRow> series_table_rows() {
  std::vector<SeriesTableRow> rows;
  for (const char* name : {"abelian_blowup1", "hirzebruch0", "p2"}) {
    SurfaceHodge s = *find_preset(name);
    rows.push_back({name, specialization_exponents(s, 1, -1)});
  }
  return rows;
}

std::string render_series_table(const RunConfig& cfg, long max_k) {
  std::vector<SeriesTableRow> defs = series_table_rows();
  std::vector<long> ns = {1, 2, 3, 4, 5, 6};
  std::vector<std::vector<std::string>> values;
  for (const SeriesTableRow& row : defs) {
    Seeds seeds = seeds_for(row.e);
    std::vector<std::string> cells;
    for (long n : ns) {
      PrecisionContext ctx = suggested_context(row.e, n, cfg.precision_bits);
      RademacherReport rep =
          truncated_sum(row.e, n, max_k, ctx, cfg.convention, seeds);
      cells.push_back(rep.value.fixed_truncated(4));
    }
    values.push_back(std::move(cells));
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      json doc;
      doc["max_k"] = max_k;
      doc["ns"] = ns;
      json arr = json::array();
      for (size_t i = 0; i < defs.size(); ++i) {
        arr.push_back({{"surface", defs[i].surface},
                       {"alpha", defs[i].e.alpha},
                       {"beta", defs[i].e.beta},
                       {"values", values[i]}});
      }
      doc["rows"] = std::move(arr);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "surface,alpha,beta,n,value\n";
      for (size_t i = 0; i < defs.size(); ++i) {
        for (size_t c = 0; c < ns.size(); ++c) {
          out << defs[i].surface << "," << defs[i].e.alpha << ","
              << defs[i].e.beta << "," << ns[c] << "," << values[i][c]
              << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::kTable:
      break;
  }
  std::ostringstream head;
  head << "a_N(alpha,beta;n) truncated at N = " << max_k
       << "; rows keyed by surface preset and its (alpha,beta)\n";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"surface", "(alpha,beta)"};
  for (long n : ns) header.push_back("n=" + std::to_string(n));
  grid.push_back(std::move(header));
  for (size_t i = 0; i < defs.size(); ++i) {
    std::vector<std::string> row = {
        defs[i].surface, "(" + std::to_string(defs[i].e.alpha) + "," +
                             std::to_string(defs[i].e.beta) + ")"};
    for (const std::string& v : values[i]) row.push_back(v);
    grid.push_back(std::move(row));
  }
  return head.str() + render_grid(grid);
}

std::string render_theta_table(const RunConfig& cfg, int which) {
  SurfaceHodge s = *find_preset("c2p1_blowup2");
  std::vector<long> ns = {5, 10, 15, 20, 25};
  EquidistributionReport rep = equidistribution_report(s, ns);

  auto cell = [](const std::optional<Rational>& v) {
    return v ? trunc4(*v) : std::string("-");
  };

  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  if (which == 4) {
    for (int r = 0; r < 2; ++r) {
      std::vector<std::string> vals;
      for (size_t i = 0; i < ns.size(); ++i) {
        vals.push_back(cell(rep.theta_b[r][i]));
      }
      rows.push_back({"Theta^" + std::to_string(r), std::move(vals)});
    }
  } else {
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) {
        std::vector<std::string> vals;
        for (size_t i = 0; i < ns.size(); ++i) {
          vals.push_back(cell(rep.theta_c[r1][r2][i]));
        }
        rows.push_back({"Theta^" + std::to_string(r1) + "," +
                            std::to_string(r2),
                        std::move(vals)});
      }
    }
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      json doc;
      doc["surface"] = "c2p1_blowup2";
      doc["ns"] = ns;
      json arr = json::array();
      for (const auto& [label, vals] : rows) {
        arr.push_back({{"row", label}, {"values", vals}});
      }
      doc["rows"] = std::move(arr);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "row,n,value\n";
      for (const auto& [label, vals] : rows) {
        // commas inside a label get RFC 4180 quoting
        std::string field = label.find(',') == std::string::npos
                                ? label
                                : "\"" + label + "\"";
        for (size_t i = 0; i < ns.size(); ++i) {
          out << field << "," << ns[i] << "," << vals[i] << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::kTable:
      break;
  }
  std::ostringstream head;
  head << "parity proportions for surface c2p1_blowup2 (limits "
       << (which == 4 ? "+-1/2" : "+-1/4") << ")\n";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"row"};
  for (long n : ns) header.push_back("n=" + std::to_string(n));
  grid.push_back(std::move(header));
  for (const auto& [label, vals] : rows) {
    std::vector<std::string> row = {label};
    for (const std::string& v : vals) row.push_back(v);
    grid.push_back(std::move(row));
  }
  return head.str() + render_grid(grid);
}

}  // namespace

std::string cmd_table(const RunConfig& cfg, int which) {
  switch (which) {
    case 1:
      return render_series_table(cfg, 2);
    case 2:
      return render_series_table(cfg, 75);
    case 4:
    case 5:
      return render_theta_table(cfg, which);
    default:
      throw precondition_error("table id in {1,2,4,5} violated");
  }
}

std::string cmd_compare(const RunConfig& cfg, long alpha, long beta,
                        long n_max, const std::vector<long>& k_grid) {
  EtaExponents e{alpha, beta};
  if (alpha + beta > 0) {
    throw precondition_error("alpha + beta <= 0 violated");
  }
  if (n_max < 1) throw precondition_error("n_max >= 1 violated");
  IntSeries oracle = eta_product_series(alpha, beta, n_max);
  Seeds seeds = seeds_for(e);

  struct Cell {
    long n;
    long max_k;
    Real value;
    Integer oracle;
    Real abs_err;
    double wall_ms;
  };
  std::vector<Cell> cells;
  for (long n = 1; n <= n_max; ++n) {
    if (!(Rational(n) > e.p0())) continue;
    PrecisionContext ctx = suggested_context(e, n, cfg.precision_bits);
    for (long cap : k_grid) {
      auto t0 = std::chrono::steady_clock::now();
      RademacherReport rep =
          truncated_sum(e, n, cap, ctx, cfg.convention, seeds);
      auto t1 = std::chrono::steady_clock::now();
      double ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      const Integer& truth = oracle.at(n);
      Real err = abs(rep.value - Real::of(truth, rep.value.bits()));
      cells.push_back(Cell{n, cap, rep.value, truth, err, ms});
    }
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      json doc;
      doc["alpha"] = alpha;
      doc["beta"] = beta;
      json arr = json::array();
      for (const Cell& c : cells) {
        arr.push_back({{"n", c.n},
                       {"N", c.max_k},
                       {"value", c.value.decimal()},
                       {"oracle", c.oracle.get_str()},
                       {"abs_err", c.abs_err.decimal()},
                       {"wall_ms", c.wall_ms}});
      }
      doc["rows"] = std::move(arr);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "n,N,value,oracle,abs_err,wall_ms\n";
      for (const Cell& c : cells) {
        out << c.n << "," << c.max_k << "," << c.value.decimal() << ","
            << c.oracle.get_str() << "," << c.abs_err.decimal() << ","
            << format_ms(c.wall_ms) << "\n";
      }
      return out.str();
    }
    case OutputFormat::kTable:
      break;
  }
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"n", "N", "value", "oracle", "abs_err", "wall_ms"});
  for (const Cell& c : cells) {
    grid.push_back({std::to_string(c.n), std::to_string(c.max_k),
                    c.value.fixed_truncated(4), c.oracle.get_str(),
                    c.abs_err.sci(3), format_ms(c.wall_ms)});
  }
  return render_grid(grid);
}

}  // namespace hilb
