#include "binmom/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "binmom/bounds.hpp"
#include "binmom/combinatorics.hpp"
#include "binmom/convergence.hpp"
#include "binmom/format.hpp"
#include "binmom/logspace.hpp"
#include "binmom/moments.hpp"
#include "binmom/montecarlo.hpp"
#include "binmom/properties.hpp"
#include "binmom/saddle.hpp"

namespace binmom {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::domain_error("cannot open output file: " + path);
  file << csv_line(table.header);
  for (const auto& row : table.rows) file << csv_line(row);
}

void render_table(const Table& table, std::ostream& out) {
  std::vector<size_t> widths(table.header.size());
  for (size_t c = 0; c < table.header.size(); ++c) widths[c] = table.header[c].size();
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
}

// Emits CSV when --out was given, otherwise the aligned table.
void deliver(const Table& table, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    render_table(table, out);
  } else {
    write_csv(table, out_path);
  }
}

Rational parse_probability(const std::string& text) {
  auto parsed = parse_rational(text);
  if (!parsed) throw CLI::ValidationError("--p", "not a rational: '" + text + "'");
  return *parsed;
}

std::string log_field(const LogValue& v) { return format_double(v.log_e); }

// ---- subcommand payloads -------------------------------------------------

struct MomentArgs {
  long n = 0;
  long k = 0;
  std::string p;
  std::string out_path;
};

int run_moment(const MomentArgs& a, std::ostream& out) {
  const MomentQuery q{a.n, parse_probability(a.p), a.k};
  const Rational moment = raw_moment_stirling(q);
  if (a.out_path.empty()) {
    out << to_string(moment) << '\n';
  } else {
    Table t{{"n", "p", "k", "moment"},
            {{std::to_string(q.n), to_string(q.p), std::to_string(q.k), to_string(moment)}}};
    write_csv(t, a.out_path);
  }
  return kExitOk;
}

struct AsymptoteArgs {
  double beta = 0.0;
  double p = 0.0;
  std::string out_path;
};

int run_asymptote(const AsymptoteArgs& a, std::ostream& out) {
  const SaddleSolution s = solve_asymptote(AsymptoteInputs{a.beta, a.p});
  const double psi = std::exp(s.log_psi);
  const double product = std::exp(s.log_psi_product);
  if (!a.out_path.empty()) {
    Table t{{"beta", "p", "chi0", "tau0", "log_psi", "psi", "log_psi_product", "psi_product"},
            {{format_double(s.beta), format_double(s.p), format_double(s.chi0),
              format_double(s.tau0), format_double(s.log_psi), format_double(psi),
              format_double(s.log_psi_product), format_double(product)}}};
    write_csv(t, a.out_path);
    return kExitOk;
  }
  out << "chi0    = " << format_double(s.chi0) << '\n';
  out << "tau0    = " << format_double(s.tau0) << '\n';
  out << "logPsi  = " << format_double(s.log_psi) << "   (Psi = " << format_double(psi)
      << ")\n";
  out << "closed-form product = " << format_double(product)
      << "   (log = " << format_double(s.log_psi_product) << ")\n";
  out << "note: the product form differs from exp(psi(tau0)) by the factor e/p^tau0 = "
      << format_double(std::exp(s.log_psi_product - s.log_psi));
  if (product > s.beta) {
    out << "; it violates the ceiling Psi <= beta = " << format_double(s.beta)
        << ", so logPsi reports psi(tau0)";
  }
  out << '\n';
  return kExitOk;
}

struct BoundsArgs {
  long n = 0;
  long k = 0;
  std::string p;
  std::string out_path;
};

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  const MomentQuery q{a.n, parse_probability(a.p), a.k};
  const BoundReport r = bound_report(q);
  Table t{{"n", "p", "k", "log_trivial_lower", "log_jensen_lower", "log_exact",
           "log_ahle_upper", "log_trivial_upper_p", "log_trivial_upper_n"},
          {{std::to_string(q.n), to_string(q.p), std::to_string(q.k),
            log_field(r.log_trivial_lower), log_field(r.log_jensen_lower),
            log_field(r.log_exact), log_field(r.log_ahle_upper),
            log_field(r.log_trivial_upper_p), log_field(r.log_trivial_upper_n)}}};
  deliver(t, a.out_path, out);
  return kExitOk;
}

struct TemmeArgs {
  int k = 0;
  int j = -1;  // -1 sweeps j = 1..k-1
  std::string out_path;
};

int run_temme(const TemmeArgs& a, std::ostream& out) {
  if (a.k < 2) throw std::domain_error("temme: k must be >= 2");
  const StirlingRow row = stirling_row(a.k);
  const int j_lo = a.j < 0 ? 1 : a.j;
  const int j_hi = a.j < 0 ? a.k - 1 : a.j;
  Table t{{"k", "j", "tau", "log_exact", "log_temme", "abs_error", "rel_error"}, {}};
  for (int j = j_lo; j <= j_hi; ++j) {
    const LogValue approx = temme_stirling(a.k, j);
    const double exact = log_of_rational(Rational(row.entries[static_cast<size_t>(j)]));
    const double abs_error = std::abs(approx.log_e - exact);
    t.rows.push_back({std::to_string(a.k), std::to_string(j),
                      format_double(static_cast<double>(j) / a.k), format_double(exact),
                      format_double(approx.log_e), format_double(abs_error),
                      format_double(abs_error / exact)});
  }
  deliver(t, a.out_path, out);
  return kExitOk;
}

struct ConvergeArgs {
  double beta = 0.0;
  std::string p;
  std::vector<long> k_values{50, 100, 200, 400};
  long kmax_hard = 1000;  // exact runs above this take hours, not minutes
  std::string out_path;
};

int run_converge(const ConvergeArgs& a, std::ostream& out) {
  for (long k : a.k_values) {
    if (k > a.kmax_hard) {
      throw std::domain_error("converge: k = " + std::to_string(k) +
                              " exceeds the exact-arithmetic cap " +
                              std::to_string(a.kmax_hard) + " (raise with --kmax-hard)");
    }
  }
  const auto rows = converge_table(a.beta, parse_probability(a.p), a.k_values);
  Table t{{"k", "n", "normalized_log_moment", "log_psi", "gap"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.k), std::to_string(r.n),
                      format_double(r.normalized_log_moment), format_double(r.log_psi),
                      format_double(r.gap)});
  }
  deliver(t, a.out_path, out);
  return kExitOk;
}

struct CheckArgs {
  int kmax = 0;
  std::string out_path;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  if (a.kmax < 1) throw std::domain_error("check: --kmax must be >= 1");
  const std::vector<Rational> ps{Rational(1, 3), Rational(1, 2)};
  Table t{{"k", "n", "p", "klaner_holds", "unimodal_stirling", "unimodal_with_falling",
           "unimodal_with_p", "mode_index"},
          {}};
  long violations = 0;
  for (int k = 1; k <= a.kmax; ++k) {
    const long n_choices[] = {std::max(1L, static_cast<long>(k) / 2), static_cast<long>(k),
                              2L * k};
    for (long n : n_choices) {
      for (const auto& p : ps) {
        const PropertyReport r = unimodality_check(k, n, p);
        const bool ok = r.klaner_holds && r.unimodal_stirling && r.unimodal_with_falling &&
                        r.unimodal_with_p;
        if (!ok) ++violations;
        t.rows.push_back({std::to_string(r.k), std::to_string(r.n), to_string(r.p),
                          std::to_string(r.klaner_holds), std::to_string(r.unimodal_stirling),
                          std::to_string(r.unimodal_with_falling),
                          std::to_string(r.unimodal_with_p), std::to_string(r.mode_index)});
      }
    }
  }
  if (a.out_path.empty()) {
    if (violations == 0) {
      out << "checked k = 1.." << a.kmax
          << " (n in {k/2, k, 2k}, p in {1/3, 1/2}): all properties hold\n";
    } else {
      out << violations << " property violation(s); offending rows:\n";
      Table bad{t.header, {}};
      for (const auto& row : t.rows) {
        if (row[3] == "0" || row[4] == "0" || row[5] == "0" || row[6] == "0") {
          bad.rows.push_back(row);
        }
      }
      render_table(bad, out);
    }
  } else {
    write_csv(t, a.out_path);
  }
  return violations == 0 ? kExitOk : kExitPropertyViolation;
}

struct McArgs {
  long n = 0;
  long k = 0;
  double p = 0.0;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  std::string out_path;
};

int run_mc(const McArgs& a, std::ostream& out) {
  const McEstimate e = mc_all_red(a.n, a.p, a.k, a.samples, a.seed);
  // the double p is promoted to the exact rational it denotes
  const Rational exact = all_red_probability(MomentQuery{a.n, Rational(a.p), a.k});
  const double exact_d = exact.get_d();
  const double sigmas =
      e.std_error > 0.0 ? std::abs(e.estimate - exact_d) / e.std_error : 0.0;
  Table t{{"n", "p", "k", "samples", "seed", "hits", "estimate", "std_error", "exact",
           "abs_deviation_sigmas"},
          {{std::to_string(a.n), format_double(a.p), std::to_string(a.k),
            std::to_string(a.samples), std::to_string(a.seed), std::to_string(e.hits),
            format_double(e.estimate), format_double(e.std_error), format_double(exact_d),
            format_double(sigmas)}}};
  if (a.out_path.empty()) {
    out << "estimate  = " << format_double(e.estimate) << "  (" << e.hits << " / "
        << e.samples << ")\n";
    out << "std error = " << format_double(e.std_error) << '\n';
    out << "exact     = " << to_string(exact) << " = " << format_double(exact_d) << '\n';
    out << "deviation = " << format_double(sigmas) << " sigma\n";
  } else {
    write_csv(t, a.out_path);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and asymptotic raw moments of the binomial distribution"};
  app.require_subcommand(1);

  MomentArgs moment_args;
  auto* moment = app.add_subcommand("moment", "exact E(R^k) for R ~ B(n, p)");
  moment->add_option("--n", moment_args.n, "ball count")->required();
  moment->add_option("--p", moment_args.p, "success probability, exact (e.g. 1/2 or 0.25)")
      ->required();
  moment->add_option("--k", moment_args.k, "moment order")->required();
  moment->add_option("--out", moment_args.out_path, "write CSV here instead of stdout");

  AsymptoteArgs asymptote_args;
  auto* asymptote =
      app.add_subcommand("asymptote", "saddle point and log Psi for n = beta k + o(k)");
  asymptote->add_option("--beta", asymptote_args.beta, "limit of n/k")->required();
  asymptote->add_option("--p", asymptote_args.p, "success probability in (0, 1)")->required();
  asymptote->add_option("--out", asymptote_args.out_path, "write CSV here instead of stdout");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "log-space bound sandwich for one query");
  bounds->add_option("--n", bounds_args.n, "ball count")->required();
  bounds->add_option("--p", bounds_args.p, "success probability, exact")->required();
  bounds->add_option("--k", bounds_args.k, "moment order")->required();
  bounds->add_option("--out", bounds_args.out_path, "write CSV here instead of stdout");

  TemmeArgs temme_args;
  auto* temme = app.add_subcommand("temme", "Stirling-number approximation vs exact values");
  temme->add_option("--k", temme_args.k, "row index")->required();
  temme->add_option("--j", temme_args.j, "column; omit to sweep 1..k-1");
  temme->add_option("--out", temme_args.out_path, "write CSV here instead of stdout");

  ConvergeArgs converge_args;
  auto* converge =
      app.add_subcommand("converge", "exact moments vs the asymptote over growing k");
  converge->add_option("--beta", converge_args.beta, "limit of n/k")->required();
  converge->add_option("--p", converge_args.p, "success probability, exact")->required();
  converge->add_option("--k", converge_args.k_values, "k values (comma separated)")
      ->delimiter(',');
  converge->add_option("--kmax-hard", converge_args.kmax_hard,
                       "cap on k for exact arithmetic (default 1000)");
  converge->add_option("--out", converge_args.out_path, "write CSV here instead of stdout");

  CheckArgs check_args;
  auto* check =
      app.add_subcommand("check", "log-concavity and unimodality sweep of the coefficients");
  check->add_option("--kmax", check_args.kmax, "largest k to verify")->required();
  check->add_option("--out", check_args.out_path, "write CSV here instead of stdout");

  McArgs mc_args;
  auto* mc = app.add_subcommand("mc", "Monte Carlo spot check of the all-red probability");
  mc->add_option("--n", mc_args.n, "ball count")->required();
  mc->add_option("--p", mc_args.p, "success probability")->required();
  mc->add_option("--k", mc_args.k, "sample size")->required();
  mc->add_option("--samples", mc_args.samples, "number of simulated experiments");
  mc->add_option("--seed", mc_args.seed, "PRNG seed");
  mc->add_option("--out", mc_args.out_path, "write CSV here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("binmom");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (moment->parsed()) return run_moment(moment_args, out);
    if (asymptote->parsed()) return run_asymptote(asymptote_args, out);
    if (bounds->parsed()) return run_bounds(bounds_args, out);
    if (temme->parsed()) return run_temme(temme_args, out);
    if (converge->parsed()) return run_converge(converge_args, out);
    if (check->parsed()) return run_check(check_args, out);
    if (mc->parsed()) return run_mc(mc_args, out);
    err << "no subcommand given\n" << app.help();
    return kExitUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace binmom
