// dunkl_lab: transforms, verification suites and parameter sweeps.
//
// Exit codes: 0 success, 1 failed check, 2 malformed or missing input,
// 3 parameter out of range.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dunkl_lab/dunkl.hpp"
#include "dunkl_lab/error.hpp"
#include "dunkl_lab/hankel.hpp"
#include "dunkl_lab/io.hpp"
#include "dunkl_lab/pitt.hpp"
#include "dunkl_lab/suites.hpp"

namespace {

using namespace dunkl_lab;

constexpr int kExitFailedCheck = 1;
constexpr int kExitInput = 2;
constexpr int kExitRange = 3;

struct TransformArgs {
  std::string input;
  std::string kind = "hankel";
  std::optional<double> lambda;
  std::string mult;
  std::optional<double> beta;
  std::string method = "fast";
  std::string out;
  int n_max = 4;
};

struct VerifyArgs {
  std::string suite = "all";
  std::string json;
  std::uint64_t seed = 1;
  std::size_t suite_size = 30;
  GridSpec grid;
  std::vector<std::string> tolerances;
};

struct SweepArgs {
  std::string table;
  double beta = 0.5;
  double beta_min = 0.0;
  double beta_max = 0.9;
  double lambda = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 5.0;
  int steps = 10;
  int j_min = 1;
  int j_max = 6;
  GridSpec grid;
  std::string csv;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

MultiplicityZ2d parse_mult(const std::string& text) {
  std::vector<double> k;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw InputError("--mult: '" + cell + "' is not a number");
    }
    if (used != cell.size()) throw InputError("--mult: '" + cell + "' is not a number");
    if (!(v >= 0.0)) throw RangeError("--mult: multiplicities must be nonnegative");
    k.push_back(v);
  }
  if (k.empty()) throw InputError("--mult needs at least one value");
  return MultiplicityZ2d(std::move(k));
}

HankelMethod parse_method(const std::string& m) { return m == "direct" ? HankelMethod::direct : HankelMethod::fast; }

double relative_l2(const std::vector<complex>& a, const std::vector<complex>& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// Relative L^2 error of the round trip F F f against f(-x), in the measure of the transform.
double radial_round_trip(const SampledRadialFunction& f, const SampledRadialFunction& twice) {
  auto diff = f;
  for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] = twice.values[i] - f.values[i];
  const double norm = weighted_norm(f, 0.0);
  return norm > 0.0 ? weighted_norm(diff, 0.0) / norm : weighted_norm(diff, 0.0);
}

void check_beta(const std::optional<double>& beta, BesselOrder order) {
  if (beta) static_cast<void>(PittParams(*beta, order));  // throws naming 0 <= beta < lambda + 1
}

void report_pitt(const std::optional<double>& beta, BesselOrder order, double ratio) {
  if (!beta) return;
  std::cerr << "pitt ratio " << io::format_number(ratio) << " (sharp constant "
            << io::format_number(sharp_constant_hankel(PittParams(*beta, order))) << ")\n";
}

int cmd_transform(const TransformArgs& a) {
  const HankelMethod method = parse_method(a.method);
  const auto bias_for = [&](BesselOrder order) { return a.beta ? pitt_bias(*a.beta, order) : 0.0; };
  std::ostringstream out;
  double round_trip = 0.0;

  if (a.kind == "hankel" || a.kind == "dunkl-radial") {
    BesselOrder order(a.lambda.value_or(0.0));
    std::optional<MultiplicityZ2d> mult;
    if (a.kind == "dunkl-radial") {
      if (a.mult.empty()) throw InputError("--kind dunkl-radial needs --mult");
      mult = parse_mult(a.mult);
      if (a.lambda && std::abs(*a.lambda - mult->lambda_k()) > 1e-12) {
        throw RangeError("--lambda disagrees with lambda_k = d/2 - 1 + |k| of --mult");
      }
      order = mult->order();
    }
    check_beta(a.beta, order);
    const double bias = bias_for(order);
    auto in = open_input(a.input);
    const auto f = io::read_radial_csv(in, order);
    const auto transform = [&](const SampledRadialFunction& g) {
      return mult ? dunkl_radial_transform(*mult, g, method, bias) : HankelPlan(g.grid, order, method, bias)(g);
    };
    const auto once = transform(f);
    round_trip = radial_round_trip(f, transform(once));
    if (a.beta) report_pitt(a.beta, order, pitt_ratio(PittParams(*a.beta, order), f, transform));
    io::write_radial_csv(out, once);
  } else if (a.kind == "dunkl1d") {
    const BesselOrder order(a.lambda.value_or(0.0));
    check_beta(a.beta, order);
    const double bias = bias_for(order);
    auto in = open_input(a.input);
    const auto f = io::read_line_csv(in, order);
    const auto transform = [&](const SampledLineFunction& g) { return dunkl1d_transform(g, method, bias); };
    const auto once = transform(f);
    const auto twice = transform(once);
    // F^2 f(t) = f(-t)
    std::vector<complex> got(twice.positive);
    got.insert(got.end(), twice.negative.begin(), twice.negative.end());
    std::vector<complex> want(f.negative);
    want.insert(want.end(), f.positive.begin(), f.positive.end());
    round_trip = relative_l2(got, want);
    if (a.beta) report_pitt(a.beta, order, pitt_ratio(PittParams(*a.beta, order), f, transform));
    io::write_line_csv(out, once);
  } else if (a.kind == "d2-components") {
    const BesselOrder order(0.0);
    check_beta(a.beta, order);
    const double bias = bias_for(order);
    if (a.n_max < 0) throw RangeError("--nmax must be nonnegative");
    auto in = open_input(a.input);
    const auto field = io::read_polar_csv(in);
    if (field.angular_count % 2 != 0) throw InputError("d2-components needs an even number of angles");
    const auto once = dunkl_d2_transform(field, a.n_max, method, bias);
    const auto twice = dunkl_d2_transform(once, a.n_max, method, bias);
    // F^2 f(x) = f(-x): theta shifted by pi is M/2 columns over
    std::vector<complex> want(field.values.size());
    const std::size_t m_count = field.angular_count;
    for (std::size_t i = 0; i < field.radial.size(); ++i) {
      for (std::size_t m = 0; m < m_count; ++m) want[i * m_count + m] = field.at(i, (m + m_count / 2) % m_count);
    }
    round_trip = relative_l2(twice.values, want);
    if (a.beta) {
      const auto components = decompose_d2_classical(field, a.n_max);
      report_pitt(a.beta, order,
                  pitt_ratio(PittParams(*a.beta, order), components, [&](const std::vector<HarmonicComponent>& c) {
                    return transform_components(c, order, method, bias);
                  }));
    }
    io::write_polar_csv(out, once);
  } else {
    throw InputError("unknown --kind '" + a.kind + "'");
  }
  write_output(a.out, out.str());
  std::cerr << "round-trip relative L2 error " << io::format_number(round_trip) << "\n";
  return 0;
}

RunConfig make_config(const VerifyArgs& a) {
  RunConfig cfg;
  cfg.seed = a.seed;
  cfg.suite_size = a.suite_size;
  cfg.grid = a.grid;
  if (a.grid.count < 16) throw RangeError("--count must be at least 16");
  if (!(a.grid.r_min > 0.0 && a.grid.r_max > a.grid.r_min)) throw RangeError("need 0 < r_min < r_max");
  if (a.suite_size < 3) throw RangeError("--suite-size must be at least 3");
  for (const auto& item : a.tolerances) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--tol expects name=value, got '" + item + "'");
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("--tol: bad value in '" + item + "'");
    }
    if (!(value > 0.0)) throw RangeError("--tol: tolerances must be positive");
    if (!cfg.tolerances.set(item.substr(0, eq), value)) throw InputError("--tol: unknown tolerance '" + item + "'");
  }
  return cfg;
}

int cmd_verify(const VerifyArgs& a) {
  const RunConfig cfg = make_config(a);
  const SuiteReport report = run_suite(a.suite, cfg);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << "  value "
              << io::format_number(c.value) << "  tolerance " << io::format_number(c.tolerance);
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
  if (!a.json.empty()) write_output(a.json, report.to_json());
  return report.passed() ? 0 : kExitFailedCheck;
}

int cmd_sweep(const SweepArgs& a) {
  Table table;
  if (a.table == "sharp-constants") {
    table = sweep_sharp_constants(a.beta_min, a.beta_max, a.lambda, a.steps);
  } else if (a.table == "monotonicity") {
    table = sweep_monotonicity(a.beta, a.lambda_min, a.lambda_max, a.steps);
  } else if (a.table == "near-extremizer") {
    table = sweep_near_extremizer(a.beta, a.lambda, a.j_min, a.j_max);
  } else if (a.table == "uncertainty-gaps") {
    if (a.grid.count < 16) throw RangeError("--count must be at least 16");
    table = sweep_uncertainty_gaps(a.lambda_min, a.lambda_max, a.steps, a.grid);
  } else {
    throw InputError("unknown --table '" + a.table + "'");
  }
  write_output(a.csv, table.to_csv());
  return 0;
}

void add_grid_options(CLI::App* cmd, GridSpec& grid) {
  cmd->add_option("--r-min", grid.r_min, "smallest radius of the log grid")->capture_default_str();
  cmd->add_option("--r-max", grid.r_max, "largest radius of the log grid")->capture_default_str();
  cmd->add_option("--count", grid.count, "number of grid points (>= 16)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel and Dunkl transforms, sharp Pitt constants and logarithmic uncertainty checks"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "transform samples read from a CSV file");
  transform->add_option("input,--in", ta.input, "input CSV (r,re,im or r,theta,re,im)")->required();
  transform->add_option("--kind", ta.kind)
      ->check(CLI::IsMember({"hankel", "dunkl1d", "dunkl-radial", "d2-components"}))
      ->capture_default_str();
  transform->add_option("--lambda", ta.lambda, "Bessel order (hankel, dunkl1d)");
  transform->add_option("--mult", ta.mult, "comma-separated multiplicities k_1,...,k_d (dunkl-radial)");
  transform->add_option("--beta", ta.beta, "Pitt exponent: also reports the Pitt ratio");
  transform->add_option("--method", ta.method)->check(CLI::IsMember({"direct", "fast"}))->capture_default_str();
  transform->add_option("--out", ta.out, "output CSV (default: standard output)");
  transform->add_option("--nmax", ta.n_max, "highest harmonic degree (d2-components)")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--json", va.json, "write the JSON report here");
  verify->add_option("--seed", va.seed, "seed of the random test functions")->capture_default_str();
  verify->add_option("--suite-size", va.suite_size, "random functions per regime")->capture_default_str();
  verify->add_option("--tol", va.tolerances, "tolerance override name=value (repeatable)");
  add_grid_options(verify, va.grid);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "emit a parameter table as CSV");
  sweep->add_option("--table", sa.table)
      ->required()
      ->check(CLI::IsMember({"sharp-constants", "monotonicity", "near-extremizer", "uncertainty-gaps"}));
  sweep->add_option("--beta", sa.beta)->capture_default_str();
  sweep->add_option("--beta-min", sa.beta_min)->capture_default_str();
  sweep->add_option("--beta-max", sa.beta_max)->capture_default_str();
  sweep->add_option("--lambda", sa.lambda)->capture_default_str();
  sweep->add_option("--lambda-min", sa.lambda_min)->capture_default_str();
  sweep->add_option("--lambda-max", sa.lambda_max)->capture_default_str();
  sweep->add_option("--steps", sa.steps)->capture_default_str();
  sweep->add_option("--j-min", sa.j_min, "near-extremizer: smallest j in R = 10^j")->capture_default_str();
  sweep->add_option("--j-max", sa.j_max, "near-extremizer: largest j in R = 10^j")->capture_default_str();
  sweep->add_option("--csv", sa.csv, "output CSV (default: standard output)");
  add_grid_options(sweep, sa.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*transform) return cmd_transform(ta);
    if (*verify) return cmd_verify(va);
    return cmd_sweep(sa);
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
