#include "dunkl_lab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "dunkl_lab/error.hpp"
#include "dunkl_lab/io.hpp"
#include "dunkl_lab/parallel.hpp"
#include "dunkl_lab/pitt.hpp"
#include "dunkl_lab/testfun.hpp"

namespace dunkl_lab {

namespace {

namespace ref {
constexpr const char* kNormAtZero = "norm of the Pitt operator is max |Ma(eta)| = Ma(0), not attained";
constexpr const char* kSharpConstant = "Pitt inequality with sharp constant c(beta, lambda) = Ma(0)";
constexpr const char* kSymbolTail = "|Ma(eta)| ~ |eta|^-beta as |eta| -> infinity";
constexpr const char* kSymmetry = "conjugate symmetry of the gamma factors of Ma(eta)";
constexpr const char* kPitt = "Pitt inequality ||rho^-beta F f|| <= c(beta, lambda) ||r^beta f||";
constexpr const char* kPittDegree = "Pitt constant c(beta, lambda_k + n) for degree-n harmonics";
constexpr const char* kPlancherel = "Plancherel identity ||F f|| = ||f||";
constexpr const char* kGaussianRatio = "Gaussian Pitt ratio sqrt(Gamma(lambda+1-beta) / Gamma(lambda+1+beta))";
constexpr const char* kNearExtremizer = "sharpness of c(beta, lambda): ratios approach it without attaining it";
constexpr const char* kMonotone = "c(beta, lambda) decreasing in lambda";
constexpr const char* kUncertainty = "logarithmic uncertainty principle with psi((lambda+1)/2) + ln 2";
constexpr const char* kUncertaintyDegree = "logarithmic uncertainty with psi((lambda_k+n+1)/2) + ln 2 for degree n";
constexpr const char* kGaussianGap = "Gaussian gap (psi((lambda+2)/2) - psi((lambda+1)/2)) / 2";
constexpr const char* kDerivative = "-d c^2(beta/2, lambda)/d beta at 0 = psi((lambda+1)/2) + ln 2";
constexpr const char* kPhi = "phi(0) = 0 and phi(beta) <= 0 for beta > 0";
}  // namespace ref

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Check make_check(const std::string& suite, std::string name, const char* reference, bool passed, double value,
                 double tolerance, std::string detail = {}) {
  Check c;
  c.suite = suite;
  c.name = std::move(name);
  c.reference = reference;
  c.passed = passed;
  c.value = value;
  c.tolerance = tolerance;
  c.detail = passed ? std::move(detail) : "violates: " + std::string(reference) + (detail.empty() ? "" : "; " + detail);
  return c;
}

std::string params(double beta, double lambda) { return "beta=" + fmt(beta) + " lambda=" + fmt(lambda); }

const double kBetas[] = {0.25, 0.5, 0.9};
const double kLambdas[] = {0.0, 0.5, 1.0, 2.5};

void mellin_suite(const RunConfig& cfg, std::vector<Check>& out) {
  const std::string s = "mellin";
  const auto& tol = cfg.tolerances;
  for (double beta : kBetas) {
    for (double lambda : kLambdas) {
      const BesselOrder order(lambda);
      const MellinMultiplier m(beta, order);
      const NormScan scan = operator_norm_scan(m);
      out.push_back(make_check(s, "max-at-zero " + params(beta, lambda), ref::kNormAtZero,
                               scan.max_at_zero && !scan.boundary_warning, scan.argmax_eta, 0.0,
                               "max |Ma| = " + io::format_number(scan.max_value)));

      const double c = sharp_constant_hankel(PittParams(beta, order));
      const double diff = std::abs(c - m.evaluate(0.0).real()) + std::abs(m.evaluate(0.0).imag());
      out.push_back(make_check(s, "constant-identity " + params(beta, lambda), ref::kSharpConstant,
                               diff <= tol.identity, diff, tol.identity));

      double asym = 0.0;
      for (double eta : {0.5, 2.0, 10.0}) asym = std::max(asym, std::abs(std::abs(m(eta)) - std::abs(m(-eta))));
      out.push_back(make_check(s, "symmetry " + params(beta, lambda), ref::kSymmetry, asym <= 1e-13, asym, 1e-13));

      const double tail = std::abs(m(1e3)) * std::pow(1e3, beta);
      out.push_back(make_check(s, "tail-limit " + params(beta, lambda), ref::kSymbolTail,
                               std::abs(tail - 1.0) <= tol.mellin_tail, tail, tol.mellin_tail,
                               "|Ma(1000)| 1000^beta, limit 1"));

      bool monotone = true;
      double previous = std::abs(m(0.0));
      for (int i = 1; i <= 2000; ++i) {
        const double value = std::abs(m(0.1 * i));
        monotone = monotone && value < previous;
        previous = value;
      }
      out.push_back(make_check(s, "monotone-decay " + params(beta, lambda), ref::kNormAtZero, monotone,
                               previous, 0.0, "|Ma(eta)| on eta = 0, 0.1, ..., 200"));
    }
  }

  SuiteRng rng(cfg.seed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double lambda = rng.uniform(-0.5, 10.0);
    const double beta = rng.uniform(0.0, 1.0) * max_admissible_beta(BesselOrder(lambda));
    if (beta <= 0.0) continue;
    const double c = sharp_constant_hankel(PittParams(beta, BesselOrder(lambda)));
    worst = std::max(worst, std::abs(c - mellin_symbol(beta, lambda, 0.0).real()));
  }
  out.push_back(make_check(s, "constant-identity random-100", ref::kSharpConstant, worst <= tol.identity, worst,
                           tol.identity));
}

struct Regimes {
  std::vector<GaussianMixture> radial;
  std::vector<PolarMixture> fields;
  std::vector<std::vector<PolarMixture>> pure;  // pure[n-1]: degree n
};

constexpr int kFieldDegree = 3;
constexpr std::size_t kAngles = 16;

Regimes make_regimes(const RunConfig& cfg) {
  Regimes r;
  r.radial = random_suite(cfg.seed, cfg.suite_size);
  SuiteRng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < cfg.suite_size; ++i) r.fields.push_back(random_polar_mixture(rng, kFieldDegree));
  r.pure.resize(kFieldDegree);
  for (int n = 1; n <= kFieldDegree; ++n) {
    for (std::size_t i = 0; i < cfg.suite_size / 3; ++i) r.pure[n - 1].push_back(random_pure_degree(rng, n));
  }
  return r;
}

std::vector<HarmonicComponent> components_of(const PolarMixture& p, const LogGrid& grid) {
  return decompose_d2_classical(grid, kAngles, [&p](double r, double t) { return p(r, t); }, kFieldDegree);
}

const std::vector<MultiplicityZ2d>& multiplicities() {
  static const std::vector<MultiplicityZ2d> m{MultiplicityZ2d({0.5}), MultiplicityZ2d({0.0, 0.0}),
                                              MultiplicityZ2d({0.5, 0.0, 1.0})};
  return m;
}

std::string describe(const MultiplicityZ2d& m) {
  std::string s = "k=(";
  for (std::size_t j = 0; j < m.dimension(); ++j) s += (j ? "," : "") + fmt(m.k()[j]);
  return s + ")";
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}
double min_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

void pitt_suite(const RunConfig& cfg, std::vector<Check>& out) {
  const std::string s = "pitt";
  const auto& tol = cfg.tolerances;
  const LogGrid grid = cfg.grid.make();
  const Regimes regimes = make_regimes(cfg);
  const std::size_t count = regimes.radial.size();
  const double bound = 1.0 + tol.pitt;

  auto bound_check = [&](const std::string& name, const char* reference, const std::vector<double>& ratios,
                         double c) {
    const double worst = max_of(ratios) / c;
    out.push_back(make_check(s, name, reference, worst <= bound, worst, bound, "max ratio / constant"));
  };

  for (double beta : {0.25, 0.45}) {
    for (double lambda : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
      if (beta >= max_admissible_beta(BesselOrder(lambda))) continue;
      const PittParams p(beta, BesselOrder(lambda));
      const HankelPlan plan(grid, p.order, HankelMethod::fast, pitt_bias(beta, p.order));
      const auto ratios = parallel_map(count, [&](std::size_t i) {
        return pitt_ratio(p, sample(regimes.radial[i], grid, p.order), [&](const auto& f) { return plan(f); });
      });
      bound_check("hankel " + params(beta, lambda), ref::kPitt, ratios, sharp_constant_hankel(p));
    }
    for (double lambda : {-0.5, 0.0, 1.0}) {
      if (beta >= max_admissible_beta(BesselOrder(lambda))) continue;
      const PittParams p(beta, BesselOrder(lambda));
      const auto ratios = parallel_map(count, [&](std::size_t i) {
        return pitt_ratio(p, sample_line(regimes.radial[i], grid, p.order),
                          [&](const auto& f) { return dunkl1d_transform(f, HankelMethod::fast, pitt_bias(beta, p.order)); });
      });
      bound_check("dunkl1d " + params(beta, lambda), ref::kPitt, ratios, sharp_constant_hankel(p));
    }
    for (const auto& mult : multiplicities()) {
      const PittParams p(beta, mult);
      const auto ratios = parallel_map(count, [&](std::size_t i) {
        return pitt_ratio(p, sample(regimes.radial[i], grid, p.order), [&](const auto& f) {
          return dunkl_radial_transform(mult, f, HankelMethod::fast, pitt_bias(beta, p.order));
        });
      });
      bound_check("dunkl-radial beta=" + fmt(beta) + " " + describe(mult), ref::kPitt, ratios,
                  sharp_constant_dunkl(beta, mult));
    }
    const PittParams p2(beta, MultiplicityZ2d({0.0, 0.0}));
    const ComponentTransform transform = [&](const std::vector<HarmonicComponent>& c) {
      return transform_components(c, p2.order, HankelMethod::fast, pitt_bias(beta, p2.order));
    };
    const auto ratios = parallel_map(regimes.fields.size(), [&](std::size_t i) {
      return pitt_ratio(p2, components_of(regimes.fields[i], grid), transform);
    });
    bound_check("d2-classical beta=" + fmt(beta), ref::kPitt, ratios, sharp_constant_hankel(p2));
    for (int n = 1; n <= kFieldDegree; ++n) {
      const auto& fields = regimes.pure[n - 1];
      const auto pure = parallel_map(fields.size(), [&](std::size_t i) {
        return pitt_ratio(p2, components_of(fields[i], grid), transform);
      });
      bound_check("d2-degree-" + std::to_string(n) + " beta=" + fmt(beta), ref::kPittDegree, pure,
                  sharp_constant_hankel(PittParams(beta, BesselOrder(static_cast<double>(n)))));
    }
  }

  {
    const PittParams p(0.0, BesselOrder(0.5));
    const HankelPlan plan(grid, p.order, HankelMethod::fast);
    const auto ratios = parallel_map(count, [&](std::size_t i) {
      return std::abs(pitt_ratio(p, sample(regimes.radial[i], grid, p.order), [&](const auto& f) { return plan(f); }) -
                      1.0);
    });
    out.push_back(make_check(s, "beta=0 ratio is 1", ref::kPlancherel, max_of(ratios) <= tol.pitt, max_of(ratios),
                             tol.pitt));
  }

  const std::pair<double, double> gaussian_pairs[] = {{0.5, 1.0}, {0.25, 0.0}, {0.9, 0.5}, {1.5, 2.5}, {0.1, -0.5}};
  for (const auto& [beta, lambda] : gaussian_pairs) {
    const PittParams p(beta, BesselOrder(lambda));
    const HankelPlan plan(grid, p.order, HankelMethod::fast, pitt_bias(beta, p.order));
    const auto f = sample_radial(grid, p.order, [](double r) { return complex(std::exp(-0.5 * r * r)); });
    const double ratio = pitt_ratio(p, f, [&](const auto& g) { return plan(g); });
    const double exact = std::sqrt(specfun::gamma_ratio(lambda + 1.0 - beta, lambda + 1.0 + beta));
    const double err = std::abs(ratio - exact);
    out.push_back(make_check(s, "gaussian-ratio " + params(beta, lambda), ref::kGaussianRatio, err <= tol.closed_form,
                             err, tol.closed_form, "ratio " + io::format_number(ratio) + " vs " + io::format_number(exact)));
  }

  {
    const Table t = sweep_near_extremizer(0.5, 1.0, 1, 6);
    bool increasing = true;
    bool below = true;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      below = below && t.rows[i][3] < 1.0;
      if (i > 0) increasing = increasing && t.rows[i][1] > t.rows[i - 1][1];
    }
    const double last = t.rows.back()[3];
    out.push_back(make_check(s, "near-extremizer increasing beta=0.5 lambda=1", ref::kNearExtremizer, increasing,
                             t.rows.back()[1], 0.0));
    out.push_back(make_check(s, "near-extremizer below constant beta=0.5 lambda=1", ref::kNearExtremizer, below,
                             last, 1.0, "max ratio / constant"));
    out.push_back(make_check(s, "near-extremizer R=1e6 reaches 0.95 c", ref::kNearExtremizer, last >= 0.95, last,
                             0.95));
  }

  for (double beta : kBetas) {
    const Table t = sweep_monotonicity(beta, 0.0, 5.0, 51);
    double worst = 0.0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) worst = std::max(worst, t.rows[i][2]);
    out.push_back(make_check(s, "monotone-in-lambda beta=" + fmt(beta), ref::kMonotone, worst < 1.0, worst, 1.0,
                             "max c(beta, lambda + step) / c(beta, lambda)"));
  }
}

void uncertainty_suite(const RunConfig& cfg, std::vector<Check>& out) {
  const std::string s = "uncertainty";
  const auto& tol = cfg.tolerances;
  const LogGrid grid = cfg.grid.make();
  const Regimes regimes = make_regimes(cfg);
  const std::size_t count = regimes.radial.size();

  auto gap_check = [&](const std::string& name, const char* reference, const std::vector<double>& relative) {
    const double worst = min_of(relative);
    out.push_back(make_check(s, name, reference, worst >= -tol.uncertainty, worst, -tol.uncertainty,
                             "min gap / mass"));
  };

  for (double lambda : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
    const BesselOrder order(lambda);
    const auto rel = parallel_map(count, [&](std::size_t i) {
      const auto r = log_uncertainty_gap(sample(regimes.radial[i], grid, order));
      return r.gap / r.mass;
    });
    gap_check("hankel lambda=" + fmt(lambda), ref::kUncertainty, rel);
  }
  for (double lambda : {-0.5, 0.0, 1.0}) {
    const BesselOrder order(lambda);
    const auto rel = parallel_map(count, [&](std::size_t i) {
      const auto r = log_uncertainty_gap(sample_line(regimes.radial[i], grid, order));
      return r.gap / r.mass;
    });
    gap_check("dunkl1d lambda=" + fmt(lambda), ref::kUncertainty, rel);
  }
  for (const auto& mult : multiplicities()) {
    const auto rel = parallel_map(count, [&](std::size_t i) {
      const auto r = log_uncertainty_gap(mult, sample(regimes.radial[i], grid, mult.order()));
      return r.gap / r.mass;
    });
    gap_check("dunkl-radial " + describe(mult), ref::kUncertainty, rel);
  }
  {
    const auto rel = parallel_map(regimes.fields.size(), [&](std::size_t i) {
      const auto r = log_uncertainty_gap(components_of(regimes.fields[i], grid));
      return r.gap / r.mass;
    });
    gap_check("d2-classical", ref::kUncertainty, rel);
  }
  for (int n = 1; n <= kFieldDegree; ++n) {
    const auto& fields = regimes.pure[n - 1];
    const double upgraded = uncertainty_coefficient(BesselOrder(static_cast<double>(n)));
    const auto rel = parallel_map(fields.size(), [&](std::size_t i) {
      const auto r = log_uncertainty_gap(components_of(fields[i], grid));
      return (r.lhs_space + r.lhs_freq - upgraded * r.mass) / r.mass;
    });
    gap_check("d2-degree-" + std::to_string(n) + " upgraded coefficient", ref::kUncertaintyDegree, rel);
  }

  const Table gaussian = sweep_uncertainty_gaps(0.0, 2.5, 6, cfg.grid);
  for (const auto& row : gaussian.rows) {
    const double err = std::abs(row[1] - row[2]);
    out.push_back(make_check(s, "gaussian-gap lambda=" + fmt(row[0]), ref::kGaussianGap, err <= tol.gaussian_gap, err,
                             tol.gaussian_gap, "gap/mass " + io::format_number(row[1]) + " vs " + io::format_number(row[2])));
  }

  for (double lambda : {-0.499, 0.0, 0.5, 1.0, 10.0}) {
    const auto d = derivative_identity_check(BesselOrder(lambda));
    const double err = std::abs(d.finite_difference - d.analytic);
    out.push_back(make_check(s, "derivative-identity lambda=" + fmt(lambda), ref::kDerivative,
                             err <= tol.closed_form, err, tol.closed_form,
                             "analytic " + io::format_number(d.analytic) + (d.extrapolated ? ", Richardson" : "")));
  }

  for (double lambda : {0.0, 1.0}) {
    const BesselOrder order(lambda);
    const auto phis = parallel_map(count, [&](std::size_t i) {
      const auto f = sample(regimes.radial[i], grid, order);
      const double mass = weighted_mass(f, 0.0);
      double worst = std::abs(phi_function(f, HankelPlan(grid, order, HankelMethod::fast)(f), 0.0)) / mass;
      for (double beta : {0.25, 0.5, 1.0}) {
        const auto transformed = HankelPlan(grid, order, HankelMethod::fast, pitt_bias(0.5 * beta, order))(f);
        worst = std::max(worst, phi_function(f, transformed, beta) / mass);
      }
      return worst;
    });
    const double worst = max_of(phis);
    out.push_back(make_check(s, "phi-sign lambda=" + fmt(lambda), ref::kPhi, worst <= tol.uncertainty, worst,
                             tol.uncertainty, "max of |phi(0)| and phi(beta), per unit mass"));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mellin", "pitt", "uncertainty", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.config = config;
  const bool all = name == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw InputError("unknown suite '" + name + "' (expected mellin, pitt, uncertainty or all)");
  }
  if (all || name == "mellin") mellin_suite(config, report.checks);
  if (all || name == "pitt") pitt_suite(config, report.checks);
  if (all || name == "uncertainty") uncertainty_suite(config, report.checks);
  return report;
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (!std::isnan(row[i])) out << io::format_number(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void check_steps(int steps) {
  if (steps < 1) throw RangeError("steps must be at least 1");
}

double lerp(double a, double b, int i, int steps) { return steps == 1 ? a : a + (b - a) * i / (steps - 1); }

}  // namespace

Table sweep_sharp_constants(double beta_min, double beta_max, double lambda, int steps) {
  check_steps(steps);
  if (!(beta_max >= beta_min)) throw RangeError("beta range is empty");
  Table t{{"beta", "lambda", "sharp_constant"}, {}};
  for (int i = 0; i < steps; ++i) {
    const double beta = lerp(beta_min, beta_max, i, steps);
    t.rows.push_back({beta, lambda, sharp_constant_hankel(PittParams(beta, BesselOrder(lambda)))});
  }
  return t;
}

Table sweep_monotonicity(double beta, double lambda_min, double lambda_max, int steps) {
  const auto rows = monotonicity_table(beta, lambda_min, lambda_max, steps);
  Table t{{"lambda", "sharp_constant", "ratio_to_previous"}, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double ratio = i == 0 ? std::numeric_limits<double>::quiet_NaN() : rows[i].constant / rows[i - 1].constant;
    t.rows.push_back({rows[i].lambda, rows[i].constant, ratio});
  }
  return t;
}

Table sweep_near_extremizer(double beta, double lambda, int j_min, int j_max) {
  if (j_min < 1 || j_max < j_min || j_max > 12) throw RangeError("need 1 <= j_min <= j_max <= 12 for R = 10^j");
  const PittParams p(beta, BesselOrder(lambda));
  const double c = sharp_constant_hankel(p);
  std::vector<int> js;
  for (int j = j_min; j <= j_max; ++j) js.push_back(j);
  const auto ratios = parallel_map(js.size(), [&](std::size_t i) {
    const double R = std::pow(10.0, js[i]);
    const auto f = near_extremizer_family(p, R);
    const HankelPlan plan(f.grid, p.order, HankelMethod::fast, pitt_bias(beta, p.order));
    return pitt_ratio(p, f, [&](const auto& g) { return plan(g); });
  });
  Table t{{"R", "ratio", "sharp_constant", "ratio_over_constant"}, {}};
  for (std::size_t i = 0; i < js.size(); ++i) t.rows.push_back({std::pow(10.0, js[i]), ratios[i], c, ratios[i] / c});
  return t;
}

Table sweep_uncertainty_gaps(double lambda_min, double lambda_max, int steps, const GridSpec& spec) {
  check_steps(steps);
  if (!(lambda_max >= lambda_min) || lambda_min < -0.5) throw RangeError("need -1/2 <= lambda_min <= lambda_max");
  const LogGrid grid = spec.make();
  Table t{{"lambda", "gap_over_mass", "closed_form", "rhs_coeff"}, {}};
  for (int i = 0; i < steps; ++i) {
    const double lambda = lerp(lambda_min, lambda_max, i, steps);
    const BesselOrder order(lambda);
    const auto f = sample_radial(grid, order, [](double r) { return complex(std::exp(-0.5 * r * r)); });
    const auto r = log_uncertainty_gap(f);
    const double exact = 0.5 * (specfun::digamma(0.5 * (lambda + 2.0)) - specfun::digamma(0.5 * (lambda + 1.0)));
    t.rows.push_back({lambda, r.gap / r.mass, exact, r.rhs_coeff});
  }
  return t;
}

}  // namespace dunkl_lab
