#include "dunkl_lab/pitt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dunkl_lab/error.hpp"

namespace dunkl_lab {

namespace {

void check_beta(double beta, double lambda) {
  if (!(beta >= 0.0 && beta < lambda + 1.0)) {
    std::ostringstream msg;
    msg << "beta = " << beta << " violates 0 <= beta < lambda + 1 = " << lambda + 1.0
        << " (needed for a finite Pitt constant)";
    throw RangeError(msg.str());
  }
}

void check_denominator(double denominator) {
  if (!(denominator > 0.0)) throw InputError("degenerate input: ||r^beta f|| = 0");
}

void check_mass(double mass) {
  if (!(mass > 1e-300) || !std::isfinite(mass)) {
    throw InputError("non-integrable input: mass underflows or is not finite");
  }
}

}  // namespace

PittParams::PittParams(double b, BesselOrder o) : beta(b), order(o) { check_beta(beta, order.value()); }

PittParams::PittParams(double b, const MultiplicityZ2d& m) : beta(b), order(m.order()), mult(m) {
  check_beta(beta, order.value());
}

double sharp_constant_formula(double beta, double lambda) {
  if (!(std::abs(beta) < lambda + 1.0)) throw RangeError("|beta| must stay below lambda + 1");
  return std::exp(-beta * std::numbers::ln2) *
         specfun::gamma_ratio(0.5 * (lambda + 1.0 - beta), 0.5 * (lambda + 1.0 + beta));
}

double pitt_bias(double beta, BesselOrder order) {
  return std::max(0.0, std::min(beta, order.value() + 0.5));
}

double sharp_constant_hankel(const PittParams& p) { return sharp_constant_formula(p.beta, p.order.value()); }

double sharp_constant_dunkl(double beta, const MultiplicityZ2d& mult) {
  return sharp_constant_hankel(PittParams(beta, mult));
}

double pitt_ratio(const PittParams& p, const SampledRadialFunction& f, const RadialTransform& transform) {
  const double denominator = weighted_mass(f, p.beta);
  check_denominator(denominator);
  return std::sqrt(weighted_mass(transform(f), -p.beta) / denominator);
}

double pitt_ratio(const PittParams& p, const SampledLineFunction& f, const LineTransform& transform) {
  const double denominator = line_weighted_mass(f, p.beta);
  check_denominator(denominator);
  return std::sqrt(line_weighted_mass(transform(f), -p.beta) / denominator);
}

double pitt_ratio(const PittParams& p, const std::vector<HarmonicComponent>& f,
                  const ComponentTransform& transform) {
  double denominator = 0.0;
  for (const auto& c : f) denominator += weighted_mass(c.profile, p.beta);
  check_denominator(denominator);
  double numerator = 0.0;
  for (const auto& c : transform(f)) numerator += weighted_mass(c.profile, -p.beta);
  return std::sqrt(numerator / denominator);
}

LogGrid near_extremizer_grid(const PittParams& p, double R, std::size_t count) {
  if (!(R > 1.0)) throw RangeError("near-extremizer family needs R > 1");
  if (!(p.beta > 0.0)) throw RangeError("near-extremizer family needs beta > 0");
  const double log_r = std::log(R);
  // output energy decays like rho^-(2 beta + 1) above and rho^(2(lambda+1-beta)) below
  const double upper = log_r + 40.0 / (0.5 + p.beta);
  const double lower = -log_r - 40.0 / (p.order.value() + 1.0 - p.beta);
  return make_log_grid(std::exp(lower), std::exp(upper), count);
}

SampledRadialFunction near_extremizer_family(const PittParams& p, double R, const LogGrid& grid) {
  if (!(R > 1.0)) throw RangeError("near-extremizer family needs R > 1");
  const double log_r = std::log(R);
  const double exponent = -p.beta - p.order.value() - 1.0;
  std::vector<complex> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = grid.log_point(i);
    if (u >= -log_r && u <= log_r) values[i] = std::exp(exponent * u);
  }
  SampledRadialFunction f(grid, std::move(values), p.order);
  const double norm = weighted_norm(f, p.beta, Tail::none);
  if (!(norm > 0.0)) throw RangeError("grid does not sample [1/R, R]");
  for (auto& v : f.values) v /= norm;
  return f;
}

SampledRadialFunction near_extremizer_family(const PittParams& p, double R) {
  return near_extremizer_family(p, R, near_extremizer_grid(p, R));
}

std::vector<MonotonicityRow> monotonicity_table(double beta, double lambda_min, double lambda_max,
                                                int steps) {
  if (steps < 2 || !(lambda_max > lambda_min) || lambda_min < -0.5) {
    throw RangeError("monotonicity table needs -1/2 <= lambda_min < lambda_max and steps >= 2");
  }
  check_beta(beta, lambda_min);
  std::vector<MonotonicityRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double lambda = lambda_min + (lambda_max - lambda_min) * i / (steps - 1);
    rows.push_back({lambda, sharp_constant_formula(beta, lambda)});
  }
  return rows;
}

double uncertainty_coefficient(BesselOrder order) {
  return specfun::digamma(0.5 * (order.value() + 1.0)) + std::numbers::ln2;
}

namespace {

UncertaintyReport make_report(double lhs_space, double lhs_freq, double mass, BesselOrder order) {
  check_mass(mass);
  UncertaintyReport r;
  r.lhs_space = lhs_space;
  r.lhs_freq = lhs_freq;
  r.mass = mass;
  r.rhs_coeff = uncertainty_coefficient(order);
  r.gap = lhs_space + lhs_freq - r.rhs_coeff * mass;
  return r;
}

}  // namespace

UncertaintyReport log_uncertainty_gap(const SampledRadialFunction& f, HankelMethod method) {
  const auto transformed = HankelPlan(f.grid, f.order, method)(f);
  return make_report(log_weighted_mass(f), log_weighted_mass(transformed), weighted_mass(f, 0.0),
                     f.order);
}

UncertaintyReport log_uncertainty_gap(const SampledLineFunction& f, HankelMethod method) {
  const auto transformed = dunkl1d_transform(f, method);
  return make_report(line_log_weighted_mass(f), line_log_weighted_mass(transformed),
                     line_weighted_mass(f, 0.0), f.order);
}

UncertaintyReport log_uncertainty_gap(const MultiplicityZ2d& mult, const SampledRadialFunction& f,
                                      HankelMethod method) {
  const auto transformed = dunkl_radial_transform(mult, f, method);
  return make_report(log_weighted_mass(f), log_weighted_mass(transformed), weighted_mass(f, 0.0),
                     mult.order());
}

UncertaintyReport log_uncertainty_gap(const std::vector<HarmonicComponent>& components,
                                      HankelMethod method) {
  const BesselOrder order(0.0);
  const auto transformed = transform_components(components, order, method);
  double space = 0.0;
  double freq = 0.0;
  double mass = 0.0;
  for (const auto& c : components) {
    space += log_weighted_mass(c.profile);
    mass += weighted_mass(c.profile, 0.0);
  }
  for (const auto& c : transformed) freq += log_weighted_mass(c.profile);
  return make_report(space, freq, mass, order);
}

DerivativeCheck derivative_identity_check(BesselOrder order, double step) {
  const double lambda = order.value();
  const auto c2 = [lambda](double beta) {
    const double c = sharp_constant_formula(0.5 * beta, lambda);
    return c * c;
  };
  const auto central = [&](double h) { return -(c2(h) - c2(-h)) / (2.0 * h); };
  DerivativeCheck out{central(step), uncertainty_coefficient(order), false};
  if (std::abs(out.finite_difference - out.analytic) > 1e-7) {
    out.finite_difference = (4.0 * central(0.5 * step) - out.finite_difference) / 3.0;
    out.extrapolated = true;
  }
  return out;
}

double phi_function(const SampledRadialFunction& f, const SampledRadialFunction& transformed, double beta) {
  const double c = sharp_constant_formula(0.5 * beta, f.order.value());
  return weighted_mass(transformed, -0.5 * beta) - c * c * weighted_mass(f, 0.5 * beta);
}

}  // namespace dunkl_lab
