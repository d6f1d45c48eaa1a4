#include "dunkl_lab/measures.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "dunkl_lab/error.hpp"

namespace dunkl_lab {

LogGrid::LogGrid(double r_min, double r_max, std::size_t count) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw RangeError("log grid needs 0 < r_min < r_max");
  }
  if (count < 2) throw RangeError("log grid needs at least two points");
  log_min_ = std::log(r_min);
  log_step_ = (std::log(r_max) - log_min_) / static_cast<double>(count - 1);
  points_.resize(count);
  for (std::size_t i = 0; i < count; ++i) points_[i] = std::exp(log_point(i));
  points_.front() = r_min;
  points_.back() = r_max;
}

bool LogGrid::matches(const LogGrid& other, double tol) const noexcept {
  if (size() != other.size()) return false;
  return std::abs(r_min() - other.r_min()) <= tol * r_min() &&
         std::abs(r_max() - other.r_max()) <= tol * r_max();
}

bool LogGrid::same_spacing(const LogGrid& other, double tol) const noexcept {
  return std::abs(log_step_ - other.log_step_) <= tol * log_step_;
}

LogGrid make_log_grid(double r_min, double r_max, std::size_t count) {
  return LogGrid(r_min, r_max, count);
}

SampledRadialFunction::SampledRadialFunction(LogGrid g, std::vector<complex> v, BesselOrder o)
    : grid(std::move(g)), values(std::move(v)), order(o) {
  if (values.size() != grid.size()) {
    throw GridMismatchError("sample count " + std::to_string(values.size()) +
                            " does not match grid size " + std::to_string(grid.size()));
  }
}

SampledRadialFunction sample_radial(const LogGrid& grid, BesselOrder order,
                                    const std::function<complex(double)>& profile) {
  std::vector<complex> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = profile(grid[i]);
  return SampledRadialFunction(grid, std::move(values), order);
}

MultiplicityZ2d::MultiplicityZ2d(std::vector<double> k) : k_(std::move(k)) {
  if (k_.empty()) throw RangeError("multiplicity needs dimension d >= 1");
  for (double kj : k_) {
    if (!(kj >= 0.0) || !std::isfinite(kj)) throw RangeError("multiplicities must be finite and >= 0");
  }
  k_total_ = std::accumulate(k_.begin(), k_.end(), 0.0);
}

double MultiplicityZ2d::weight(std::span<const double> x) const {
  if (x.size() != k_.size()) throw GridMismatchError("point dimension does not match multiplicity");
  double w = 1.0;
  for (std::size_t j = 0; j < k_.size(); ++j) {
    if (k_[j] != 0.0) w *= std::pow(std::abs(x[j]), 2.0 * k_[j]);
  }
  return w;
}

double b_lambda(BesselOrder order) {
  const double lambda = order.value();
  if (lambda < 100.0) return 1.0 / (std::exp2(lambda) * std::tgamma(lambda + 1.0));
  return std::exp(-(lambda * std::numbers::ln2 + specfun::log_gamma(lambda + 1.0)));
}

WeightConstants mms_constant(const MultiplicityZ2d& mult) {
  // c_k^{-1} = prod_j int_R exp(-x^2/2) |x|^{2 k_j} dx = prod_j 2^{k_j+1/2} Gamma(k_j + 1/2)
  double log_c_inv = 0.0;
  for (double kj : mult.k()) {
    log_c_inv += (kj + 0.5) * std::numbers::ln2 + specfun::log_gamma(kj + 0.5);
  }
  WeightConstants out{};
  out.b_lambda = b_lambda(mult.order());
  out.c_k = std::exp(-log_c_inv);
  // c_k^{-1} = b^{-1} a_k^{-1}
  out.a_k = std::exp(-log_c_inv) / out.b_lambda;
  return out;
}

double integrate_log_trapezoid(const LogGrid& grid, std::span<const double> density,
                               double lower_rate) {
  if (density.size() != grid.size()) throw GridMismatchError("density does not match grid");
  const double h = grid.log_step();
  double sum = 0.0;
  for (double d : density) sum += d;
  sum -= 0.5 * (density.front() + density.back());
  sum *= h;
  if (lower_rate > 0.0 && density.front() != 0.0) {
    // exact exponential tail plus the leading Euler-Maclaurin endpoint term
    const double i0 = density.front();
    sum += i0 * (1.0 / lower_rate + lower_rate * h * h / 12.0);
  }
  return sum;
}

double integrate_log_trapezoid_ln(const LogGrid& grid, std::span<const double> density,
                                  double lower_rate) {
  if (density.size() != grid.size()) throw GridMismatchError("density does not match grid");
  const double h = grid.log_step();
  const std::size_t n = density.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += grid.log_point(i) * density[i];
  sum -= 0.5 * (grid.log_point(0) * density.front() + grid.log_point(n - 1) * density.back());
  sum *= h;
  if (lower_rate > 0.0 && density.front() != 0.0) {
    const double i0 = density.front();
    const double u0 = grid.log_point(0);
    const double a = lower_rate;
    sum += i0 * (u0 / a - 1.0 / (a * a)) + i0 * (1.0 + a * u0) * h * h / 12.0;
  }
  return sum;
}

namespace {

// b |f(r)|^2 r^(2 lambda + 2 + 2 beta): the dnu_lambda integrand in u = ln r.
std::vector<double> mass_density(const SampledRadialFunction& f, double beta) {
  const double b = b_lambda(f.order);
  const double p = f.order.value() + 1.0 + beta;
  std::vector<double> density(f.values.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    density[i] = b * std::norm(f.values[i] * std::exp(p * f.grid.log_point(i)));
  }
  return density;
}

double lower_rate_for(const SampledRadialFunction& f, double beta, Tail tail,
                      std::span<const double> density) {
  if (tail == Tail::none) return 0.0;
  const double rate = 2.0 * (f.order.value() + 1.0 + beta);
  if (rate <= 0.0 && density.front() != 0.0) {
    throw InputError("weighted integrand is not integrable at the origin (2(lambda+1+beta) <= 0)");
  }
  return rate;
}

}  // namespace

double weighted_mass(const SampledRadialFunction& f, double beta, Tail tail) {
  const auto density = mass_density(f, beta);
  return integrate_log_trapezoid(f.grid, density, lower_rate_for(f, beta, tail, density));
}

double weighted_norm(const SampledRadialFunction& f, double beta, Tail tail) {
  return std::sqrt(weighted_mass(f, beta, tail));
}

double log_weighted_mass(const SampledRadialFunction& f, double beta, Tail tail) {
  const auto density = mass_density(f, beta);
  return integrate_log_trapezoid_ln(f.grid, density, lower_rate_for(f, beta, tail, density));
}

SampledRadialFunction multiply_by_power(const SampledRadialFunction& f, double p) {
  std::vector<complex> values(f.values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f.values[i] * std::exp(p * f.grid.log_point(i));
  }
  return SampledRadialFunction(f.grid, std::move(values), f.order);
}

}  // namespace dunkl_lab
