#include "dunkl_lab/hankel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "dunkl_lab/error.hpp"
#include "fft.hpp"

namespace dunkl_lab {

namespace {

constexpr double kTaperFraction = 0.02;

// Kernel j_lambda(rho_j r_i) when both grids share one log step: the product
// only depends on i + j, so 2N - 1 evaluations cover the whole matrix.
std::vector<double> aligned_kernel(const LogGrid& in, const LogGrid& out, BesselOrder order) {
  const std::size_t n = in.size() + out.size() - 1;
  const double h = in.log_step();
  const double start = in.log_min() + out.log_min();
  std::vector<double> kernel(n);
  for (std::size_t s = 0; s < n; ++s) {
    kernel[s] = specfun::bessel_j_norm(order, std::exp(start + h * static_cast<double>(s)));
  }
  return kernel;
}

std::vector<double> make_taper(std::size_t n) {
  std::vector<double> taper(n, 1.0);
  const auto width = static_cast<std::size_t>(std::round(kTaperFraction * static_cast<double>(n)));
  for (std::size_t i = 0; i < width && i < n / 2; ++i) {
    const double s = std::sin(0.5 * std::numbers::pi * (static_cast<double>(i) + 0.5) /
                              static_cast<double>(width));
    taper[i] = s * s;
    taper[n - 1 - i] = s * s;
  }
  return taper;
}

}  // namespace

struct HankelPlan::State {
  LogGrid grid_in;
  LogGrid grid_out;
  BesselOrder order;
  HankelMethod method;
  double bias;
  bool aligned = false;
  std::vector<double> kernel;          // direct, aligned grids
  std::vector<complex> multiplier;     // fast, includes the 1/M normalization
  std::vector<double> taper;           // fast
  std::optional<detail::ForwardFft> fft;

  State(LogGrid in, LogGrid out, BesselOrder o, HankelMethod m, double b)
      : grid_in(std::move(in)), grid_out(std::move(out)), order(o), method(m), bias(b) {
    if (!(std::abs(bias) < order.value() + 1.0)) {
      throw RangeError("Mellin line bias must satisfy |bias| < lambda + 1");
    }
    aligned = grid_in.same_spacing(grid_out, 1e-12);
    if (grid_in.size() < 16 || grid_out.size() < 16) {
      throw RangeError("Hankel plans need grids with at least 16 points");
    }
    if (method == HankelMethod::direct) {
      if (aligned) kernel = aligned_kernel(grid_in, grid_out, order);
      return;
    }
    if (grid_in.size() != grid_out.size()) {
      throw GridMismatchError("fast Hankel transform needs equal input and output counts");
    }
    if (!aligned) {
      throw GridMismatchError("fast Hankel transform needs equal log spacing on both grids");
    }
    build_fast();
  }

  void build_fast() {
    const std::size_t n = grid_in.size();
    const std::size_t m_len = 2 * n;
    const double h = grid_in.log_step();
    const double shift = grid_in.log_min() + grid_out.log_min();
    const double lambda = order.value();
    multiplier.resize(m_len);
    const auto at = [&](double eta) {
      return mellin_symbol(bias, lambda, -eta) * std::polar(1.0, -eta * shift);
    };
    for (std::size_t m = 0; m < m_len; ++m) {
      const double signed_m =
          m <= m_len / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(m_len);
      const double eta = 2.0 * std::numbers::pi * signed_m / (static_cast<double>(m_len) * h);
      complex value = at(eta);
      if (m == m_len / 2) value = 0.5 * (value + at(-eta));  // Nyquist: average both branches
      multiplier[m] = value / static_cast<double>(m_len);
    }
    taper = make_taper(n);
    fft.emplace(m_len);
  }
};

HankelPlan::HankelPlan(LogGrid grid_in, LogGrid grid_out, BesselOrder order, HankelMethod method,
                       double bias)
    : state_(std::make_shared<const State>(std::move(grid_in), std::move(grid_out), order, method, bias)) {}

HankelPlan::HankelPlan(const LogGrid& grid, BesselOrder order, HankelMethod method, double bias)
    : HankelPlan(grid, grid, order, method, bias) {}

const LogGrid& HankelPlan::grid_in() const noexcept { return state_->grid_in; }
const LogGrid& HankelPlan::grid_out() const noexcept { return state_->grid_out; }
BesselOrder HankelPlan::order() const noexcept { return state_->order; }
HankelMethod HankelPlan::method() const noexcept { return state_->method; }
double HankelPlan::bias() const noexcept { return state_->bias; }
double HankelPlan::input_power() const noexcept { return state_->order.value() + 1.0 + state_->bias; }
double HankelPlan::output_power() const noexcept { return state_->order.value() + 1.0 - state_->bias; }

SampledRadialFunction HankelPlan::operator()(const SampledRadialFunction& f) const {
  return method() == HankelMethod::fast ? hankel_fast(*this, f) : hankel_direct(*this, f);
}

std::vector<complex> HankelPlan::apply_log_space(std::span<const complex> weighted) const {
  const State& s = *state_;
  if (s.method != HankelMethod::fast) {
    throw GridMismatchError("apply_log_space needs a plan built for the fast method");
  }
  const std::size_t n = s.grid_in.size();
  if (weighted.size() != n) throw GridMismatchError("input length does not match the plan grid");
  std::vector<complex> work(2 * n, complex{});
  for (std::size_t i = 0; i < n; ++i) work[i] = s.taper[i] * weighted[i];
  s.fft->execute(work);
  for (std::size_t m = 0; m < work.size(); ++m) work[m] *= s.multiplier[m];
  s.fft->execute(work);
  work.resize(n);
  return work;
}

namespace {

void check_input(const HankelPlan& plan, const SampledRadialFunction& f) {
  if (!f.grid.matches(plan.grid_in())) {
    throw GridMismatchError("input samples are not on the plan's input grid");
  }
  if (!(f.order == plan.order())) {
    throw GridMismatchError("input order does not match the plan's Bessel order");
  }
}

}  // namespace

SampledRadialFunction hankel_direct(const HankelPlan& plan, const SampledRadialFunction& f) {
  check_input(plan, f);
  const LogGrid& in = plan.grid_in();
  const LogGrid& out = plan.grid_out();
  const BesselOrder order = plan.order();
  const double lambda = order.value();
  const double b = b_lambda(order);
  const double h = in.log_step();
  const std::size_t n_in = in.size();
  const std::size_t n_out = out.size();

  // q_i = trapezoid weight * b r_i^(2 lambda + 2) f_i
  std::vector<complex> q(n_in);
  for (std::size_t i = 0; i < n_in; ++i) {
    const double w = (i == 0 || i + 1 == n_in) ? 0.5 * h : h;
    q[i] = w * b * std::exp((2.0 * lambda + 2.0) * in.log_point(i)) * f.values[i];
  }
  // Below r_0, int_0^{r_0} j_lambda(rho r) r^(2 lambda + 1) dr = r_0^(2 lambda + 2) j_{lambda+1}(rho r_0) / (2 lambda + 2)
  const complex tail_coeff =
      b * f.values.front() * std::exp((2.0 * lambda + 2.0) * in.log_point(0)) / (2.0 * lambda + 2.0);
  const BesselOrder next = order.shifted(1.0);

  const bool aligned = in.same_spacing(out, 1e-12);
  std::vector<double> kernel;
  if (aligned) kernel = aligned_kernel(in, out, order);

  std::vector<complex> values(n_out);
  std::vector<double> row(n_in);
  for (std::size_t j = 0; j < n_out; ++j) {
    const double rho = out[j];
    const double* k = nullptr;
    if (aligned) {
      k = kernel.data() + j;
    } else {
      for (std::size_t i = 0; i < n_in; ++i) row[i] = specfun::bessel_j_norm(order, rho * in[i]);
      k = row.data();
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) {
      re += q[i].real() * k[i];
      im += q[i].imag() * k[i];
    }
    values[j] = complex(re, im) + tail_coeff * specfun::bessel_j_norm(next, rho * in[0]);
  }
  return SampledRadialFunction(out, std::move(values), order);
}

namespace {

constexpr double kFftNoise = 1e-15;
constexpr int kMaxSeriesTerms = 60;

// Near rho = 0 the fast output rho^-p G carries the absolute FFT rounding of G
// divided by rho^p. There H_lambda u is replaced by its power series
// sum_k (-1)^k (rho/2)^(2k) m_k / (k! (lambda+1)_k), m_k = int r^(2k) u dnu_lambda,
// wherever the series' own error estimate is the smaller one.
void small_argument_series(const LogGrid& in, std::span<const complex> u, BesselOrder order, const LogGrid& out,
                           double p_out, double noise, std::vector<complex>& values) {
  const double lambda = order.value();
  const double b = b_lambda(order);
  const double h = in.log_step();
  const std::size_t n = in.size();

  // Moments and their absolute sums, with the Tail::constant continuation below r_0.
  std::vector<complex> cur(n);
  std::vector<double> r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
    cur[i] = w * b * std::exp((2.0 * lambda + 2.0) * in.log_point(i)) * u[i];
    r2[i] = in[i] * in[i];
  }
  const complex tail_base = b * u[0] * std::exp((2.0 * lambda + 2.0) * in.log_point(0));
  std::vector<complex> moment;
  std::vector<double> moment_abs;
  double r0_power = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    complex m = tail_base * r0_power / (2.0 * k + 2.0 * lambda + 2.0);
    double a = std::abs(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (cur[i] == complex{}) continue;
      if (k > 0) cur[i] *= r2[i];
      m += cur[i];
      a += std::abs(cur[i]);
    }
    if (!std::isfinite(a)) break;
    moment.push_back(m);
    moment_abs.push_back(a);
    r0_power *= r2[0];
  }

  for (std::size_t j = 0; j < out.size(); ++j) {
    const double rho = out[j];
    const double fast_error = noise * std::exp(-p_out * out.log_point(j));
    const double x = -0.25 * rho * rho;
    complex sum{};
    double magnitude = 0.0;
    double coeff = 1.0;
    bool converged = false;
    for (std::size_t k = 0; k < moment.size(); ++k) {
      if (k > 0) coeff *= x / (static_cast<double>(k) * (lambda + static_cast<double>(k)));
      const complex term = coeff * moment[k];
      sum += term;
      magnitude += std::abs(coeff) * moment_abs[k];
      if (k > 0 && std::abs(coeff) * moment_abs[k] <= 1e-17 * magnitude) {
        converged = true;
        break;
      }
    }
    const double series_error = 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
    if (!converged || !(series_error < fast_error)) break;
    values[j] = sum;
  }
}

// H_lambda u on the plan's output grid, for a fast plan of order lambda.
std::vector<complex> fast_core(const HankelPlan& plan, std::span<const complex> u) {
  const LogGrid& in = plan.grid_in();
  const LogGrid& out = plan.grid_out();
  const double p_in = plan.input_power();
  const double p_out = plan.output_power();
  std::vector<complex> weighted(in.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    weighted[i] = u[i] * std::exp(p_in * in.log_point(i));
    scale = std::max(scale, std::abs(weighted[i]));
  }
  auto values = plan.apply_log_space(weighted);
  for (std::size_t j = 0; j < values.size(); ++j) {
    scale = std::max(scale, std::abs(values[j]));
    values[j] *= std::exp(-p_out * out.log_point(j));
  }
  small_argument_series(in, u, plan.order(), out, p_out, kFftNoise * scale, values);
  return values;
}

}  // namespace

SampledRadialFunction hankel_fast(const HankelPlan& plan, const SampledRadialFunction& f) {
  check_input(plan, f);
  if (plan.method() != HankelMethod::fast) {
    throw GridMismatchError("hankel_fast needs a plan built with HankelMethod::fast");
  }
  return SampledRadialFunction(plan.grid_out(), fast_core(plan, f.values), plan.order());
}

complex mellin_symbol(double beta, double lambda, double eta) {
  const complex num = specfun::log_gamma_complex(complex(0.5 * (lambda + 1.0 - beta), -0.5 * eta));
  const complex den = specfun::log_gamma_complex(complex(0.5 * (lambda + 1.0 + beta), 0.5 * eta));
  return std::exp(complex(-beta * std::numbers::ln2, -eta * std::numbers::ln2) + num - den);
}

double max_admissible_beta(BesselOrder order) noexcept {
  return (order.value() + 1.0) * (1.0 - 1e-6);
}

MellinMultiplier::MellinMultiplier(double beta, BesselOrder order) : beta_(beta), order_(order) {
  if (!(beta > 0.0) || beta > max_admissible_beta(order)) {
    std::ostringstream msg;
    msg << "Mellin multiplier needs 0 < beta < lambda + 1 (got beta = " << beta
        << ", lambda = " << order.value() << ")";
    throw RangeError(msg.str());
  }
}

MellinMultiplier mellin_multiplier(double beta, BesselOrder order) {
  return MellinMultiplier(beta, order);
}

NormScan operator_norm_scan(const MellinMultiplier& m, double eta_max, std::size_t count) {
  if (!(eta_max > 0.0)) throw RangeError("operator_norm_scan needs eta_max > 0");
  if (count < 100) throw RangeError("operator_norm_scan needs at least 100 scan points");
  NormScan scan;
  scan.eta_max = eta_max;
  scan.count = count;
  scan.max_value = std::abs(m.evaluate(0.0));
  scan.argmax_eta = 0.0;
  const double step = 2.0 * eta_max / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double eta = -eta_max + step * static_cast<double>(i);
    const double value = std::abs(m.evaluate(eta));
    if (value > scan.max_value) {
      scan.max_value = value;
      scan.argmax_eta = eta;
    }
  }
  scan.max_at_zero = scan.argmax_eta == 0.0;
  scan.boundary_warning = std::abs(std::abs(scan.argmax_eta) - eta_max) <= 0.5 * step;
  return scan;
}

double component_scale(int n, BesselOrder order) {
  const double lambda = order.value();
  return std::exp(n * std::numbers::ln2 + specfun::log_gamma(lambda + n + 1.0) -
                  specfun::log_gamma(lambda + 1.0));
}

SampledRadialFunction component_transform(int n, const SampledRadialFunction& g,
                                          const HankelPlan& plan_n) {
  if (n < 0) throw RangeError("harmonic degree must be nonnegative");
  const BesselOrder order = g.order;
  if (!(plan_n.order() == order.shifted(n))) {
    throw GridMismatchError("component plan must have order lambda + n");
  }
  const double scale = component_scale(n, order);
  if (plan_n.method() == HankelMethod::fast) {
    if (!g.grid.matches(plan_n.grid_in())) throw GridMismatchError("component input grid mismatch");
    std::vector<complex> u(g.grid.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = g.values[i] * std::exp(-n * g.grid.log_point(i));
    auto values = fast_core(plan_n, u);
    const LogGrid& out = plan_n.grid_out();
    for (std::size_t j = 0; j < values.size(); ++j) values[j] *= scale * std::exp(n * out.log_point(j));
    return SampledRadialFunction(out, std::move(values), order);
  }
  auto u = multiply_by_power(g, -static_cast<double>(n));
  u.order = plan_n.order();
  auto transformed = hankel_direct(plan_n, u);
  auto result = multiply_by_power(transformed, static_cast<double>(n));
  for (auto& v : result.values) v *= scale;
  result.order = order;
  return result;
}

SampledRadialFunction component_transform(int n, BesselOrder order, const SampledRadialFunction& g,
                                          HankelMethod method, double bias) {
  if (n < 0) throw RangeError("harmonic degree must be nonnegative");
  if (!(g.order == order)) throw GridMismatchError("input order does not match lambda");
  return component_transform(n, g, HankelPlan(g.grid, order.shifted(n), method, bias));
}

}  // namespace dunkl_lab
