#include "dunkl_lab/dunkl.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "dunkl_lab/error.hpp"

namespace dunkl_lab {

complex DunklKernel1d::operator()(double t) const {
  const double a = std::abs(t);
  const double even = specfun::bessel_j_norm(order_, a);
  const double odd = t < 0.0 ? -specfun::bessel_j_norm_deriv(order_, a) : specfun::bessel_j_norm_deriv(order_, a);
  return {even, -odd};
}

complex dunkl_kernel_1d(BesselOrder order, double t) { return DunklKernel1d(order)(t); }

complex dunkl_operator_rank1(const std::function<complex(double)>& f, BesselOrder order, double x,
                             double step) {
  if (x == 0.0) throw DomainError("rank-one Dunkl operator is singular at x = 0");
  const complex derivative = (f(x + step) - f(x - step)) / (2.0 * step);
  return derivative + (order.value() + 0.5) * (f(x) - f(-x)) / x;
}

SampledLineFunction::SampledLineFunction(LogGrid g, std::vector<complex> pos, std::vector<complex> neg,
                                         BesselOrder o)
    : grid(std::move(g)), positive(std::move(pos)), negative(std::move(neg)), order(o) {
  if (positive.size() != grid.size() || negative.size() != grid.size()) {
    throw GridMismatchError("line samples must cover +r_i and -r_i for every grid point");
  }
}

SampledRadialFunction SampledLineFunction::even_part() const {
  std::vector<complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (positive[i] + negative[i]);
  return SampledRadialFunction(grid, std::move(v), order);
}

SampledRadialFunction SampledLineFunction::odd_part() const {
  std::vector<complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (positive[i] - negative[i]);
  return SampledRadialFunction(grid, std::move(v), order);
}

SampledLineFunction sample_line(const LogGrid& grid, BesselOrder order,
                                const std::function<complex(double)>& f) {
  std::vector<complex> pos(grid.size());
  std::vector<complex> neg(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    pos[i] = f(grid[i]);
    neg[i] = f(-grid[i]);
  }
  return SampledLineFunction(grid, std::move(pos), std::move(neg), order);
}

double line_weighted_mass(const SampledLineFunction& f, double beta, Tail tail) {
  // dmu_lambda on each half-line is dnu_lambda / 2
  const SampledRadialFunction pos(f.grid, f.positive, f.order);
  const SampledRadialFunction neg(f.grid, f.negative, f.order);
  return 0.5 * (weighted_mass(pos, beta, tail) + weighted_mass(neg, beta, tail));
}

double line_log_weighted_mass(const SampledLineFunction& f, Tail tail) {
  const SampledRadialFunction pos(f.grid, f.positive, f.order);
  const SampledRadialFunction neg(f.grid, f.negative, f.order);
  return 0.5 * (log_weighted_mass(pos, 0.0, tail) + log_weighted_mass(neg, 0.0, tail));
}

SampledLineFunction dunkl1d_transform(const SampledLineFunction& f, HankelMethod method, double bias) {
  const LogGrid& grid = f.grid;
  const BesselOrder order = f.order;
  const std::size_t n = grid.size();
  const HankelPlan even_plan(grid, order, method, bias);
  const HankelPlan odd_plan(grid, order.shifted(1.0), method, bias);

  const auto even = f.even_part();
  const auto odd = f.odd_part();
  std::vector<complex> even_out(n);
  std::vector<complex> odd_out(n);  // s H_{lambda+1}(f_odd / t)(s)
  if (method == HankelMethod::fast) {
    // s H_{lambda+1}(f_odd / t)(s) is the degree-one component transform up to its scale.
    even_out = hankel_fast(even_plan, even).values;
    odd_out = component_transform(1, odd, odd_plan).values;
    const double scale = component_scale(1, order);
    for (auto& v : odd_out) v /= scale;
  } else {
    even_out = hankel_direct(even_plan, even).values;
    auto quotient = multiply_by_power(odd, -1.0);
    quotient.order = odd_plan.order();
    odd_out = hankel_direct(odd_plan, quotient).values;
    for (std::size_t j = 0; j < n; ++j) odd_out[j] *= grid[j];
  }

  std::vector<complex> pos(n);
  std::vector<complex> neg(n);
  const complex i_unit(0.0, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = even_out[j] - i_unit * odd_out[j];
    neg[j] = even_out[j] + i_unit * odd_out[j];
  }
  return SampledLineFunction(grid, std::move(pos), std::move(neg), order);
}

SampledRadialFunction dunkl_radial_transform(const MultiplicityZ2d& mult, const SampledRadialFunction& f,
                                             HankelMethod method, double bias) {
  if (std::abs(f.order.value() - mult.lambda_k()) > 1e-14 * (1.0 + mult.lambda_k())) {
    throw GridMismatchError("radial profile order " + std::to_string(f.order.value()) +
                            " does not match lambda_k = " + std::to_string(mult.lambda_k()));
  }
  return HankelPlan(f.grid, f.order, method, bias)(f);
}

PolarField::PolarField(LogGrid r, std::size_t m, std::vector<complex> v)
    : radial(std::move(r)), angular_count(m), values(std::move(v)) {
  if (angular_count == 0) throw RangeError("polar field needs at least one angle");
  if (values.size() != radial.size() * angular_count) {
    throw GridMismatchError("polar samples do not match radial x angular grid");
  }
}

double PolarField::theta(std::size_t m) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angular_count);
}

PolarField sample_polar(const LogGrid& radial, std::size_t angular_count,
                        const std::function<complex(double, double)>& f) {
  PolarField field(radial, angular_count, std::vector<complex>(radial.size() * angular_count));
  for (std::size_t i = 0; i < radial.size(); ++i) {
    for (std::size_t m = 0; m < angular_count; ++m) field.at(i, m) = f(radial[i], field.theta(m));
  }
  return field;
}

double harmonic_d2(int degree, int index, double theta) {
  if (degree < 0 || index < 1 || index > harmonic_count_d2(degree)) {
    throw RangeError("no d = 2 harmonic with degree " + std::to_string(degree) + " and index " +
                     std::to_string(index));
  }
  if (degree == 0) return 1.0;
  const double angle = degree * theta;
  return std::numbers::sqrt2 * (index == 1 ? std::cos(angle) : std::sin(angle));
}

int harmonic_count_d2(int degree) { return degree == 0 ? 1 : 2; }

std::vector<HarmonicComponent> decompose_d2_classical(const PolarField& field, int n_max) {
  if (n_max < 0) throw RangeError("n_max must be nonnegative");
  if (field.angular_count < 4 * static_cast<std::size_t>(std::max(n_max, 1))) {
    throw RangeError("insufficient angular resolution: need at least 4 n_max angles, have " +
                     std::to_string(field.angular_count));
  }
  const std::size_t nr = field.radial.size();
  const std::size_t na = field.angular_count;
  std::vector<HarmonicComponent> out;
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 1; j <= harmonic_count_d2(n); ++j) {
      std::vector<double> basis(na);
      for (std::size_t m = 0; m < na; ++m) basis[m] = harmonic_d2(n, j, field.theta(m));
      std::vector<complex> profile(nr);
      for (std::size_t i = 0; i < nr; ++i) {
        complex acc{};
        for (std::size_t m = 0; m < na; ++m) acc += field.at(i, m) * basis[m];
        profile[i] = acc / static_cast<double>(na);
      }
      out.push_back({n, j, SampledRadialFunction(field.radial, std::move(profile), BesselOrder(0.0))});
    }
  }
  return out;
}

std::vector<HarmonicComponent> decompose_d2_classical(const LogGrid& radial, std::size_t angular_count,
                                                      const std::function<complex(double, double)>& f,
                                                      int n_max) {
  return decompose_d2_classical(sample_polar(radial, angular_count, f), n_max);
}

PolarField resum_d2(const std::vector<HarmonicComponent>& components, std::size_t angular_count) {
  if (components.empty()) throw InputError("no components to resum");
  const LogGrid& radial = components.front().profile.grid;
  PolarField field(radial, angular_count, std::vector<complex>(radial.size() * angular_count));
  for (const auto& c : components) {
    if (!c.profile.grid.matches(radial)) throw GridMismatchError("components live on different grids");
    for (std::size_t m = 0; m < angular_count; ++m) {
      const double y = harmonic_d2(c.degree, c.index, field.theta(m));
      for (std::size_t i = 0; i < radial.size(); ++i) field.at(i, m) += c.profile.values[i] * y;
    }
  }
  return field;
}

std::vector<HarmonicComponent> transform_components(const std::vector<HarmonicComponent>& components,
                                                    BesselOrder order, HankelMethod method,
                                                    double bias) {
  std::map<int, HankelPlan> plans;
  std::vector<HarmonicComponent> out;
  out.reserve(components.size());
  for (const auto& c : components) {
    if (!(c.profile.order == order)) throw GridMismatchError("component order does not match lambda");
    auto it = plans.find(c.degree);
    if (it == plans.end()) {
      it = plans.emplace(c.degree, HankelPlan(c.profile.grid, order.shifted(c.degree), method, bias)).first;
    }
    auto transformed = component_transform(c.degree, c.profile, it->second);
    // (-i)^n / component_scale cancels the 2^n Gamma(n+lambda+1)/Gamma(lambda+1) of T_{n,lambda}
    const complex phase = std::pow(complex(0.0, -1.0), c.degree) / component_scale(c.degree, order);
    for (auto& v : transformed.values) v *= phase;
    out.push_back({c.degree, c.index, std::move(transformed)});
  }
  return out;
}

PolarField dunkl_d2_transform(const PolarField& field, int n_max, HankelMethod method, double bias) {
  const auto components = decompose_d2_classical(field, n_max);
  return resum_d2(transform_components(components, BesselOrder(0.0), method, bias), field.angular_count);
}

complex funk_hecke_d2_quadrature(int degree, int index, double r, double theta,
                                 std::size_t angular_count) {
  complex acc{};
  for (std::size_t m = 0; m < angular_count; ++m) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angular_count);
    acc += harmonic_d2(degree, index, phi) * std::polar(1.0, -r * std::cos(theta - phi));
  }
  return acc / static_cast<double>(angular_count);
}

complex funk_hecke_d2_closed_form(int degree, int index, double r, double theta) {
  const BesselOrder order(static_cast<double>(degree));
  const double radial = std::pow(r, degree) * specfun::bessel_j_norm(order, r) /
                        std::exp(degree * std::numbers::ln2 + specfun::log_gamma(degree + 1.0));
  return std::pow(complex(0.0, -1.0), degree) * harmonic_d2(degree, index, theta) * radial;
}

}  // namespace dunkl_lab
