#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dunkl_lab/specfun.hpp"

namespace dunkl_lab {

using complex = std::complex<double>;

/// Geometric grid r_i = r_min (r_max/r_min)^(i/(count-1)).
class LogGrid {
 public:
  LogGrid(double r_min, double r_max, std::size_t count);

  double r_min() const noexcept { return points_.front(); }
  double r_max() const noexcept { return points_.back(); }
  std::size_t size() const noexcept { return points_.size(); }
  /// Spacing in u = ln r.
  double log_step() const noexcept { return log_step_; }
  double log_min() const noexcept { return log_min_; }
  double log_point(std::size_t i) const noexcept { return log_min_ + log_step_ * static_cast<double>(i); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const double> points() const noexcept { return points_; }

  /// Same count and same endpoints to relative `tol`.
  bool matches(const LogGrid& other, double tol = 1e-12) const noexcept;
  /// Same log spacing to relative `tol` (counts may differ).
  bool same_spacing(const LogGrid& other, double tol = 1e-12) const noexcept;

 private:
  double log_min_;
  double log_step_;
  std::vector<double> points_;
};

LogGrid make_log_grid(double r_min, double r_max, std::size_t count);

/// Grid used when nothing else is requested. Wide enough at the small end
/// that r^(lambda+1) f(r) is negligible there for every lambda >= -1/2.
struct GridSpec {
  double r_min = 1e-14;
  double r_max = 1e6;
  std::size_t count = 4096;

  LogGrid make() const { return make_log_grid(r_min, r_max, count); }
};

/// Samples of a radial profile together with the order of its measure dnu_lambda.
struct SampledRadialFunction {
  SampledRadialFunction(LogGrid grid, std::vector<complex> values, BesselOrder order);

  LogGrid grid;
  std::vector<complex> values;
  BesselOrder order;
};

SampledRadialFunction sample_radial(const LogGrid& grid, BesselOrder order,
                                    const std::function<complex(double)>& profile);

/// Multiplicity function for the reflection group Z_2^d.
class MultiplicityZ2d {
 public:
  explicit MultiplicityZ2d(std::vector<double> k);

  std::size_t dimension() const noexcept { return k_.size(); }
  std::span<const double> k() const noexcept { return k_; }
  double k_total() const noexcept { return k_total_; }
  double lambda_k() const noexcept { return 0.5 * static_cast<double>(k_.size()) - 1.0 + k_total_; }
  BesselOrder order() const { return BesselOrder(lambda_k()); }
  /// v_k(x) = prod |x_j|^(2 k_j).
  double weight(std::span<const double> x) const;

 private:
  std::vector<double> k_;
  double k_total_;
};

/// Normalizers of dnu_lambda (b), dmu_k (c_k) and d omega_k (a_k).
struct WeightConstants {
  double b_lambda;
  double c_k;
  double a_k;
};

/// b_lambda = 1 / (2^lambda Gamma(lambda + 1)).
double b_lambda(BesselOrder order);

/// Closed-form Macdonald-Mehta-Selberg constant for Z_2^d together with
/// b_{lambda_k} and the sphere normalizer a_k they determine.
WeightConstants mms_constant(const MultiplicityZ2d& mult);

/// Treatment of the region (0, r_min) in radial quadratures.
enum class Tail {
  constant,  ///< f is taken constant below r_min and the power-law tail added exactly
  none,      ///< plain log-trapezoid sum
};

/// Log-trapezoid quadrature of int I(u) du over the grid span, where
/// `density[i]` samples I at u_i = ln r_i. If `lower_rate` > 0 the region
/// below r_min is closed with I(u) = I_0 exp(rate (u - u_0)).
double integrate_log_trapezoid(const LogGrid& grid, std::span<const double> density,
                               double lower_rate = 0.0);
/// Same, for int u I(u) du.
double integrate_log_trapezoid_ln(const LogGrid& grid, std::span<const double> density,
                                  double lower_rate = 0.0);

/// int_0^inf r^(2 beta) |f(r)|^2 dnu_lambda(r).
double weighted_mass(const SampledRadialFunction& f, double beta, Tail tail = Tail::constant);

/// ||r^beta f||_{2, dnu_lambda}. Accuracy relies on f being negligible past
/// r_max; the caller owns that.
double weighted_norm(const SampledRadialFunction& f, double beta, Tail tail = Tail::constant);

/// int_0^inf ln(r) r^(2 beta) |f(r)|^2 dnu_lambda(r).
double log_weighted_mass(const SampledRadialFunction& f, double beta = 0.0,
                         Tail tail = Tail::constant);

/// Pointwise r^p f(r), keeping grid and order.
SampledRadialFunction multiply_by_power(const SampledRadialFunction& f, double p);

}  // namespace dunkl_lab
