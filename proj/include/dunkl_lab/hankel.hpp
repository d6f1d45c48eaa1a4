#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dunkl_lab/measures.hpp"

namespace dunkl_lab {

enum class HankelMethod { direct, fast };

/// Immutable description of a Hankel transform H_lambda from grid_in to
/// grid_out. Kernel tables (direct) or the Mellin multiplier and FFT plan
/// (fast) are built once here and shared by every call.
///
/// `bias` moves the Mellin line of the fast method: samples are weighted by
/// r^(lambda+1+bias) going in and rho^(lambda+1-bias) coming out, so the
/// rounding error of the output is relative to rho^(lambda+1-bias) H f.
/// pitt_bias gives the usual choice when the result feeds a rho^-beta weighted norm.
/// The direct method ignores it.
class HankelPlan {
 public:
  HankelPlan(LogGrid grid_in, LogGrid grid_out, BesselOrder order, HankelMethod method,
             double bias = 0.0);
  /// grid_out = grid_in.
  HankelPlan(const LogGrid& grid, BesselOrder order, HankelMethod method, double bias = 0.0);

  const LogGrid& grid_in() const noexcept;
  const LogGrid& grid_out() const noexcept;
  BesselOrder order() const noexcept;
  HankelMethod method() const noexcept;
  double bias() const noexcept;
  double input_power() const noexcept;   ///< lambda + 1 + bias
  double output_power() const noexcept;  ///< lambda + 1 - bias

  /// Transform with the plan's method.
  SampledRadialFunction operator()(const SampledRadialFunction& f) const;

  /// Fast-method core in log space: maps samples of r^input_power f(r) on
  /// grid_in to samples of rho^output_power H_lambda f(rho) on grid_out.
  /// Outermost 2% of the input are tapered to zero first.
  std::vector<complex> apply_log_space(std::span<const complex> weighted) const;

  struct State;

 private:
  std::shared_ptr<const State> state_;
};

/// H_lambda f(rho) = int f(r) j_lambda(rho r) dnu_lambda(r) by log-trapezoid
/// quadrature; below r_min f is continued by its first sample.
SampledRadialFunction hankel_direct(const HankelPlan& plan, const SampledRadialFunction& f);

/// Same transform through the multiplicative-convolution structure: an FFT
/// of r^(lambda+1+bias) f in u = ln r, the Mellin symbol on that line, and a
/// second FFT. O(N log N). Near rho = 0, where dividing by rho^(lambda+1-bias)
/// would magnify rounding, the power series of H_lambda f in rho^2 is used
/// instead. Requires a plan built with HankelMethod::fast.
SampledRadialFunction hankel_fast(const HankelPlan& plan, const SampledRadialFunction& f);

/// 2^(-beta - i eta) Gamma((lambda+1-beta-i eta)/2) / Gamma((lambda+1+beta+i eta)/2),
/// without range checks beyond the gamma arguments being in the right half-plane.
complex mellin_symbol(double beta, double lambda, double eta);

/// Largest beta accepted for a given lambda: (lambda + 1)(1 - 1e-6).
double max_admissible_beta(BesselOrder order) noexcept;

/// eta -> Ma_lambda(eta), the diagonal symbol of the Pitt operator in u = ln r.
class MellinMultiplier {
 public:
  MellinMultiplier(double beta, BesselOrder order);

  double beta() const noexcept { return beta_; }
  BesselOrder order() const noexcept { return order_; }
  complex evaluate(double eta) const { return mellin_symbol(beta_, order_.value(), eta); }
  complex operator()(double eta) const { return evaluate(eta); }

 private:
  double beta_;
  BesselOrder order_;
};

MellinMultiplier mellin_multiplier(double beta, BesselOrder order);

struct NormScan {
  double max_value = 0.0;   ///< max |Ma(eta)| over the scan
  double argmax_eta = 0.0;
  bool max_at_zero = false;
  bool boundary_warning = false;  ///< maximum sits on +-eta_max: scan too narrow
  double eta_max = 0.0;
  std::size_t count = 0;
};

/// Scans |Ma(eta)| on count equispaced points of [-eta_max, eta_max], plus
/// eta = 0 itself, and reports where the maximum sits.
NormScan operator_norm_scan(const MellinMultiplier& m, double eta_max = 200.0,
                            std::size_t count = 200000);

/// 2^n Gamma(lambda+n+1) / Gamma(lambda+1).
double component_scale(int n, BesselOrder order);

/// T_{n,lambda} g(rho) = int g(r) j_{n+lambda}(rho r) (rho r)^n dnu_lambda(r), computed as
/// component_scale * rho^n H_{lambda+n}(r^-n g). Output lives on g's grid with order lambda.
SampledRadialFunction component_transform(int n, BesselOrder order, const SampledRadialFunction& g,
                                          HankelMethod method = HankelMethod::fast, double bias = 0.0);

/// Same, reusing a self-reciprocal plan of order lambda + n over g's grid.
SampledRadialFunction component_transform(int n, const SampledRadialFunction& g,
                                          const HankelPlan& plan_n);

}  // namespace dunkl_lab
