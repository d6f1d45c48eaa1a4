#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dunkl_lab/dunkl.hpp"
#include "dunkl_lab/hankel.hpp"
#include "dunkl_lab/measures.hpp"

namespace dunkl_lab {

/// beta and the order of the ambient measure. With a multiplicity the
/// order is lambda_k. Throws RangeError unless 0 <= beta < lambda + 1.
struct PittParams {
  PittParams(double beta, BesselOrder order);
  PittParams(double beta, const MultiplicityZ2d& mult);

  double beta;
  BesselOrder order;
  std::optional<MultiplicityZ2d> mult;
};

/// c(beta, lambda) = 2^-beta Gamma((lambda+1-beta)/2) / Gamma((lambda+1+beta)/2).
double sharp_constant_hankel(const PittParams& p);
/// C(beta, k) = c(beta, lambda_k).
double sharp_constant_dunkl(double beta, const MultiplicityZ2d& mult);
/// The same gamma ratio without the sign restriction, for |beta| < lambda + 1.
double sharp_constant_formula(double beta, double lambda);

/// Mellin line bias for fast transforms whose output feeds a rho^-beta weighted
/// norm: beta, capped at lambda + 1/2.
double pitt_bias(double beta, BesselOrder order);

using RadialTransform = std::function<SampledRadialFunction(const SampledRadialFunction&)>;
using LineTransform = std::function<SampledLineFunction(const SampledLineFunction&)>;
using ComponentTransform =
    std::function<std::vector<HarmonicComponent>(const std::vector<HarmonicComponent>&)>;

/// ||rho^-beta T f|| / ||r^beta f||. Throws InputError when the denominator vanishes.
double pitt_ratio(const PittParams& p, const SampledRadialFunction& f, const RadialTransform& transform);
double pitt_ratio(const PittParams& p, const SampledLineFunction& f, const LineTransform& transform);
/// Norms summed over components, which is the full norm for an orthonormal angular basis.
double pitt_ratio(const PittParams& p, const std::vector<HarmonicComponent>& f,
                  const ComponentTransform& transform);

/// Grid wide enough that the transform of the R-family is resolved in both tails.
LogGrid near_extremizer_grid(const PittParams& p, double R, std::size_t count = 8192);
/// f = r^(-beta-lambda-1) on [1/R, R], zero outside, scaled so ||r^beta f|| = 1.
/// Under g = f r^(beta+lambda+1/2) this is g = r^(-1/2) on [1/R, R].
SampledRadialFunction near_extremizer_family(const PittParams& p, double R, const LogGrid& grid);
SampledRadialFunction near_extremizer_family(const PittParams& p, double R);

struct MonotonicityRow {
  double lambda;
  double constant;
};
/// c(beta, lambda) on `steps` equispaced lambda in [lambda_min, lambda_max].
std::vector<MonotonicityRow> monotonicity_table(double beta, double lambda_min, double lambda_max,
                                                int steps);

struct UncertaintyReport {
  double lhs_space = 0.0;  ///< int ln|x| |f|^2
  double lhs_freq = 0.0;   ///< int ln|y| |F f|^2
  double rhs_coeff = 0.0;  ///< psi((lambda+1)/2) + ln 2
  double mass = 0.0;       ///< int |f|^2
  double gap = 0.0;        ///< lhs_space + lhs_freq - rhs_coeff mass
};

double uncertainty_coefficient(BesselOrder order);

/// Hankel regime at f.order.
UncertaintyReport log_uncertainty_gap(const SampledRadialFunction& f,
                                      HankelMethod method = HankelMethod::fast);
/// Rank-one Dunkl regime.
UncertaintyReport log_uncertainty_gap(const SampledLineFunction& f,
                                      HankelMethod method = HankelMethod::fast);
/// Radial profile in Z_2^d at lambda_k.
UncertaintyReport log_uncertainty_gap(const MultiplicityZ2d& mult, const SampledRadialFunction& f,
                                      HankelMethod method = HankelMethod::fast);
/// d = 2 classical field given by its harmonic components.
UncertaintyReport log_uncertainty_gap(const std::vector<HarmonicComponent>& components,
                                      HankelMethod method = HankelMethod::fast);

struct DerivativeCheck {
  double finite_difference;
  double analytic;
  bool extrapolated;  ///< Richardson step was needed
};
/// -d c^2(beta/2, lambda)/d beta at 0 by central difference against psi((lambda+1)/2) + ln 2.
DerivativeCheck derivative_identity_check(BesselOrder order, double step = 1e-5);

/// phi(beta) = int |y|^-beta |F f|^2 - c^2(beta/2, lambda) int |x|^beta |f|^2
/// for a radial f and its transform.
double phi_function(const SampledRadialFunction& f, const SampledRadialFunction& transformed, double beta);

}  // namespace dunkl_lab
