#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "dunkl_lab/hankel.hpp"
#include "dunkl_lab/measures.hpp"

namespace dunkl_lab {

/// Rank-one kernel e_lambda(t) = j_lambda(t) - i j'_lambda(t).
class DunklKernel1d {
 public:
  explicit DunklKernel1d(BesselOrder order) : order_(order) {}
  BesselOrder order() const noexcept { return order_; }
  complex operator()(double t) const;

 private:
  BesselOrder order_;
};

complex dunkl_kernel_1d(BesselOrder order, double t);

/// Df(x) = f'(x) + (lambda + 1/2)(f(x) - f(-x))/x, with f' by central
/// difference of step `step`. Throws DomainError at x = 0.
complex dunkl_operator_rank1(const std::function<complex(double)>& f, BesselOrder order, double x,
                             double step = 1e-5);

/// Samples of a function on the real line at the symmetric points +-r_i.
struct SampledLineFunction {
  SampledLineFunction(LogGrid grid, std::vector<complex> positive, std::vector<complex> negative,
                      BesselOrder order);

  LogGrid grid;
  std::vector<complex> positive;  ///< f(r_i)
  std::vector<complex> negative;  ///< f(-r_i)
  BesselOrder order;

  SampledRadialFunction even_part() const;
  SampledRadialFunction odd_part() const;
};

SampledLineFunction sample_line(const LogGrid& grid, BesselOrder order,
                                const std::function<complex(double)>& f);

/// int |t|^(2 beta) |f(t)|^2 dmu_lambda(t), dmu_lambda = |t|^(2 lambda+1) dt / (2^(lambda+1) Gamma(lambda+1)).
double line_weighted_mass(const SampledLineFunction& f, double beta, Tail tail = Tail::constant);
double line_log_weighted_mass(const SampledLineFunction& f, Tail tail = Tail::constant);

/// F_lambda f(s) = int f(t) conj(e_lambda(s t)) dmu_lambda(t), computed by
/// parity splitting: F f(s) = H_lambda(f_even)(|s|) - i s H_{lambda+1}(f_odd(t)/t)(|s|).
/// `bias` is passed to the fast Hankel plans (see HankelPlan).
SampledLineFunction dunkl1d_transform(const SampledLineFunction& f,
                                      HankelMethod method = HankelMethod::fast, double bias = 0.0);

/// d-dimensional Dunkl transform of a radial profile: H_{lambda_k}.
SampledRadialFunction dunkl_radial_transform(const MultiplicityZ2d& mult, const SampledRadialFunction& f,
                                             HankelMethod method = HankelMethod::fast, double bias = 0.0);

/// Samples f(r_i, theta_m) on a log grid in r and M uniform angles theta_m = 2 pi m / M.
struct PolarField {
  PolarField(LogGrid radial, std::size_t angular_count, std::vector<complex> values);

  LogGrid radial;
  std::size_t angular_count;
  std::vector<complex> values;  ///< row-major, values[i * angular_count + m]

  double theta(std::size_t m) const noexcept;
  complex& at(std::size_t i, std::size_t m) { return values[i * angular_count + m]; }
  const complex& at(std::size_t i, std::size_t m) const { return values[i * angular_count + m]; }
};

PolarField sample_polar(const LogGrid& radial, std::size_t angular_count,
                        const std::function<complex(double, double)>& f);

/// One summand f_nj(r) Y_n^j of the spherical-harmonic expansion.
/// For d = 2, k = 0: index 1 is the constant (n = 0) or sqrt(2) cos(n theta),
/// index 2 is sqrt(2) sin(n theta).
struct HarmonicComponent {
  int degree;
  int index;
  SampledRadialFunction profile;
};

/// Y_n^j(theta), orthonormal under d theta / (2 pi).
double harmonic_d2(int degree, int index, double theta);

/// Number of harmonics of degree n on S^1 (l_0 = 1, l_n = 2).
int harmonic_count_d2(int degree);

/// f_nj(r) = int f(r x') Y_n^j(x') d omega_0(x') by the uniform angular
/// trapezoid rule, for n <= n_max. Needs angular_count >= 4 n_max.
std::vector<HarmonicComponent> decompose_d2_classical(const PolarField& field, int n_max);
std::vector<HarmonicComponent> decompose_d2_classical(const LogGrid& radial, std::size_t angular_count,
                                                      const std::function<complex(double, double)>& f,
                                                      int n_max);

/// sum_nj f_nj(r_i) Y_n^j(theta_m).
PolarField resum_d2(const std::vector<HarmonicComponent>& components, std::size_t angular_count);

/// Maps each profile to ((-i)^n Gamma(lambda+1) / (2^n Gamma(n+lambda+1))) T_{n,lambda} f_nj.
std::vector<HarmonicComponent> transform_components(const std::vector<HarmonicComponent>& components,
                                                    BesselOrder order,
                                                    HankelMethod method = HankelMethod::fast,
                                                    double bias = 0.0);

/// Classical two-dimensional Fourier transform (k = 0) of polar samples,
/// through the degree <= n_max harmonic components.
PolarField dunkl_d2_transform(const PolarField& field, int n_max,
                              HankelMethod method = HankelMethod::fast, double bias = 0.0);

/// Left side of the d = 2, k = 0 Funk-Hecke identity,
/// int_{S^1} Y_n^j(y') exp(-i <x, y'>) d omega_0(y') at x = r (cos theta, sin theta),
/// by the M-point angular trapezoid rule.
complex funk_hecke_d2_quadrature(int degree, int index, double r, double theta,
                                 std::size_t angular_count = 128);
/// Right side: ((-i)^n / (2^n n!)) Y_n^j(theta) r^n j_n(r).
complex funk_hecke_d2_closed_form(int degree, int index, double r, double theta);

}  // namespace dunkl_lab
