#pragma once

#include <complex>

namespace dunkl_lab {

/// Order lambda of a normalized Bessel function, lambda >= -1/2.
class BesselOrder {
 public:
  explicit BesselOrder(double lambda);

  double value() const noexcept { return lambda_; }
  BesselOrder shifted(double by) const { return BesselOrder(lambda_ + by); }

  friend bool operator==(BesselOrder, BesselOrder) = default;

 private:
  double lambda_;
};

namespace specfun {

/// ln Gamma(z) for Re z > 0, on the branch that is real on the positive
/// axis and continuous in the right half-plane. Throws DomainError otherwise.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// ln Gamma(x) for real x > 0.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0, evaluated through the log-gamma difference.
double gamma_ratio(double a, double b);

/// psi(x) = d ln Gamma(x) / dx for x > 0.
double digamma(double x);

/// j_lambda(t) = 2^lambda Gamma(lambda+1) t^-lambda J_lambda(t), t >= 0.
double bessel_j_norm(BesselOrder order, double t);

/// d/dt j_lambda(t) = -t j_{lambda+1}(t) / (2(lambda+1)).
double bessel_j_norm_deriv(BesselOrder order, double t);

// Exposed so the two evaluation regimes can be compared on their overlap.
double bessel_j_norm_series(double lambda, double t);
double bessel_j_norm_large(double lambda, double t);
/// Argument below which the power series is used.
double bessel_series_crossover(double lambda);

}  // namespace specfun
}  // namespace dunkl_lab
