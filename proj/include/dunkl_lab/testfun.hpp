#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dunkl_lab/dunkl.hpp"
#include "dunkl_lab/measures.hpp"

namespace dunkl_lab {

/// Uniform doubles from mt19937_64 with a fixed bit mapping, so a seed gives
/// the same numbers on every platform.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// sum_j c_j t^m_j exp(-a_j t^2); t may be negative, which gives odd terms for odd m.
struct GaussianMixture {
  struct Term {
    int power;
    double rate;
    complex coeff;
  };
  std::vector<Term> terms;

  complex operator()(double t) const;
};

/// m in {0, 1, 2}, a in [1/4, 4], complex coefficients with parts in [-1, 1].
GaussianMixture random_mixture(SuiteRng& rng, int max_terms = 3);
std::vector<GaussianMixture> random_suite(std::uint64_t seed, std::size_t count, int max_terms = 3);

/// d = 2 field sum_n r^n p_n(r) (alpha_n cos n theta + beta_n sin n theta), with
/// p_n a Gaussian mixture in r^2, so each term is smooth at the origin.
struct PolarMixture {
  struct Term {
    int degree;
    GaussianMixture radial;  // even powers only
    complex cos_coeff;
    complex sin_coeff;
  };
  std::vector<Term> terms;

  complex operator()(double r, double theta) const;
  int max_degree() const;
};

/// Degrees 0..n_max all present.
PolarMixture random_polar_mixture(SuiteRng& rng, int n_max);
/// A single degree n.
PolarMixture random_pure_degree(SuiteRng& rng, int degree);

SampledRadialFunction sample(const GaussianMixture& g, const LogGrid& grid, BesselOrder order);
SampledLineFunction sample_line(const GaussianMixture& g, const LogGrid& grid, BesselOrder order);

}  // namespace dunkl_lab
