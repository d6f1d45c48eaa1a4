#include "dunkl_lab/testfun.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl_lab {

complex GaussianMixture::operator()(double t) const {
  complex sum{};
  for (const auto& term : terms) {
    double power = 1.0;
    for (int k = 0; k < term.power; ++k) power *= t;
    sum += term.coeff * power * std::exp(-term.rate * t * t);
  }
  return sum;
}

namespace {

complex random_coeff(SuiteRng& rng) {
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return {re, im};
}

GaussianMixture random_even_mixture(SuiteRng& rng, int max_terms) {
  GaussianMixture g;
  const int n = rng.integer(1, max_terms);
  for (int j = 0; j < n; ++j) {
    const int power = 2 * rng.integer(0, 1);
    const double rate = rng.uniform(0.25, 4.0);
    g.terms.push_back({power, rate, random_coeff(rng)});
  }
  return g;
}

}  // namespace

GaussianMixture random_mixture(SuiteRng& rng, int max_terms) {
  GaussianMixture g;
  const int n = rng.integer(1, max_terms);
  for (int j = 0; j < n; ++j) {
    const int power = rng.integer(0, 2);
    const double rate = rng.uniform(0.25, 4.0);
    g.terms.push_back({power, rate, random_coeff(rng)});
  }
  return g;
}

std::vector<GaussianMixture> random_suite(std::uint64_t seed, std::size_t count, int max_terms) {
  SuiteRng rng(seed);
  std::vector<GaussianMixture> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_mixture(rng, max_terms));
  return out;
}

complex PolarMixture::operator()(double r, double theta) const {
  complex sum{};
  for (const auto& term : terms) {
    const double rn = std::pow(r, term.degree);
    const complex angular =
        term.cos_coeff * std::cos(term.degree * theta) + term.sin_coeff * std::sin(term.degree * theta);
    sum += rn * term.radial(r) * angular;
  }
  return sum;
}

int PolarMixture::max_degree() const {
  int n = 0;
  for (const auto& term : terms) n = std::max(n, term.degree);
  return n;
}

PolarMixture random_polar_mixture(SuiteRng& rng, int n_max) {
  PolarMixture p;
  for (int n = 0; n <= n_max; ++n) {
    const complex s = n == 0 ? complex{} : random_coeff(rng);
    p.terms.push_back({n, random_even_mixture(rng, 2), random_coeff(rng), s});
  }
  return p;
}

PolarMixture random_pure_degree(SuiteRng& rng, int degree) {
  PolarMixture p;
  const complex s = degree == 0 ? complex{} : random_coeff(rng);
  p.terms.push_back({degree, random_even_mixture(rng, 2), random_coeff(rng), s});
  return p;
}

SampledRadialFunction sample(const GaussianMixture& g, const LogGrid& grid, BesselOrder order) {
  return sample_radial(grid, order, [&g](double r) { return g(r); });
}

SampledLineFunction sample_line(const GaussianMixture& g, const LogGrid& grid, BesselOrder order) {
  return sample_line(grid, order, [&g](double t) { return g(t); });
}

}  // namespace dunkl_lab
