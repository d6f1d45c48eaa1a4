#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl_lab/dunkl.hpp"
#include "dunkl_lab/error.hpp"
#include "dunkl_lab/testfun.hpp"

using namespace dunkl_lab;
using std::numbers::pi;

namespace {

constexpr complex I{0.0, 1.0};

double line_relative_l2(const SampledLineFunction& a, const SampledLineFunction& b) {
  auto diff = a;
  for (std::size_t i = 0; i < diff.positive.size(); ++i) {
    diff.positive[i] -= b.positive[i];
    diff.negative[i] -= b.negative[i];
  }
  return std::sqrt(line_weighted_mass(diff, 0.0) / line_weighted_mass(b, 0.0));
}

double component_mass(const std::vector<HarmonicComponent>& components) {
  double total = 0.0;
  for (const auto& c : components) total += weighted_mass(c.profile, 0.0);
  return total;
}

}  // namespace

TEST_CASE("rank-one kernel") {
  for (double lambda : {-0.5, 0.0, 1.5}) {
    const DunklKernel1d e{BesselOrder(lambda)};
    CHECK(std::abs(e(0.0) - 1.0) <= 1e-15);
    for (double t : {0.3, 2.0, 17.0}) {
      CHECK(std::abs(e(-t) - std::conj(e(t))) <= 1e-14);
      CHECK(std::abs(e(t)) <= 1.0 + 1e-14);
    }
  }
  for (double t : {-4.0, 0.7, 25.0}) CHECK(std::abs(dunkl_kernel_1d(BesselOrder(-0.5), t) - std::exp(I * t)) <= 1e-14);
}

TEST_CASE("rank-one Dunkl operator") {
  const BesselOrder order(0.5);
  CHECK(std::abs(dunkl_operator_rank1([](double) { return complex(1.0); }, order, 0.8)) <= 1e-9);
  CHECK(std::abs(dunkl_operator_rank1([](double x) { return complex(x); }, order, -1.3) - 3.0) <= 1e-9);
  for (double y : {0.4, 1.3}) {
    for (double x : {-2.0, 0.5, 3.1}) {
      const auto f = [&](double t) { return dunkl_kernel_1d(order, t * y); };
      CHECK(std::abs(dunkl_operator_rank1(f, order, x) - I * y * f(x)) <= 1e-5);
    }
  }
  CHECK_THROWS_AS(dunkl_operator_rank1([](double) { return complex(1.0); }, order, 0.0), DomainError);
}

TEST_CASE("parity is preserved by the transform") {
  const auto grid = GridSpec{}.make();
  const BesselOrder order(1.0);
  const auto even = sample_line(grid, order, [](double t) { return complex(std::exp(-0.5 * t * t) * (1 + t * t)); });
  const auto odd = sample_line(grid, order, [](double t) { return complex(t * std::exp(-t * t)); });
  const auto fe = dunkl1d_transform(even);
  const auto fo = dunkl1d_transform(odd);
  CHECK(std::sqrt(weighted_mass(fe.odd_part(), 0.0) / weighted_mass(fe.even_part(), 0.0)) <= 1e-10);
  CHECK(std::sqrt(weighted_mass(fo.even_part(), 0.0) / weighted_mass(fo.odd_part(), 0.0)) <= 1e-10);
}

TEST_CASE("rank-one transform: Gaussian, Plancherel and inversion") {
  const auto grid = GridSpec{}.make();
  const auto suite = random_suite(41, 20);
  for (double lambda : {-0.5, 0.0, 0.5, 2.0}) {
    const BesselOrder order(lambda);
    INFO("lambda = " << lambda);
    const auto g = sample_line(grid, order, [](double t) { return complex(std::exp(-0.5 * t * t)); });
    CHECK(line_relative_l2(dunkl1d_transform(g), g) <= 1e-10);
    for (const auto& m : suite) {
      const auto f = sample_line(m, grid, order);
      const auto once = dunkl1d_transform(f);
      CHECK(line_weighted_mass(once, 0.0) / line_weighted_mass(f, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
      auto reflected = f;
      std::swap(reflected.positive, reflected.negative);
      CHECK(line_relative_l2(dunkl1d_transform(once), reflected) <= 1e-6);
    }
  }
}

TEST_CASE("lambda = -1/2 is the unitary Fourier transform") {
  const auto grid = GridSpec{}.make();
  const BesselOrder order(-0.5);
  for (double a : {0.25, 0.5, 2.0}) {
    const auto f = sample_line(grid, order, [a](double t) { return complex(std::exp(-a * t * t) * (1.0 + t)); });
    const auto expected = sample_line(grid, order, [a](double s) {
      return std::exp(-s * s / (4 * a)) / std::sqrt(2 * a) * (1.0 - I * s / (2 * a));
    });
    for (auto method : {HankelMethod::fast, HankelMethod::direct}) {
      const auto h = dunkl1d_transform(f, method);
      double worst = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] > 10.0) break;
        worst = std::max({worst, std::abs(h.positive[i] - expected.positive[i]),
                          std::abs(h.negative[i] - expected.negative[i])});
      }
      CHECK(worst <= 1e-8);
    }
  }
}

TEST_CASE("radial Dunkl transform in Z_2^d") {
  const auto grid = GridSpec{}.make();
  const MultiplicityZ2d mult({0.5, 0.0, 1.0});
  const auto f = sample_radial(grid, mult.order(), [](double r) { return complex(std::exp(-0.5 * r * r)); });
  const auto h = dunkl_radial_transform(mult, f);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(h.values[i] - f.values[i]));
  CHECK(worst <= 1e-10);
  CHECK_THROWS_AS(dunkl_radial_transform(MultiplicityZ2d({0.5, 0.0}), f), GridMismatchError);
}

TEST_CASE("two-dimensional radial transform against tensor quadrature") {
  // (1 + x^2 + y^2) e^(-|x|^2/2) is a sum of products, so the 2D integral
  // factors into one-dimensional oscillatory integrals.
  boost::math::quadrature::sinh_sinh<double> ss;
  const auto ft = [&](int power, double s) {
    const double re = ss.integrate([&](double x) { return std::pow(x, power) * std::exp(-0.5 * x * x) * std::cos(s * x); });
    return re / std::sqrt(2 * pi);
  };
  const auto grid = GridSpec{}.make();
  const BesselOrder order(0.0);
  const auto f = sample_radial(grid, order, [](double r) { return complex((1 + r * r) * std::exp(-0.5 * r * r)); });
  const auto h = dunkl_radial_transform(MultiplicityZ2d({0.0, 0.0}), f);
  for (std::size_t i = 0; i < grid.size(); i += 41) {
    const double rho = grid[i];
    if (rho < 0.05 || rho > 6.0) continue;
    const double s1 = rho * std::cos(0.3);
    const double s2 = rho * std::sin(0.3);
    const double oracle = ft(0, s1) * ft(0, s2) + ft(2, s1) * ft(0, s2) + ft(0, s1) * ft(2, s2);
    INFO("rho = " << rho);
    CHECK(std::abs(h.values[i].real() - oracle) <= 1e-9);
  }
}

TEST_CASE("harmonic decomposition in d = 2") {
  const auto grid = GridSpec{}.make();
  SuiteRng rng(12);
  const auto mixture = random_polar_mixture(rng, 3);
  const auto field = sample_polar(grid, 16, [&](double r, double th) { return mixture(r, th); });
  const auto components = decompose_d2_classical(field, 3);
  CHECK(components.size() == 7);

  SUBCASE("resummation recovers the field") {
    const auto back = resum_d2(components, 16);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < field.values.size(); ++k) {
      worst = std::max(worst, std::abs(back.values[k] - field.values[k]));
      scale = std::max(scale, std::abs(field.values[k]));
    }
    CHECK(worst <= 1e-12 * scale);
  }
  SUBCASE("energy splits over components") {
    double total = 0.0;
    for (std::size_t m = 0; m < 16; ++m) {
      std::vector<complex> row(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) row[i] = field.at(i, m);
      total += weighted_mass(SampledRadialFunction(grid, row, BesselOrder(0.0)), 0.0) / 16.0;
    }
    CHECK(component_mass(components) == doctest::Approx(total).epsilon(1e-10));
  }
  SUBCASE("Plancherel over components") {
    CHECK(component_mass(transform_components(components, BesselOrder(0.0))) ==
          doctest::Approx(component_mass(components)).epsilon(1e-6));
  }
  SUBCASE("contracts") {
    CHECK_THROWS_AS(decompose_d2_classical(field, 5), RangeError);
    CHECK_THROWS_AS(harmonic_d2(0, 2, 0.1), RangeError);
    CHECK_THROWS_AS(harmonic_d2(-1, 1, 0.1), RangeError);
    CHECK(harmonic_count_d2(0) == 1);
    CHECK(harmonic_count_d2(4) == 2);
  }
}

TEST_CASE("cos theta component") {
  const auto grid = GridSpec{}.make();
  const auto components = decompose_d2_classical(
      grid, 8, [](double r, double th) { return complex(r * std::exp(-0.5 * r * r) * std::cos(th)); }, 1);
  const auto out = transform_components(components, BesselOrder(0.0));
  for (const auto& c : out) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double rho = grid[i];
      const complex expected =
          (c.degree == 1 && c.index == 1) ? -I * rho * std::exp(-0.5 * rho * rho) / std::sqrt(2.0) : complex{};
      worst = std::max(worst, std::abs(c.profile.values[i] - expected));
    }
    INFO("degree " << c.degree << " index " << c.index);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("two-dimensional transform of a polynomial times a Gaussian") {
  const auto grid = GridSpec{}.make();
  const auto field = sample_polar(grid, 16, [](double r, double th) {
    const double x = r * std::cos(th);
    const double y = r * std::sin(th);
    return complex((1.0 + x + x * y) * std::exp(-0.5 * r * r));
  });
  const auto out = dunkl_d2_transform(field, 3);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t m = 0; m < 16; ++m) {
      const double s1 = grid[i] * std::cos(out.theta(m));
      const double s2 = grid[i] * std::sin(out.theta(m));
      const complex expected = std::exp(-0.5 * grid[i] * grid[i]) * (1.0 - I * s1 - s1 * s2);
      worst = std::max(worst, std::abs(out.at(i, m) - expected));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Funk-Hecke identity for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (int j = 1; j <= harmonic_count_d2(n); ++j) {
      for (double r : {0.1, 1.0, 4.5, 12.0}) {
        for (double th : {0.0, 0.9, 2.5}) {
          INFO("n = " << n << ", j = " << j << ", r = " << r << ", theta = " << th);
          CHECK(std::abs(funk_hecke_d2_quadrature(n, j, r, th) - funk_hecke_d2_closed_form(n, j, r, th)) <= 1e-10);
        }
      }
    }
  }
}
