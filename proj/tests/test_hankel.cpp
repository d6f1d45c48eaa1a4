#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <thread>

#include "doctest.h"
#include "dunkl_lab/error.hpp"
#include "dunkl_lab/hankel.hpp"
#include "dunkl_lab/pitt.hpp"
#include "dunkl_lab/testfun.hpp"

using namespace dunkl_lab;

namespace {

const double kLambdas[] = {-0.5, 0.0, 0.5, 1.0, 2.5};

SampledRadialFunction gaussian(const LogGrid& grid, BesselOrder order) {
  return sample_radial(grid, order, [](double r) { return complex(std::exp(-0.5 * r * r)); });
}

// max |f - e^(-rho^2/2)| / max e^(-rho^2/2) over rho in [lo, hi]
double gaussian_error(const SampledRadialFunction& f, double lo, double hi) {
  double err = 0.0;
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    const double rho = f.grid[i];
    if (rho < lo || rho > hi) continue;
    err = std::max(err, std::abs(f.values[i] - std::exp(-0.5 * rho * rho)));
  }
  return err / std::exp(-0.5 * lo * lo);
}

double relative_l2(const SampledRadialFunction& a, const SampledRadialFunction& b, double rho_max = INFINITY) {
  auto diff = a;
  auto ref = b;
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    const bool inside = a.grid[i] <= rho_max;
    diff.values[i] = inside ? a.values[i] - b.values[i] : complex{};
    ref.values[i] = inside ? b.values[i] : complex{};
  }
  return weighted_norm(diff, 0.0) / weighted_norm(ref, 0.0);
}

// Largest rho at which the direct quadrature still resolves j_lambda(rho r)
// over the support of a Gaussian with rate >= 1/4.
constexpr double kDirectResolved = 20.0;

}  // namespace

TEST_CASE("Gaussian is a fixed point of H_lambda") {
  const auto grid = GridSpec{}.make();
  for (double lambda : kLambdas) {
    const BesselOrder order(lambda);
    const auto f = gaussian(grid, order);
    INFO("lambda = " << lambda);
    CHECK(gaussian_error(HankelPlan(grid, order, HankelMethod::direct)(f), 1e-2, 10.0) <= 1e-8);
    CHECK(gaussian_error(HankelPlan(grid, order, HankelMethod::fast)(f), 1e-2, 10.0) <= 1e-8);
  }
}

TEST_CASE("fast transform agrees with direct quadrature") {
  const auto grid = GridSpec{}.make();
  const auto suite = random_suite(5, 20);
  for (double lambda : kLambdas) {
    const BesselOrder order(lambda);
    const HankelPlan fast(grid, order, HankelMethod::fast);
    const HankelPlan direct(grid, order, HankelMethod::direct);
    double worst = 0.0;
    for (const auto& g : suite) {
      const auto f = sample(g, grid, order);
      worst = std::max(worst, relative_l2(fast(f), direct(f), kDirectResolved));
    }
    INFO("lambda = " << lambda);
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("Plancherel and involution over 50 random functions") {
  const auto grid = GridSpec{}.make();
  const auto suite = random_suite(17, 50);
  for (double lambda : kLambdas) {
    const BesselOrder order(lambda);
    const HankelPlan plan(grid, order, HankelMethod::fast);
    double plancherel = 0.0;
    double involution = 0.0;
    for (const auto& g : suite) {
      const auto f = sample(g, grid, order);
      const auto once = plan(f);
      plancherel = std::max(plancherel, std::abs(weighted_norm(once, 0.0) / weighted_norm(f, 0.0) - 1.0));
      involution = std::max(involution, relative_l2(plan(once), f));
    }
    INFO("lambda = " << lambda);
    CHECK(plancherel <= 1e-6);
    CHECK(involution <= 1e-6);
  }
}

TEST_CASE("involution on a compact bump") {
  const auto grid = GridSpec{}.make();
  for (double lambda : {0.0, 1.5}) {
    const BesselOrder order(lambda);
    const auto f = sample_radial(grid, order, [](double r) {
      const double s = r / 2.0;
      return complex(s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s * s)) : 0.0);
    });
    const HankelPlan plan(grid, order, HankelMethod::fast);
    CHECK(relative_l2(plan(plan(f)), f) <= 1e-6);
  }
}

TEST_CASE("biased Mellin line gives the same transform") {
  const auto grid = GridSpec{}.make();
  const BesselOrder order(1.0);
  const auto f = sample(random_suite(3, 1).front(), grid, order);
  const auto plain = HankelPlan(grid, order, HankelMethod::fast)(f);
  const auto biased = HankelPlan(grid, order, HankelMethod::fast, 0.7)(f);
  CHECK(relative_l2(biased, plain) <= 1e-10);
  CHECK_THROWS_AS(HankelPlan(grid, order, HankelMethod::fast, 2.0), RangeError);
}

TEST_CASE("plan contracts") {
  const auto a = make_log_grid(1e-3, 1e3, 64);
  const auto b = make_log_grid(1e-3, 1e3, 65);
  const auto c = make_log_grid(1e-2, 1e3, 64);
  CHECK_THROWS_AS(HankelPlan(a, b, BesselOrder(0), HankelMethod::fast), GridMismatchError);
  CHECK_THROWS_AS(HankelPlan(a, c, BesselOrder(0), HankelMethod::fast), GridMismatchError);
  CHECK_NOTHROW(HankelPlan(a, c, BesselOrder(0), HankelMethod::direct));
  CHECK_THROWS_AS(HankelPlan(make_log_grid(1, 2, 15), BesselOrder(0), HankelMethod::direct), RangeError);

  const HankelPlan plan(a, BesselOrder(0), HankelMethod::fast);
  CHECK_THROWS_AS(plan(gaussian(a, BesselOrder(1))), GridMismatchError);
  CHECK_THROWS_AS(plan(gaussian(c, BesselOrder(0))), GridMismatchError);
  CHECK_THROWS_AS(hankel_fast(HankelPlan(a, BesselOrder(0), HankelMethod::direct), gaussian(a, BesselOrder(0))),
                  GridMismatchError);
}

TEST_CASE("direct transform onto a different grid") {
  const auto in = GridSpec{}.make();
  const auto out = make_log_grid(0.05, 8.0, 100);
  const BesselOrder order(0.5);
  const auto h = HankelPlan(in, out, order, HankelMethod::direct)(gaussian(in, order));
  double worst = 0.0;
  for (std::size_t j = 0; j < out.size(); ++j) worst = std::max(worst, std::abs(h.values[j] - std::exp(-0.5 * out[j] * out[j])));
  CHECK(worst <= 1e-10);
}

TEST_CASE("concurrent transforms over one shared plan") {
  const auto grid = GridSpec{}.make();
  const BesselOrder order(0.5);
  const HankelPlan plan(grid, order, HankelMethod::fast);
  const auto suite = random_suite(23, 4);
  std::vector<SampledRadialFunction> serial;
  for (const auto& g : suite) serial.push_back(plan(sample(g, grid, order)));
  std::vector<std::vector<complex>> parallel(suite.size());
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    threads.emplace_back([&, i] { parallel[i] = plan(sample(suite[i], grid, order)).values; });
  }
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < suite.size(); ++i) CHECK(parallel[i] == serial[i].values);
}

TEST_CASE("Mellin multiplier") {
  SUBCASE("value at zero is the sharp constant") {
    for (double lambda : kLambdas) {
      for (double beta : {0.1, 0.45}) {
        const MellinMultiplier m(beta, BesselOrder(lambda));
        CHECK(m.evaluate(0.0).imag() == 0.0);
        CHECK(std::abs(m.evaluate(0.0).real() - sharp_constant_formula(beta, lambda)) <= 1e-12);
      }
    }
  }
  SUBCASE("conjugate symmetry") {
    const MellinMultiplier m(0.5, BesselOrder(1.0));
    for (double eta : {0.5, 2.0, 10.0}) CHECK(std::abs(std::abs(m(eta)) - std::abs(m(-eta))) <= 1e-13);
  }
  SUBCASE("|Ma(eta)| |eta|^beta tends to 1") {
    const MellinMultiplier m(0.5, BesselOrder(1.0));
    CHECK(std::abs(std::abs(m(1e3)) * std::sqrt(1e3) - 1.0) <= 0.05);
    CHECK(std::abs(std::abs(m(1e6)) * std::sqrt(1e6) - 1.0) <= 1e-5);
  }
  SUBCASE("range") {
    CHECK_THROWS_AS(MellinMultiplier(0.0, BesselOrder(0)), RangeError);
    CHECK_THROWS_AS(MellinMultiplier(1.0, BesselOrder(0)), RangeError);
    CHECK_THROWS_AS(MellinMultiplier(-0.2, BesselOrder(1)), RangeError);
    CHECK_NOTHROW(MellinMultiplier(max_admissible_beta(BesselOrder(0)), BesselOrder(0)));
  }
}

TEST_CASE("operator norm scan") {
  const auto scan = operator_norm_scan(MellinMultiplier(0.5, BesselOrder(0)), 100.0, 100000);
  CHECK(scan.max_at_zero);
  CHECK_FALSE(scan.boundary_warning);
  CHECK(scan.max_value == doctest::Approx(2.0920992401061898).epsilon(1e-13));

  SuiteRng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const double lambda = rng.uniform(-0.5, 5.0);
    const double beta = rng.uniform(0.05, 0.95) * (lambda + 1.0);
    const MellinMultiplier m(beta, BesselOrder(lambda));
    double previous = std::abs(m(0.0));
    for (int i = 1; i <= 4000; ++i) {
      const double value = std::abs(m(0.05 * i));
      REQUIRE(value < previous);
      previous = value;
    }
  }
  CHECK(operator_norm_scan(MellinMultiplier(1e-9, BesselOrder(0.5))).max_value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(operator_norm_scan(MellinMultiplier(0.5, BesselOrder(0)), 10.0, 99), RangeError);
}

TEST_CASE("weighted ratio stays below the scanned operator norm") {
  const auto grid = GridSpec{}.make();
  for (double beta : {0.2, 0.6}) {
    const BesselOrder order(1.0);
    const double norm = operator_norm_scan(MellinMultiplier(beta, order)).max_value;
    const HankelPlan plan(grid, order, HankelMethod::fast, beta);
    for (const auto& g : random_suite(31, 10)) {
      const auto f = sample(g, grid, order);
      CHECK(weighted_norm(plan(f), -beta) / weighted_norm(f, beta) <= norm + 1e-6);
    }
  }
}

TEST_CASE("component transform") {
  const auto grid = GridSpec{}.make();
  SUBCASE("n = 0 is the Hankel transform") {
    const BesselOrder order(0.5);
    const auto f = sample(random_suite(8, 1).front(), grid, order);
    const auto a = component_transform(0, order, f, HankelMethod::direct);
    const auto b = HankelPlan(grid, order, HankelMethod::direct)(f);
    CHECK(a.values == b.values);
  }
  SUBCASE("n = 1 on r e^(-r^2/2) at lambda = 0 gives 2 rho e^(-rho^2/2)") {
    const BesselOrder order(0.0);
    const auto g = sample_radial(grid, order, [](double r) { return complex(r * std::exp(-0.5 * r * r)); });
    for (auto method : {HankelMethod::fast, HankelMethod::direct}) {
      const auto t = component_transform(1, order, g, method);
      double worst = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        if (grid[j] < 1e-2 || grid[j] > 10.0) continue;
        worst = std::max(worst, std::abs(t.values[j] - 2.0 * grid[j] * std::exp(-0.5 * grid[j] * grid[j])));
      }
      CHECK(worst <= 1e-8);
    }
  }
  SUBCASE("reduction identity against quadrature of the defining integral") {
    boost::math::quadrature::exp_sinh<double> es;
    for (int n : {1, 2, 3}) {
      for (double lambda : {0.0, 0.5}) {
        const BesselOrder order(lambda);
        const double b = b_lambda(order);
        const auto profile = [n](double r) { return std::pow(r, n) * (1.0 + r * r) * std::exp(-0.7 * r * r); };
        const auto g = sample_radial(grid, order, [&](double r) { return complex(profile(r)); });
        const auto t = component_transform(n, order, g, HankelMethod::fast);
        for (std::size_t j = 0; j < grid.size(); j += 37) {
          const double rho = grid[j];
          if (rho < 0.1 || rho > 6.0) continue;
          const double oracle = es.integrate([&](double r) {
            if (r > 12.0) return 0.0;
            return profile(r) * specfun::bessel_j_norm(order.shifted(n), rho * r) * std::pow(rho * r, n) * b *
                   std::pow(r, 2.0 * lambda + 1.0);
          });
          INFO("n = " << n << ", lambda = " << lambda << ", rho = " << rho);
          CHECK(std::abs(t.values[j].real() - oracle) <= 1e-7);
        }
      }
    }
  }
}

TEST_CASE("fast transform stays accurate down to the smallest grid point") {
  const auto grid = GridSpec{}.make();
  for (double lambda : {0.0, 2.5, 6.0}) {
    for (double bias : {0.0, 0.5}) {
      const BesselOrder order(lambda);
      const auto f = sample_radial(grid, order, [](double r) { return complex((1 + r * r) * std::exp(-r * r)); });
      const auto h = HankelPlan(grid, order, HankelMethod::fast, bias)(f);
      const auto d = HankelPlan(grid, order, HankelMethod::direct)(f);
      double worst = 0.0;
      for (std::size_t i = 0; i < grid.size() && grid[i] <= 1.0; ++i) worst = std::max(worst, std::abs(h.values[i] - d.values[i]));
      INFO("lambda = " << lambda << ", bias = " << bias);
      CHECK(worst <= 1e-12 * std::abs(d.values.front()));
    }
  }
}
