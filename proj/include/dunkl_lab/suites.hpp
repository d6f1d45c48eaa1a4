#pragma once

#include <string>
#include <vector>

#include "dunkl_lab/report.hpp"

namespace dunkl_lab {

/// `mellin`, `pitt`, `uncertainty` or `all`. Throws InputError for other names.
SuiteReport run_suite(const std::string& name, const RunConfig& config);
const std::vector<std::string>& suite_names();

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
};

/// beta, lambda, c(beta, lambda) on `steps` equispaced beta.
Table sweep_sharp_constants(double beta_min, double beta_max, double lambda, int steps);
/// lambda, c(beta, lambda), c(beta, lambda) / c(beta, previous lambda) (empty on the first row).
Table sweep_monotonicity(double beta, double lambda_min, double lambda_max, int steps);
/// R = 10^j for j_min..j_max: R, ratio, constant, ratio / constant.
Table sweep_near_extremizer(double beta, double lambda, int j_min, int j_max);
/// Gaussian exp(-r^2/2) at each lambda: lambda, gap/mass measured, closed form, rhs coefficient.
Table sweep_uncertainty_gaps(double lambda_min, double lambda_max, int steps, const GridSpec& grid);

}  // namespace dunkl_lab
