#include "dunkl_lab/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace dunkl_lab {

bool Tolerances::set(const std::string& name, double value) {
  for (auto& [key, field] : {std::pair<const char*, double*>{"identity", &identity},
                             {"mellin_tail", &mellin_tail},
                             {"pitt", &pitt},
                             {"uncertainty", &uncertainty},
                             {"closed_form", &closed_form},
                             {"gaussian_gap", &gaussian_gap}}) {
    if (name == key) {
      *field = value;
      return true;
    }
  }
  return false;
}

std::vector<std::pair<std::string, double>> Tolerances::items() const {
  return {{"identity", identity}, {"mellin_tail", mellin_tail}, {"pitt", pitt},
          {"uncertainty", uncertainty}, {"closed_form", closed_form}, {"gaussian_gap", gaussian_gap}};
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["seed"] = config.seed;
  j["suite_size"] = config.suite_size;
  j["grid"] = {{"r_min", config.grid.r_min}, {"r_max", config.grid.r_max}, {"count", config.grid.count}};
  auto& tol = j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : config.tolerances.items()) tol[name] = value;
  j["passed"] = passed();
  j["failures"] = failures();
  auto& list = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["suite"] = c.suite;
    item["name"] = c.name;
    item["reference"] = c.reference;
    item["passed"] = c.passed;
    item["value"] = c.value;
    item["tolerance"] = c.tolerance;
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

}  // namespace dunkl_lab
