#pragma once

// The acceptance suites: one per criterion, shared between the ctest
// acceptance binary and the CLI `suite` verb.

#include "cubik/io.hpp"
#include "cubik/theta.hpp"

#include <string>
#include <vector>

namespace cubik {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "  ok   " : "  FAIL ") + what);
    ok = ok && cond;
  }
};

struct SuiteContext {
  unsigned seed = 2026;
  long long budget = 1'000'000'000;
  std::vector<std::pair<std::string, ComplexPtr>> cubical;
  std::vector<std::pair<std::string, SimpPtr>> simplicial;

  void reg(const std::string& name, ComplexPtr X) { cubical.emplace_back(name, std::move(X)); }
  void reg(const std::string& name, SimpPtr S) { simplicial.emplace_back(name, std::move(S)); }
};

SuiteResult suite_normal_form(SuiteContext& ctx);   // criterion 1
SuiteResult suite_involutions(SuiteContext& ctx);    // criterion 2
SuiteResult suite_product(SuiteContext& ctx);        // criterion 3
SuiteResult suite_triangulation(SuiteContext& ctx);  // criterion 4
SuiteResult suite_cones(SuiteContext& ctx);          // criterion 5
SuiteResult suite_q(SuiteContext& ctx);              // criterion 6
SuiteResult suite_quasicat(SuiteContext& ctx);       // criterion 7
SuiteResult suite_theta(SuiteContext& ctx);          // criterion 8
SuiteResult suite_serialization(SuiteContext& ctx);  // criterion 9

std::vector<SuiteResult> run_all_suites(SuiteContext& ctx);
std::vector<SuiteResult> run_suite_by_name(const std::string& name, SuiteContext& ctx);

}  // namespace cubik
