// Acceptance harness: runs every criterion suite and prints one pass/fail
// line per criterion.
#include "cubik/suites.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using namespace cubik;
  SuiteContext ctx;
  int failures = 0;
  auto total0 = std::chrono::steady_clock::now();
  std::vector<std::pair<int, SuiteResult>> results;
  int criterion = 0;
  auto run = [&](SuiteResult (*fn)(SuiteContext&)) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn(ctx);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++criterion;
    std::printf("%s criterion %d: %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", criterion,
                r.name.c_str(), dt);
    for (const std::string& line : r.lines)
      if (!r.ok || line.find("FAIL") != std::string::npos) std::printf("%s\n", line.c_str());
    if (!r.ok) ++failures;
    results.emplace_back(criterion, std::move(r));
  };
  run(suite_normal_form);     // 1
  run(suite_involutions);     // 2
  run(suite_product);         // 3
  run(suite_triangulation);   // 4
  run(suite_cones);           // 5
  run(suite_q);               // 6
  run(suite_quasicat);        // 7
  run(suite_theta);           // 8
  ctx.reg("J", shape_J());
  run(suite_serialization);   // 9
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - total0).count();
  std::printf("%s: %d/%d criteria passed (%.1fs total)\n", failures == 0 ? "PASS" : "FAIL",
              criterion - failures, criterion, total);
  return failures == 0 ? 0 : 1;
}
