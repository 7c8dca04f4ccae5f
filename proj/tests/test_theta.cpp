#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/theta.hpp"

using namespace cubik;

TEST_CASE("base cases") {
  NerveComplex N(poset_category(1));
  ThetaFamily<NerveComplex> F(N, 3);
  // theta^{0,0}(v) = v s_1
  for (const auto& [x, entry] : F.level(0, 0))
    CHECK(entry.first == N.act(x, BoxOp::degeneracy(1, 1)));
  // theta^{1,0}(f) = f g_{1,0}
  for (const auto& [x, entry] : F.level(1, 0))
    CHECK(entry.first == N.act(x, BoxOp::connection(2, 1, 0)));
  // Theta2 on these: the (n+1,0)-face recovers the argument
  for (const auto& [x, entry] : F.level(1, 0))
    CHECK(N.act(entry.first, BoxOp::face(2, 1, 0)) == x);
}

TEST_CASE("theta spot identity at the bottom") {
  // theta^{0,1}(theta^{0,0}(v)) = v s_1 s_2 = v s_1 g_{1,0}
  NerveComplex N(poset_category(1));
  ThetaFamily<NerveComplex> F(N, 3);
  for (const auto& [v, entry] : F.level(0, 0)) {
    NerveCube t00 = entry.first;
    NerveCube lhs = F.theta(0, 1, t00);
    NerveCube rhs1 = N.act(N.act(v, BoxOp::degeneracy(1, 1)), BoxOp::degeneracy(2, 2));
    NerveCube rhs2 = N.act(N.act(v, BoxOp::degeneracy(1, 1)), BoxOp::connection(2, 1, 0));
    CHECK(lhs == rhs1);
    CHECK(rhs1 == rhs2);
  }
}

TEST_CASE("the nerve([2]) square routes through the lift") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  // the square spanned by 0->1 and 1->2 is non-degenerate, not a (1,1)-cone,
  // and not a previous theta image
  int found = 0;
  for (const auto& [x, entry] : F.level(2, 0)) {
    if (standard_form(N, x).second.is_identity() && entry.second == 6) {
      ++found;
      // Theta2: the (1,0)-face of the 3-cube is x itself
      CHECK(N.act(entry.first, BoxOp::face(3, 1, 0)) == x);
      // other faces are theta images of x's faces per Theta3
      for (int i = 2; i <= 3; ++i)
        CHECK(N.act(entry.first, BoxOp::face(3, i, 1)) ==
              F.theta(1, 0, N.act(x, BoxOp::face(2, i - 1, 1))));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("all eight identities hold on nerves") {
  for (int k = 1; k <= 2; ++k) {
    NerveComplex N(poset_category(k));
    ThetaFamily<NerveComplex> F(N, 4);
    std::vector<ThetaReportLine> rep = verify_theta(F);
    for (const ThetaReportLine& l : rep) {
      INFO("poset " << k << " m=" << l.m << " n=" << l.n << " T" << l.id);
      CHECK(l.failed == 0);
    }
    std::string rendered = render_theta_report(rep);
    CHECK(rendered.find("failed=0") != std::string::npos);
  }
}

TEST_CASE("case dispatch is total and the tags partition the cones") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  for (int m = 2; m <= 3; ++m)
    for (int n = 0; m + n + 1 <= 4; ++n) {
      long long degenerate_low_cases = 0;
      for (const auto& [x, entry] : F.level(m, n)) {
        CHECK(entry.second >= 1);
        CHECK(entry.second <= 6);
        if (!standard_form(N, x).second.is_identity()) {
          CHECK(entry.second <= 4);  // degenerate cones never reach 5 or 6
          ++degenerate_low_cases;
        }
      }
      CHECK(degenerate_low_cases > 0);
    }
}

TEST_CASE("theta outputs are cones of the raised index") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  for (int m = 0; m + 1 <= 4; ++m)
    for (int n = 0; m + n + 1 <= 4; ++n)
      for (const auto& [x, entry] : F.level(m, n))
        CHECK(is_cone(N, entry.first, m, n + 1));
}

TEST_CASE("case biconditional and degenerate critical edges") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  for (int m = 0; m + 1 <= 4; ++m)
    for (int n = 0; m + n + 1 <= 4; ++n) CHECK(check_theta_case_biconditional(F, m, n));
  for (int m = 0; m + 1 <= 4; ++m) CHECK(check_theta_degenerate_edges(F, m));
}

TEST_CASE("counit step check") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  CounitStepReport r20 = counit_step_check(F, 2, 0);
  CHECK(r20.ok);
  CHECK(r20.case6_cones > 0);
  CounitStepReport r21 = counit_step_check(F, 2, 1);
  CHECK(r21.ok);
}

TEST_CASE("the lowest filtration stage is the image of the counit") {
  NerveComplex N(poset_category(2));
  ThetaFamily<NerveComplex> F(N, 4);
  // X^{2,-1}: everything of cone index m' < 2
  std::set<NerveCube> lower = filtration_subcomplex(F, 2, -1);
  // compare with the non-degenerate (0,n)-cones
  std::set<NerveCube> cones;
  for (int n = 0; n <= 3; ++n)
    for (const NerveCube& c : enumerate_cones(N, 0, n))
      if (standard_form(N, c).second.is_identity()) cones.insert(c);
  CHECK(lower == cones);
}

TEST_CASE("vacuous pass on the point") {
  ExplicitCubes pt{point()};
  ThetaFamily<ExplicitCubes> F(pt, 3);
  std::vector<ThetaReportLine> rep = verify_theta(F);
  for (const ThetaReportLine& l : rep) CHECK(l.failed == 0);
  CounitStepReport r = counit_step_check(F, 2, 0);
  CHECK(r.ok);
  CHECK(r.case6_cones == 0);
}
