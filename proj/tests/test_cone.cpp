#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/cone.hpp"
#include "cubik/fincat.hpp"

using namespace cubik;

TEST_CASE("cones on small complexes") {
  // C box^0 = box^1
  ConeResult c0 = cone(point(), kLeftPositive);
  CHECK(find_isomorphism(c0.complex, standard_cube(1)).has_value());
  // C box^1: 3 vertices, 3 edges, 1 square
  ConeResult c1 = cone(standard_cube(1), kLeftPositive);
  CHECK(validate(*c1.complex).ok);
  CHECK(c1.complex->count(0) == 3);
  CHECK(c1.complex->count(1) == 3);
  CHECK(c1.complex->count(2) == 1);
  // cone on the empty complex is the point, for every kind
  for (ConeKind kind : {kLeftPositive, kLeftNegative, kRightPositive, kRightNegative}) {
    ConeResult ce = cone(empty_complex(), kind);
    CHECK(find_isomorphism(ce.complex, point()).has_value());
  }
}

TEST_CASE("eta is a valid section-like unit") {
  for (ComplexPtr X : {standard_cube(1), shape_K()}) {
    for (ConeKind kind : {kLeftPositive, kLeftNegative, kRightPositive, kRightNegative}) {
      ConeResult c = cone(X, kind);
      CHECK(validate(*c.complex).ok);
      CHECK(validate_map(c.eta).ok);
      CHECK(is_mono(c.eta));
    }
  }
}

TEST_CASE("monad laws on small complexes") {
  for (ComplexPtr X : {point(), standard_cube(1)}) {
    for (ConeKind kind : {kLeftPositive, kLeftNegative, kRightPositive, kRightNegative}) {
      ConeResult CX = cone(X, kind);
      ConeResult CCX = cone(CX.complex, kind);
      ComplexMap mu = cone_mu(X, CX, CCX);
      CHECK(validate_map(mu).ok);
      // mu . eta_{CX} = id
      ComplexMap unit1 = compose_maps(mu, CCX.eta);
      CHECK(unit1 == identity_map(CX.complex));
      // mu . C(eta) = id
      ComplexMap Ceta = cone_map(CX, CCX, CX.eta);
      CHECK(validate_map(Ceta).ok);
      ComplexMap unit2 = compose_maps(mu, Ceta);
      CHECK(unit2 == identity_map(CX.complex));
      // associativity: mu . mu_{CX} = mu . C(mu)
      ConeResult CCCX = cone(CCX.complex, kind);
      ComplexMap mu_c = cone_mu(CX.complex, CCX, CCCX);
      ComplexMap Cmu = cone_map(CCX, CCX, mu);
      // C(mu) : C(CCX) -> C(CX) is cone_map from CCCX to CCX
      ComplexMap Cmu2 = cone_map(CCCX, CCX, mu);
      ComplexMap lhs = compose_maps(mu, mu_c);
      ComplexMap rhs = compose_maps(mu, Cmu2);
      CHECK(lhs == rhs);
      (void)Cmu;
    }
  }
}

TEST_CASE("cone kind coherence via involutions") {
  // C_{R,1} = co . C_{L,1} . co on the interval
  ComplexPtr I = standard_cube(1);
  ConeResult right = cone(I, kRightPositive);
  ComplexPtr through_co =
      complex_involute(cone(complex_involute(I, Involution::Co), kLeftPositive).complex,
                       Involution::Co);
  CHECK(find_isomorphism(right.complex, through_co).has_value());
  // C_{L,0} = coop . C_{L,1} . coop
  ConeResult ln = cone(I, kLeftNegative);
  ComplexPtr through_coop =
      complex_involute(cone(complex_involute(I, Involution::CoOp), kLeftPositive).complex,
                       Involution::CoOp);
  CHECK(find_isomorphism(ln.complex, through_coop).has_value());
}

TEST_CASE("standard cones") {
  // C^{m,0} = box^m
  for (int m = 0; m <= 3; ++m) {
    StandardCone C = standard_cone(m, 0);
    CHECK(find_isomorphism(C.complex, standard_cube(m)).has_value());
  }
  // Q^2 = C^{0,2}: 3 vertices, 3 edges, 1 square
  StandardCone q2 = standard_cone(0, 2);
  CHECK(q2.complex->count(0) == 3);
  CHECK(q2.complex->count(1) == 3);
  CHECK(q2.complex->count(2) == 1);
  // C^{0,n} = C^{1,n-1}
  for (int n = 1; n <= 3; ++n)
    CHECK(find_isomorphism(standard_cone(0, n).complex, standard_cone(1, n - 1).complex)
              .has_value());
  // standard_cone(m,n) agrees with the n-fold cone on box^m
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; m + n <= 3; ++n) {
      ComplexPtr it = standard_cube(m);
      for (int t = 0; t < n; ++t) it = cone(it, kLeftPositive).complex;
      CHECK(find_isomorphism(standard_cone(m, n).complex, it).has_value());
    }
}

TEST_CASE("cone projection kills critical edges") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; m + n <= 4; ++n) {
      StandardCone C = standard_cone(m, n);
      for (int i = 2; i <= m + n; ++i) {
        // critical edge w.r.t. (i,0): coordinate i free, others constant 1
        BoxOp w = BoxOp::identity(1);
        for (int j = 1; j <= m + n; ++j) {
          if (j == i) continue;
          w = compose(BoxOp::face(w.cod() + 1, j, 1), w);
        }
        CubeRef img = C.projection.apply(box_ref(*C.projection.dom, w));
        CHECK(!img.op.is_identity());  // degenerate
      }
    }
}

TEST_CASE("is_cone by FaceCond and by factorization agree") {
  NerveComplex N(poset_category(2));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; m + n <= 3; ++n) {
      int count = 0;
      for (const NerveCube& c : N.level(m + n)) {
        bool a = is_cone(N, c, m, n);
        bool b = is_cone_via_factorization(N, c, m, n);
        CHECK(a == b);
        if (a) ++count;
      }
      CHECK(count > 0);
    }
  // the non-degenerate square of box^2 is not a (0,2)-cone
  ExplicitCubes sq{standard_cube(2)};
  CubeRef top = sq.complex->ref(*sq.complex->find_by_name("**"));
  CHECK_FALSE(is_cone(sq, top, 0, 2));
  // but the square of C^{0,2} is one
  StandardCone q2 = standard_cone(0, 2);
  ExplicitCubes qc{q2.complex};
  for (int k = 0; k < q2.complex->count(2); ++k)
    CHECK(is_cone(qc, q2.complex->ref(CubeId{2, k}), 0, 2));
}

TEST_CASE("cone faces behave per the face lemmas") {
  NerveComplex N(poset_category(2));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; m + n <= 3; ++n) {
      if (m + n == 0) continue;
      int total = m + n;
      int checked = 0;
      for (const NerveCube& c : enumerate_cones(N, m, n)) {
        if (++checked > 60) break;
        for (int i = 1; i <= n; ++i)
          CHECK(is_cone(N, N.act(c, BoxOp::face(total, i, 0)), m, n - 1));
        for (int i = n + 1; i <= total; ++i)
          CHECK(is_cone(N, N.act(c, BoxOp::face(total, i, 0)), m - 1, n));
        if (m >= 1)
          for (int i = 1; i <= total; ++i)
            CHECK(is_cone(N, N.act(c, BoxOp::face(total, i, 1)), m - 1, n));
        for (int i = n + 1; i <= total + 1; ++i)
          CHECK(is_cone(N, N.act(c, BoxOp::degeneracy(total + 1, i)), m + 1, n));
        for (int i = 1; i <= n; ++i)
          CHECK(is_cone(N, N.act(c, BoxOp::connection(total + 1, i, 0)), m, n + 1));
        for (int i = n + 1; i <= total; ++i)
          for (int e = 0; e <= 1; ++e)
            CHECK(is_cone(N, N.act(c, BoxOp::connection(total + 1, i, e)), m + 1, n));
      }
    }
}

TEST_CASE("B complexes") {
  BComplexResult b = b_complex(1, 1, 1);
  // missing exactly the image of the (2,0)-face of C^{1,1} and the top cube
  StandardCone C = standard_cone(1, 1);
  CHECK(b.complex->total_count() == C.complex->total_count() - 2);
  CHECK(is_mono(b.inclusion));
  REQUIRE(b.decomposition.size() == 1);
  CHECK(b.decomposition[0].kind == BComplexResult::Step::FillBox);

  BComplexResult b2 = b_complex(2, 1, 1);
  CHECK(validate(*b2.complex).ok);
  CHECK(is_mono(b2.inclusion));
  // regression counts for (2,1,1)
  std::vector<int> counts;
  for (int d = 0; d <= b2.complex->dim_bound(); ++d) counts.push_back(b2.complex->count(d));
  CHECK(counts == std::vector<int>{5, 7, 3});
}

TEST_CASE("Q objects and cosimplicial identities") {
  // Q^1 = interval
  CHECK(find_isomorphism(q_object_cached(1).complex, standard_cube(1)).has_value());
  for (ConeKind kind : {kLeftPositive, kLeftNegative, kRightPositive, kRightNegative}) {
    for (int n = 1; n <= 3; ++n) {
      // cosimplicial identities: d_j d_i = d_i d_{j-1} for i < j (n >= 2)
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i) {
          ComplexMap lhs = compose_maps(q_coface(n, j, kind), q_coface(n - 1, i, kind));
          ComplexMap rhs = compose_maps(q_coface(n, i, kind), q_coface(n - 1, j - 1, kind));
          CHECK(lhs == rhs);
        }
      // s_j d_i relations at the cosimplicial level
      for (int j = 0; j <= n - 1; ++j)
        for (int i = 0; i <= n; ++i) {
          ComplexMap lhs = compose_maps(q_codegeneracy(n, j, kind), q_coface(n, i, kind));
          ComplexMap rhs;
          if (i < j)
            rhs = compose_maps(q_coface(n - 1, i, kind), q_codegeneracy(n - 1, j - 1, kind));
          else if (i == j || i == j + 1)
            rhs = identity_map(q_object_cached(n - 1, kind).complex);
          else
            rhs = compose_maps(q_coface(n - 1, i - 1, kind), q_codegeneracy(n - 1, j, kind));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("QJ is isomorphic to K") {
  QFunctorResult qj = q_functor(shape_J());
  CHECK(validate(*qj.complex).ok);
  CHECK(find_isomorphism(qj.complex, shape_K()).has_value());
}

TEST_CASE("Q of horns matches open box images") {
  // QLambda^n_i = image of the (n-i+1,0)-open box for (n,i) = (2,1)
  int n = 2, i = 1;
  QFunctorResult qh = q_functor(horn(n, i));
  QFunctorResult qd = q_functor(standard_simplex(n));
  SimpMap incl = horn_inclusion(n, i);
  ComplexMap qincl = q_functor_map(qh, qd, incl);
  CHECK(validate_map(qincl).ok);
  SubcomplexResult img = image_subcomplex(qincl);
  // compare with the image of the open box under the projection to Q^n
  const QObject& q = q_object_cached(n);
  std::set<CubeId> gens;
  ComplexPtr cube = q.projection.dom;
  for (int j = 1; j <= n; ++j)
    for (int e = 0; e <= 1; ++e) {
      if (j == n - i + 1 && e == 0) continue;
      gens.insert(q.projection.apply(box_ref(*cube, BoxOp::face(n, j, e))).target);
    }
  SubcomplexResult box_img = subcomplex(q.complex, gens);
  CHECK(find_isomorphism(img.complex, box_img.complex).has_value());
  // and QD^n is Q^n itself
  CHECK(find_isomorphism(qd.complex, q.complex).has_value());
}

TEST_CASE("integral of small complexes") {
  ExplicitCubes pt{point()};
  Materialized<CubeRef> ipt = integral(pt, 3);
  for (int nn = 0; nn <= 3; ++nn) CHECK(ipt.complex->count(nn) == (nn == 0 ? 1 : 0));

  ExplicitCubes I{standard_cube(1)};
  Materialized<CubeRef> ii = integral(I, 3);
  CHECK(find_simp_isomorphism(ii.complex, standard_simplex(1)).has_value());
}

TEST_CASE("the integral of K contains the walking isomorphism complex") {
  ExplicitCubes K{shape_K()};
  Materialized<CubeRef> IK = integral(K, 2);
  // J embeds as a simplicial subcomplex (the adjunct of QJ = K)
  bool found = false;
  for (const SimpMap& f : enumerate_simp_maps(shape_J(), IK.complex))
    if (simp_is_mono(f)) found = true;
  CHECK(found);
}

TEST_CASE("counit analysis") {
  CounitResult sq = counit(standard_cube(2), 3);
  CHECK(sq.analysis.mono);
  CHECK(sq.analysis.image_is_cones);
  CHECK(sq.analysis.no_positive_connections);
  // image of box^2: boundary only (4 vertices, 4 edges, no square)
  CHECK(sq.analysis.image_counts == std::vector<int>{4, 4});

  CounitResult k = counit(shape_K(), 3);
  CHECK(k.analysis.mono);
  CHECK(k.analysis.image_is_cones);
}

TEST_CASE("counit on Q^n is an isomorphism") {
  for (int n = 0; n <= 3; ++n) {
    CounitResult c = counit(q_object_cached(n).complex, std::max(2, n + 1));
    CHECK(c.analysis.mono);
    // same number of non-degenerate cubes in both complexes
    for (int d = 0; d <= c.q_side.complex->dim_bound(); ++d)
      CHECK(c.q_side.complex->count(d) == q_object_cached(n).complex->count(d));
  }
}

TEST_CASE("Q is fully faithful at small scale") {
  std::vector<SimpPtr> shapes{standard_simplex(0), standard_simplex(1), standard_simplex(2),
                              horn(2, 1)};
  for (SimpPtr S : shapes)
    for (SimpPtr T : shapes) {
      std::vector<SimpMap> smaps = enumerate_simp_maps(S, T);
      QFunctorResult QS = q_functor(S);
      QFunctorResult QT = q_functor(T);
      std::vector<ComplexMap> cmaps = enumerate_maps(QS.complex, QT.complex);
      CHECK(smaps.size() == cmaps.size());
      // injectivity of f -> Qf
      std::set<std::vector<std::vector<CubeRef>>> images;
      for (const SimpMap& f : smaps) images.insert(q_functor_map(QS, QT, f).assign);
      CHECK(images.size() == smaps.size());
    }
}

TEST_CASE("F-bar") {
  // TQ^1 = Delta^1 and F-bar is an isomorphism there
  FBarResult f1 = f_bar_component(1);
  CHECK(validate_map(f1.map).ok);
  CHECK(simp_is_mono(f1.map));
  for (int n = 0; n <= 3; ++n) {
    FBarResult fn = f_bar_component(n);
    CHECK(validate_map(fn.map).ok);
    // surjective on simplices: every simplex of Delta^n is hit
    std::set<std::pair<int, int>> hit;
    for (int d = 0; d <= fn.map.dom->dim_bound(); ++d)
      for (int k = 0; k < fn.map.dom->count(d); ++k) {
        SimpRef r = fn.map(SimpId{d, k});
        if (r.op.is_identity()) hit.insert({r.target.dim, r.target.idx});
      }
    size_t total = 0;
    for (int d = 0; d <= fn.map.cod->dim_bound(); ++d) total += fn.map.cod->count(d);
    CHECK(hit.size() == total);
  }
  // f_bar over a whole simplicial set
  FBarResult fj = f_bar(standard_simplex(2));
  CHECK(validate_map(fj.map).ok);
}

TEST_CASE("F-bar naturality squares") {
  for (int n = 1; n <= 2; ++n) {
    FBarResult fn = f_bar_component(n);
    FBarResult fm = f_bar_component(n - 1);
    for (int j = 0; j <= n; ++j) {
      // phi = delta_j : [n-1] -> [n]
      ComplexMap qphi = q_coface(n, j);
      SimpMap tqphi = triangulate_map(fm.TQ, fn.TQ, qphi);
      SimpMap lhs = simp_compose_maps(fn.map, tqphi);
      SimpMap nphi = nerve_map(nerve_of_poset(chain_poset(n - 1)), nerve_of_poset(chain_poset(n)),
                               [&](int v) {
                                 std::vector<int> val = evaluate_simp(SimpOp::face(n, j));
                                 return val[v];
                               });
      SimpMap rhs = simp_compose_maps(nphi, fm.map);
      CHECK(lhs == rhs);
    }
    for (int j = 0; j <= n - 1; ++j) {
      ComplexMap qphi = q_codegeneracy(n, j);
      SimpMap tqphi = triangulate_map(fn.TQ, fm.TQ, qphi);
      SimpMap lhs = simp_compose_maps(fm.map, tqphi);
      SimpMap nphi = nerve_map(nerve_of_poset(chain_poset(n)), nerve_of_poset(chain_poset(n - 1)),
                               [&](int v) {
                                 std::vector<int> val = evaluate_simp(SimpOp::degeneracy(n - 1, j));
                                 return val[v];
                               });
      SimpMap rhs = simp_compose_maps(nphi, fn.map);
      CHECK(lhs == rhs);
    }
  }
}
