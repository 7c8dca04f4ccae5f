#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/simplex.hpp"
#include "cubik/tensor.hpp"

#include <random>

using namespace cubik;

TEST_CASE("simplicial operator calculus") {
  CHECK(compose(SimpOp::degeneracy(0, 0), SimpOp::face(1, 0)) == SimpOp::identity(0));
  CHECK(compose(SimpOp::degeneracy(0, 0), SimpOp::face(1, 1)) == SimpOp::identity(0));
  CHECK(compose(SimpOp::face(2, 1), SimpOp::face(1, 0)) ==
        compose(SimpOp::face(2, 0), SimpOp::face(1, 0)));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1500; ++trial) {
    int d = static_cast<int>(rng() % 4);
    SimpOp acc = SimpOp::identity(d);
    std::vector<int> fn = evaluate_simp(acc);
    for (int step = 0; step < 4; ++step) {
      int k = acc.cod();
      bool can_degen = k >= 1;
      bool face = !can_degen || (rng() % 2 == 0);
      SimpOp g = face ? SimpOp::face(k + 1, static_cast<int>(rng() % (k + 2)))
                      : SimpOp::degeneracy(k - 1, static_cast<int>(rng() % k));
      acc = compose(g, acc);
      std::vector<int> gv = evaluate_simp(g);
      for (int& x : fn) x = gv[x];
      CHECK(evaluate_simp(acc) == fn);
    }
  }
}

TEST_CASE("operator factorisation from monotone functions") {
  for (int dom = 0; dom <= 3; ++dom)
    for (int cod = 0; cod <= 3; ++cod)
      for (const SimpOp& f : enumerate_simp_ops(dom, cod)) {
        CHECK(simp_op_from_function(evaluate_simp(f), cod) == f);
        CHECK(parse_simpop(render(f), dom) == f);
      }
}

TEST_CASE("standard simplices validate with the right counts") {
  for (int n = 0; n <= 3; ++n) {
    SimpPtr d = standard_simplex(n);
    CHECK(validate(*d).ok);
    for (int k = 0; k <= n; ++k) {
      long binom = 1;
      for (int t = 0; t < k + 1; ++t) binom = binom * (n + 1 - t) / (t + 1);
      CHECK(d->count(k) == binom);
    }
  }
  CHECK(validate(*boundary_simplex(2)).ok);
  CHECK(validate(*horn(2, 1)).ok);
  CHECK(horn(2, 1)->count(1) == 2);
  CHECK(validate(*shape_J()).ok);
  CHECK(shape_J()->count(0) == 2);
  CHECK(shape_J()->count(1) == 3);
  CHECK(shape_J()->count(2) == 2);
}

TEST_CASE("nerves of posets") {
  SimpPtr N1 = nerve_of_poset(cube_poset(1));
  CHECK(find_simp_isomorphism(N1, standard_simplex(1)).has_value());
  SimpPtr N2 = nerve_of_poset(cube_poset(2));
  CHECK(validate(*N2).ok);
  CHECK(N2->count(0) == 4);
  CHECK(N2->count(1) == 5);
  CHECK(N2->count(2) == 2);
}

TEST_CASE("triangulation of cubes") {
  TriangulationResult t1 = triangulate(standard_cube(1));
  CHECK(find_simp_isomorphism(t1.complex, standard_simplex(1)).has_value());

  TriangulationResult t2 = triangulate(standard_cube(2));
  CHECK(validate(*t2.complex).ok);
  CHECK(t2.complex->count(0) == 4);
  CHECK(t2.complex->count(1) == 5);
  CHECK(t2.complex->count(2) == 2);

  TriangulationResult t3 = triangulate(standard_cube(3));
  CHECK(t3.complex->count(3) == 6);

  TriangulationResult tK = triangulate(shape_K());
  CHECK(validate(*tK.complex).ok);
}

TEST_CASE("triangulation preserves pushouts on random spans") {
  std::mt19937 rng(17);
  std::vector<ComplexPtr> shapes{standard_cube(1), standard_cube(2), shape_K(),
                                 boundary_cube(2)};
  int done = 0;
  for (int trial = 0; trial < 60 && done < 20; ++trial) {
    ComplexPtr X = shapes[rng() % shapes.size()];
    ComplexPtr Y = shapes[rng() % shapes.size()];
    // a random subcomplex of X and some map of it into Y
    std::set<CubeId> gens;
    int d = static_cast<int>(rng() % (X->dim_bound() + 1));
    if (X->count(d) == 0) continue;
    gens.insert(CubeId{d, static_cast<int>(rng() % X->count(d))});
    SubcomplexResult A = subcomplex(X, gens);
    std::vector<ComplexMap> maps = enumerate_maps(A.complex, Y, 200000);
    if (maps.empty()) continue;
    ComplexMap g = maps[rng() % maps.size()];
    PushoutResult P = pushout(A.inclusion, g);
    TriangulationResult TP = triangulate(P.complex);
    // the simplicial pushout of the triangulated span
    TriangulationResult TA = triangulate(A.complex);
    TriangulationResult TX = triangulate(X);
    TriangulationResult TY = triangulate(Y);
    SimpMap Tf = triangulate_map(TA, TX, A.inclusion);
    SimpMap Tg = triangulate_map(TA, TY, g);
    SimpUnionResult U = simp_disjoint_union(TX.complex, TY.complex);
    std::vector<std::pair<SimpRef, SimpRef>> glue;
    for (int n = 0; n <= TA.complex->dim_bound(); ++n)
      for (int k = 0; k < TA.complex->count(n); ++k)
        glue.emplace_back(U.inj_left.apply(Tf(SimpId{n, k})),
                          U.inj_right.apply(Tg(SimpId{n, k})));
    SimpQuotientResult Q = simp_quotient(U.complex, glue);
    INFO("trial " << trial);
    CHECK(find_simp_isomorphism(TP.complex, Q.complex).has_value());
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("triangulation preserves monomorphisms") {
  TriangulationResult tb = triangulate(boundary_cube(2));
  TriangulationResult tc = triangulate(standard_cube(2));
  SimpMap Tf = triangulate_map(tb, tc, boundary_inclusion(2));
  CHECK(validate_map(Tf).ok);
  CHECK(simp_is_mono(Tf));
}

TEST_CASE("triangulation sends products to cartesian products") {
  ProductResult P = product(standard_cube(1), standard_cube(1));
  TriangulationResult TP = triangulate(P.complex);
  SimpProductResult S = simp_product(standard_simplex(1), standard_simplex(1), 2);
  CHECK(validate(*S.complex).ok);
  CHECK(find_simp_isomorphism(TP.complex, S.complex).has_value());
}

TEST_CASE("U truncation counts") {
  UComplex u0(standard_simplex(0), 3);
  for (int n = 0; n <= 3; ++n) CHECK(u0.level(n).size() == 1);
  UComplex u1(standard_simplex(1), 2);
  CHECK(u1.level(0).size() == 2);
  CHECK(u1.level(1).size() == 3);
  CHECK(u1.level(2).size() == 6);
  UComplex::Cube c = u1.level(1)[1];
  UComplex::Cube z = u1.act(c, BoxOp::degeneracy(2, 1));
  CHECK(u1.act(z, BoxOp::face(2, 1, 0)) == c);
}

TEST_CASE("F and G are adjoint and F o G = id") {
  for (int n = 0; n <= 4; ++n) {
    for (int a = 0; a <= n; ++a) CHECK(map_F(n, map_G(n, a)) == a);
    for (int a = 0; a <= n; ++a)
      for (uint32_t b = 0; b < (1u << n); ++b) {
        bool left = map_F(n, b) <= a;
        uint32_t ga = map_G(n, a);
        bool right = (b & ga) == b;
        CHECK(left == right);
      }
  }
  CHECK(map_F(2, 0b00) == 0);
  CHECK(map_F(2, 0b10) == 1);  // vertex (0,1)
  CHECK(map_F(2, 0b01) == 2);  // vertex (1,0)
  CHECK(map_F(2, 0b11) == 2);  // vertex (1,1)
}

TEST_CASE("simplicial mapping spaces") {
  SimpPtr d1 = standard_simplex(1);
  SimpId v0 = *d1->find_by_name("0");
  SimpId v1 = *d1->find_by_name("1");
  SimpPtr hr = simplicial_hom(SimpHomKind::Right, d1, v0, v1, 1);
  CHECK(hr->count(0) == 1);

  SimpPtr hl = simplicial_hom(SimpHomKind::Left, d1, v0, v0, 1);
  CHECK(hl->count(0) >= 1);

  SimpPtr d2 = standard_simplex(2);
  SimpId a = *d2->find_by_name("0");
  SimpId b = *d2->find_by_name("2");
  SimpPtr lhs = simp_involute(simplicial_hom(SimpHomKind::Left, d2, a, b, 2));
  SimpPtr rhs = simplicial_hom(SimpHomKind::Right, simp_involute(d2), b, a, 2);
  CHECK(find_simp_isomorphism(lhs, rhs).has_value());

  SimpPtr h2 = simplicial_hom(SimpHomKind::TwoSided, d1, v0, v1, 1);
  CHECK(h2->count(0) == 1);
}

TEST_CASE("simplicial quotient collapses an edge") {
  SimpPtr d1 = standard_simplex(1);
  SimpId e = *d1->find_by_name("0.1");
  SimpId v = *d1->find_by_name("0");
  SimpQuotientResult q =
      simp_quotient(d1, {{d1->ref(e), SimpRef{v, SimpOp::degeneracy(0, 0)}}});
  CHECK(q.complex->count(0) == 1);
  CHECK(q.complex->count(1) == 0);
}

TEST_CASE("simplicial involution is involutive") {
  for (SimpPtr S : {standard_simplex(2), shape_J(), horn(2, 1)}) {
    SimpPtr T = simp_involute(simp_involute(S));
    CHECK(validate(*simp_involute(S)).ok);
    for (int n = 1; n <= S->dim_bound(); ++n)
      for (int k = 0; k < S->count(n); ++k)
        for (int i = 0; i <= n; ++i) CHECK(S->face(SimpId{n, k}, i) == T->face(SimpId{n, k}, i));
  }
}
