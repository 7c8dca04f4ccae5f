#include "cubik/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cubik {

namespace {

std::vector<ComplexPtr> small_shapes() {
  return {point(), standard_cube(1), standard_cube(2), shape_K(), boundary_cube(2),
          open_box(2, 2, 1)};
}

ComplexMap point_inclusion(int eps) {
  ComplexPtr pt = point();
  ComplexPtr I = standard_cube(1);
  ComplexMap f;
  f.dom = pt;
  f.cod = I;
  f.assign.resize(1);
  f.assign[0].push_back(I->ref(*I->find_by_name(eps == 0 ? "0" : "1")));
  return f;
}

}  // namespace

SuiteResult suite_normal_form(SuiteContext& ctx) {
  (void)ctx;
  SuiteResult r{"normal-form kernel"};

  // every identity row under compose, all legal indices, ambient <= 5
  bool rows = true;
  for (int n = 2; n <= 5 && rows; ++n) {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= i; ++j)
        for (int e = 0; e <= 1; ++e)
          for (int e2 = 0; e2 <= 1; ++e2)
            rows = rows && compose(BoxOp::face(n, j, e2), BoxOp::face(n - 1, i, e)) ==
                               compose(BoxOp::face(n, i + 1, e), BoxOp::face(n - 1, j, e2));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= i; ++j)
        rows = rows && compose(BoxOp::degeneracy(n - 1, i), BoxOp::degeneracy(n, j)) ==
                           compose(BoxOp::degeneracy(n - 1, j), BoxOp::degeneracy(n, i + 1));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int e = 0; e <= 1; ++e) {
          BoxOp lhs = compose(BoxOp::degeneracy(n, j), BoxOp::face(n, i, e));
          BoxOp rhs = (j < i)   ? compose(BoxOp::face(n - 1, i - 1, e), BoxOp::degeneracy(n - 1, j))
                      : (j > i) ? compose(BoxOp::face(n - 1, i, e), BoxOp::degeneracy(n - 1, j - 1))
                                : BoxOp::identity(n - 1);
          rows = rows && lhs == rhs;
        }
    for (int i = 1; i <= n - 2; ++i)
      for (int e = 0; e <= 1; ++e) {
        for (int j = i + 1; j <= n - 2; ++j)
          for (int e2 = 0; e2 <= 1; ++e2)
            rows = rows && compose(BoxOp::connection(n - 1, j, e2), BoxOp::connection(n, i, e)) ==
                               compose(BoxOp::connection(n - 1, i, e),
                                       BoxOp::connection(n, j + 1, e2));
        rows = rows && compose(BoxOp::connection(n - 1, i, e), BoxOp::connection(n, i, e)) ==
                           compose(BoxOp::connection(n - 1, i, e), BoxOp::connection(n, i + 1, e));
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n - 1; ++j)
        for (int e = 0; e <= 1; ++e)
          for (int e2 = 0; e2 <= 1; ++e2) {
            BoxOp lhs = compose(BoxOp::connection(n, j, e2), BoxOp::face(n, i, e));
            std::optional<BoxOp> rhs;
            if (j < i - 1)
              rhs = compose(BoxOp::face(n - 1, i - 1, e), BoxOp::connection(n - 1, j, e2));
            else if (j == i - 1 || j == i) {
              if (e == e2)
                rhs = BoxOp::identity(n - 1);
              else {
                int t = (j == i) ? i : i - 1;
                rhs = compose(BoxOp::face(n - 1, t, e), BoxOp::degeneracy(n - 1, t));
              }
            } else
              rhs = compose(BoxOp::face(n - 1, i, e), BoxOp::connection(n - 1, j - 1, e2));
            rows = rows && lhs == *rhs;
          }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        for (int e = 0; e <= 1; ++e) {
          BoxOp lhs = compose(BoxOp::degeneracy(n - 1, j), BoxOp::connection(n, i, e));
          BoxOp rhs = (j < i)   ? compose(BoxOp::connection(n - 1, i - 1, e),
                                          BoxOp::degeneracy(n, j))
                      : (j > i) ? compose(BoxOp::connection(n - 1, i, e),
                                          BoxOp::degeneracy(n, j + 1))
                                : compose(BoxOp::degeneracy(n - 1, i), BoxOp::degeneracy(n, i));
          rows = rows && lhs == rhs;
        }
  }
  r.check(rows, "identities-table rows hold under compose for n <= 5");

  // normal forms vs vertex maps on all enumerated hom-sets of dimension <= 4
  bool inj = true, surj = true;
  for (int a = 0; a <= 4; ++a) {
    std::set<std::pair<int, std::vector<uint32_t>>> seen;
    for (const BoxOp& f : enumerate_hom_from(a, 4)) {
      if (!seen.insert({f.cod(), evaluate(f).table}).second) inj = false;
      // closure under one more generator stays inside the enumeration
    }
    std::vector<BoxOp> all = enumerate_hom_from(a, 4);
    std::set<BoxOp> all_set(all.begin(), all.end());
    for (const BoxOp& f : all) {
      if (f.cod() < 4) {
        BoxOp g = compose(BoxOp::face(f.cod() + 1, 1, 0), f);
        if (!all_set.count(g)) surj = false;
      }
      if (f.cod() >= 1) {
        BoxOp g = compose(BoxOp::degeneracy(f.cod(), 1), f);
        if (!all_set.count(g)) surj = false;
      }
    }
  }
  r.check(inj, "distinct normal forms define distinct vertex maps (dims <= 4)");
  r.check(surj, "enumerated hom-sets are closed under composition (dims <= 4)");
  r.check(enumerate_hom(1, 1).size() == 3, "|Box([1],[1])| = 3");
  r.check(enumerate_hom(1, 2).size() == 8, "|Box([1],[1]^2)| = 8");
  return r;
}

SuiteResult suite_involutions(SuiteContext& ctx) {
  SuiteResult r{"involutions"};
  bool invol = true, functorial = true;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const BoxOp& f : enumerate_hom(a, b))
        for (auto kind : {Involution::Co, Involution::CoOp, Involution::Op})
          invol = invol && involute(involute(f, kind), kind) == f;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const BoxOp& f : enumerate_hom(a, b))
          for (const BoxOp& g : enumerate_hom(b, c))
            for (auto kind : {Involution::Co, Involution::CoOp, Involution::Op})
              functorial = functorial && involute(compose(g, f), kind) ==
                                             compose(involute(g, kind), involute(f, kind));
  r.check(invol, "co, co-op, op are involutive on hom-sets (dims <= 3)");
  r.check(functorial, "involutions are functorial on hom-sets (dims <= 2)");

  // anti-monoidality of co and op, monoidality of co-op, total dimension <= 3
  bool monoidal = true;
  std::vector<ComplexPtr> shapes{point(), standard_cube(1), standard_cube(2), shape_K()};
  for (ComplexPtr X : shapes)
    for (ComplexPtr Y : shapes) {
      if (X->dim_bound() + Y->dim_bound() > 3) continue;
      ProductResult XY = product(X, Y);
      ctx.reg("inv-product", XY.complex);
      for (auto kind : {Involution::Co, Involution::CoOp, Involution::Op}) {
        bool swap = (kind != Involution::CoOp);
        ComplexPtr lhs = complex_involute(XY.complex, kind);
        ProductResult rhs = swap ? product(complex_involute(Y, kind), complex_involute(X, kind))
                                 : product(complex_involute(X, kind), complex_involute(Y, kind));
        ComplexMap iso;
        iso.dom = lhs;
        iso.cod = rhs.complex;
        iso.assign.resize(lhs->dim_bound() + 1);
        for (int total = 0; total <= lhs->dim_bound(); ++total)
          for (int k = 0; k < lhs->count(total); ++k) {
            auto [x, y] = XY.pairs[total][k];
            iso.assign[total].push_back(
                rhs.complex->ref(swap ? rhs.of_pair(y, x) : rhs.of_pair(x, y)));
          }
        monoidal = monoidal && validate_map(iso).ok && is_mono(iso) &&
                   lhs->total_count() == rhs.complex->total_count();
      }
    }
  r.check(monoidal, "co/op are anti-monoidal and co-op is monoidal (total dim <= 3)");
  return r;
}

SuiteResult suite_product(SuiteContext& ctx) {
  SuiteResult r{"product kernel"};
  bool cubes = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      ProductResult P = product(standard_cube(m), standard_cube(n));
      if (m + n <= 3) ctx.reg("cube-product", P.complex);
      cubes = cubes && validate(*P.complex).ok &&
              find_isomorphism(P.complex, standard_cube(m + n)).has_value();
    }
  r.check(cubes, "box^m (x) box^n = box^{m+n} for m+n <= 4");

  std::mt19937 rng(ctx.seed);
  std::vector<ComplexPtr> shapes = small_shapes();
  bool pushout_formula = true;
  for (int trial = 0; trial < 50; ++trial) {
    ComplexPtr X = shapes[rng() % shapes.size()];
    ComplexPtr Y = shapes[rng() % shapes.size()];
    ProductResult P = product(X, Y);
    size_t x1 = X->level(1).size(), x0 = X->level(0).size();
    size_t y1 = Y->level(1).size(), y0 = Y->level(0).size();
    pushout_formula =
        pushout_formula && P.complex->level(1).size() == x1 * y0 + x0 * y1 - x0 * y0;
  }
  r.check(pushout_formula, "(X (x) Y)_1 pushout formula on 50 random shape pairs");

  bool pop1 = true;
  for (int m = 0; m + 0 <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      if (m == 0 || n == 0) continue;
      PushoutProductResult res = pushout_product(boundary_inclusion(m), boundary_inclusion(n));
      pop1 = pop1 && validate_map(res.map).ok && is_mono(res.map) &&
             find_isomorphism(res.corner.complex, boundary_cube(m + n)).has_value() &&
             find_isomorphism(res.map.cod, standard_cube(m + n)).has_value();
    }
  r.check(pop1, "boundary (x)^ boundary = boundary for m+n <= 4");

  bool pop2 = true;
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int eps = 0; eps <= 1; ++eps) {
        ComplexMap left = boundary_inclusion(i - 1);
        PushoutProductResult a = pushout_product(left, point_inclusion(1 - eps));
        PushoutProductResult b = pushout_product(a.map, boundary_inclusion(n - i));
        pop2 = pop2 && validate_map(b.map).ok && is_mono(b.map) &&
               find_isomorphism(b.corner.complex, open_box(n, i, eps)).has_value() &&
               find_isomorphism(b.map.cod, standard_cube(n)).has_value();
      }
  r.check(pop2, "open boxes decompose as triple pushout products for n <= 4");

  bool pop3 = true;
  {
    ComplexMap empty_to_point;
    empty_to_point.dom = empty_complex();
    empty_to_point.cod = point();
    for (ComplexMap f : {boundary_inclusion(2), open_box_inclusion(2, 1, 0)}) {
      PushoutProductResult res = pushout_product(f, empty_to_point);
      pop3 = pop3 && validate_map(res.map).ok &&
             find_isomorphism(res.corner.complex, f.dom).has_value() &&
             find_isomorphism(res.map.cod, f.cod).has_value();
    }
  }
  r.check(pop3, "pushout product with (empty -> point) is the identity");
  return r;
}

SuiteResult suite_triangulation(SuiteContext& ctx) {
  SuiteResult r{"triangulation"};
  std::vector<ComplexPtr> shapes{point(), standard_cube(1), standard_cube(2), boundary_cube(2)};
  bool tprod = true;
  for (ComplexPtr X : shapes)
    for (ComplexPtr Y : shapes) {
      ProductResult P = product(X, Y);
      TriangulationResult TP = triangulate(P.complex);
      TriangulationResult TX = triangulate(X);
      TriangulationResult TY = triangulate(Y);
      int bound = std::max(0, X->dim_bound() + Y->dim_bound());
      SimpProductResult S = simp_product(TX.complex, TY.complex, bound);
      ctx.reg("tprod", TP.complex);
      tprod = tprod && find_simp_isomorphism(TP.complex, S.complex).has_value();
    }
  r.check(tprod, "T(X (x) Y) = TX x TY on all pairs from the stated shapes");

  std::mt19937 rng(ctx.seed + 1);
  bool monos = true;
  std::vector<ComplexPtr> bigger{standard_cube(2), standard_cube(3), shape_K(),
                                 open_box(3, 2, 1), boundary_cube(3)};
  for (int trial = 0; trial < 100; ++trial) {
    ComplexPtr X = bigger[rng() % bigger.size()];
    // a random subcomplex
    std::set<CubeId> gens;
    int picks = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < picks; ++t) {
      int d = static_cast<int>(rng() % (X->dim_bound() + 1));
      if (X->count(d) == 0) continue;
      gens.insert(CubeId{d, static_cast<int>(rng() % X->count(d))});
    }
    if (gens.empty()) continue;
    SubcomplexResult sub = subcomplex(X, gens);
    TriangulationResult TA = triangulate(sub.complex);
    TriangulationResult TX = triangulate(X);
    SimpMap Tf = triangulate_map(TA, TX, sub.inclusion);
    monos = monos && validate_map(Tf).ok && simp_is_mono(Tf);
  }
  r.check(monos, "T preserves monomorphisms on 100 random inclusions");

  bool tops = true;
  for (int n = 0; n <= 4; ++n) {
    TriangulationResult T = triangulate(standard_cube(n));
    long long fact = 1;
    for (int t = 2; t <= n; ++t) fact *= t;
    tops = tops && T.complex->count(n) == fact;
    if (n <= 3) ctx.reg("tcube", T.complex);
  }
  r.check(tops, "T(box^n) has n! top simplices for n <= 4");
  return r;
}

SuiteResult suite_cones(SuiteContext& ctx) {
  SuiteResult r{"cones"};
  bool monads = true;
  for (ComplexPtr X : {point(), standard_cube(1), standard_cube(2)}) {
    for (ConeKind kind : {kLeftPositive, kLeftNegative, kRightPositive, kRightNegative}) {
      ConeResult CX = cone(X, kind);
      ConeResult CCX = cone(CX.complex, kind);
      ConeResult CCCX = cone(CCX.complex, kind);
      ComplexMap mu = cone_mu(X, CX, CCX);
      ComplexMap mu_c = cone_mu(CX.complex, CCX, CCCX);
      ComplexMap Ceta = cone_map(CX, CCX, CX.eta);
      ComplexMap Cmu = cone_map(CCCX, CCX, mu);
      monads = monads && validate_map(mu).ok &&
               compose_maps(mu, CCX.eta) == identity_map(CX.complex) &&
               compose_maps(mu, Ceta) == identity_map(CX.complex) &&
               compose_maps(mu, mu_c) == compose_maps(mu, Cmu);
      if (X->dim_bound() <= 1) ctx.reg("cone", CX.complex);
    }
  }
  r.check(monads, "monad laws for all four cone kinds on box^0, box^1, box^2");

  bool qcone = true;
  for (int n = 1; n <= 4; ++n) {
    ComplexPtr iterated = empty_complex();
    for (int t = 0; t < n; ++t) iterated = cone(iterated, kLeftPositive).complex;
    qcone = qcone &&
            find_isomorphism(iterated, standard_cone_cached(0, n - 1).complex).has_value();
    if (n >= 1)
      qcone = qcone && find_isomorphism(standard_cone_cached(0, n).complex,
                                        standard_cone_cached(1, n - 1).complex)
                           .has_value();
  }
  r.check(qcone, "C^n(empty) = C^{0,n-1} and C^{0,n} = C^{1,n-1} for n <= 4");

  bool faceiso = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      if (m + n == 0) continue;
      const StandardCone& C = standard_cone_cached(m, n);
      ComplexPtr cube = C.projection.dom;
      for (int i = 1; i <= n; ++i) {
        std::set<CubeId> gens{
            C.projection.apply(box_ref(*cube, BoxOp::face(m + n, i, 0))).target};
        SubcomplexResult img = subcomplex(C.complex, gens);
        faceiso = faceiso && find_isomorphism(img.complex,
                                              standard_cone_cached(m, n - 1).complex)
                                 .has_value();
      }
      for (int i = n + 1; i <= m + n; ++i)
        for (int e = 0; e <= 1; ++e) {
          std::set<CubeId> gens{
              C.projection.apply(box_ref(*cube, BoxOp::face(m + n, i, e))).target};
          SubcomplexResult img = subcomplex(C.complex, gens);
          faceiso = faceiso && find_isomorphism(img.complex,
                                                standard_cone_cached(m - 1, n).complex)
                                   .has_value();
        }
      ctx.reg("standard-cone", C.complex);
    }
  r.check(faceiso, "FaceIso on all faces of C^{m,n}, m+n <= 4");

  NerveComplex N2(poset_category(2));
  bool facedeg = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      int total = m + n;
      if (total == 0) continue;
      for (const NerveCube& c : enumerate_cones(N2, m, n)) {
        for (int i = 1; i <= n; ++i)
          facedeg = facedeg && is_cone(N2, N2.act(c, BoxOp::face(total, i, 0)), m, n - 1);
        for (int i = n + 1; i <= total; ++i)
          facedeg = facedeg && is_cone(N2, N2.act(c, BoxOp::face(total, i, 0)), m - 1, n);
        if (m >= 1)
          for (int i = 1; i <= total; ++i)
            facedeg = facedeg && is_cone(N2, N2.act(c, BoxOp::face(total, i, 1)), m - 1, n);
        if (total < 4) {
          for (int i = n + 1; i <= total + 1; ++i)
            facedeg =
                facedeg && is_cone(N2, N2.act(c, BoxOp::degeneracy(total + 1, i)), m + 1, n);
          for (int i = 1; i <= n; ++i)
            facedeg = facedeg &&
                      is_cone(N2, N2.act(c, BoxOp::connection(total + 1, i, 0)), m, n + 1);
          for (int i = n + 1; i <= total; ++i)
            for (int e = 0; e <= 1; ++e)
              facedeg = facedeg &&
                        is_cone(N2, N2.act(c, BoxOp::connection(total + 1, i, e)), m + 1, n);
        }
      }
    }
  r.check(facedeg, "all six face/degeneracy clauses over nerve(poset:2), m+n <= 4");

  bool cedge = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 1; m + n <= 4; ++n) {
      const StandardCone& C = standard_cone_cached(m, n);
      for (int i = 2; i <= m + n; ++i) {
        BoxOp w = BoxOp::identity(1);
        for (int j = 1; j <= m + n; ++j) {
          if (j == i) continue;
          w = compose(BoxOp::face(w.cod() + 1, j, 1), w);
        }
        cedge = cedge && !C.projection.apply(box_ref(*C.projection.dom, w)).op.is_identity();
      }
    }
  r.check(cedge, "the projection kills every critical edge (ConeEdge), m+n <= 4");

  bool agree = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (const NerveCube& c : N2.level(m + n))
        agree = agree && is_cone(N2, c, m, n) == is_cone_via_factorization(N2, c, m, n);
  r.check(agree, "FaceCond agrees with quotient factorization, m+n <= 4 over nerve(poset:2)");

  bool sa1 = true, qsf = true;
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (const NerveCube& c : enumerate_cones(N2, m, n)) {
        auto [base, word] = standard_form(N2, c);
        if (word.is_identity()) continue;
        if (!word.degeneracies().empty()) sa1 = sa1 && word.degeneracies().back() >= n + 1;
        else if (!word.connections().empty() && word.connections().back().second == 1)
          sa1 = sa1 && word.connections().back().first >= n + 1;
      }
  for (int n = 0; n <= 4; ++n)
    for (const NerveCube& c : enumerate_cones(N2, 0, n)) {
      auto [base, word] = standard_form(N2, c);
      for (auto [bi, be] : word.connections()) qsf = qsf && be == 0;
    }
  r.check(sa1, "standard forms of degenerate cones respect the index bound (sa1)");
  r.check(qsf, "(0,n)-cones contain no positive connections in standard form");
  return r;
}

SuiteResult suite_q(SuiteContext& ctx) {
  SuiteResult r{"Q and integral"};
  bool cosimp = true;
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        cosimp = cosimp && compose_maps(q_coface(n, j), q_coface(n - 1, i)) ==
                               compose_maps(q_coface(n, i), q_coface(n - 1, j - 1));
  }
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i) {
        ComplexMap lhs = compose_maps(q_codegeneracy(n, j), q_coface(n, i));
        ComplexMap rhs;
        if (i < j)
          rhs = compose_maps(q_coface(n - 1, i), q_codegeneracy(n - 1, j - 1));
        else if (i == j || i == j + 1)
          rhs = identity_map(q_object_cached(n - 1).complex);
        else
          rhs = compose_maps(q_coface(n - 1, i - 1), q_codegeneracy(n - 1, j));
        cosimp = cosimp && lhs == rhs;
      }
  r.check(cosimp, "cosimplicial identities of the Q objects for n <= 4");

  bool qhorn = true;
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      QFunctorResult qh = q_functor(horn(n, i));
      QFunctorResult qd = q_functor(standard_simplex(n));
      ComplexMap qincl = q_functor_map(qh, qd, horn_inclusion(n, i));
      SubcomplexResult img = image_subcomplex(qincl);
      const QObject& q = q_object_cached(n);
      // the missing face of Q^n: (n-i+1, 0) for i >= 1, (n, 1) for i = 0
      int mj = (i >= 1) ? n - i + 1 : n;
      int me = (i >= 1) ? 0 : 1;
      std::set<CubeId> gens;
      for (int j = 1; j <= n; ++j)
        for (int e = 0; e <= 1; ++e) {
          if (j == mj && e == me) continue;
          gens.insert(
              q.projection.apply(box_ref(*q.projection.dom, BoxOp::face(n, j, e))).target);
        }
      SubcomplexResult box_img = subcomplex(q.complex, gens);
      qhorn = qhorn && find_isomorphism(img.complex, box_img.complex).has_value();
    }
  r.check(qhorn, "Q(horn^n_i) is the image of the (n-i+1,0)-open box for n <= 3");

  QFunctorResult qj = q_functor(shape_J());
  ctx.reg("QJ", qj.complex);
  r.check(find_isomorphism(qj.complex, shape_K()).has_value(), "QJ = K");

  bool counits = true;
  {
    CounitResult sq = counit(standard_cube(2), 3);
    counits = counits && sq.analysis.mono && sq.analysis.image_is_cones &&
              sq.analysis.no_positive_connections;
    CounitResult k = counit(shape_K(), 3);
    counits = counits && k.analysis.mono && k.analysis.image_is_cones &&
              k.analysis.no_positive_connections;
    NerveCounitResult n2 = counit_nerve(NerveComplex(poset_category(2)), 3);
    counits = counits && n2.analysis.mono && n2.analysis.image_is_cones &&
              n2.analysis.no_positive_connections;
    ctx.reg("counit-q-side", sq.q_side.complex);
    ctx.reg("counit-integral", sq.integral_complex);
  }
  r.check(counits, "the counit is a monomorphism onto the (0,n)-cones");

  bool faithful = true;
  {
    std::vector<SimpPtr> shapes{standard_simplex(0), standard_simplex(1), standard_simplex(2),
                                horn(2, 1)};
    for (SimpPtr S : shapes)
      for (SimpPtr T : shapes) {
        std::vector<SimpMap> smaps = enumerate_simp_maps(S, T);
        QFunctorResult QS = q_functor(S);
        QFunctorResult QT = q_functor(T);
        std::vector<ComplexMap> cmaps = enumerate_maps(QS.complex, QT.complex);
        std::set<std::vector<std::vector<CubeRef>>> images;
        for (const SimpMap& f : smaps) images.insert(q_functor_map(QS, QT, f).assign);
        faithful = faithful && smaps.size() == cmaps.size() && images.size() == smaps.size();
      }
  }
  r.check(faithful, "Q is fully faithful on the stated small simplicial sets");

  bool fg = true;
  for (int n = 0; n <= 4; ++n) {
    for (int a = 0; a <= n; ++a) fg = fg && map_F(n, map_G(n, a)) == a;
    for (int a = 0; a <= n; ++a)
      for (uint32_t b = 0; b < (1u << n); ++b)
        fg = fg && ((map_F(n, b) <= a) == ((b & map_G(n, a)) == b));
  }
  r.check(fg, "F and G form an adjunction with F o G = id for n <= 4");

  bool fbar = true;
  for (int n = 1; n <= 3; ++n) {
    FBarResult fn = f_bar_component(n);
    FBarResult fm = f_bar_component(n - 1);
    fbar = fbar && validate_map(fn.map).ok;
    for (int j = 0; j <= n; ++j) {
      SimpMap tqphi = triangulate_map(fm.TQ, fn.TQ, q_coface(n, j));
      SimpMap lhs = simp_compose_maps(fn.map, tqphi);
      std::vector<int> val = evaluate_simp(SimpOp::face(n, j));
      SimpMap nphi = nerve_map(nerve_of_poset(chain_poset(n - 1)),
                               nerve_of_poset(chain_poset(n)), [&](int v) { return val[v]; });
      fbar = fbar && lhs == simp_compose_maps(nphi, fm.map);
    }
    for (int j = 0; j <= n - 1; ++j) {
      SimpMap tqphi = triangulate_map(fn.TQ, fm.TQ, q_codegeneracy(n, j));
      SimpMap lhs = simp_compose_maps(fm.map, tqphi);
      std::vector<int> val = evaluate_simp(SimpOp::degeneracy(n - 1, j));
      SimpMap nphi = nerve_map(nerve_of_poset(chain_poset(n)),
                               nerve_of_poset(chain_poset(n - 1)), [&](int v) { return val[v]; });
      fbar = fbar && lhs == simp_compose_maps(nphi, fn.map);
    }
  }
  r.check(fbar, "F-bar naturality squares for all generators, n <= 3");
  return r;
}

SuiteResult suite_quasicat(SuiteContext& ctx) {
  SuiteResult r{"quasicategory layer"};
  bool nerves = true;
  int categories_checked = 0;
  std::vector<FinCategory> cats = enumerate_small_categories(3, 4);
  for (const FinCategory& C : category_corpus()) cats.push_back(C);
  for (const FinCategory& C : cats) {
    NerveComplex N(C);
    QuasicatReport rep = is_quasicategory_up_to(N, 3, ctx.budget);
    nerves = nerves && rep.ok;
    ++categories_checked;
  }
  {
    std::ostringstream os;
    os << "nerves of " << categories_checked
       << " categories (<= 3 objects, <= 6 morphisms) are quasicategories up to dim 3";
    r.check(nerves, os.str());
  }

  {
    ExplicitCubes sq{standard_cube(2)};
    QuasicatReport rep = is_quasicategory_up_to(sq, 2, ctx.budget);
    bool witness = !rep.ok && rep.failing_shape.has_value();
    // the explicit diagonal witness: left and bottom edges with the critical
    // edge degenerate; the filler would need the diagonal edge
    OpenBoxProblem<CubeRef> p;
    p.n = 2;
    p.i = 2;
    p.eps = 0;
    ComplexPtr c2 = sq.complex;
    p.boundary[{1, 0}] = c2->ref(*c2->find_by_name("0*"));
    p.boundary[{1, 1}] = CubeRef{*c2->find_by_name("11"), BoxOp::degeneracy(1, 1)};
    p.boundary[{2, 1}] = c2->ref(*c2->find_by_name("*1"));
    witness = witness && boundary_consistent(sq, p) && is_inner_problem(sq, p) &&
              !find_filler(sq, p).has_value();
    r.check(witness, "box^2 fails with the diagonal witness");
  }

  {
    NerveComplex N(poset_category(2));
    HoCategory<NerveComplex> H = ho(N);
    r.check(validate(H.cat).ok && categories_isomorphic(H.cat, poset_category(2)),
            "ho(nerve(poset:2)) = poset:2");

    bool edc = true;
    std::vector<NerveCube> edges = N.level(1);
    auto cls = [&](const NerveCube& f) {
      for (size_t m = 0; m < H.representatives.size(); ++m)
        if (H.representatives[m] == f) return static_cast<int>(m);
      return -1;
    };
    auto src = [&](const NerveCube& f) { return N.act(f, BoxOp::face(1, 1, 0)); };
    auto dst = [&](const NerveCube& f) { return N.act(f, BoxOp::face(1, 1, 1)); };
    for (const NerveCube& p : edges)
      for (const NerveCube& g : edges)
        for (const NerveCube& f : edges)
          for (const NerveCube& q : edges) {
            if (!(dst(f) == src(g)) || !(src(f) == src(p)) || !(dst(p) == src(q)) ||
                !(dst(q) == dst(g)))
              continue;
            edc = edc && square_exists(N, p, g, f, q) ==
                             (H.cat.comp[cls(g)][cls(f)] == H.cat.comp[cls(q)][cls(p)]);
          }
    r.check(edc, "squares exist iff the two composites agree (nerve(poset:2))");
  }

  {
    NerveComplex N(poset_category(1));
    auto M = mapping_space(N, N.vertex(0), N.vertex(1), MapSide::R, 2);
    ctx.reg("map-space", M.complex);
    r.check(M.complex->count(0) == 1 && M.complex->count(1) == 0 && M.complex->count(2) == 0,
            "Map^R_{nerve(poset:1)}(0,1) is terminal up to level 2");

    NerveTruncation T = truncate_nerve(N, 2);
    SuspensionResult S = suspension(point());
    ctx.reg("suspension", S.complex);
    std::optional<CubeId> y0, y1;
    for (int k = 0; k < T.complex->count(0); ++k) {
      if (T.cube_of[0][k] == N.vertex(0)) y0 = CubeId{0, k};
      if (T.cube_of[0][k] == N.vertex(1)) y1 = CubeId{0, k};
    }
    std::vector<ComplexMap> lhs = enumerate_bipointed_maps(S, T.complex, *y0, *y1);
    auto M1 = mapping_space(N, N.vertex(0), N.vertex(1), MapSide::R, 1);
    std::vector<ComplexMap> rhs = enumerate_maps(point(), M1.complex);
    r.check(lhs.size() == rhs.size() && lhs.size() == 1,
            "suspension-mapping adjunction bijection on the stated instance");
  }
  return r;
}

SuiteResult suite_theta(SuiteContext& ctx) {
  (void)ctx;
  SuiteResult r{"theta"};
  for (int k = 1; k <= 3; ++k) {
    NerveComplex N(poset_category(k));
    ThetaFamily<NerveComplex> F(N, 4);
    std::vector<ThetaReportLine> rep = verify_theta(F);
    bool all = true;
    long long checked = 0;
    for (const ThetaReportLine& l : rep) {
      all = all && l.failed == 0;
      checked += l.checked;
    }
    std::ostringstream os;
    os << "all eight identities on nerve(poset:" << k << "), m+n+1 <= 4 (" << checked
       << " checks)";
    r.check(all && checked > 0, os.str());
    bool bicond = true, dege = true;
    for (int m = 0; m + 1 <= 4; ++m)
      for (int n = 0; m + n + 1 <= 4; ++n) bicond = bicond && check_theta_case_biconditional(F, m, n);
    for (int m = 0; m + 1 <= 4; ++m) dege = dege && check_theta_degenerate_edges(F, m);
    if (k == 2) {
      r.check(bicond, "case-6/case-5 biconditional on nerve(poset:2)");
      r.check(dege, "critical edges of theta^{m,0} cubes are degenerate");
      CounitStepReport s20 = counit_step_check(F, 2, 0);
      CounitStepReport s21 = counit_step_check(F, 2, 1);
      r.check(s20.ok && s20.case6_cones > 0 && s21.ok,
              "counit filtration steps (2,0) and (2,1) on nerve(poset:2)");
      std::set<NerveCube> lower = filtration_subcomplex(F, 2, -1);
      std::set<NerveCube> cones;
      for (int n = 0; n <= 3; ++n)
        for (const NerveCube& c : enumerate_cones(N, 0, n))
          if (standard_form(N, c).second.is_identity()) cones.insert(c);
      r.check(lower == cones, "X^{2,-1} equals the counit image on non-degenerate cubes");
    }
  }
  return r;
}

SuiteResult suite_serialization(SuiteContext& ctx) {
  SuiteResult r{"serialization"};
  bool cub = true;
  for (const auto& [name, X] : ctx.cubical) {
    std::string s1 = serialize_cub(*X, name);
    std::string s2 = serialize_cub(*parse_cub(s1), name);
    cub = cub && s1 == s2;
  }
  {
    std::ostringstream os;
    os << ".cub round trip is byte-identical on " << ctx.cubical.size() << " suite complexes";
    r.check(cub && !ctx.cubical.empty(), os.str());
  }
  bool sim = true;
  for (const auto& [name, S] : ctx.simplicial) {
    std::string s1 = serialize_sim(*S, name);
    std::string s2 = serialize_sim(*parse_sim(s1), name);
    sim = sim && s1 == s2;
  }
  {
    std::ostringstream os;
    os << ".sim round trip is byte-identical on " << ctx.simplicial.size() << " suite complexes";
    r.check(sim && !ctx.simplicial.empty(), os.str());
  }
  return r;
}

std::vector<SuiteResult> run_all_suites(SuiteContext& ctx) {
  std::vector<SuiteResult> out;
  out.push_back(suite_normal_form(ctx));
  out.push_back(suite_involutions(ctx));
  out.push_back(suite_product(ctx));
  out.push_back(suite_triangulation(ctx));
  out.push_back(suite_cones(ctx));
  out.push_back(suite_q(ctx));
  out.push_back(suite_quasicat(ctx));
  out.push_back(suite_theta(ctx));
  // collect a few simplicial artifacts for the round trip as well
  ctx.reg("J", shape_J());
  ctx.reg("TQ2", f_bar_component(2).TQ.complex);
  out.push_back(suite_serialization(ctx));
  return out;
}

std::vector<SuiteResult> run_suite_by_name(const std::string& name, SuiteContext& ctx) {
  if (name == "identities") return {suite_normal_form(ctx), suite_involutions(ctx)};
  if (name == "product") return {suite_product(ctx)};
  if (name == "triangulation") return {suite_triangulation(ctx)};
  if (name == "cones") return {suite_cones(ctx)};
  if (name == "q") return {suite_q(ctx)};
  if (name == "quasicat") return {suite_quasicat(ctx)};
  if (name == "theta") return {suite_theta(ctx)};
  if (name == "serialization") return {suite_serialization(ctx)};
  if (name == "all") return run_all_suites(ctx);
  throw std::runtime_error("unknown suite: " + name);
}

}  // namespace cubik
