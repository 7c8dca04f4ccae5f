#include "cubik/cone.hpp"

#include <algorithm>
#include <cassert>

namespace cubik {

namespace {

ComplexPtr interval() { return standard_cube(1); }

CubeId top_cube(const ComplexPtr& X) { return CubeId{X->dim_bound(), 0}; }

// The end embedding X -> cylinder at vertex eps of the interval factor.
ComplexMap end_embedding(const ProductResult& cyl, ComplexPtr X, ConeSide side, int eps) {
  ComplexMap f;
  f.dom = X;
  f.cod = cyl.complex;
  f.assign.resize(X->dim_bound() + 1);
  ComplexPtr I = (side == ConeSide::L) ? cyl.left_factor : cyl.right_factor;
  CubeId v = *I->find_by_name(eps == 0 ? "0" : "1");
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) {
      CubeId x{n, k};
      PairCube p = (side == ConeSide::L) ? PairCube{I->ref(v), X->ref(x)}
                                         : PairCube{X->ref(x), I->ref(v)};
      p = canonical_pair(*cyl.left_factor, *cyl.right_factor, p.left, p.right);
      f.assign[n].push_back(cyl.ref_of(p));
    }
  return f;
}

ComplexMap collapse_to_point(ComplexPtr X, ComplexPtr pt) {
  ComplexMap f;
  f.dom = X;
  f.cod = pt;
  f.assign.resize(X->dim_bound() + 1);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) {
      BoxOp op = BoxOp::identity(0);
      for (int j = 1; j <= n; ++j) op = compose(op, BoxOp::degeneracy(j, j));
      f.assign[n].push_back(CubeRef{CubeId{0, 0}, op});
    }
  return f;
}

std::optional<CubeId> preimage_on_nondegenerate(const ComplexMap& p, CubeId target) {
  for (int m = 0; m <= p.dom->dim_bound(); ++m)
    for (int j = 0; j < p.dom->count(m); ++j) {
      const CubeRef& r = p(CubeId{m, j});
      if (r.op.is_identity() && r.target == target) return CubeId{m, j};
    }
  return std::nullopt;
}

}  // namespace

ConeResult cone(ComplexPtr X, ConeKind kind) {
  ConeResult res;
  res.kind = kind;
  ComplexPtr I = interval();
  res.cylinder = (kind.side == ConeSide::L) ? product(I, X) : product(X, I);
  ComplexPtr pt = point();
  ComplexMap collapse_end = end_embedding(res.cylinder, X, kind.side, kind.sign);
  ComplexMap to_point = collapse_to_point(X, pt);
  PushoutResult po = pushout(collapse_end, to_point);
  res.complex = po.complex;
  res.cyl_proj = po.from_left;
  res.cone_point = po.from_right(CubeId{0, 0}).target;
  res.eta = compose_maps(po.from_left, end_embedding(res.cylinder, X, kind.side, 1 - kind.sign));
  return res;
}

ComplexMap cone_map(const ConeResult& CX, const ConeResult& CY, const ComplexMap& f) {
  if (!(CX.kind == CY.kind)) throw DimensionError("cone_map: kinds differ");
  ComplexMap h;
  h.dom = CX.complex;
  h.cod = CY.complex;
  h.assign.resize(CX.complex->dim_bound() + 1);
  const ProductResult& PD = CX.cylinder;
  const ProductResult& PC = CY.cylinder;
  for (int n = 0; n <= CX.complex->dim_bound(); ++n)
    for (int k = 0; k < CX.complex->count(n); ++k) {
      auto pre = preimage_on_nondegenerate(CX.cyl_proj, CubeId{n, k});
      if (!pre) throw std::logic_error("cone cube without cylinder preimage");
      auto [a, b] = PD.pairs[pre->dim][pre->idx];
      PairCube img = (CX.kind.side == ConeSide::L)
                         ? canonical_pair(*PC.left_factor, *PC.right_factor,
                                          PC.left_factor->ref(a), f(b))
                         : canonical_pair(*PC.left_factor, *PC.right_factor, f(a),
                                          PC.right_factor->ref(b));
      h.assign[n].push_back(CY.cyl_proj.apply(PC.ref_of(img)));
    }
  return h;
}

ComplexMap cone_mu(ComplexPtr, const ConeResult& CX, const ConeResult& CCX) {
  ConeKind kind = CX.kind;
  ComplexMap h;
  h.dom = CCX.complex;
  h.cod = CX.complex;
  h.assign.resize(CCX.complex->dim_bound() + 1);
  const ProductResult& P2 = CCX.cylinder;
  const ProductResult& P1 = CX.cylinder;
  ComplexPtr I = (kind.side == ConeSide::L) ? P1.left_factor : P1.right_factor;
  for (int n = 0; n <= CCX.complex->dim_bound(); ++n)
    for (int k = 0; k < CCX.complex->count(n); ++k) {
      auto pre2 = preimage_on_nondegenerate(CCX.cyl_proj, CubeId{n, k});
      if (!pre2) throw std::logic_error("cone cube without cylinder preimage");
      auto [a2, b2] = P2.pairs[pre2->dim][pre2->idx];
      CubeId outer = (kind.side == ConeSide::L) ? a2 : b2;
      CubeId inner_cx = (kind.side == ConeSide::L) ? b2 : a2;
      auto pre1 = preimage_on_nondegenerate(CX.cyl_proj, inner_cx);
      if (!pre1) throw std::logic_error("inner cone cube without preimage");
      auto [a1, b1] = P1.pairs[pre1->dim][pre1->idx];
      CubeId mid = (kind.side == ConeSide::L) ? a1 : b1;
      CubeId base = (kind.side == ConeSide::L) ? b1 : a1;
      ComplexPtr I2 = (kind.side == ConeSide::L) ? P2.left_factor : P2.right_factor;
      ComplexPtr I1 = (kind.side == ConeSide::L) ? P1.left_factor : P1.right_factor;
      BoxOp f1 = face_word_as_op(*I2, outer);
      BoxOp f2 = face_word_as_op(*I1, mid);
      BoxOp folded = (kind.side == ConeSide::L)
                         ? compose(BoxOp::connection(2, 1, 1 - kind.sign), tensor_ops(f1, f2))
                         : compose(BoxOp::connection(2, 1, 1 - kind.sign), tensor_ops(f2, f1));
      CubeRef interval_cube = box_ref(*I, folded);
      PairCube img = (kind.side == ConeSide::L)
                         ? canonical_pair(*P1.left_factor, *P1.right_factor, interval_cube,
                                          P1.right_factor->ref(base))
                         : canonical_pair(*P1.left_factor, *P1.right_factor,
                                          P1.left_factor->ref(base), interval_cube);
      h.assign[n].push_back(CX.cyl_proj.apply(P1.ref_of(img)));
    }
  return h;
}

// --- standard cones ----------------------------------------------------------

namespace {

std::vector<int> coordinate_function(const VertexMap& v, int l) {
  std::vector<int> out(v.table.size());
  for (size_t k = 0; k < v.table.size(); ++k) out[k] = (v.table[k] >> (l - 1)) & 1;
  return out;
}

bool is_const_one(const std::vector<int>& f) {
  return std::all_of(f.begin(), f.end(), [](int b) { return b == 1; });
}

}  // namespace

StandardCone standard_cone(int m, int n) {
  StandardCone C;
  C.m = m;
  C.n = n;
  ComplexPtr cube = standard_cube(m + n);
  std::vector<std::pair<CubeRef, CubeRef>> glue;
  for (int k = 0; k <= m + n; ++k) {
    std::vector<BoxOp> cubes = enumerate_hom(k, m + n);
    std::vector<VertexMap> maps;
    maps.reserve(cubes.size());
    for (const BoxOp& f : cubes) maps.push_back(evaluate(f));
    for (int j = 1; j <= n; ++j) {
      std::map<std::vector<std::vector<int>>, std::vector<size_t>> buckets;
      for (size_t t = 0; t < cubes.size(); ++t) {
        if (!is_const_one(coordinate_function(maps[t], j))) continue;
        std::vector<std::vector<int>> key;
        for (int l = 1; l < j; ++l) key.push_back(coordinate_function(maps[t], l));
        buckets[key].push_back(t);
      }
      for (const auto& [key, members] : buckets)
        for (size_t t = 1; t < members.size(); ++t)
          glue.emplace_back(box_ref(*cube, cubes[members[0]]),
                            box_ref(*cube, cubes[members[t]]));
    }
  }
  QuotientResult q = quotient(cube, glue);
  C.complex = q.complex;
  C.projection = q.projection;
  return C;
}

const StandardCone& standard_cone_cached(int m, int n) {
  static std::map<std::pair<int, int>, StandardCone> cache;
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, standard_cone(m, n)).first;
  return it->second;
}

BoxOp cone_class_rep(const StandardCone& C, CubeId c) {
  auto pre = preimage_on_nondegenerate(C.projection, c);
  if (!pre) throw std::logic_error("cone class without face-word representative");
  return face_word_as_op(*C.projection.dom, *pre);
}

BComplexResult b_complex(int m, int n, int k) {
  if (k < 0 || k > m + n) throw DimensionError("b_complex: k out of range");
  const StandardCone& C = standard_cone_cached(m, n);
  ComplexPtr cube = C.projection.dom;
  std::set<CubeId> gens;
  auto add_face = [&](int i, int e) {
    CubeRef img = C.projection.apply(box_ref(*cube, BoxOp::face(m + n, i, e)));
    gens.insert(img.target);
  };
  for (int i = 1; i <= k; ++i) add_face(i, 0);
  for (int i = 1; i <= m + n; ++i) add_face(i, 1);
  SubcomplexResult sub = subcomplex(C.complex, gens);
  BComplexResult res;
  res.complex = sub.complex;
  res.inclusion = sub.inclusion;
  if (m >= 1 && n >= 1 && k >= n && k <= m + n - 1) {
    std::function<void(int, int, int)> dec = [&](int mm, int nn, int kk) {
      for (int t = kk; t <= mm + nn - 2; ++t) {
        res.decomposition.push_back({BComplexResult::Step::ExtendFace, mm, nn, t});
        dec(mm - 1, nn, t);
      }
      res.decomposition.push_back({BComplexResult::Step::FillBox, mm, nn, mm + nn});
    };
    dec(m, n, k);
  }
  return res;
}

// --- Q objects ----------------------------------------------------------------

BoxOp q_coface_op(int n, int j, ConeKind kind) {
  if (j < 0 || j > n) throw DimensionError("coface index out of range");
  if (kind == kLeftPositive) return j == 0 ? BoxOp::face(n, n, 1) : BoxOp::face(n, n - j + 1, 0);
  if (kind == kLeftNegative) return j == 0 ? BoxOp::face(n, n, 0) : BoxOp::face(n, n - j + 1, 1);
  if (kind == kRightNegative) return j == 0 ? BoxOp::face(n, 1, 0) : BoxOp::face(n, j, 1);
  return j == 0 ? BoxOp::face(n, 1, 1) : BoxOp::face(n, j, 0);  // right positive
}

BoxOp q_codegeneracy_op(int n, int j, ConeKind kind) {
  if (j < 0 || j > n - 1) throw DimensionError("codegeneracy index out of range");
  if (kind == kLeftPositive)
    return j == 0 ? BoxOp::degeneracy(n, n) : BoxOp::connection(n, n - j, 0);
  if (kind == kLeftNegative)
    return j == 0 ? BoxOp::degeneracy(n, n) : BoxOp::connection(n, n - j, 1);
  if (kind == kRightNegative)
    return j == 0 ? BoxOp::degeneracy(n, 1) : BoxOp::connection(n, j, 1);
  return j == 0 ? BoxOp::degeneracy(n, 1) : BoxOp::connection(n, j, 0);
}

QObject q_object(int n, ConeKind kind) {
  QObject q;
  q.n = n;
  q.kind = kind;
  ComplexPtr cur = point();
  ComplexMap proj;
  proj.dom = standard_cube(0);
  proj.cod = cur;
  proj.assign.resize(1);
  proj.assign[0].push_back(cur->ref(CubeId{0, 0}));
  for (int t = 0; t < n; ++t) {
    ConeResult c = cone(cur, kind);
    ComplexPtr I = interval();
    ComplexPtr next_cube = standard_cube(t + 1);
    ProductResult freecyl =
        (kind.side == ConeSide::L) ? product(I, proj.dom) : product(proj.dom, I);
    ComplexMap un;
    un.dom = next_cube;
    un.cod = freecyl.complex;
    un.assign.resize(t + 2);
    PairCube top{freecyl.left_factor->ref(top_cube(freecyl.left_factor)),
                 freecyl.right_factor->ref(top_cube(freecyl.right_factor))};
    for (int d = 0; d <= t + 1; ++d)
      for (int idx = 0; idx < next_cube->count(d); ++idx) {
        BoxOp w = face_word_as_op(*next_cube, CubeId{d, idx});
        un.assign[d].push_back(
            freecyl.ref_of(pair_act(*freecyl.left_factor, *freecyl.right_factor, top, w)));
      }
    ComplexMap lift = (kind.side == ConeSide::L)
                          ? product_map(freecyl, c.cylinder, identity_map(I), proj)
                          : product_map(freecyl, c.cylinder, proj, identity_map(I));
    proj = compose_maps(c.cyl_proj, compose_maps(lift, un));
    cur = c.complex;
  }
  q.complex = cur;
  q.projection = proj;
  return q;
}

const QObject& q_object_cached(int n, ConeKind kind) {
  static std::map<std::pair<int, std::pair<int, int>>, QObject> cache;
  auto key = std::make_pair(n, std::make_pair(kind.side == ConeSide::L ? 0 : 1, kind.sign));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, q_object(n, kind)).first;
  return it->second;
}

BoxOp q_class_rep(int n, CubeId c) {
  const QObject& q = q_object_cached(n, kLeftPositive);
  auto pre = preimage_on_nondegenerate(q.projection, c);
  if (!pre) throw std::logic_error("q class without face-word representative");
  return face_word_as_op(*q.projection.dom, *pre);
}

namespace {

ComplexMap induced_between_q(const QObject& dom, const QObject& cod, const BoxOp& w) {
  ComplexMap h;
  h.dom = dom.complex;
  h.cod = cod.complex;
  h.assign.resize(dom.complex->dim_bound() + 1);
  for (int d = 0; d <= dom.complex->dim_bound(); ++d)
    for (int k = 0; k < dom.complex->count(d); ++k) {
      auto pre = preimage_on_nondegenerate(dom.projection, CubeId{d, k});
      if (!pre) throw std::logic_error("q object class without representative");
      BoxOp rep = face_word_as_op(*dom.projection.dom, *pre);
      h.assign[d].push_back(cod.projection.apply(box_ref(*cod.projection.dom, compose(w, rep))));
    }
  return h;
}

}  // namespace

ComplexMap q_coface(int n, int j, ConeKind kind) {
  return induced_between_q(q_object_cached(n - 1, kind), q_object_cached(n, kind),
                           q_coface_op(n, j, kind));
}

ComplexMap q_codegeneracy(int n, int j, ConeKind kind) {
  return induced_between_q(q_object_cached(n, kind), q_object_cached(n - 1, kind),
                           q_codegeneracy_op(n, j, kind));
}

ComplexMap q_of_op(const SimpOp& w, ConeKind kind) {
  ComplexMap acc = identity_map(q_object_cached(w.dom(), kind).complex);
  int cur = w.dom();
  std::vector<std::pair<bool, int>> letters;
  for (int f : w.faces()) letters.emplace_back(true, f);
  for (int d : w.degeneracies()) letters.emplace_back(false, d);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->first) {
      acc = compose_maps(q_coface(cur + 1, it->second, kind), acc);
      ++cur;
    } else {
      acc = compose_maps(q_codegeneracy(cur, it->second, kind), acc);
      --cur;
    }
  }
  return acc;
}

QFunctorResult q_functor(SimpPtr S, ConeKind kind) {
  QFunctorResult res;
  res.source = S;
  ComplexPtr total = empty_complex();
  std::vector<std::vector<ComplexMap>> into(S->dim_bound() + 1);
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k) {
      UnionResult u = disjoint_union(total, q_object_cached(n, kind).complex);
      for (auto& lvl : into)
        for (ComplexMap& prev : lvl) prev = compose_maps(u.inj_left, prev);
      into[n].push_back(u.inj_right);
      total = u.complex;
    }
  std::vector<std::pair<CubeRef, CubeRef>> glue;
  for (int n = 1; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k)
      for (int i = 0; i <= n; ++i) {
        SimpRef f = S->face(SimpId{n, k}, i);
        ComplexMap via = q_coface(n, i, kind);
        ComplexMap then = q_of_op(f.op, kind);
        ComplexPtr Qsrc = q_object_cached(n - 1, kind).complex;
        for (int d = 0; d <= Qsrc->dim_bound(); ++d)
          for (int c = 0; c < Qsrc->count(d); ++c) {
            CubeId cid{d, c};
            glue.emplace_back(into[n][k].apply(via(cid)),
                              into[f.target.dim][f.target.idx].apply(then(cid)));
          }
      }
  QuotientResult q = quotient(total, glue);
  res.complex = q.complex;
  res.glue.resize(S->dim_bound() + 1);
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k)
      res.glue[n].push_back(compose_maps(q.projection, into[n][k]));
  return res;
}

ComplexMap q_functor_map(const QFunctorResult& QA, const QFunctorResult& QB, const SimpMap& f,
                         ConeKind kind) {
  ComplexMap h;
  h.dom = QA.complex;
  h.cod = QB.complex;
  h.assign.resize(QA.complex->dim_bound() + 1);
  for (int n = 0; n <= QA.complex->dim_bound(); ++n)
    for (int k = 0; k < QA.complex->count(n); ++k) {
      CubeRef target{CubeId{n, k}, BoxOp::identity(n)};
      std::optional<CubeRef> image;
      for (int m = 0; m <= QA.source->dim_bound() && !image; ++m)
        for (int x = 0; x < QA.source->count(m) && !image; ++x) {
          const ComplexMap& g = QA.glue[m][x];
          for (int d = 0; d <= g.dom->dim_bound() && !image; ++d)
            for (int c = 0; c < g.dom->count(d) && !image; ++c) {
              if (!(g(CubeId{d, c}) == target)) continue;
              SimpRef fx = f(SimpId{m, x});
              ComplexMap carry = q_of_op(fx.op, kind);
              image = QB.glue[fx.target.dim][fx.target.idx].apply(carry(CubeId{d, c}));
            }
        }
      if (!image) throw std::logic_error("q_functor_map: no preimage found");
      h.assign[n].push_back(*image);
    }
  return h;
}

// --- counit -------------------------------------------------------------------

namespace {

template <CubicalLike X>
CounitAnalysis analyse_counit(const X& ambient, const QFunctorResult& QS,
                              const Materialized<typename X::Cube>& I, GenMap<X>& out_map) {
  CounitAnalysis a;
  out_map.dom = QS.complex;
  out_map.cod = &ambient;
  out_map.assign.clear();
  out_map.assign.resize(QS.complex->dim_bound() + 1);
  for (int n = 0; n <= QS.complex->dim_bound(); ++n)
    for (int k = 0; k < QS.complex->count(n); ++k) {
      CubeRef target{CubeId{n, k}, BoxOp::identity(n)};
      std::optional<typename X::Cube> image;
      for (int m = 0; m <= QS.source->dim_bound() && !image; ++m)
        for (int s = 0; s < QS.source->count(m) && !image; ++s) {
          const ComplexMap& g = QS.glue[m][s];
          for (int d = 0; d <= g.dom->dim_bound() && !image; ++d)
            for (int c = 0; c < g.dom->count(d) && !image; ++c) {
              if (!(g(CubeId{d, c}) == target)) continue;
              image = ambient.act(I.cube_of[m][s], q_class_rep(m, CubeId{d, c}));
            }
        }
      if (!image) throw std::logic_error("counit: no preimage found");
      out_map.assign[n].push_back(*image);
    }
  a.mono = gen_map_valid(out_map) && gen_map_mono(out_map);
  a.image_counts.assign(QS.complex->dim_bound() + 1, 0);
  a.image_is_cones = true;
  a.no_positive_connections = true;
  for (int n = 0; n <= QS.complex->dim_bound(); ++n) {
    a.image_counts[n] = static_cast<int>(out_map.assign[n].size());
    // every non-degenerate (0,n)-cone appears in the image, and vice versa
    std::vector<typename X::Cube> nondeg_cones;
    for (const auto& c : enumerate_cones(ambient, 0, n))
      if (standard_form(ambient, c).second.is_identity()) nondeg_cones.push_back(c);
    for (const auto& c : nondeg_cones) {
      bool found = false;
      for (const auto& i : out_map.assign[n])
        if (i == c) found = true;
      if (!found) a.image_is_cones = false;
    }
    for (const auto& c : out_map.assign[n]) {
      if (!is_cone(ambient, c, 0, n)) a.image_is_cones = false;
      auto [base, word] = standard_form(ambient, c);
      for (auto [bi, be] : word.connections())
        if (be == 1) a.no_positive_connections = false;
    }
  }
  return a;
}

}  // namespace

CounitResult counit(ComplexPtr X, int bound) {
  CounitResult res;
  res.ambient = std::make_unique<ExplicitCubes>(ExplicitCubes{X});
  Materialized<CubeRef> I = integral(*res.ambient, bound);
  res.integral_complex = I.complex;
  res.q_side = q_functor(I.complex);
  res.analysis = analyse_counit(*res.ambient, res.q_side, I, res.map);
  return res;
}

NerveCounitResult counit_nerve(const NerveComplex& N, int bound) {
  NerveCounitResult res;
  Materialized<NerveCube> I = integral(N, bound);
  res.integral_complex = I.complex;
  res.q_side = q_functor(I.complex);
  res.analysis = analyse_counit(N, res.q_side, I, res.map);
  return res;
}

// --- F-bar --------------------------------------------------------------------

namespace {

SimpRef chain_to_simplex(const SimplicialComplex& nerve, const std::vector<int>& chain) {
  std::vector<int> core;
  std::vector<int> values;
  for (size_t t = 0; t < chain.size(); ++t) {
    if (core.empty() || core.back() != chain[t]) core.push_back(chain[t]);
    values.push_back(static_cast<int>(core.size()) - 1);
  }
  SimpOp op = simp_op_from_function(values, static_cast<int>(core.size()) - 1);
  return SimpRef{chain_simplex(nerve, core), op};
}

}  // namespace

FBarResult f_bar_component(int n) {
  const QObject& q = q_object_cached(n, kLeftPositive);
  FBarResult res;
  res.TQ = triangulate(q.complex);
  SimpPtr target = nerve_of_poset(chain_poset(n));
  SimpMap h;
  h.dom = res.TQ.complex;
  h.cod = target;
  h.assign.resize(res.TQ.complex->dim_bound() + 1);
  for (int d = 0; d <= res.TQ.complex->dim_bound(); ++d)
    for (int k = 0; k < res.TQ.complex->count(d); ++k) {
      SimpRef t = res.TQ.complex->ref(SimpId{d, k});
      std::optional<SimpRef> image;
      for (int m = 0; m <= q.complex->dim_bound() && !image; ++m)
        for (int x = 0; x < q.complex->count(m) && !image; ++x) {
          const SimpMap& g = res.TQ.glue[m][x];
          for (int dd = 0; dd <= g.dom->dim_bound() && !image; ++dd)
            for (int s = 0; s < g.dom->count(dd) && !image; ++s) {
              if (!(g(SimpId{dd, s}) == t)) continue;
              BoxOp rep = q_class_rep(n, CubeId{m, x});
              VertexMap rv = evaluate(rep);
              std::vector<int> chain = chain_of_simplex(*res.TQ.cube_nerves[m][x], SimpId{dd, s});
              std::vector<int> fchain;
              for (int v : chain) fchain.push_back(map_F(n, rv(static_cast<uint32_t>(v))));
              image = chain_to_simplex(*target, fchain);
            }
        }
      if (!image) throw std::logic_error("f_bar: no preimage found");
      h.assign[d].push_back(*image);
    }
  res.map = h;
  return res;
}

FBarResult f_bar(SimpPtr S) {
  QFunctorResult QS = q_functor(S);
  FBarResult res;
  res.TQ = triangulate(QS.complex);
  SimpMap h;
  h.dom = res.TQ.complex;
  h.cod = S;
  h.assign.resize(res.TQ.complex->dim_bound() + 1);
  for (int d = 0; d <= res.TQ.complex->dim_bound(); ++d)
    for (int k = 0; k < res.TQ.complex->count(d); ++k) {
      SimpRef t = res.TQ.complex->ref(SimpId{d, k});
      std::optional<SimpRef> image;
      for (int m = 0; m <= QS.complex->dim_bound() && !image; ++m)
        for (int x = 0; x < QS.complex->count(m) && !image; ++x) {
          const SimpMap& g = res.TQ.glue[m][x];
          for (int dd = 0; dd <= g.dom->dim_bound() && !image; ++dd)
            for (int s = 0; s < g.dom->count(dd) && !image; ++s) {
              if (!(g(SimpId{dd, s}) == t)) continue;
              for (int sn = 0; sn <= S->dim_bound() && !image; ++sn)
                for (int sk = 0; sk < S->count(sn) && !image; ++sk) {
                  const ComplexMap& qg = QS.glue[sn][sk];
                  for (int qd = 0; qd <= qg.dom->dim_bound() && !image; ++qd)
                    for (int qc = 0; qc < qg.dom->count(qd) && !image; ++qc) {
                      CubeRef r = qg(CubeId{qd, qc});
                      if (!(r.op.is_identity() && r.target == CubeId{m, x})) continue;
                      BoxOp rep = q_class_rep(sn, CubeId{qd, qc});
                      VertexMap rv = evaluate(rep);
                      std::vector<int> chain =
                          chain_of_simplex(*res.TQ.cube_nerves[m][x], SimpId{dd, s});
                      std::vector<int> values;
                      for (int v : chain)
                        values.push_back(map_F(sn, rv(static_cast<uint32_t>(v))));
                      SimpOp word = simp_op_from_function(values, sn);
                      image = S->act(S->ref(SimpId{sn, sk}), word);
                    }
                }
            }
        }
      if (!image) throw std::logic_error("f_bar: no preimage found");
      h.assign[d].push_back(*image);
    }
  res.map = h;
  return res;
}

}  // namespace cubik
