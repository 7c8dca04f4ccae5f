#include "cubik/tensor.hpp"

#include <algorithm>
#include <cassert>

namespace cubik {

namespace {

// v factors as v' o s_1 iff it ignores its first coordinate; returns v'.
std::optional<BoxOp> strip_sigma1(const BoxOp& v) {
  if (v.dom() == 0) return std::nullopt;
  BoxOp v1 = compose(v, BoxOp::face(v.dom(), 1, 0));
  if (compose(v1, BoxOp::degeneracy(v.dom(), 1)) == v) return v1;
  return std::nullopt;
}

}  // namespace

PairCube canonical_pair(const CubicalComplex& X, const CubicalComplex&, CubeRef l, CubeRef r) {
  while (true) {
    auto stripped = strip_sigma1(r.op);
    if (!stripped) break;
    r.op = *stripped;
    l = X.act(l, BoxOp::degeneracy(l.dim() + 1, l.dim() + 1));
  }
  return PairCube{std::move(l), std::move(r)};
}

PairCube pair_act(const CubicalComplex& X, const CubicalComplex& Y, const PairCube& p,
                  const BoxOp& w) {
  if (w.cod() != p.dim()) throw DimensionError("pair_act dimension mismatch");
  PairCube cur = canonical_pair(X, Y, p.left, p.right);
  // right action: the leftmost letter acts first
  for (const Generator& g : w.letters()) {
    int m = cur.left.dim();
    int n = cur.right.dim();
    CubeRef l = cur.left, r = cur.right;
    switch (g.kind) {
      case GenKind::Face:
        if (g.index <= m)
          l = X.act(l, BoxOp::face(m, g.index, g.sign));
        else
          r = Y.act(r, BoxOp::face(n, g.index - m, g.sign));
        break;
      case GenKind::Degeneracy:
        if (g.index <= m + 1)
          l = X.act(l, BoxOp::degeneracy(m + 1, g.index));
        else
          r = Y.act(r, BoxOp::degeneracy(n + 1, g.index - m));
        break;
      case GenKind::Connection:
        if (g.index <= m)
          l = X.act(l, BoxOp::connection(m + 1, g.index, g.sign));
        else
          r = Y.act(r, BoxOp::connection(n + 1, g.index - m, g.sign));
        break;
    }
    cur = canonical_pair(X, Y, std::move(l), std::move(r));
  }
  return cur;
}

CubeRef ProductResult::ref_of(const PairCube& p) const {
  CubeId id = of_pair(p.left.target, p.right.target);
  return CubeRef{id, tensor_ops(p.left.op, p.right.op)};
}

PairCube ProductResult::pair_of(const CubeRef& r) const {
  const auto& [x, y] = pairs[r.target.dim][r.target.idx];
  PairCube base{left_factor->ref(x), right_factor->ref(y)};
  return pair_act(*left_factor, *right_factor, base, r.op);
}

ProductResult product(ComplexPtr X, ComplexPtr Y) {
  ProductResult P;
  P.left_factor = X;
  P.right_factor = Y;
  auto Z = std::make_shared<CubicalComplex>();
  if (X->total_count() == 0 || Y->total_count() == 0) {
    P.complex = Z;
    return P;
  }
  int bound = X->dim_bound() + Y->dim_bound();
  P.pairs.resize(bound + 1);
  for (int total = 0; total <= bound; ++total)
    for (int m = 0; m <= std::min(total, X->dim_bound()); ++m) {
      int n = total - m;
      if (n > Y->dim_bound()) continue;
      for (int i = 0; i < X->count(m); ++i)
        for (int j = 0; j < Y->count(n); ++j) {
          CubeId x{m, i}, y{n, j};
          CubeId id = Z->add_cube(total, X->name(x) + "|" + Y->name(y));
          P.pairs[total].push_back({x, y});
          P.pair_index[{x, y}] = id;
        }
    }
  for (int total = 1; total <= bound; ++total)
    for (int k = 0; k < static_cast<int>(P.pairs[total].size()); ++k) {
      auto [x, y] = P.pairs[total][k];
      PairCube top{X->ref(x), Y->ref(y)};
      for (int i = 1; i <= total; ++i)
        for (int e = 0; e <= 1; ++e) {
          PairCube f = pair_act(*X, *Y, top, BoxOp::face(total, i, e));
          CubeId id = P.pair_index.at({f.left.target, f.right.target});
          Z->set_face(CubeId{total, k}, i, e, CubeRef{id, tensor_ops(f.left.op, f.right.op)});
        }
    }
  if (X->has_marking() && Y->has_marking()) {
    Z->enable_marking();
    int edges = (bound >= 1) ? static_cast<int>(P.pairs[1].size()) : 0;
    for (int k = 0; k < edges; ++k) {
      auto [x, y] = P.pairs[1][k];
      bool marked = (x.dim == 1) ? X->is_marked(X->ref(x)) : Y->is_marked(Y->ref(y));
      if (marked) Z->mark_edge(CubeId{1, k});
    }
  }
  P.complex = Z;
  return P;
}

ProductResult marked_product(ComplexPtr X, ComplexPtr Y) {
  if (!X->has_marking() || !Y->has_marking())
    throw DimensionError("marked_product needs markings on both factors");
  return product(X, Y);
}

ComplexPtr product_via_colimit(ComplexPtr X, ComplexPtr Y) {
  struct Copy {
    CubeId x, y;
    ComplexPtr cube;
    ComplexMap into;
  };
  ComplexPtr total = empty_complex();
  std::vector<Copy> copies;
  std::map<std::pair<CubeId, CubeId>, int> at;
  for (int m = 0; m <= X->dim_bound(); ++m)
    for (int i = 0; i < X->count(m); ++i)
      for (int n = 0; n <= Y->dim_bound(); ++n)
        for (int j = 0; j < Y->count(n); ++j) {
          Copy c;
          c.x = CubeId{m, i};
          c.y = CubeId{n, j};
          c.cube = standard_cube(m + n);
          UnionResult u = disjoint_union(total, c.cube);
          for (Copy& prev : copies) prev.into = compose_maps(u.inj_left, prev.into);
          c.into = u.inj_right;
          total = u.complex;
          at[{c.x, c.y}] = static_cast<int>(copies.size());
          copies.push_back(std::move(c));
        }
  std::vector<std::pair<CubeRef, CubeRef>> glue;
  auto ref_in = [&](const Copy& C, const BoxOp& u) {
    return C.into.apply(box_ref(*C.cube, u));
  };
  auto add_glue = [&](int from, const BoxOp& via, int to, const BoxOp& then) {
    // copy_from o via ~ copy_to o then on every face word of the domain cube
    for (int d = 0; d <= via.dom(); ++d)
      for (const BoxOp& w : enumerate_hom(d, via.dom())) {
        if (!w.in_box_plus()) continue;
        glue.emplace_back(ref_in(copies[from], compose(via, w)),
                          ref_in(copies[to], compose(then, w)));
      }
  };
  for (const Copy& c : copies) {
    int from = at.at({c.x, c.y});
    int m = c.x.dim, n = c.y.dim;
    for (int i = 1; i <= m; ++i)
      for (int e = 0; e <= 1; ++e) {
        CubeRef f = X->face(c.x, i, e);
        add_glue(from, tensor_ops(BoxOp::face(m, i, e), BoxOp::identity(n)),
                 at.at({f.target, c.y}), tensor_ops(f.op, BoxOp::identity(n)));
      }
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        CubeRef f = Y->face(c.y, i, e);
        add_glue(from, tensor_ops(BoxOp::identity(m), BoxOp::face(n, i, e)),
                 at.at({c.x, f.target}), tensor_ops(BoxOp::identity(m), f.op));
      }
  }
  return quotient(total, glue).complex;
}

ComplexMap product_map(const ProductResult& dom, const ProductResult& cod, const ComplexMap& f,
                       const ComplexMap& g) {
  ComplexMap h;
  h.dom = dom.complex;
  h.cod = cod.complex;
  h.assign.resize(dom.complex->dim_bound() + 1);
  for (int total = 0; total <= dom.complex->dim_bound(); ++total)
    for (int k = 0; k < dom.complex->count(total); ++k) {
      auto [x, y] = dom.pairs[total][k];
      PairCube img = canonical_pair(*cod.left_factor, *cod.right_factor, f(x), g(y));
      h.assign[total].push_back(cod.ref_of(img));
    }
  return h;
}

namespace {

ComplexMap map_between_products(const ProductResult& dom, const ProductResult& cod,
                                const BoxOp& w, bool op_on_left) {
  ComplexMap h;
  h.dom = dom.complex;
  h.cod = cod.complex;
  h.assign.resize(dom.complex->dim_bound() + 1);
  for (int total = 0; total <= dom.complex->dim_bound(); ++total)
    for (int k = 0; k < dom.complex->count(total); ++k) {
      auto [x, y] = dom.pairs[total][k];
      PairCube img;
      if (op_on_left) {
        BoxOp xo = compose(w, face_word_as_op(*dom.left_factor, x));
        img = canonical_pair(*cod.left_factor, *cod.right_factor,
                             box_ref(*cod.left_factor, xo), cod.right_factor->ref(y));
      } else {
        BoxOp yo = compose(w, face_word_as_op(*dom.right_factor, y));
        img = canonical_pair(*cod.left_factor, *cod.right_factor, cod.left_factor->ref(x),
                             box_ref(*cod.right_factor, yo));
      }
      h.assign[total].push_back(cod.ref_of(img));
    }
  return h;
}

}  // namespace

ComplexMap op_tensor_complex(const BoxOp& w, ComplexPtr X) {
  ProductResult dom = product(standard_cube(w.dom()), X);
  ProductResult cod = product(standard_cube(w.cod()), X);
  return map_between_products(dom, cod, w, true);
}

ComplexMap complex_tensor_op(ComplexPtr X, const BoxOp& w) {
  ProductResult dom = product(X, standard_cube(w.dom()));
  ProductResult cod = product(X, standard_cube(w.cod()));
  return map_between_products(dom, cod, w, false);
}

PushoutProductResult pushout_product(const ComplexMap& f, const ComplexMap& g) {
  ComplexPtr A = f.dom, B = f.cod, X = g.dom, Y = g.cod;
  ProductResult AX = product(A, X), AY = product(A, Y), BX = product(B, X), BY = product(B, Y);
  ComplexMap a_g = product_map(AX, AY, identity_map(A), g);
  ComplexMap f_x = product_map(AX, BX, f, identity_map(X));
  PushoutResult corner = pushout(a_g, f_x);
  ComplexMap u = product_map(AY, BY, f, identity_map(Y));
  ComplexMap v = product_map(BX, BY, identity_map(B), g);
  PushoutProductResult res;
  res.map = induced_from_pushout(corner, u, v);
  res.corner = std::move(corner);
  return res;
}

ComplexMap associator(ComplexPtr X, ComplexPtr Y, ComplexPtr Z) {
  ProductResult XY = product(X, Y);
  ProductResult YZ = product(Y, Z);
  ProductResult L = product(XY.complex, Z);
  ProductResult R = product(X, YZ.complex);
  ComplexMap h;
  h.dom = L.complex;
  h.cod = R.complex;
  h.assign.resize(L.complex->dim_bound() + 1);
  for (int total = 0; total <= L.complex->dim_bound(); ++total)
    for (int k = 0; k < L.complex->count(total); ++k) {
      auto [xy, z] = L.pairs[total][k];
      auto [x, y] = XY.pairs[xy.dim][xy.idx];
      CubeId yz = YZ.of_pair(y, z);
      h.assign[total].push_back(R.complex->ref(R.of_pair(x, yz)));
    }
  ValidationReport r = validate_map(h);
  if (!r.ok) throw std::logic_error("associator failed: " + r.message);
  if (!is_mono(h) || R.complex->total_count() != L.complex->total_count())
    throw std::logic_error("associator is not an isomorphism");
  return h;
}

// --- internal homs -------------------------------------------------------

HomComplex::HomComplex(HomSide side, ComplexPtr X, ComplexPtr Y, int bound, long long budget)
    : side_(side), X_(std::move(X)), Y_(std::move(Y)), bound_(bound), budget_(budget) {
  levels_.resize(bound + 1);
  computed_.resize(bound + 1, false);
  products_.resize(bound + 1);
}

const ProductResult& HomComplex::level_product(int n) const {
  if (products_[n].complex == nullptr) {
    products_[n] = (side_ == HomSide::L) ? product(standard_cube(n), X_)
                                         : product(X_, standard_cube(n));
  }
  return products_[n];
}

const std::vector<HomComplex::Cube>& HomComplex::level(int n) const {
  if (n > bound_) throw DimensionError("hom level above the truncation bound");
  if (computed_[n]) return levels_[n];
  const ProductResult& P = level_product(n);
  std::vector<ComplexMap> maps = enumerate_maps(P.complex, Y_, budget_);
  for (const ComplexMap& m : maps) levels_[n].push_back(Cube{n, m.assign});
  std::sort(levels_[n].begin(), levels_[n].end());
  computed_[n] = true;
  return levels_[n];
}

ComplexMap HomComplex::as_map(const Cube& c) const {
  ComplexMap m;
  m.dom = level_product(c.n).complex;
  m.cod = Y_;
  m.assign = c.assign;
  return m;
}

HomComplex::Cube HomComplex::act(const Cube& c, const BoxOp& w) const {
  if (w.cod() != c.n) throw DimensionError("hom act dimension mismatch");
  int m = w.dom();
  const ProductResult& PD = level_product(m);
  const ProductResult& PC = level_product(c.n);
  ComplexMap cm = as_map(c);
  Cube out;
  out.n = m;
  out.assign.resize(PD.complex->dim_bound() + 1);
  for (int total = 0; total <= PD.complex->dim_bound(); ++total)
    for (int k = 0; k < PD.complex->count(total); ++k) {
      auto [a, b] = PD.pairs[total][k];
      PairCube img;
      if (side_ == HomSide::L) {
        BoxOp ao = compose(w, face_word_as_op(*PD.left_factor, a));
        img = canonical_pair(*PC.left_factor, *PC.right_factor,
                             box_ref(*PC.left_factor, ao), PC.right_factor->ref(b));
      } else {
        BoxOp bo = compose(w, face_word_as_op(*PD.right_factor, b));
        img = canonical_pair(*PC.left_factor, *PC.right_factor, PC.left_factor->ref(a),
                             box_ref(*PC.right_factor, bo));
      }
      out.assign[total].push_back(cm.apply(PC.ref_of(img)));
    }
  return out;
}

}  // namespace cubik
