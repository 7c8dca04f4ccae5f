#include "cubik/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cubik {

namespace {

const std::vector<BoxOp>& minus_ops_cached(int dom, int cod) {
  static std::map<std::pair<int, int>, std::vector<BoxOp>> cache;
  auto key = std::make_pair(dom, cod);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_minus_ops(dom, cod)).first;
  return it->second;
}

std::string default_name(int dim, int idx) {
  return "c" + std::to_string(dim) + "_" + std::to_string(idx);
}

}  // namespace

CubeId CubicalComplex::add_cube(int dim, std::string name) {
  if (dim < 0) throw DimensionError("negative dimension");
  if (static_cast<int>(cubes_.size()) <= dim) cubes_.resize(dim + 1);
  CubeId id{dim, static_cast<int>(cubes_[dim].size())};
  Entry e;
  e.name = name.empty() ? default_name(dim, id.idx) : std::move(name);
  e.faces.resize(2 * dim, CubeRef{CubeId{}, BoxOp()});
  cubes_[dim].push_back(std::move(e));
  return id;
}

void CubicalComplex::set_face(CubeId x, int i, int eps, CubeRef f) {
  if (i < 1 || i > x.dim || eps < 0 || eps > 1) throw DimensionError("face index out of range");
  if (f.dim() != x.dim - 1) throw DimensionError("face dimension mismatch");
  cubes_[x.dim][x.idx].faces[2 * (i - 1) + eps] = std::move(f);
}

int CubicalComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(cubes_.size())) return 0;
  return static_cast<int>(cubes_[dim].size());
}

int CubicalComplex::total_count() const {
  int t = 0;
  for (int n = 0; n <= dim_bound(); ++n) t += count(n);
  return t;
}

std::optional<CubeId> CubicalComplex::find_by_name(const std::string& name) const {
  for (int n = 0; n <= dim_bound(); ++n)
    for (int k = 0; k < count(n); ++k)
      if (cubes_[n][k].name == name) return CubeId{n, k};
  return std::nullopt;
}

const CubeRef& CubicalComplex::face(CubeId x, int i, int eps) const {
  return cubes_[x.dim][x.idx].faces[2 * (i - 1) + eps];
}

CubeRef CubicalComplex::act(const CubeRef& x, const BoxOp& w) const {
  if (w.cod() != x.dim()) throw DimensionError("act: operator codomain != cube dimension");
  BoxOp u = compose(x.op, w);
  CubeId y = x.target;
  while (!u.faces().empty()) {
    auto [c, e] = u.faces().front();
    const CubeRef& f = face(y, c, e);
    u = compose(f.op, u.without_first_face());
    y = f.target;
  }
  return CubeRef{y, u};
}

std::vector<CubeRef> CubicalComplex::level(int n) const {
  std::vector<CubeRef> out;
  for (int k = 0; k <= std::min(n, dim_bound()); ++k) {
    const auto& ops = minus_ops_cached(n, k);
    for (int idx = 0; idx < count(k); ++idx)
      for (const BoxOp& w : ops) out.push_back(CubeRef{CubeId{k, idx}, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CubicalComplex::mark_edge(CubeId e) {
  if (e.dim != 1) throw DimensionError("only edges can be marked");
  marked_ = true;
  marks_.insert(e);
}

bool CubicalComplex::is_marked(const CubeRef& e) const {
  if (e.dim() != 1) throw DimensionError("marking queries are for edges");
  if (!e.op.is_identity()) return true;  // degenerate edges are marked
  return marks_.count(e.target) > 0;
}

ValidationReport validate(const CubicalComplex& X) {
  ValidationReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.message = msg;
    return r;
  };
  for (int n = 0; n <= X.dim_bound(); ++n) {
    for (int k = 0; k < X.count(n); ++k) {
      CubeId x{n, k};
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          const CubeRef& f = X.face(x, i, e);
          if (!f.target.valid())
            return fail("missing face (" + std::to_string(i) + "," + std::to_string(e) +
                        ") of " + X.name(x));
          if (!f.op.in_box_minus())
            return fail("face reference of " + X.name(x) + " is not in standard form");
          if (f.dim() != n - 1 || f.target.dim > X.dim_bound() ||
              f.target.idx >= X.count(f.target.dim))
            return fail("face reference of " + X.name(x) + " is malformed");
        }
      // x d_{j,e'} d_{i,e} = x d_{i+1,e} d_{j,e'} for j <= i
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= i; ++j)
          for (int e = 0; e <= 1; ++e)
            for (int e2 = 0; e2 <= 1; ++e2) {
              CubeRef a = X.act(X.face(x, j, e2), BoxOp::face(n - 1, i, e));
              CubeRef b = X.act(X.face(x, i + 1, e), BoxOp::face(n - 1, j, e2));
              if (!(a == b))
                return fail("presheaf identity fails at " + X.name(x) + " with (j,e')=(" +
                            std::to_string(j) + "," + std::to_string(e2) + "), (i,e)=(" +
                            std::to_string(i) + "," + std::to_string(e) + ")");
            }
    }
  }
  for (const CubeId& m : X.marked_edges())
    if (m.dim != 1 || m.idx >= X.count(1)) return fail("marking is not an edge set");
  return r;
}

// --- maps ------------------------------------------------------------

CubeRef ComplexMap::apply(const CubeRef& x) const {
  return cod->act(assign[x.target.dim][x.target.idx], x.op);
}

ComplexMap identity_map(ComplexPtr X) {
  ComplexMap f;
  f.dom = X;
  f.cod = X;
  f.assign.resize(X->dim_bound() + 1);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) f.assign[n].push_back(X->ref(CubeId{n, k}));
  return f;
}

ComplexMap compose_maps(const ComplexMap& g, const ComplexMap& f) {
  ComplexMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.assign.resize(f.assign.size());
  for (size_t n = 0; n < f.assign.size(); ++n)
    for (const CubeRef& r : f.assign[n]) h.assign[n].push_back(g.apply(r));
  return h;
}

ValidationReport validate_map(const ComplexMap& f) {
  ValidationReport r;
  const CubicalComplex& A = *f.dom;
  for (int n = 0; n <= A.dim_bound(); ++n)
    for (int k = 0; k < A.count(n); ++k) {
      CubeId x{n, k};
      if (f(x).dim() != n) {
        r.ok = false;
        r.message = "image dimension mismatch at " + A.name(x);
        return r;
      }
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          CubeRef lhs = f.cod->act(f(x), BoxOp::face(n, i, e));
          CubeRef rhs = f.apply(A.face(x, i, e));
          if (!(lhs == rhs)) {
            r.ok = false;
            r.message = "map does not commute with face (" + std::to_string(i) + "," +
                        std::to_string(e) + ") at " + A.name(x);
            return r;
          }
        }
      if (A.has_marking() && n == 1 && A.is_marked(A.ref(x)) && f.cod->has_marking() &&
          !f.cod->is_marked(f(x))) {
        r.ok = false;
        r.message = "map does not preserve the marked edge " + A.name(x);
        return r;
      }
    }
  return r;
}

bool is_mono(const ComplexMap& f) {
  std::set<CubeId> seen;
  for (size_t n = 0; n < f.assign.size(); ++n) {
    seen.clear();
    for (const CubeRef& r : f.assign[n]) {
      if (!r.op.is_identity()) return false;
      if (!seen.insert(r.target).second) return false;
    }
  }
  return true;
}

// --- disjoint union, quotient, pushout ---------------------------------

UnionResult disjoint_union(ComplexPtr X, ComplexPtr Y) {
  auto Z = std::make_shared<CubicalComplex>();
  int bound = std::max(X->dim_bound(), Y->dim_bound());
  std::vector<std::vector<CubeId>> lm(X->dim_bound() + 1), rm(Y->dim_bound() + 1);
  for (int n = 0; n <= bound; ++n) {
    if (n <= X->dim_bound())
      for (int k = 0; k < X->count(n); ++k)
        lm[n].push_back(Z->add_cube(n, "l." + X->name(CubeId{n, k})));
    if (n <= Y->dim_bound())
      for (int k = 0; k < Y->count(n); ++k)
        rm[n].push_back(Z->add_cube(n, "r." + Y->name(CubeId{n, k})));
  }
  auto retarget = [&](const CubeRef& r, const std::vector<std::vector<CubeId>>& m) {
    return CubeRef{m[r.target.dim][r.target.idx], r.op};
  };
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          Z->set_face(lm[n][k], i, e, retarget(X->face(CubeId{n, k}, i, e), lm));
  for (int n = 0; n <= Y->dim_bound(); ++n)
    for (int k = 0; k < Y->count(n); ++k)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          Z->set_face(rm[n][k], i, e, retarget(Y->face(CubeId{n, k}, i, e), rm));
  if (X->has_marking() || Y->has_marking()) {
    Z->enable_marking();
    for (const CubeId& m : X->marked_edges()) Z->mark_edge(lm[1][m.idx]);
    for (const CubeId& m : Y->marked_edges()) Z->mark_edge(rm[1][m.idx]);
  }
  UnionResult res;
  res.complex = Z;
  res.inj_left.dom = X;
  res.inj_left.cod = Z;
  res.inj_left.assign.resize(X->dim_bound() + 1);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) res.inj_left.assign[n].push_back(Z->ref(lm[n][k]));
  res.inj_right.dom = Y;
  res.inj_right.cod = Z;
  res.inj_right.assign.resize(Y->dim_bound() + 1);
  for (int n = 0; n <= Y->dim_bound(); ++n)
    for (int k = 0; k < Y->count(n); ++k) res.inj_right.assign[n].push_back(Z->ref(rm[n][k]));
  return res;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // least member stays the root
    parent[b] = a;
    return true;
  }
};

}  // namespace

QuotientResult quotient(ComplexPtr X, const std::vector<std::pair<CubeRef, CubeRef>>& gluings) {
  const int N = X->dim_bound();
  std::vector<CubeRef> universe;
  std::vector<int> level_start(N + 2, 0);
  std::map<CubeRef, int> index;
  for (int n = 0; n <= N; ++n) {
    level_start[n] = static_cast<int>(universe.size());
    for (const CubeRef& c : X->level(n)) {
      index.emplace(c, static_cast<int>(universe.size()));
      universe.push_back(c);
    }
  }
  level_start[N + 1] = static_cast<int>(universe.size());
  auto dim_of = [&](int u) { return universe[u].dim(); };

  UnionFind uf(universe.size());
  std::vector<std::pair<int, int>> work;
  for (const auto& [a, b] : gluings) {
    if (a.dim() != b.dim()) throw DimensionError("gluing pair dimensions differ");
    if (a.dim() > N) throw DimensionError("gluing pair above complex dimension");
    int ia = index.at(a), ib = index.at(b);
    if (uf.unite(ia, ib)) work.emplace_back(ia, ib);
  }
  // u ~ v forces u.g ~ v.g for every structure map; one generator step at a
  // time, re-run until stable.
  while (!work.empty()) {
    auto [iu, iv] = work.back();
    work.pop_back();
    const CubeRef u = universe[iu];
    const CubeRef v = universe[iv];
    int n = u.dim();
    std::vector<BoxOp> gens;
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) gens.push_back(BoxOp::face(n, i, e));
    if (n + 1 <= N) {
      for (int i = 1; i <= n + 1; ++i) gens.push_back(BoxOp::degeneracy(n + 1, i));
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) gens.push_back(BoxOp::connection(n + 1, i, e));
    }
    for (const BoxOp& g : gens) {
      int a = index.at(X->act(u, g));
      int b = index.at(X->act(v, g));
      if (uf.unite(a, b)) work.emplace_back(a, b);
    }
  }

  // A class is degenerate in the quotient iff it is hit by a degeneracy or
  // connection of some class one dimension down.
  std::map<int, std::pair<int, BoxOp>> peel;
  for (int n = 0; n <= N - 1; ++n) {
    for (int u = level_start[n]; u < level_start[n + 1]; ++u) {
      if (uf.find(u) != u) continue;
      std::vector<BoxOp> ups;
      for (int i = 1; i <= n + 1; ++i) ups.push_back(BoxOp::degeneracy(n + 1, i));
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) ups.push_back(BoxOp::connection(n + 1, i, e));
      for (const BoxOp& g : ups) {
        int t = uf.find(index.at(X->act(universe[u], g)));
        if (!peel.count(t)) peel.emplace(t, std::make_pair(u, g));
      }
    }
  }

  auto Q = std::make_shared<CubicalComplex>();
  std::map<int, CubeId> new_id;
  for (int u = 0; u < static_cast<int>(universe.size()); ++u) {
    if (uf.find(u) != u || peel.count(u)) continue;
    new_id.emplace(u, Q->add_cube(dim_of(u)));
  }

  std::function<CubeRef(int)> qsf = [&](int root) -> CubeRef {
    auto it = new_id.find(root);
    if (it != new_id.end()) return CubeRef{it->second, BoxOp::identity(dim_of(root))};
    const auto& [e_root, g] = peel.at(root);
    CubeRef base = qsf(e_root);
    return CubeRef{base.target, compose(base.op, g)};
  };

  for (const auto& [root, id] : new_id) {
    int n = dim_of(root);
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        int froot = uf.find(index.at(X->act(universe[root], BoxOp::face(n, i, e))));
        Q->set_face(id, i, e, qsf(froot));
      }
  }

  if (X->has_marking()) {
    Q->enable_marking();
    for (const CubeId& m : X->marked_edges()) {
      int root = uf.find(index.at(X->ref(m)));
      auto it = new_id.find(root);
      if (it != new_id.end()) Q->mark_edge(it->second);
    }
  }

  QuotientResult res;
  res.complex = Q;
  res.projection.dom = X;
  res.projection.cod = Q;
  res.projection.assign.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k < X->count(n); ++k)
      res.projection.assign[n].push_back(qsf(uf.find(index.at(X->ref(CubeId{n, k})))));
  return res;
}

PushoutResult pushout(const ComplexMap& f, const ComplexMap& g) {
  if (f.dom.get() != g.dom.get()) throw DimensionError("pushout legs must share a domain");
  UnionResult u = disjoint_union(f.cod, g.cod);
  std::vector<std::pair<CubeRef, CubeRef>> pairs;
  const CubicalComplex& A = *f.dom;
  for (int n = 0; n <= A.dim_bound(); ++n)
    for (int k = 0; k < A.count(n); ++k) {
      CubeId a{n, k};
      pairs.emplace_back(u.inj_left.apply(f(a)), u.inj_right.apply(g(a)));
    }
  QuotientResult q = quotient(u.complex, pairs);
  PushoutResult res;
  res.complex = q.complex;
  res.from_left = compose_maps(q.projection, u.inj_left);
  res.from_right = compose_maps(q.projection, u.inj_right);
  return res;
}

ComplexMap induced_from_pushout(const PushoutResult& p, const ComplexMap& u, const ComplexMap& v) {
  ComplexMap h;
  h.dom = p.complex;
  h.cod = u.cod;
  h.assign.resize(p.complex->dim_bound() + 1);
  for (int n = 0; n <= p.complex->dim_bound(); ++n) {
    for (int k = 0; k < p.complex->count(n); ++k) {
      CubeRef target{CubeId{n, k}, BoxOp::identity(n)};
      std::optional<CubeRef> image;
      for (int m = 0; m <= u.dom->dim_bound() && !image; ++m)
        for (int j = 0; j < u.dom->count(m) && !image; ++j) {
          CubeRef r = p.from_left(CubeId{m, j});
          if (r == target) image = u(CubeId{m, j});
        }
      for (int m = 0; m <= v.dom->dim_bound() && !image; ++m)
        for (int j = 0; j < v.dom->count(m) && !image; ++j) {
          CubeRef r = p.from_right(CubeId{m, j});
          if (r == target) image = v(CubeId{m, j});
        }
      if (!image) throw std::logic_error("pushout cube has no preimage on a generator");
      h.assign[n].push_back(*image);
    }
  }
  return h;
}

SubcomplexResult subcomplex(ComplexPtr X, const std::set<CubeId>& generators) {
  std::set<CubeId> closed;
  std::vector<CubeId> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    CubeId x = stack.back();
    stack.pop_back();
    if (!closed.insert(x).second) continue;
    for (int i = 1; i <= x.dim; ++i)
      for (int e = 0; e <= 1; ++e) stack.push_back(X->face(x, i, e).target);
  }
  auto S = std::make_shared<CubicalComplex>();
  std::map<CubeId, CubeId> to_new;
  for (const CubeId& x : closed) to_new.emplace(x, S->add_cube(x.dim, X->name(x)));
  for (const auto& [old_id, id] : to_new)
    for (int i = 1; i <= old_id.dim; ++i)
      for (int e = 0; e <= 1; ++e) {
        CubeRef f = X->face(old_id, i, e);
        S->set_face(id, i, e, CubeRef{to_new.at(f.target), f.op});
      }
  if (X->has_marking()) {
    S->enable_marking();
    for (const CubeId& m : X->marked_edges())
      if (to_new.count(m)) S->mark_edge(to_new.at(m));
  }
  SubcomplexResult res;
  res.complex = S;
  res.inclusion.dom = S;
  res.inclusion.cod = X;
  res.inclusion.assign.resize(S->dim_bound() + 1);
  std::map<CubeId, CubeId> to_old;
  for (auto& [o, n2] : to_new) to_old.emplace(n2, o);
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k)
      res.inclusion.assign[n].push_back(X->ref(to_old.at(CubeId{n, k})));
  return res;
}

SubcomplexResult image_subcomplex(const ComplexMap& f) {
  std::set<CubeId> gens;
  for (const auto& lvl : f.assign)
    for (const CubeRef& r : lvl) gens.insert(r.target);
  return subcomplex(f.cod, gens);
}

// --- standard shapes -----------------------------------------------------

ComplexPtr empty_complex() { return std::make_shared<CubicalComplex>(); }

ComplexPtr point() {
  auto X = std::make_shared<CubicalComplex>();
  X->add_cube(0, "pt");
  return X;
}

namespace {

// Sub-faces of the n-cube are the pure face words [1]^k -> [1]^n; named by
// their pattern over {0,1,*}.
std::string face_word_pattern(const BoxOp& w) {
  int n = w.cod();
  std::string pat(n, '*');
  VertexMap v = evaluate(w);
  uint32_t lo = v(0);
  uint32_t hi = v((1u << w.dom()) - 1);
  for (int i = 0; i < n; ++i) {
    bool l = (lo >> i) & 1, h = (hi >> i) & 1;
    if (l == h) pat[i] = l ? '1' : '0';
  }
  if (pat.empty()) pat = ".";  // the unique cube of box^0
  return pat;
}

std::vector<BoxOp> face_words(int n, int k) {
  std::vector<BoxOp> out;
  for (const BoxOp& w : enumerate_hom(k, n))
    if (w.in_box_plus()) out.push_back(w);
  return out;
}

template <typename Keep>
ComplexPtr build_face_shape(int n, Keep keep) {
  auto X = std::make_shared<CubicalComplex>();
  std::map<BoxOp, CubeId> ids;
  for (int k = 0; k <= n; ++k)
    for (const BoxOp& w : face_words(n, k))
      if (keep(w)) ids.emplace(w, X->add_cube(k, face_word_pattern(w)));
  for (const auto& [w, id] : ids) {
    for (int i = 1; i <= id.dim; ++i)
      for (int e = 0; e <= 1; ++e) {
        BoxOp sub = compose(w, BoxOp::face(id.dim, i, e));
        auto it = ids.find(sub);
        if (it == ids.end()) throw std::logic_error("face shape is not closed under faces");
        X->set_face(id, i, e, CubeRef{it->second, BoxOp::identity(id.dim - 1)});
      }
  }
  return X;
}

}  // namespace

ComplexPtr standard_cube(int n) {
  return build_face_shape(n, [](const BoxOp&) { return true; });
}

ComplexPtr boundary_cube(int n) {
  return build_face_shape(n, [n](const BoxOp& w) { return w.dom() < n; });
}

ComplexPtr open_box(int n, int i, int eps) {
  if (n < 1 || i < 1 || i > n) throw DimensionError("open box indices out of range");
  return build_face_shape(n, [&](const BoxOp& w) {
    if (w.dom() == n) return false;
    std::string pat = face_word_pattern(w);
    for (int j = 0; j < n; ++j) {
      if (pat[j] == '*') continue;
      if (j + 1 == i && pat[j] - '0' == eps) continue;
      return true;
    }
    return false;
  });
}

CubeId cube_of_face_word(const CubicalComplex& shape, const BoxOp& w) {
  auto id = shape.find_by_name(face_word_pattern(w));
  if (!id) throw std::logic_error("face word not present in shape");
  return *id;
}

BoxOp face_word_as_op(const CubicalComplex& shape, CubeId x) {
  const std::string& pat = shape.name(x);
  BoxOp w = BoxOp::identity(x.dim);
  if (pat == ".") return w;
  for (size_t j = 0; j < pat.size(); ++j) {
    if (pat[j] == '*') continue;
    w = compose(BoxOp::face(w.cod() + 1, static_cast<int>(j) + 1, pat[j] - '0'), w);
  }
  return w;
}

CubeRef box_ref(const CubicalComplex& shape, const BoxOp& u) {
  int mid = u.dom() - static_cast<int>(u.degeneracies().size()) -
            static_cast<int>(u.connections().size());
  BoxOp face_part = BoxOp::from_raw({mid, u.cod(), u.faces(), {}, {}});
  BoxOp minus_part = BoxOp::from_raw({u.dom(), mid, {}, u.connections(), u.degeneracies()});
  return CubeRef{cube_of_face_word(shape, face_part), minus_part};
}

namespace {

// Critical edge of the n-cube with respect to (i, eps): coordinate i free,
// all others constant 1-eps.
BoxOp critical_edge_word(int n, int i, int eps) {
  BoxOp w = BoxOp::identity(1);
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    w = compose(BoxOp::face(w.cod() + 1, j, 1 - eps), w);
  }
  return w;
}

}  // namespace

QuotientResult inner_open_box(int n, int i, int eps) {
  if (n < 2) throw DimensionError("inner open boxes need n >= 2");
  ComplexPtr box = open_box(n, i, eps);
  CubeId edge = cube_of_face_word(*box, critical_edge_word(n, i, eps));
  CubeId v0 = box->face(edge, 1, 0).target;
  std::vector<std::pair<CubeRef, CubeRef>> glue{
      {box->ref(edge), CubeRef{v0, BoxOp::degeneracy(1, 1)}}};
  return quotient(box, glue);
}

QuotientResult inner_cube(int n, int i, int eps) {
  if (n < 2) throw DimensionError("inner cubes need n >= 2");
  ComplexPtr cube = standard_cube(n);
  CubeId edge = cube_of_face_word(*cube, critical_edge_word(n, i, eps));
  CubeId v0 = cube->face(edge, 1, 0).target;
  std::vector<std::pair<CubeRef, CubeRef>> glue{
      {cube->ref(edge), CubeRef{v0, BoxOp::degeneracy(1, 1)}}};
  return quotient(cube, glue);
}

ComplexPtr shape_K() {
  // Two squares sharing the middle edge e; the squares witness ef = id and
  // ge = id, and the complex is the image of the walking isomorphism under
  // the straightening functor (both squares carry their non-degenerate
  // edges on the (1,0) and (2,1) faces).
  auto X = std::make_shared<CubicalComplex>();
  CubeId a = X->add_cube(0, "one");   // the vertex labelled 1
  CubeId b = X->add_cube(0, "zero");  // the vertex labelled 0
  CubeId f = X->add_cube(1, "f");
  CubeId e = X->add_cube(1, "e");
  CubeId g = X->add_cube(1, "g");
  auto edge = [&](CubeId ed, CubeId from, CubeId to) {
    X->set_face(ed, 1, 0, X->ref(from));
    X->set_face(ed, 1, 1, X->ref(to));
  };
  edge(f, a, b);
  edge(e, b, a);
  edge(g, a, b);
  CubeRef dega{a, BoxOp::degeneracy(1, 1)};
  CubeRef degb{b, BoxOp::degeneracy(1, 1)};
  CubeId s1 = X->add_cube(2, "s1");
  X->set_face(s1, 1, 0, X->ref(f));
  X->set_face(s1, 1, 1, dega);
  X->set_face(s1, 2, 0, dega);
  X->set_face(s1, 2, 1, X->ref(e));
  CubeId s2 = X->add_cube(2, "s2");
  X->set_face(s2, 1, 0, X->ref(e));
  X->set_face(s2, 1, 1, degb);
  X->set_face(s2, 2, 0, degb);
  X->set_face(s2, 2, 1, X->ref(g));
  return X;
}

ComplexPtr shape_K_prime() {
  auto K = shape_K();
  auto X = std::make_shared<CubicalComplex>(*K);
  X->enable_marking();
  X->mark_edge(*X->find_by_name("e"));
  return X;
}

ComplexPtr marked_open_box(int n, int i, int eps) {
  ComplexPtr box = open_box(n, i, eps);
  auto X = std::make_shared<CubicalComplex>(*box);
  X->enable_marking();
  if (n >= 2) X->mark_edge(cube_of_face_word(*X, critical_edge_word(n, i, eps)));
  return X;
}

ComplexPtr three_out_of_four(int i, int eps) {
  auto sq = standard_cube(2);
  auto X = std::make_shared<CubicalComplex>(*sq);
  X->enable_marking();
  CubeId top = *X->find_by_name("**");
  for (int j = 1; j <= 2; ++j)
    for (int e = 0; e <= 1; ++e) {
      if (j == i && e == eps) continue;
      X->mark_edge(X->face(top, j, e).target);
    }
  return X;
}

ComplexPtr fully_marked_square() {
  auto sq = standard_cube(2);
  auto X = std::make_shared<CubicalComplex>(*sq);
  X->enable_marking();
  for (int k = 0; k < X->count(1); ++k) X->mark_edge(CubeId{1, k});
  return X;
}

namespace {

ComplexMap inclusion_by_name(ComplexPtr sub, ComplexPtr whole) {
  ComplexMap f;
  f.dom = sub;
  f.cod = whole;
  f.assign.resize(sub->dim_bound() + 1);
  for (int d = 0; d <= sub->dim_bound(); ++d)
    for (int k = 0; k < sub->count(d); ++k) {
      auto id = whole->find_by_name(sub->name(CubeId{d, k}));
      if (!id) throw std::logic_error("inclusion target not found by name");
      f.assign[d].push_back(whole->ref(*id));
    }
  return f;
}

}  // namespace

ComplexMap boundary_inclusion(int n) { return inclusion_by_name(boundary_cube(n), standard_cube(n)); }

ComplexMap open_box_inclusion(int n, int i, int eps) {
  return inclusion_by_name(open_box(n, i, eps), standard_cube(n));
}

// --- enumeration ---------------------------------------------------------

long long default_budget() {
  if (const char* env = std::getenv("CUBIK_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1'000'000;
}

namespace {

std::vector<ComplexMap> enumerate_maps_impl(ComplexPtr A, ComplexPtr X,
                                            const std::map<CubeId, CubeRef>* pins,
                                            long long budget) {
  std::vector<ComplexMap> out;
  std::vector<CubeId> order;
  for (int n = 0; n <= A->dim_bound(); ++n)
    for (int k = 0; k < A->count(n); ++k) order.push_back(CubeId{n, k});

  ComplexMap cur;
  cur.dom = A;
  cur.cod = X;
  cur.assign.resize(A->dim_bound() + 1);
  for (int n = 0; n <= A->dim_bound(); ++n)
    cur.assign[n].resize(A->count(n), CubeRef{CubeId{}, BoxOp()});

  std::vector<std::vector<CubeRef>> levels(A->dim_bound() + 1);
  for (int n = 0; n <= A->dim_bound(); ++n) levels[n] = X->level(n);

  long long steps = 0;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == order.size()) {
      out.push_back(cur);
      return;
    }
    CubeId x = order[pos];
    auto consistent = [&](const CubeRef& cand) {
      for (int i = 1; i <= x.dim; ++i)
        for (int e = 0; e <= 1; ++e) {
          CubeRef want = cur.apply(A->face(x, i, e));
          if (!(X->act(cand, BoxOp::face(x.dim, i, e)) == want)) return false;
        }
      if (A->has_marking() && X->has_marking() && x.dim == 1 && A->is_marked(A->ref(x)))
        return X->is_marked(cur.assign[x.dim][x.idx]);
      return true;
    };
    auto try_candidate = [&](const CubeRef& cand) {
      if (++steps > budget) throw BudgetError(static_cast<long long>(out.size()));
      cur.assign[x.dim][x.idx] = cand;
      if (consistent(cand)) rec(pos + 1);
    };
    if (pins && pins->count(x)) {
      try_candidate(pins->at(x));
      return;
    }
    for (const CubeRef& cand : levels[x.dim]) try_candidate(cand);
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<ComplexMap> enumerate_maps(ComplexPtr A, ComplexPtr X, long long budget) {
  return enumerate_maps_impl(A, X, nullptr, budget);
}

std::vector<ComplexMap> enumerate_maps_pinned(ComplexPtr A, ComplexPtr X,
                                              const std::map<CubeId, CubeRef>& pins,
                                              long long budget) {
  return enumerate_maps_impl(A, X, &pins, budget);
}

namespace {

std::optional<ComplexMap> find_iso_impl(ComplexPtr X, const std::set<CubeId>* subX,
                                        ComplexPtr Y, const std::set<CubeId>* subY) {
  if (X->dim_bound() != Y->dim_bound()) return std::nullopt;
  for (int n = 0; n <= X->dim_bound(); ++n)
    if (X->count(n) != Y->count(n)) return std::nullopt;
  if (X->has_marking() != Y->has_marking()) return std::nullopt;
  if (subX && subY && subX->size() != subY->size()) return std::nullopt;

  // An isomorphism maps non-degenerate cubes bijectively preserving the
  // operator parts of face references, so every tentative assignment forces
  // the assignments of all iterated faces.  Work top dimension down with
  // forced propagation.
  std::map<CubeId, CubeId> fwd, bwd;

  auto admissible = [&](CubeId x, CubeId y) {
    if (subX && subY && (subX->count(x) > 0) != (subY->count(y) > 0)) return false;
    if (x.dim == 1 && X->has_marking() &&
        X->is_marked(X->ref(x)) != Y->is_marked(Y->ref(y)))
      return false;
    return true;
  };

  // Returns the list of newly forced pairs, or nullopt on conflict.
  std::function<std::optional<std::vector<CubeId>>(CubeId, CubeId)> force =
      [&](CubeId x, CubeId y) -> std::optional<std::vector<CubeId>> {
    std::vector<CubeId> added;
    std::vector<std::pair<CubeId, CubeId>> stack{{x, y}};
    auto rollback = [&]() {
      for (CubeId a : added) {
        bwd.erase(fwd.at(a));
        fwd.erase(a);
      }
    };
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      auto it = fwd.find(a);
      if (it != fwd.end()) {
        if (it->second == b) continue;
        rollback();
        return std::nullopt;
      }
      if (bwd.count(b) || a.dim != b.dim || !admissible(a, b)) {
        rollback();
        return std::nullopt;
      }
      fwd.emplace(a, b);
      bwd.emplace(b, a);
      added.push_back(a);
      for (int i = 1; i <= a.dim; ++i)
        for (int e = 0; e <= 1; ++e) {
          const CubeRef& fa = X->face(a, i, e);
          const CubeRef& fb = Y->face(b, i, e);
          if (fa.op != fb.op) {
            rollback();
            return std::nullopt;
          }
          stack.emplace_back(fa.target, fb.target);
        }
    }
    return added;
  };

  std::vector<CubeId> order;
  for (int n = X->dim_bound(); n >= 0; --n)
    for (int k = 0; k < X->count(n); ++k) order.push_back(CubeId{n, k});

  std::function<bool(size_t)> rec = [&](size_t pos) {
    while (pos < order.size() && fwd.count(order[pos])) ++pos;
    if (pos == order.size()) return true;
    CubeId x = order[pos];
    for (int k = 0; k < Y->count(x.dim); ++k) {
      CubeId y{x.dim, k};
      if (bwd.count(y)) continue;
      auto added = force(x, y);
      if (!added) continue;
      if (rec(pos + 1)) return true;
      for (CubeId a : *added) {
        bwd.erase(fwd.at(a));
        fwd.erase(a);
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;

  ComplexMap cur;
  cur.dom = X;
  cur.cod = Y;
  cur.assign.resize(X->dim_bound() + 1);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k)
      cur.assign[n].push_back(Y->ref(fwd.at(CubeId{n, k})));
  ValidationReport ok = validate_map(cur);
  if (!ok.ok) return std::nullopt;
  return cur;
}

}  // namespace

std::optional<ComplexMap> find_isomorphism(ComplexPtr X, ComplexPtr Y) {
  return find_iso_impl(X, nullptr, Y, nullptr);
}

std::optional<ComplexMap> find_isomorphism_of_pairs(ComplexPtr X, const ComplexMap& incl_X,
                                                    ComplexPtr Y, const ComplexMap& incl_Y) {
  std::set<CubeId> subX, subY;
  for (const auto& lvl : incl_X.assign)
    for (const CubeRef& r : lvl) subX.insert(r.target);
  for (const auto& lvl : incl_Y.assign)
    for (const CubeRef& r : lvl) subY.insert(r.target);
  return find_iso_impl(X, &subX, Y, &subY);
}

ComplexPtr complex_involute(ComplexPtr X, Involution kind) {
  auto Y = std::make_shared<CubicalComplex>();
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) Y->add_cube(n, X->name(CubeId{n, k}));
  bool flip_index = (kind == Involution::Co || kind == Involution::Op);
  bool flip_sign = (kind == Involution::CoOp || kind == Involution::Op);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          int oi = flip_index ? n - i + 1 : i;
          int oe = flip_sign ? 1 - e : e;
          CubeRef f = X->face(CubeId{n, k}, oi, oe);
          Y->set_face(CubeId{n, k}, i, e, CubeRef{f.target, involute(f.op, kind)});
        }
  if (X->has_marking()) {
    Y->enable_marking();
    for (const CubeId& m : X->marked_edges()) Y->mark_edge(m);
  }
  return Y;
}

CubeRef involute_ref(const CubicalComplex&, const CubeRef& x, Involution kind) {
  return CubeRef{x.target, involute(x.op, kind)};
}

}  // namespace cubik
