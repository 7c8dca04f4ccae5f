#include "cubik/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace cubik {

// --- operator calculus -----------------------------------------------------

SimpOp SimpOp::identity(int n) {
  if (n < 0) throw DimensionError("negative dimension");
  SimpOp f;
  f.dom_ = f.cod_ = n;
  return f;
}

SimpOp SimpOp::face(int n, int i) {
  if (i < 0 || i > n) throw DimensionError("simplicial face index out of range");
  SimpOp f;
  f.dom_ = n - 1;
  f.cod_ = n;
  f.faces_ = {i};
  return f;
}

SimpOp SimpOp::degeneracy(int n, int i) {
  if (i < 0 || i > n) throw DimensionError("simplicial degeneracy index out of range");
  SimpOp f;
  f.dom_ = n + 1;
  f.cod_ = n;
  f.degens_ = {i};
  return f;
}

SimpOp SimpOp::from_raw(Raw r) {
  SimpOp f;
  f.dom_ = r.dom;
  f.cod_ = r.cod;
  f.faces_ = std::move(r.faces);
  f.degens_ = std::move(r.degens);
  for (size_t k = 1; k < f.faces_.size(); ++k)
    if (f.faces_[k - 1] <= f.faces_[k]) throw DimensionError("face word not decreasing");
  for (size_t k = 1; k < f.degens_.size(); ++k)
    if (f.degens_[k - 1] >= f.degens_[k]) throw DimensionError("degeneracy word not increasing");
  if (f.dom_ - static_cast<int>(f.degens_.size()) + static_cast<int>(f.faces_.size()) != f.cod_)
    throw DimensionError("simplicial dimension bookkeeping");
  return f;
}

SimpOp SimpOp::without_first_face() const {
  if (faces_.empty()) throw DimensionError("no face letters");
  SimpOp f = *this;
  f.faces_.erase(f.faces_.begin());
  f.cod_ -= 1;
  return f;
}

namespace {

// Normal form of (the single letter) g composed after f.
SimpOp simp_push_left_face(int i, const SimpOp& r) {
  std::vector<int> faces = r.faces();
  size_t pos = 0;
  while (pos < faces.size() && i <= faces[pos]) {
    faces[pos] += 1;
    ++pos;
  }
  faces.insert(faces.begin() + pos, i);
  return SimpOp::from_raw({r.dom(), r.cod() + 1, faces, r.degeneracies()});
}

SimpOp simp_push_left(bool is_face, int idx, const SimpOp& op);

SimpOp simp_push_left_degen(int j, const SimpOp& op) {
  if (!op.faces().empty()) {
    int c = op.faces().front();
    SimpOp rest = op.without_first_face();
    if (c == j || c == j + 1) return rest;  // s_j d_c = id
    if (c < j)
      return simp_push_left(true, c, simp_push_left(false, j - 1, rest));
    return simp_push_left(true, c - 1, simp_push_left(false, j, rest));
  }
  std::vector<int> degens = op.degeneracies();
  size_t pos = 0;
  while (pos < degens.size() && degens[pos] <= j) {
    ++j;
    ++pos;
  }
  degens.insert(degens.begin() + pos, j);
  return SimpOp::from_raw({op.dom(), op.cod() - 1, op.faces(), degens});
}

SimpOp simp_push_left(bool is_face, int idx, const SimpOp& op) {
  return is_face ? simp_push_left_face(idx, op) : simp_push_left_degen(idx, op);
}

}  // namespace

SimpOp compose(const SimpOp& g, const SimpOp& f) {
  if (f.cod() != g.dom())
    throw DimensionError("simplicial compose: cod(f) != dom(g)");
  SimpOp acc = f;
  // letters of g in function order: faces then degeneracies; push right to left
  for (auto it = g.degeneracies().rbegin(); it != g.degeneracies().rend(); ++it)
    acc = simp_push_left(false, *it, acc);
  for (auto it = g.faces().rbegin(); it != g.faces().rend(); ++it)
    acc = simp_push_left(true, *it, acc);
  return acc;
}

std::vector<int> evaluate_simp(const SimpOp& f) {
  std::vector<int> v(f.dom() + 1);
  std::iota(v.begin(), v.end(), 0);
  // degeneracies act first (rightmost), then faces
  for (auto it = f.degeneracies().rbegin(); it != f.degeneracies().rend(); ++it)
    for (int& x : v) x = (x <= *it) ? x : x - 1;
  for (auto it = f.faces().rbegin(); it != f.faces().rend(); ++it)
    for (int& x : v) x = (x < *it) ? x : x + 1;
  return v;
}

SimpOp simp_op_from_function(const std::vector<int>& values, int cod) {
  for (size_t k = 1; k < values.size(); ++k)
    if (values[k - 1] > values[k]) throw DimensionError("not monotone");
  std::vector<int> strict;
  for (size_t k = 0; k < values.size(); ++k)
    if (k == 0 || values[k] != values[k - 1]) strict.push_back(values[k]);
  // positions i with v_i = v_{i+1}, ascending
  std::vector<int> degens;
  for (size_t k = 0; k + 1 < values.size(); ++k)
    if (values[k] == values[k + 1]) degens.push_back(static_cast<int>(k));
  std::vector<int> faces;
  for (int t = cod; t >= 0; --t)
    if (std::find(strict.begin(), strict.end(), t) == strict.end()) faces.push_back(t);
  SimpOp op = SimpOp::from_raw({static_cast<int>(values.size()) - 1, cod, faces, degens});
  assert(evaluate_simp(op) == values);
  return op;
}

std::string render(const SimpOp& f) {
  if (f.is_identity()) return "id" + std::to_string(f.dom());
  std::ostringstream os;
  bool first = true;
  for (int c : f.faces()) {
    if (!first) os << ' ';
    os << 'd' << c;
    first = false;
  }
  for (int a : f.degeneracies()) {
    if (!first) os << ' ';
    os << 's' << a;
    first = false;
  }
  return os.str();
}

SimpOp parse_simpop(const std::string& text, int dom) {
  std::istringstream is(text);
  std::string tok;
  std::vector<std::pair<bool, int>> letters;
  bool only_id = false;
  while (is >> tok) {
    if (tok.rfind("id", 0) == 0) {
      only_id = true;
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 's')) throw ParseError("bad token " + tok);
    letters.emplace_back(tok[0] == 'd', std::stoi(tok.substr(1)));
  }
  if (only_id && letters.empty()) return SimpOp::identity(dom);
  SimpOp acc = SimpOp::identity(dom);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    acc = simp_push_left(it->first, it->second, acc);
  return acc;
}

std::vector<SimpOp> enumerate_simp_ops(int dom, int cod) {
  // all monotone maps [dom] -> [cod]
  std::vector<SimpOp> out;
  std::vector<int> v(dom + 1);
  std::function<void(int, int)> rec = [&](int k, int low) {
    if (k == dom + 1) {
      out.push_back(simp_op_from_function(v, cod));
      return;
    }
    for (int t = low; t <= cod; ++t) {
      v[k] = t;
      rec(k + 1, t);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimpOp> enumerate_simp_minus_ops(int dom, int cod) {
  std::vector<SimpOp> out;
  for (const SimpOp& f : enumerate_simp_ops(dom, cod))
    if (f.is_minus()) out.push_back(f);
  return out;
}

// --- complexes -------------------------------------------------------------

SimpId SimplicialComplex::add_simplex(int dim, std::string name) {
  if (dim < 0) throw DimensionError("negative dimension");
  if (static_cast<int>(simps_.size()) <= dim) simps_.resize(dim + 1);
  SimpId id{dim, static_cast<int>(simps_[dim].size())};
  Entry e;
  e.name = name.empty() ? "s" + std::to_string(dim) + "_" + std::to_string(id.idx)
                        : std::move(name);
  e.faces.resize(dim + 1, SimpRef{SimpId{}, SimpOp()});
  simps_[dim].push_back(std::move(e));
  return id;
}

void SimplicialComplex::set_face(SimpId x, int i, SimpRef f) {
  if (i < 0 || i > x.dim) throw DimensionError("face index out of range");
  if (f.dim() != x.dim - 1) throw DimensionError("face dimension mismatch");
  simps_[x.dim][x.idx].faces[i] = std::move(f);
}

int SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(simps_.size())) return 0;
  return static_cast<int>(simps_[dim].size());
}

int SimplicialComplex::total_count() const {
  int t = 0;
  for (int n = 0; n <= dim_bound(); ++n) t += count(n);
  return t;
}

std::optional<SimpId> SimplicialComplex::find_by_name(const std::string& name) const {
  for (int n = 0; n <= dim_bound(); ++n)
    for (int k = 0; k < count(n); ++k)
      if (simps_[n][k].name == name) return SimpId{n, k};
  return std::nullopt;
}

const SimpRef& SimplicialComplex::face(SimpId x, int i) const {
  return simps_[x.dim][x.idx].faces[i];
}

SimpRef SimplicialComplex::act(const SimpRef& x, const SimpOp& w) const {
  if (w.cod() != x.dim()) throw DimensionError("simplicial act dimension mismatch");
  SimpOp u = compose(x.op, w);
  SimpId y = x.target;
  while (!u.faces().empty()) {
    int c = u.faces().front();
    const SimpRef& f = face(y, c);
    u = compose(f.op, u.without_first_face());
    y = f.target;
  }
  return SimpRef{y, u};
}

std::vector<SimpRef> SimplicialComplex::level(int n) const {
  std::vector<SimpRef> out;
  for (int k = 0; k <= std::min(n, dim_bound()); ++k)
    for (int idx = 0; idx < count(k); ++idx)
      for (const SimpOp& w : enumerate_simp_minus_ops(n, k))
        out.push_back(SimpRef{SimpId{k, idx}, w});
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate(const SimplicialComplex& S) {
  ValidationReport r;
  auto fail = [&](const std::string& m) {
    r.ok = false;
    r.message = m;
    return r;
  };
  for (int n = 1; n <= S.dim_bound(); ++n)
    for (int k = 0; k < S.count(n); ++k) {
      SimpId x{n, k};
      for (int i = 0; i <= n; ++i) {
        const SimpRef& f = S.face(x, i);
        if (!f.target.valid()) return fail("missing face of " + S.name(x));
        if (!f.op.is_minus()) return fail("face reference not in standard form");
      }
      // x d_j d_i = x d_i d_{j-1} for i < j
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i) {
          SimpRef a = S.act(S.face(x, j), SimpOp::face(n - 1, i));
          SimpRef b = S.act(S.face(x, i), SimpOp::face(n - 1, j - 1));
          if (!(a == b))
            return fail("simplicial identity fails at " + S.name(x) + " (i,j)=(" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
  return r;
}

SimpRef SimpMap::apply(const SimpRef& x) const {
  return cod->act(assign[x.target.dim][x.target.idx], x.op);
}

SimpMap simp_identity_map(SimpPtr S) {
  SimpMap f;
  f.dom = S;
  f.cod = S;
  f.assign.resize(S->dim_bound() + 1);
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k) f.assign[n].push_back(S->ref(SimpId{n, k}));
  return f;
}

SimpMap simp_compose_maps(const SimpMap& g, const SimpMap& f) {
  SimpMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.assign.resize(f.assign.size());
  for (size_t n = 0; n < f.assign.size(); ++n)
    for (const SimpRef& r : f.assign[n]) h.assign[n].push_back(g.apply(r));
  return h;
}

ValidationReport validate_map(const SimpMap& f) {
  ValidationReport r;
  const SimplicialComplex& A = *f.dom;
  for (int n = 0; n <= A.dim_bound(); ++n)
    for (int k = 0; k < A.count(n); ++k) {
      SimpId x{n, k};
      if (f(x).dim() != n) {
        r.ok = false;
        r.message = "image dimension mismatch at " + A.name(x);
        return r;
      }
      for (int i = 0; i <= n && n >= 1; ++i) {
        SimpRef lhs = f.cod->act(f(x), SimpOp::face(n, i));
        SimpRef rhs = f.apply(A.face(x, i));
        if (!(lhs == rhs)) {
          r.ok = false;
          r.message = "map does not commute with face " + std::to_string(i) + " at " + A.name(x);
          return r;
        }
      }
    }
  return r;
}

bool simp_is_mono(const SimpMap& f) {
  std::set<SimpId> seen;
  for (size_t n = 0; n < f.assign.size(); ++n) {
    seen.clear();
    for (const SimpRef& r : f.assign[n]) {
      if (!r.op.is_identity()) return false;
      if (!seen.insert(r.target).second) return false;
    }
  }
  return true;
}

SimpUnionResult simp_disjoint_union(SimpPtr X, SimpPtr Y) {
  auto Z = std::make_shared<SimplicialComplex>();
  std::vector<std::vector<SimpId>> lm(X->dim_bound() + 1), rm(Y->dim_bound() + 1);
  int bound = std::max(X->dim_bound(), Y->dim_bound());
  for (int n = 0; n <= bound; ++n) {
    if (n <= X->dim_bound())
      for (int k = 0; k < X->count(n); ++k)
        lm[n].push_back(Z->add_simplex(n, "l." + X->name(SimpId{n, k})));
    if (n <= Y->dim_bound())
      for (int k = 0; k < Y->count(n); ++k)
        rm[n].push_back(Z->add_simplex(n, "r." + Y->name(SimpId{n, k})));
  }
  for (int n = 1; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k)
      for (int i = 0; i <= n; ++i) {
        SimpRef f = X->face(SimpId{n, k}, i);
        Z->set_face(lm[n][k], i, SimpRef{lm[f.target.dim][f.target.idx], f.op});
      }
  for (int n = 1; n <= Y->dim_bound(); ++n)
    for (int k = 0; k < Y->count(n); ++k)
      for (int i = 0; i <= n; ++i) {
        SimpRef f = Y->face(SimpId{n, k}, i);
        Z->set_face(rm[n][k], i, SimpRef{rm[f.target.dim][f.target.idx], f.op});
      }
  SimpUnionResult res;
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

struct UF {
  std::vector<int> parent;
  explicit UF(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

SimpQuotientResult simp_quotient(SimpPtr X,
                                 const std::vector<std::pair<SimpRef, SimpRef>>& gluings) {
  const int N = X->dim_bound();
  std::vector<SimpRef> universe;
  std::vector<int> level_start(N + 2, 0);
  std::map<SimpRef, int> index;
  for (int n = 0; n <= N; ++n) {
    level_start[n] = static_cast<int>(universe.size());
    for (const SimpRef& c : X->level(n)) {
      index.emplace(c, static_cast<int>(universe.size()));
      universe.push_back(c);
    }
  }
  level_start[N + 1] = static_cast<int>(universe.size());

  UF uf(universe.size());
  std::vector<std::pair<int, int>> work;
  for (const auto& [a, b] : gluings) {
    if (a.dim() != b.dim()) throw DimensionError("gluing pair dimensions differ");
    int ia = index.at(a), ib = index.at(b);
    if (uf.unite(ia, ib)) work.emplace_back(ia, ib);
  }
  while (!work.empty()) {
    auto [iu, iv] = work.back();
    work.pop_back();
    const SimpRef u = universe[iu];
    const SimpRef v = universe[iv];
    int n = u.dim();
    std::vector<SimpOp> gens;
    for (int i = 0; i <= n && n >= 1; ++i) gens.push_back(SimpOp::face(n, i));
    if (n + 1 <= N)
      for (int i = 0; i <= n; ++i) gens.push_back(SimpOp::degeneracy(n, i));
    for (const SimpOp& g : gens) {
      int a = index.at(X->act(u, g));
      int b = index.at(X->act(v, g));
      if (uf.unite(a, b)) work.emplace_back(a, b);
    }
  }

  std::map<int, std::pair<int, SimpOp>> peel;
  for (int n = 0; n <= N - 1; ++n)
    for (int u = level_start[n]; u < level_start[n + 1]; ++u) {
      if (uf.find(u) != u) continue;
      for (int i = 0; i <= n; ++i) {
        SimpOp g = SimpOp::degeneracy(n, i);
        int t = uf.find(index.at(X->act(universe[u], g)));
        if (!peel.count(t)) peel.emplace(t, std::make_pair(u, g));
      }
    }

  auto Q = std::make_shared<SimplicialComplex>();
  std::map<int, SimpId> new_id;
  for (int u = 0; u < static_cast<int>(universe.size()); ++u) {
    if (uf.find(u) != u || peel.count(u)) continue;
    new_id.emplace(u, Q->add_simplex(universe[u].dim()));
  }
  std::function<SimpRef(int)> qsf = [&](int root) -> SimpRef {
    auto it = new_id.find(root);
    if (it != new_id.end()) return SimpRef{it->second, SimpOp::identity(universe[root].dim())};
    const auto& [e_root, g] = peel.at(root);
    SimpRef base = qsf(e_root);
    return SimpRef{base.target, compose(base.op, g)};
  };
  for (const auto& [root, id] : new_id) {
    int n = universe[root].dim();
    for (int i = 0; i <= n && n >= 1; ++i) {
      int froot = uf.find(index.at(X->act(universe[root], SimpOp::face(n, i))));
      Q->set_face(id, i, qsf(froot));
    }
  }
  SimpQuotientResult res;
  res.complex = Q;
  res.projection.dom = X;
  res.projection.cod = Q;
  res.projection.assign.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k < X->count(n); ++k)
      res.projection.assign[n].push_back(qsf(uf.find(index.at(X->ref(SimpId{n, k})))));
  return res;
}

SimpSubcomplexResult simp_subcomplex(SimpPtr X, const std::set<SimpId>& generators) {
  std::set<SimpId> closed;
  std::vector<SimpId> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    SimpId x = stack.back();
    stack.pop_back();
    if (!closed.insert(x).second) continue;
    for (int i = 0; i <= x.dim && x.dim >= 1; ++i) stack.push_back(X->face(x, i).target);
  }
  auto S = std::make_shared<SimplicialComplex>();
  std::map<SimpId, SimpId> to_new;
  for (const SimpId& x : closed) to_new.emplace(x, S->add_simplex(x.dim, X->name(x)));
  for (const auto& [old_id, id] : to_new)
    for (int i = 0; i <= old_id.dim && old_id.dim >= 1; ++i) {
      SimpRef f = X->face(old_id, i);
      S->set_face(id, i, SimpRef{to_new.at(f.target), f.op});
    }
  SimpSubcomplexResult res;
  res.complex = S;
  res.inclusion.dom = S;
  res.inclusion.cod = X;
  res.inclusion.assign.resize(S->dim_bound() + 1);
  std::map<SimpId, SimpId> back;
  for (auto& [o, nw] : to_new) back.emplace(nw, o);
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k)
      res.inclusion.assign[n].push_back(X->ref(back.at(SimpId{n, k})));
  return res;
}

SimpSubcomplexResult simp_image_subcomplex(const SimpMap& f) {
  std::set<SimpId> gens;
  for (const auto& lvl : f.assign)
    for (const SimpRef& r : lvl) gens.insert(r.target);
  return simp_subcomplex(f.cod, gens);
}

namespace {

std::vector<SimpMap> enumerate_simp_maps_impl(SimpPtr A, SimpPtr X,
                                              const std::map<SimpId, SimpRef>* pins,
                                              long long budget) {
  std::vector<SimpMap> out;
  std::vector<SimpId> order;
  for (int n = 0; n <= A->dim_bound(); ++n)
    for (int k = 0; k < A->count(n); ++k) order.push_back(SimpId{n, k});
  SimpMap cur;
  cur.dom = A;
  cur.cod = X;
  cur.assign.resize(A->dim_bound() + 1);
  for (int n = 0; n <= A->dim_bound(); ++n)
    cur.assign[n].resize(A->count(n), SimpRef{SimpId{}, SimpOp()});
  std::vector<std::vector<SimpRef>> levels(A->dim_bound() + 1);
  for (int n = 0; n <= A->dim_bound(); ++n) levels[n] = X->level(n);
  long long steps = 0;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == order.size()) {
      out.push_back(cur);
      return;
    }
    SimpId x = order[pos];
    auto try_candidate = [&](const SimpRef& cand) {
      if (++steps > budget) throw BudgetError(static_cast<long long>(out.size()));
      for (int i = 0; i <= x.dim && x.dim >= 1; ++i) {
        SimpRef want = cur.apply(A->face(x, i));
        if (!(X->act(cand, SimpOp::face(x.dim, i)) == want)) return;
      }
      cur.assign[x.dim][x.idx] = cand;
      rec(pos + 1);
    };
    if (pins && pins->count(x)) {
      try_candidate(pins->at(x));
      return;
    }
    for (const SimpRef& cand : levels[x.dim]) try_candidate(cand);
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<SimpMap> enumerate_simp_maps(SimpPtr A, SimpPtr X, long long budget) {
  return enumerate_simp_maps_impl(A, X, nullptr, budget);
}

std::vector<SimpMap> enumerate_simp_maps_pinned(SimpPtr A, SimpPtr X,
                                                const std::map<SimpId, SimpRef>& pins,
                                                long long budget) {
  return enumerate_simp_maps_impl(A, X, &pins, budget);
}

std::optional<SimpMap> find_simp_isomorphism(SimpPtr X, SimpPtr Y) {
  if (X->dim_bound() != Y->dim_bound()) return std::nullopt;
  for (int n = 0; n <= X->dim_bound(); ++n)
    if (X->count(n) != Y->count(n)) return std::nullopt;

  std::map<SimpId, SimpId> fwd, bwd;
  std::function<std::optional<std::vector<SimpId>>(SimpId, SimpId)> force =
      [&](SimpId x, SimpId y) -> std::optional<std::vector<SimpId>> {
    std::vector<SimpId> added;
    std::vector<std::pair<SimpId, SimpId>> stack{{x, y}};
    auto rollback = [&]() {
      for (SimpId a : added) {
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
      if (bwd.count(b) || a.dim != b.dim) {
        rollback();
        return std::nullopt;
      }
      fwd.emplace(a, b);
      bwd.emplace(b, a);
      added.push_back(a);
      for (int i = 0; i <= a.dim && a.dim >= 1; ++i) {
        const SimpRef& fa = X->face(a, i);
        const SimpRef& fb = Y->face(b, i);
        if (fa.op != fb.op) {
          rollback();
          return std::nullopt;
        }
        stack.emplace_back(fa.target, fb.target);
      }
    }
    return added;
  };
  std::vector<SimpId> order;
  for (int n = X->dim_bound(); n >= 0; --n)
    for (int k = 0; k < X->count(n); ++k) order.push_back(SimpId{n, k});
  std::function<bool(size_t)> rec = [&](size_t pos) {
    while (pos < order.size() && fwd.count(order[pos])) ++pos;
    if (pos == order.size()) return true;
    SimpId x = order[pos];
    for (int k = 0; k < Y->count(x.dim); ++k) {
      SimpId y{x.dim, k};
      if (bwd.count(y)) continue;
      auto added = force(x, y);
      if (!added) continue;
      if (rec(pos + 1)) return true;
      for (SimpId a : *added) {
        bwd.erase(fwd.at(a));
        fwd.erase(a);
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  SimpMap cur;
  cur.dom = X;
  cur.cod = Y;
  cur.assign.resize(X->dim_bound() + 1);
  for (int n = 0; n <= X->dim_bound(); ++n)
    for (int k = 0; k < X->count(n); ++k) cur.assign[n].push_back(Y->ref(fwd.at(SimpId{n, k})));
  if (!validate_map(cur).ok) return std::nullopt;
  return cur;
}

namespace {

SimpOp simp_op_involute(const SimpOp& f) {
  std::vector<int> v = evaluate_simp(f);
  std::vector<int> w(v.size());
  for (size_t k = 0; k < v.size(); ++k) w[k] = f.cod() - v[v.size() - 1 - k];
  return simp_op_from_function(w, f.cod());
}

}  // namespace

SimpPtr simp_involute(SimpPtr S) {
  auto T = std::make_shared<SimplicialComplex>();
  for (int n = 0; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k) T->add_simplex(n, S->name(SimpId{n, k}));
  for (int n = 1; n <= S->dim_bound(); ++n)
    for (int k = 0; k < S->count(n); ++k)
      for (int i = 0; i <= n; ++i) {
        SimpRef f = S->face(SimpId{n, k}, n - i);
        T->set_face(SimpId{n, k}, i, SimpRef{f.target, simp_op_involute(f.op)});
      }
  return T;
}

// --- shapes ----------------------------------------------------------------

namespace {

std::string subset_name(const std::vector<int>& verts) {
  std::string s;
  for (size_t k = 0; k < verts.size(); ++k) {
    if (k) s += ".";
    s += std::to_string(verts[k]);
  }
  return s;
}

template <typename Keep>
SimpPtr build_subset_shape(int n, Keep keep) {
  auto S = std::make_shared<SimplicialComplex>();
  std::map<std::vector<int>, SimpId> ids;
  std::vector<std::vector<int>> subsets;
  for (uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    subsets.push_back(verts);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& verts : subsets)
    if (keep(verts))
      ids.emplace(verts, S->add_simplex(static_cast<int>(verts.size()) - 1, subset_name(verts)));
  for (const auto& [verts, id] : ids) {
    int d = id.dim;
    for (int i = 0; i <= d && d >= 1; ++i) {
      std::vector<int> sub = verts;
      sub.erase(sub.begin() + i);
      S->set_face(id, i, SimpRef{ids.at(sub), SimpOp::identity(d - 1)});
    }
  }
  return S;
}

}  // namespace

SimpPtr standard_simplex(int n) {
  return build_subset_shape(n, [](const std::vector<int>&) { return true; });
}

SimpPtr boundary_simplex(int n) {
  return build_subset_shape(
      n, [n](const std::vector<int>& v) { return static_cast<int>(v.size()) != n + 1; });
}

SimpPtr horn(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw DimensionError("horn indices out of range");
  return build_subset_shape(n, [n, i](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) == n + 1) return false;
    if (static_cast<int>(v.size()) == n) {
      int missing = 0;
      uint32_t mask = 0;
      for (int x : v) mask |= 1u << x;
      for (int x = 0; x <= n; ++x)
        if (!(mask & (1u << x))) missing = x;
      if (missing == i) return false;
    }
    return true;
  });
}

SimpId simplex_of_vertex_set(const SimplicialComplex& shape, const std::vector<int>& verts) {
  auto id = shape.find_by_name(subset_name(verts));
  if (!id) throw std::logic_error("vertex set not present in shape");
  return *id;
}

SimpMap horn_inclusion(int n, int i) {
  SimpPtr h = horn(n, i);
  SimpPtr d = standard_simplex(n);
  SimpMap f;
  f.dom = h;
  f.cod = d;
  f.assign.resize(h->dim_bound() + 1);
  for (int m = 0; m <= h->dim_bound(); ++m)
    for (int k = 0; k < h->count(m); ++k)
      f.assign[m].push_back(d->ref(*d->find_by_name(h->name(SimpId{m, k}))));
  return f;
}

SimpPtr shape_J() {
  auto S = std::make_shared<SimplicialComplex>();
  SimpId a = S->add_simplex(0, "one");
  SimpId b = S->add_simplex(0, "zero");
  SimpId f = S->add_simplex(1, "f");
  SimpId e = S->add_simplex(1, "e");
  SimpId g = S->add_simplex(1, "g");
  auto edge = [&](SimpId ed, SimpId from, SimpId to) {
    // d_1 = source vertex, d_0 = target vertex
    S->set_face(ed, 1, S->ref(from));
    S->set_face(ed, 0, S->ref(to));
  };
  edge(f, a, b);
  edge(e, b, a);
  edge(g, a, b);
  SimpId t1 = S->add_simplex(2, "t1");  // vertices (a, b, a)
  S->set_face(t1, 0, S->ref(e));
  S->set_face(t1, 1, SimpRef{a, SimpOp::degeneracy(0, 0)});
  S->set_face(t1, 2, S->ref(f));
  SimpId t2 = S->add_simplex(2, "t2");  // vertices (b, a, b)
  S->set_face(t2, 0, S->ref(g));
  S->set_face(t2, 1, SimpRef{b, SimpOp::degeneracy(0, 0)});
  S->set_face(t2, 2, S->ref(e));
  return S;
}

// --- posets and nerves ------------------------------------------------------

Poset cube_poset(int n) {
  Poset P;
  P.size = 1 << n;
  P.leq = [](int a, int b) { return (a & b) == a; };
  return P;
}

Poset chain_poset(int n) {
  Poset P;
  P.size = n + 1;
  P.leq = [](int a, int b) { return a <= b; };
  return P;
}

Poset product_poset(const Poset& A, const Poset& B) {
  Poset P;
  P.size = A.size * B.size;
  int as = A.size;
  auto aleq = A.leq;
  auto bleq = B.leq;
  P.leq = [as, aleq, bleq](int x, int y) {
    return aleq(x % as, y % as) && bleq(x / as, y / as);
  };
  return P;
}

SimpPtr nerve_of_poset(const Poset& P) {
  auto S = std::make_shared<SimplicialComplex>();
  std::map<std::vector<int>, SimpId> ids;
  std::vector<std::vector<int>> chains;
  std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& c) {
    chains.push_back(c);
    for (int v = 0; v < P.size; ++v) {
      if (v == c.back() || !P.leq(c.back(), v)) continue;
      c.push_back(v);
      extend(c);
      c.pop_back();
    }
  };
  for (int v = 0; v < P.size; ++v) {
    std::vector<int> c{v};
    extend(c);
  }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& c : chains)
    ids.emplace(c, S->add_simplex(static_cast<int>(c.size()) - 1, subset_name(c)));
  for (const auto& [c, id] : ids)
    for (int i = 0; i <= id.dim && id.dim >= 1; ++i) {
      std::vector<int> sub = c;
      sub.erase(sub.begin() + i);
      S->set_face(id, i, SimpRef{ids.at(sub), SimpOp::identity(id.dim - 1)});
    }
  return S;
}

SimpId chain_simplex(const SimplicialComplex& nerve, const std::vector<int>& chain) {
  auto id = nerve.find_by_name(subset_name(chain));
  if (!id) throw std::logic_error("chain not present in nerve");
  return *id;
}

std::vector<int> chain_of_simplex(const SimplicialComplex& nerve, SimpId s) {
  std::vector<int> out;
  std::istringstream is(nerve.name(s));
  std::string tok;
  while (std::getline(is, tok, '.')) out.push_back(std::stoi(tok));
  return out;
}

SimpMap nerve_map(SimpPtr domN, SimpPtr codN, const std::function<int(int)>& f) {
  SimpMap m;
  m.dom = domN;
  m.cod = codN;
  m.assign.resize(domN->dim_bound() + 1);
  for (int n = 0; n <= domN->dim_bound(); ++n)
    for (int k = 0; k < domN->count(n); ++k) {
      std::vector<int> chain = chain_of_simplex(*domN, SimpId{n, k});
      std::vector<int> image;
      for (int v : chain) image.push_back(f(v));
      std::vector<int> core;
      std::vector<int> values;
      for (size_t t = 0; t < image.size(); ++t) {
        if (core.empty() || core.back() != image[t]) core.push_back(image[t]);
        values.push_back(static_cast<int>(core.size()) - 1);
      }
      SimpOp op = simp_op_from_function(values, static_cast<int>(core.size()) - 1);
      m.assign[n].push_back(SimpRef{chain_simplex(*codN, core), op});
    }
  return m;
}

// --- cartesian product ------------------------------------------------------

namespace {

struct PairImpl {
  struct Cube {
    SimpRef a, b;
    auto operator<=>(const Cube&) const = default;
  };
  SimpPtr X, Y;
  std::vector<Cube> level(int n) const {
    std::vector<Cube> out;
    for (const SimpRef& a : X->level(n))
      for (const SimpRef& b : Y->level(n)) out.push_back(Cube{a, b});
    return out;
  }
  Cube act(const Cube& c, const SimpOp& w) const {
    return Cube{X->act(c.a, w), Y->act(c.b, w)};
  }
  int dim(const Cube& c) const { return c.a.dim(); }
};

}  // namespace

SimpProductResult simp_product(SimpPtr X, SimpPtr Y, int bound) {
  PairImpl I{X, Y};
  Materialized<PairImpl::Cube> m = materialize_simplicial(I, bound);
  SimpProductResult res;
  res.complex = m.complex;
  res.pairs.resize(m.cube_of.size());
  for (size_t n = 0; n < m.cube_of.size(); ++n)
    for (const auto& c : m.cube_of[n]) res.pairs[n].push_back({c.a, c.b});
  return res;
}

// --- triangulation ----------------------------------------------------------

TriangulationResult triangulate(ComplexPtr X) {
  TriangulationResult T;
  T.source = X;
  // nerves of the cube posets, one copy per non-degenerate cube
  std::map<int, SimpPtr> nerve_cache;
  auto cube_nerve = [&](int m) {
    auto it = nerve_cache.find(m);
    if (it == nerve_cache.end()) it = nerve_cache.emplace(m, nerve_of_poset(cube_poset(m))).first;
    return it->second;
  };
  SimpPtr total = std::make_shared<SimplicialComplex>();
  std::vector<std::vector<SimpMap>> into(X->dim_bound() + 1);
  for (int m = 0; m <= X->dim_bound(); ++m)
    for (int k = 0; k < X->count(m); ++k) {
      SimpUnionResult u = simp_disjoint_union(total, cube_nerve(m));
      for (auto& lvl : into)
        for (SimpMap& prev : lvl) prev = simp_compose_maps(u.inj_left, prev);
      into[m].push_back(u.inj_right);
      total = u.complex;
    }
  // glue along the cubical face structure
  std::vector<std::pair<SimpRef, SimpRef>> glue;
  for (int m = 1; m <= X->dim_bound(); ++m)
    for (int k = 0; k < X->count(m); ++k)
      for (int i = 1; i <= m; ++i)
        for (int e = 0; e <= 1; ++e) {
          CubeRef f = X->face(CubeId{m, k}, i, e);
          VertexMap fv = evaluate(BoxOp::face(m, i, e));
          VertexMap wv = evaluate(f.op);
          SimpPtr Nsrc = cube_nerve(m - 1);
          SimpMap via = nerve_map(Nsrc, cube_nerve(m),
                                  [&](int v) { return static_cast<int>(fv(v)); });
          SimpMap then = nerve_map(Nsrc, cube_nerve(f.target.dim),
                                   [&](int v) { return static_cast<int>(wv(v)); });
          for (int d = 0; d <= Nsrc->dim_bound(); ++d)
            for (int s = 0; s < Nsrc->count(d); ++s) {
              SimpId sid{d, s};
              glue.emplace_back(into[m][k].apply(via(sid)),
                                into[f.target.dim][f.target.idx].apply(then(sid)));
            }
        }
  SimpQuotientResult q = simp_quotient(total, glue);
  T.complex = q.complex;
  T.glue.resize(X->dim_bound() + 1);
  T.cube_nerves.resize(X->dim_bound() + 1);
  for (int m = 0; m <= X->dim_bound(); ++m)
    for (int k = 0; k < X->count(m); ++k) {
      T.glue[m].push_back(simp_compose_maps(q.projection, into[m][k]));
      T.cube_nerves[m].push_back(cube_nerve(m));
    }
  return T;
}

SimpMap triangulate_map(const TriangulationResult& TX, const TriangulationResult& TY,
                        const ComplexMap& f) {
  SimpMap h;
  h.dom = TX.complex;
  h.cod = TY.complex;
  h.assign.resize(TX.complex->dim_bound() + 1);
  for (int n = 0; n <= TX.complex->dim_bound(); ++n)
    for (int k = 0; k < TX.complex->count(n); ++k) {
      SimpRef target = TX.complex->ref(SimpId{n, k});
      std::optional<SimpRef> image;
      for (int m = 0; m <= TX.source->dim_bound() && !image; ++m)
        for (int x = 0; x < TX.source->count(m) && !image; ++x) {
          const SimpMap& g = TX.glue[m][x];
          for (int d = 0; d <= g.dom->dim_bound() && !image; ++d)
            for (int s = 0; s < g.dom->count(d) && !image; ++s) {
              if (!(g(SimpId{d, s}) == target)) continue;
              // image under Tf: push the chain through f(x)
              CubeRef fx = f(CubeId{m, x});
              VertexMap wv = evaluate(fx.op);
              SimpMap carry =
                  nerve_map(TX.cube_nerves[m][x], TY.cube_nerves[fx.target.dim][fx.target.idx],
                            [&](int v) { return static_cast<int>(wv(v)); });
              image = TY.glue[fx.target.dim][fx.target.idx].apply(carry(SimpId{d, s}));
            }
        }
      if (!image) throw std::logic_error("triangulate_map: no preimage found");
      h.assign[n].push_back(*image);
    }
  return h;
}

// --- U ----------------------------------------------------------------------

UComplex::UComplex(SimpPtr S, int bound, long long budget)
    : S_(std::move(S)), bound_(bound), budget_(budget) {
  levels_.resize(bound + 1);
  computed_.resize(bound + 1, false);
  domains_.resize(bound + 1);
}

SimpPtr UComplex::level_domain(int n) const {
  if (!domains_[n]) domains_[n] = nerve_of_poset(cube_poset(n));
  return domains_[n];
}

const std::vector<UComplex::Cube>& UComplex::level(int n) const {
  if (n > bound_) throw DimensionError("U level above bound");
  if (computed_[n]) return levels_[n];
  for (const SimpMap& m : enumerate_simp_maps(level_domain(n), S_, budget_))
    levels_[n].push_back(Cube{n, m.assign});
  std::sort(levels_[n].begin(), levels_[n].end());
  computed_[n] = true;
  return levels_[n];
}

SimpMap UComplex::as_map(const Cube& c) const {
  SimpMap m;
  m.dom = level_domain(c.n);
  m.cod = S_;
  m.assign = c.assign;
  return m;
}

UComplex::Cube UComplex::act(const Cube& c, const BoxOp& w) const {
  if (w.cod() != c.n) throw DimensionError("U act dimension mismatch");
  int m = w.dom();
  VertexMap wv = evaluate(w);
  SimpMap pre = nerve_map(level_domain(m), level_domain(c.n),
                          [&](int v) { return static_cast<int>(wv(v)); });
  SimpMap cm = as_map(c);
  SimpMap composed = simp_compose_maps(cm, pre);
  return Cube{m, composed.assign};
}

// --- F and G ------------------------------------------------------------

uint32_t map_G(int n, int a) {
  uint32_t out = 0;
  for (int i = 1; i <= n; ++i)
    if (i >= n - a + 1) out |= 1u << (i - 1);
  return out;
}

int map_F(int n, uint32_t b) {
  int i = n + 1;
  for (int j = 1; j <= n; ++j)
    if ((b >> (j - 1)) & 1) {
      i = j;
      break;
    }
  return n - i + 1;
}

// --- simplicial mapping spaces -------------------------------------------

namespace {

struct ShiftHomImpl {
  struct Cube {
    SimpRef s;
    auto operator<=>(const Cube&) const = default;
  };
  SimpPtr S;
  SimpId x0, x1;
  bool left;  // Hom^L shifts operator indices by one

  SimpRef degenerate_on(SimpId v, int dim) const {
    SimpOp op = SimpOp::identity(0);
    for (int j = 0; j < dim; ++j) op = compose(op, SimpOp::degeneracy(j, 0));
    return SimpRef{v, op};
  }

  std::vector<Cube> level(int n) const {
    std::vector<Cube> out;
    for (const SimpRef& s : S->level(n + 1)) {
      if (left) {
        // s restricted to vertex 0 is x0; d_0 s is the degeneracy of x1
        SimpOp v0 = simp_op_from_function({0}, n + 1);
        if (!(S->act(s, v0) == S->ref(x0))) continue;
        if (!(S->act(s, SimpOp::face(n + 1, 0)) == degenerate_on(x1, n))) continue;
      } else {
        SimpOp vtop = simp_op_from_function({n + 1}, n + 1);
        if (!(S->act(s, vtop) == S->ref(x1))) continue;
        if (!(S->act(s, SimpOp::face(n + 1, n + 1)) == degenerate_on(x0, n))) continue;
      }
      out.push_back(Cube{s});
    }
    return out;
  }

  Cube act(const Cube& c, const SimpOp& w) const {
    // shift: Hom^R keeps indices (the last vertex is untouched), Hom^L adds 1
    std::vector<int> faces = w.faces();
    std::vector<int> degens = w.degeneracies();
    if (left) {
      for (int& f : faces) f += 1;
      for (int& d : degens) d += 1;
    }
    SimpOp shifted = SimpOp::from_raw({w.dom() + 1, w.cod() + 1, faces, degens});
    return Cube{S->act(c.s, shifted)};
  }
  int dim(const Cube& c) const { return c.s.dim() - 1; }
};

struct TwoSidedHomImpl {
  struct Cube {
    int n = 0;
    std::vector<std::vector<SimpRef>> assign;
    auto operator<=>(const Cube&) const = default;
  };
  SimpPtr S;
  SimpId x0, x1;
  mutable std::map<int, SimpPtr> prisms;

  SimpPtr prism(int n) const {
    auto it = prisms.find(n);
    if (it == prisms.end())
      it = prisms.emplace(n, nerve_of_poset(product_poset(chain_poset(n), chain_poset(1)))).first;
    return it->second;
  }

  std::vector<Cube> level(int n) const {
    SimpPtr P = prism(n);
    std::map<SimpId, SimpRef> pins;
    // the end Delta^n x {eps} must map to the degeneracy of x_eps
    for (int d = 0; d <= P->dim_bound(); ++d)
      for (int k = 0; k < P->count(d); ++k) {
        std::vector<int> chain = chain_of_simplex(*P, SimpId{d, k});
        bool end0 = true, end1 = true;
        for (int v : chain) {
          if (v / (n + 1) != 0) end0 = false;
          if (v / (n + 1) != 1) end1 = false;
        }
        if (!end0 && !end1) continue;
        SimpId xv = end0 ? x0 : x1;
        SimpOp op = SimpOp::identity(0);
        for (int j = 0; j < d; ++j) op = compose(op, SimpOp::degeneracy(j, 0));
        pins.emplace(SimpId{d, k}, SimpRef{xv, op});
      }
    std::vector<Cube> out;
    for (const SimpMap& m : enumerate_simp_maps_pinned(P, S, pins))
      out.push_back(Cube{n, m.assign});
    std::sort(out.begin(), out.end());
    return out;
  }

  Cube act(const Cube& c, const SimpOp& w) const {
    int m = w.dom();
    std::vector<int> values = evaluate_simp(w);
    SimpPtr PD = prism(m);
    SimpPtr PC = prism(c.n);
    SimpMap pre = nerve_map(PD, PC, [&](int v) {
      int a = v % (m + 1), b = v / (m + 1);
      return values[a] + b * (c.n + 1);
    });
    SimpMap cm;
    cm.dom = PC;
    cm.cod = S;
    cm.assign = c.assign;
    SimpMap comp = simp_compose_maps(cm, pre);
    return Cube{m, comp.assign};
  }
  int dim(const Cube& c) const { return c.n; }
};

}  // namespace

SimpPtr simplicial_hom(SimpHomKind kind, SimpPtr S, SimpId x0, SimpId x1, int bound) {
  if (kind == SimpHomKind::TwoSided) {
    TwoSidedHomImpl I{S, x0, x1, {}};
    return materialize_simplicial(I, bound).complex;
  }
  ShiftHomImpl I{S, x0, x1, kind == SimpHomKind::Left};
  return materialize_simplicial(I, bound).complex;
}

}  // namespace cubik
