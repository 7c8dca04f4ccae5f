#pragma once

// Open-box enumeration and filler search, quasicategory checking,
// equivalence detection, homotopy categories, cubical mapping spaces, and
// suspensions.

#include "cubik/cone.hpp"
#include "cubik/fincat.hpp"
#include "cubik/tensor.hpp"

namespace cubik {

struct FillerError : std::runtime_error {
  int n, i, eps;
  FillerError(int n_, int i_, int eps_)
      : std::runtime_error("no filler for the (" + std::to_string(i_) + "," +
                           std::to_string(eps_) + ")-open box in dimension " +
                           std::to_string(n_)),
        n(n_), i(i_), eps(eps_) {}
};

// An open-box problem: the boundary of an n-cube with the (i,eps)-face
// missing, given as compatible (n-1)-cubes of the ambient complex.
template <typename Cube>
struct OpenBoxProblem {
  int n = 0, i = 1, eps = 0;
  std::map<std::pair<int, int>, Cube> boundary;  // keyed by (j, e) != (i, eps)
};

// The image of the critical edge under the boundary assignment.
template <CubicalLike X>
typename X::Cube critical_edge_image(const X& x, const OpenBoxProblem<typename X::Cube>& p) {
  int j = (p.i == 1) ? 2 : 1;  // a face containing the critical edge
  // the critical edge has coordinate i free and all others constant 1-eps;
  // inside the (j, 1-eps)-face it keeps the same description with j removed
  int ii = p.i < j ? p.i : p.i - 1;
  BoxOp w = BoxOp::identity(1);
  for (int l = 1; l <= p.n - 1; ++l) {
    if (l == ii) continue;
    w = compose(BoxOp::face(w.cod() + 1, l, 1 - p.eps), w);
  }
  return x.act(p.boundary.at({j, 1 - p.eps}), w);
}

template <CubicalLike X>
bool is_inner_problem(const X& x, const OpenBoxProblem<typename X::Cube>& p) {
  auto edge = critical_edge_image(x, p);
  return !standard_form(x, edge).second.is_identity();
}


template <CubicalLike X>
bool boundary_consistent(const X& x, const OpenBoxProblem<typename X::Cube>& p) {
  for (const auto& [key1, c1] : p.boundary)
    for (const auto& [key2, c2] : p.boundary) {
      auto [j1, e1] = key1;
      auto [j2, e2] = key2;
      if (j1 >= j2) continue;
      auto a = x.act(c2, BoxOp::face(p.n - 1, j1, e1));
      auto b = x.act(c1, BoxOp::face(p.n - 1, j2 - 1, e2));
      if (!(a == b)) return false;
    }
  return true;
}

template <CubicalLike X>
bool matches_boundary(const X& x, const OpenBoxProblem<typename X::Cube>& p,
                      const typename X::Cube& cand) {
  for (const auto& [key, c] : p.boundary) {
    auto [j, e] = key;
    if (!(x.act(cand, BoxOp::face(p.n, j, e)) == c)) return false;
  }
  return true;
}

// Exhaustive filler search over the ambient level; the least candidate wins.
template <CubicalLike X>
std::optional<typename X::Cube> find_filler_exhaustive(
    const X& x, const OpenBoxProblem<typename X::Cube>& p) {
  for (const auto& cand : x.level(p.n))
    if (matches_boundary(x, p, cand)) return cand;
  return std::nullopt;
}

// Constructive filler for nerves: the missing data is determined on vertices
// and edges (solving a composition equation when n = 2), then full square
// commutativity is verified.
std::optional<NerveCube> find_filler(const NerveComplex& N,
                                     const OpenBoxProblem<NerveCube>& p);

inline std::optional<CubeRef> find_filler(const ExplicitCubes& x,
                                          const OpenBoxProblem<CubeRef>& p) {
  return find_filler_exhaustive(x, p);
}

struct QuasicatReport {
  bool ok = true;
  int boxes_checked = 0;
  std::optional<std::tuple<int, int, int>> failing_shape;  // (n, i, eps)
};

// Enumerate the inner open boxes of shape dimension <= d and search fillers.
// The face carrying the critical edge is assigned first so that the inner
// condition prunes immediately.
template <CubicalLike X>
QuasicatReport is_quasicategory_up_to(const X& x, int d, long long budget = default_budget()) {
  QuasicatReport report;
  long long steps = 0;
  for (int n = 2; n <= d && report.ok; ++n) {
    std::vector<typename X::Cube> lvl = x.level(n - 1);
    std::vector<std::vector<typename X::Cube>> faces_of(lvl.size());
    for (size_t t = 0; t < lvl.size(); ++t)
      for (int j = 1; j <= n - 1; ++j)
        for (int e = 0; e <= 1; ++e)
          faces_of[t].push_back(x.act(lvl[t], BoxOp::face(n - 1, j, e)));
    auto face_of = [&](size_t t, int j, int e) -> const typename X::Cube& {
      return faces_of[t][2 * (j - 1) + e];
    };
    // candidates indexed by one face value
    std::vector<std::map<typename X::Cube, std::vector<size_t>>> by_face(2 * (n - 1));
    for (size_t t = 0; t < lvl.size(); ++t)
      for (int j = 1; j <= n - 1; ++j)
        for (int e = 0; e <= 1; ++e) by_face[2 * (j - 1) + e][face_of(t, j, e)].push_back(t);
    for (int i = 1; i <= n && report.ok; ++i)
      for (int eps = 0; eps <= 1 && report.ok; ++eps) {
        int jcrit = (i == 1) ? 2 : 1;
        std::vector<std::pair<int, int>> slots{{jcrit, 1 - eps}};
        for (int j = 1; j <= n; ++j)
          for (int e = 0; e <= 1; ++e)
            if (!(j == i && e == eps) && !(j == jcrit && e == 1 - eps)) slots.emplace_back(j, e);
        // the critical edge inside the (jcrit, 1-eps)-face
        int ii = (i < jcrit) ? i : i - 1;
        BoxOp crit_word = BoxOp::identity(1);
        for (int l = 1; l <= n - 1; ++l) {
          if (l == ii) continue;
          crit_word = compose(BoxOp::face(crit_word.cod() + 1, l, 1 - eps), crit_word);
        }
        OpenBoxProblem<typename X::Cube> p;
        p.n = n;
        p.i = i;
        p.eps = eps;
        std::vector<size_t> chosen(slots.size());
        std::function<void(size_t)> rec = [&](size_t pos) {
          if (!report.ok) return;
          if (pos == slots.size()) {
            ++report.boxes_checked;
            if (!find_filler(x, p)) {
              report.ok = false;
              report.failing_shape = {n, i, eps};
            }
            return;
          }
          auto [j, e] = slots[pos];
          // narrow the candidate list through one already-fixed constraint
          const std::vector<size_t>* pool = nullptr;
          std::vector<size_t> all;
          for (size_t q = 0; q < pos && !pool; ++q) {
            auto [j2, e2] = slots[q];
            if (j2 == j) continue;
            if (j > j2) {
              auto it = by_face[2 * (j2 - 1) + e2].find(face_of(chosen[q], j - 1, e));
              pool = (it == by_face[2 * (j2 - 1) + e2].end()) ? &all : &it->second;
            } else {
              auto it = by_face[2 * (j2 - 2) + e2].find(face_of(chosen[q], j, e));
              pool = (it == by_face[2 * (j2 - 2) + e2].end()) ? &all : &it->second;
            }
          }
          if (!pool) {
            all.resize(lvl.size());
            for (size_t t = 0; t < all.size(); ++t) all[t] = t;
            pool = &all;
          }
          for (size_t t : *pool) {
            if (++steps > budget) throw BudgetError(report.boxes_checked);
            const auto& cand = lvl[t];
            if (pos == 0) {
              auto edge = x.act(cand, crit_word);
              if (standard_form(x, edge).second.is_identity()) continue;  // not inner
            }
            bool good = true;
            for (size_t q = 0; q < pos && good; ++q) {
              auto [j2, e2] = slots[q];
              if (j2 == j) continue;  // parallel faces do not intersect
              // x_{hi,ehi} d_{lo,elo} = x_{lo,elo} d_{hi-1,ehi}
              if (j > j2) {
                if (!(face_of(t, j2, e2) == face_of(chosen[q], j - 1, e))) good = false;
              } else {
                if (!(face_of(chosen[q], j, e) == face_of(t, j2 - 1, e2))) good = false;
              }
            }
            if (!good) continue;
            chosen[pos] = t;
            p.boundary[{j, e}] = cand;
            rec(pos + 1);
            p.boundary.erase({j, e});
          }
        };
        rec(0);
      }
  }
  return report;
}

// --- equivalences and the homotopy category -------------------------------

// True iff some map K -> X carries the middle edge to the given edge.
template <CubicalLike X>
bool is_equivalence(const X& x, const typename X::Cube& edge) {
  auto v0 = x.act(edge, BoxOp::face(1, 1, 0));
  auto v1 = x.act(edge, BoxOp::face(1, 1, 1));
  auto deg = [&](const typename X::Cube& v) { return x.act(v, BoxOp::degeneracy(1, 1)); };
  bool s1 = false, s2 = false;
  for (const auto& s : x.level(2)) {
    if (!s1 && x.act(s, BoxOp::face(2, 2, 1)) == edge &&
        x.act(s, BoxOp::face(2, 1, 1)) == deg(v1) &&
        x.act(s, BoxOp::face(2, 2, 0)) == deg(v1))
      s1 = true;
    if (!s2 && x.act(s, BoxOp::face(2, 1, 0)) == edge &&
        x.act(s, BoxOp::face(2, 1, 1)) == deg(v0) &&
        x.act(s, BoxOp::face(2, 2, 0)) == deg(v0))
      s2 = true;
    if (s1 && s2) return true;
  }
  return false;
}

// The critical edge is carried to an equivalence (every inner problem is
// special, since degenerate edges are equivalences).
template <CubicalLike X>
bool is_special_problem(const X& x, const OpenBoxProblem<typename X::Cube>& p) {
  return is_equivalence(x, critical_edge_image(x, p));
}

template <CubicalLike X>
struct HoCategory {
  FinCategory cat;
  std::vector<typename X::Cube> objects;                  // vertex cubes
  std::vector<typename X::Cube> representatives;          // per morphism
  std::map<std::pair<int, int>, typename X::Cube> witness;  // (g,f) -> 2-cube
};

// The homotopy category of a filler-complete complex: morphisms are
// homotopy classes of edges, composition by least filler.
template <CubicalLike X>
HoCategory<X> ho(const X& x) {
  HoCategory<X> H;
  H.objects = x.level(0);
  std::vector<typename X::Cube> edges = x.level(1);
  auto deg = [&](const typename X::Cube& v) { return x.act(v, BoxOp::degeneracy(1, 1)); };
  auto src = [&](const typename X::Cube& f) { return x.act(f, BoxOp::face(1, 1, 0)); };
  auto dst = [&](const typename X::Cube& f) { return x.act(f, BoxOp::face(1, 1, 1)); };
  auto homotopic = [&](const typename X::Cube& f, const typename X::Cube& g) {
    if (!(src(f) == src(g)) || !(dst(f) == dst(g))) return false;
    for (const auto& s : x.level(2))
      if (x.act(s, BoxOp::face(2, 2, 0)) == f && x.act(s, BoxOp::face(2, 2, 1)) == g &&
          x.act(s, BoxOp::face(2, 1, 0)) == deg(src(f)) &&
          x.act(s, BoxOp::face(2, 1, 1)) == deg(dst(f)))
        return true;
    return false;
  };
  // homotopy classes
  std::vector<int> cls(edges.size(), -1);
  for (size_t a = 0; a < edges.size(); ++a) {
    if (cls[a] != -1) continue;
    int id = static_cast<int>(H.representatives.size());
    cls[a] = id;
    H.representatives.push_back(edges[a]);
    for (size_t b = a + 1; b < edges.size(); ++b)
      if (cls[b] == -1 && homotopic(edges[a], edges[b])) cls[b] = id;
  }
  auto obj_index = [&](const typename X::Cube& v) {
    for (size_t o = 0; o < H.objects.size(); ++o)
      if (H.objects[o] == v) return static_cast<int>(o);
    throw std::logic_error("vertex not found");
  };
  FinCategory& C = H.cat;
  C.num_objects = static_cast<int>(H.objects.size());
  for (size_t m = 0; m < H.representatives.size(); ++m)
    C.morphisms.push_back({obj_index(src(H.representatives[m])),
                           obj_index(dst(H.representatives[m])),
                           "h" + std::to_string(m)});
  C.identity.resize(C.num_objects);
  for (int o = 0; o < C.num_objects; ++o) {
    auto e = deg(H.objects[o]);
    C.identity[o] = cls[static_cast<size_t>(
        std::find(edges.begin(), edges.end(), e) - edges.begin())];
  }
  int M = static_cast<int>(C.morphisms.size());
  C.comp.assign(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (!C.composable(g, f)) continue;
      // fill the (2,0)-open box with left f, bottom g, right degenerate
      OpenBoxProblem<typename X::Cube> p;
      p.n = 2;
      p.i = 2;
      p.eps = 0;
      p.boundary[{1, 0}] = H.representatives[f];
      p.boundary[{1, 1}] = deg(dst(H.representatives[g]));
      p.boundary[{2, 1}] = H.representatives[g];
      auto filler = find_filler(x, p);
      if (!filler) throw FillerError(2, 2, 0);
      H.witness[{g, f}] = *filler;
      auto comp_edge = x.act(*filler, BoxOp::face(2, 2, 0));
      C.comp[g][f] = cls[static_cast<size_t>(
          std::find(edges.begin(), edges.end(), comp_edge) - edges.begin())];
    }
  return H;
}

// A square with boundary (left p, right g, top f, bottom q) exists iff
// g f = q p in Ho X; search one side, compute the other.
template <CubicalLike X>
bool square_exists(const X& x, const typename X::Cube& p, const typename X::Cube& g,
                   const typename X::Cube& f, const typename X::Cube& q) {
  for (const auto& s : x.level(2))
    if (x.act(s, BoxOp::face(2, 1, 0)) == p && x.act(s, BoxOp::face(2, 1, 1)) == g &&
        x.act(s, BoxOp::face(2, 2, 0)) == f && x.act(s, BoxOp::face(2, 2, 1)) == q)
      return true;
  return false;
}

// --- mapping spaces ---------------------------------------------------------

enum class MapSide { L, R };

template <CubicalLike X>
struct MapSpaceImpl {
  using Cube = typename X::Cube;
  const X* ambient;
  Cube x0, x1;  // vertex cubes
  MapSide side;

  Cube degenerate_vertex(const Cube& v, int dim) const {
    Cube c = v;
    for (int j = 1; j <= dim; ++j) c = ambient->act(c, BoxOp::degeneracy(j, j));
    return c;
  }
  std::vector<Cube> level(int n) const {
    std::vector<Cube> out;
    Cube d0 = degenerate_vertex(x0, n);
    Cube d1 = degenerate_vertex(x1, n);
    for (const Cube& s : ambient->level(n + 1)) {
      int at = (side == MapSide::R) ? n + 1 : 1;
      if (!(ambient->act(s, BoxOp::face(n + 1, at, 0)) == d0)) continue;
      if (!(ambient->act(s, BoxOp::face(n + 1, at, 1)) == d1)) continue;
      out.push_back(s);
    }
    return out;
  }
  Cube act(const Cube& c, const BoxOp& w) const {
    BoxOp shifted = (side == MapSide::R) ? tensor_ops(w, BoxOp::identity(1))
                                         : tensor_ops(BoxOp::identity(1), w);
    return ambient->act(c, shifted);
  }
  int dim(const Cube& c) const { return ambient->dim(c) - 1; }
};

// Materialise a cubical-like complex as an explicit one.
template <CubicalLike X>
struct MaterializedCubical {
  ComplexPtr complex;
  std::vector<std::vector<typename X::Cube>> cube_of;
  std::optional<CubeId> find(const typename X::Cube& c, int dim) const {
    for (int k = 0; k < static_cast<int>(cube_of[dim].size()); ++k)
      if (cube_of[dim][k] == c) return CubeId{dim, k};
    return std::nullopt;
  }
};

template <CubicalLike X>
MaterializedCubical<X> materialize_cubical(const X& I, int bound) {
  MaterializedCubical<X> t;
  auto C = std::make_shared<CubicalComplex>();
  t.cube_of.resize(bound + 1);
  for (int n = 0; n <= bound; ++n)
    for (const auto& c : I.level(n)) {
      auto [base, word] = standard_form(I, c);
      if (!word.is_identity()) continue;
      t.cube_of[n].push_back(c);
      C->add_cube(n);
    }
  for (int n = 1; n <= bound; ++n)
    for (int k = 0; k < static_cast<int>(t.cube_of[n].size()); ++k)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          auto f = I.act(t.cube_of[n][k], BoxOp::face(n, i, e));
          auto [base, word] = standard_form(I, f);
          auto id = t.find(base, I.dim(base));
          if (!id) throw std::logic_error("materialize_cubical: missing face target");
          C->set_face(CubeId{n, k}, i, e, CubeRef{*id, word});
        }
  t.complex = C;
  return t;
}

template <CubicalLike X>
MaterializedCubical<MapSpaceImpl<X>> mapping_space(const X& ambient, const typename X::Cube& x0,
                                                   const typename X::Cube& x1, MapSide side,
                                                   int bound) {
  MapSpaceImpl<X> impl{&ambient, x0, x1, side};
  return materialize_cubical(impl, bound);
}

// --- suspension -------------------------------------------------------------

struct SuspensionResult {
  ComplexPtr complex;
  CubeId base0, base1;
  ComplexMap cyl_proj;  // from the cylinder
  ProductResult cylinder;
  MapSide side;
};
SuspensionResult suspension(ComplexPtr X, MapSide side = MapSide::R);

// Bi-pointed maps (Sigma X, 0, 1) -> (Y, y0, y1).
std::vector<ComplexMap> enumerate_bipointed_maps(const SuspensionResult& S, ComplexPtr Y,
                                                 CubeId y0, CubeId y1);

// --- natural marking ---------------------------------------------------------

ComplexPtr natural_marking(ComplexPtr X);

}  // namespace cubik
