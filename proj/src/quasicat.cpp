#include "cubik/quasicat.hpp"

#include <algorithm>

namespace cubik {

std::optional<NerveCube> find_filler(const NerveComplex& N, const OpenBoxProblem<NerveCube>& p) {
  const FinCategory& C = N.category();
  int n = p.n;
  NerveCube cand;
  cand.n = n;
  cand.vert.assign(1 << n, -1);
  cand.edge.assign(n * (1 << (n - 1)), -1);
  // pull vertices and edges from the present faces
  for (const auto& [key, c] : p.boundary) {
    auto [j, e] = key;
    VertexMap fv = evaluate(BoxOp::face(n, j, e));
    for (uint32_t u = 0; u < (1u << (n - 1)); ++u) {
      uint32_t v = fv(u);
      if (cand.vert[v] == -1) cand.vert[v] = c.vert[u];
      else if (cand.vert[v] != c.vert[u]) return std::nullopt;
    }
    for (int d = 1; d <= n - 1; ++d)
      for (uint32_t u = 0; u < (1u << (n - 1)); ++u) {
        if ((u >> (d - 1)) & 1) continue;
        uint32_t a = fv(u), b = fv(u | (1u << (d - 1)));
        // the image of direction d under the face inclusion
        int dir = 0;
        for (int t = 1; t <= n; ++t)
          if ((a ^ b) & (1u << (t - 1))) dir = t;
        uint32_t base = a;
        int slot = NerveComplex::edge_slot(n, dir, base);
        int mor = c.edge[NerveComplex::edge_slot(n - 1, d, u)];
        if (cand.edge[slot] == -1) cand.edge[slot] = mor;
        else if (cand.edge[slot] != mor) return std::nullopt;
      }
  }
  // any missing edges occur only for n = 2 (the missing face is an edge)
  std::vector<int> missing;
  for (int slot = 0; slot < static_cast<int>(cand.edge.size()); ++slot)
    if (cand.edge[slot] == -1) missing.push_back(slot);
  auto functor_ok = [&](const NerveCube& z) {
    for (int d1 = 1; d1 <= n; ++d1)
      for (int d2 = d1 + 1; d2 <= n; ++d2)
        for (uint32_t v = 0; v < (1u << n); ++v) {
          if (((v >> (d1 - 1)) & 1) || ((v >> (d2 - 1)) & 1)) continue;
          uint32_t v1 = v | (1u << (d1 - 1));
          uint32_t v2 = v | (1u << (d2 - 1));
          int a = z.edge[NerveComplex::edge_slot(n, d1, v)];
          int b = z.edge[NerveComplex::edge_slot(n, d2, v1)];
          int c2 = z.edge[NerveComplex::edge_slot(n, d2, v)];
          int d = z.edge[NerveComplex::edge_slot(n, d1, v2)];
          if (C.compose(b, a) != C.compose(d, c2)) return false;
        }
    return true;
  };
  if (missing.empty()) return functor_ok(cand) ? std::optional<NerveCube>(cand) : std::nullopt;
  // solve the remaining edges by enumerating candidate morphisms; the least
  // full candidate wins
  std::optional<NerveCube> best;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == missing.size()) {
      if (functor_ok(cand) && (!best || cand < *best)) best = cand;
      return;
    }
    int slot = missing[pos];
    int dir = slot / (1 << (n - 1)) + 1;
    uint32_t base = 0;
    {
      uint32_t compressed = static_cast<uint32_t>(slot % (1 << (n - 1)));
      uint32_t low = compressed & ((1u << (dir - 1)) - 1);
      uint32_t high = (compressed >> (dir - 1)) << dir;
      base = low | high;
    }
    int sv = cand.vert[base];
    int dv = cand.vert[base | (1u << (dir - 1))];
    for (int m = 0; m < static_cast<int>(C.morphisms.size()); ++m) {
      if (C.morphisms[m].src != sv || C.morphisms[m].dst != dv) continue;
      cand.edge[slot] = m;
      rec(pos + 1);
      cand.edge[slot] = -1;
    }
  };
  rec(0);
  return best;
}

SuspensionResult suspension(ComplexPtr X, MapSide side) {
  SuspensionResult res;
  res.side = side;
  ComplexPtr I = standard_cube(1);
  res.cylinder = (side == MapSide::R) ? product(X, I) : product(I, X);
  // both ends collapse, each to its own point
  UnionResult XX = disjoint_union(X, X);
  ComplexPtr two = boundary_cube(1);  // two points named "0" and "1"
  ComplexMap ends;
  ends.dom = XX.complex;
  ends.cod = res.cylinder.complex;
  ends.assign.resize(XX.complex->dim_bound() + 1);
  ComplexMap to_two;
  to_two.dom = XX.complex;
  to_two.cod = two;
  to_two.assign.resize(XX.complex->dim_bound() + 1);
  CubeId p0 = *two->find_by_name("0");
  CubeId p1 = *two->find_by_name("1");
  ComplexPtr iv = I;
  CubeId v0 = *iv->find_by_name("0");
  CubeId v1 = *iv->find_by_name("1");
  for (int n = 0; n <= XX.complex->dim_bound(); ++n)
    for (int k = 0; k < XX.complex->count(n); ++k) {
      // which copy?
      bool left_copy = XX.complex->name(CubeId{n, k}).rfind("l.", 0) == 0;
      CubeId orig{n, -1};
      for (int t = 0; t < X->count(n); ++t) {
        const CubeRef& r = left_copy ? XX.inj_left(CubeId{n, t}) : XX.inj_right(CubeId{n, t});
        if (r.target == CubeId{n, k}) orig.idx = t;
      }
      CubeId vend = left_copy ? v0 : v1;
      PairCube pc = (side == MapSide::R)
                        ? PairCube{X->ref(orig), iv->ref(vend)}
                        : PairCube{iv->ref(vend), X->ref(orig)};
      pc = canonical_pair(*res.cylinder.left_factor, *res.cylinder.right_factor, pc.left,
                          pc.right);
      ends.assign[n].push_back(res.cylinder.ref_of(pc));
      BoxOp op = BoxOp::identity(0);
      for (int j = 1; j <= n; ++j) op = compose(op, BoxOp::degeneracy(j, j));
      to_two.assign[n].push_back(CubeRef{left_copy ? p0 : p1, op});
    }
  PushoutResult po = pushout(ends, to_two);
  res.complex = po.complex;
  res.cyl_proj = po.from_left;
  res.base0 = po.from_right(p0).target;
  res.base1 = po.from_right(p1).target;
  return res;
}

std::vector<ComplexMap> enumerate_bipointed_maps(const SuspensionResult& S, ComplexPtr Y,
                                                 CubeId y0, CubeId y1) {
  std::map<CubeId, CubeRef> pins;
  pins.emplace(S.base0, Y->ref(y0));
  pins.emplace(S.base1, Y->ref(y1));
  return enumerate_maps_pinned(S.complex, Y, pins);
}

ComplexPtr natural_marking(ComplexPtr X) {
  ExplicitCubes ec{X};
  QuasicatReport rep = is_quasicategory_up_to(ec, 3, default_budget());
  if (!rep.ok) {
    auto [n, i, e] = *rep.failing_shape;
    throw FillerError(n, i, e);
  }
  auto Y = std::make_shared<CubicalComplex>(*X);
  Y->enable_marking();
  for (int k = 0; k < X->count(1); ++k)
    if (is_equivalence(ec, X->ref(CubeId{1, k}))) Y->mark_edge(CubeId{1, k});
  return Y;
}

}  // namespace cubik
