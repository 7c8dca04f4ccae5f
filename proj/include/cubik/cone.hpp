#pragma once

// Cone functors and their monad structure, standard cones C^{m,n}, the
// subcomplexes B^{m,n,k}, the cosimplicial objects Q^n, the functors Q and
// integral, the counit, and the comparison map F-bar.

#include "cubik/complex.hpp"
#include "cubik/fincat.hpp"
#include "cubik/simplex.hpp"
#include "cubik/tensor.hpp"

namespace cubik {

enum class ConeSide { L, R };

struct ConeKind {
  ConeSide side = ConeSide::L;
  int sign = 1;  // the collapsed end
  auto operator<=>(const ConeKind&) const = default;
};
inline constexpr ConeKind kLeftPositive{ConeSide::L, 1};
inline constexpr ConeKind kLeftNegative{ConeSide::L, 0};
inline constexpr ConeKind kRightPositive{ConeSide::R, 1};
inline constexpr ConeKind kRightNegative{ConeSide::R, 0};

struct ConeResult {
  ComplexPtr complex;
  ComplexMap eta;           // X -> CX
  ComplexMap cyl_proj;      // cylinder -> CX
  ProductResult cylinder;   // box^1 (x) X or X (x) box^1
  CubeId cone_point;
  ConeKind kind;
};

ConeResult cone(ComplexPtr X, ConeKind kind);
// Functorial image on cones of the same kind.
ComplexMap cone_map(const ConeResult& CX, const ConeResult& CY, const ComplexMap& f);
// The monad multiplication C(CX) -> CX.
ComplexMap cone_mu(ComplexPtr X, const ConeResult& CX, const ConeResult& CCX);

// --- standard cones -------------------------------------------------------

struct StandardCone {
  int m = 0, n = 0;
  ComplexPtr complex;
  ComplexMap projection;  // box^{m+n} -> C^{m,n}
};

// Quotient of box^{m+n} identifying k-cubes f, g whenever some j <= n has
// f_l = g_l for l <= j and f_j = g_j = const_1 (left positive convention).
StandardCone standard_cone(int m, int n);

// The face word of a non-degenerate cube of a standard cone (a chosen
// identity-op preimage under the projection).
BoxOp cone_class_rep(const StandardCone& C, CubeId c);

struct BComplexResult {
  ComplexPtr complex;
  ComplexMap inclusion;  // into standard_cone(m, n).complex
  // The anodyne decomposition of the inclusion: repeatedly extend along the
  // (k+1,0)-face (recursing in m), ending with one (m+n,0)-open-box filling.
  struct Step {
    enum Kind { ExtendFace, FillBox } kind;
    int m, n, k;  // FillBox: the (m+n,0)-box of C^{m,n}
  };
  std::vector<Step> decomposition;
};
BComplexResult b_complex(int m, int n, int k);

// --- cone predicates (generic over complexes) ------------------------------

const StandardCone& standard_cone_cached(int m, int n);

// FaceCond: x is an (m,n)-cone iff for 1 <= i <= n,
// x d_{i,1} = x d_{m+n,0} ... d_{i+1,0} d_{i,1} s_i ... s_{m+n-1}.
template <CubicalLike X>
bool is_cone(const X& x, const typename X::Cube& c, int m, int n) {
  int total = x.dim(c);
  if (total != m + n) throw DimensionError("is_cone: dimension mismatch");
  for (int i = 1; i <= n; ++i) {
    auto lhs = x.act(c, BoxOp::face(total, i, 1));
    auto rhs = c;
    int d = total;
    for (int j = total; j >= i + 1; --j) {
      rhs = x.act(rhs, BoxOp::face(d, j, 0));
      --d;
    }
    rhs = x.act(rhs, BoxOp::face(d, i, 1));
    --d;
    for (int j = i; j <= total - 1; ++j) {
      rhs = x.act(rhs, BoxOp::degeneracy(j, j));
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// The second witness: c factors through the quotient projection.
template <CubicalLike X>
bool is_cone_via_factorization(const X& x, const typename X::Cube& c, int m, int n) {
  const StandardCone& C = standard_cone_cached(m, n);
  std::vector<std::vector<typename X::Cube>> images(C.complex->dim_bound() + 1);
  for (int d = 0; d <= C.complex->dim_bound(); ++d)
    for (int k = 0; k < C.complex->count(d); ++k)
      images[d].push_back(x.act(c, cone_class_rep(C, CubeId{d, k})));
  for (int d = 1; d <= C.complex->dim_bound(); ++d)
    for (int k = 0; k < C.complex->count(d); ++k)
      for (int i = 1; i <= d; ++i)
        for (int e = 0; e <= 1; ++e) {
          const CubeRef& f = C.complex->face(CubeId{d, k}, i, e);
          auto lhs = x.act(images[d][k], BoxOp::face(d, i, e));
          auto rhs = x.act(images[f.target.dim][f.target.idx], f.op);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// All (m,n)-cones at level m+n of a complex.
template <CubicalLike X>
std::vector<typename X::Cube> enumerate_cones(const X& x, int m, int n) {
  std::vector<typename X::Cube> out;
  for (const auto& c : x.level(m + n))
    if (is_cone(x, c, m, n)) out.push_back(c);
  return out;
}

// --- Q and integral ---------------------------------------------------------

struct QObject {
  int n = 0;
  ConeKind kind;
  ComplexPtr complex;
  ComplexMap projection;  // box^n -> Q^n
};
QObject q_object(int n, ConeKind kind = kLeftPositive);
const QObject& q_object_cached(int n, ConeKind kind = kLeftPositive);
// Face-word representative of a class of Q^n (left positive).
BoxOp q_class_rep(int n, CubeId c);

// The box operator inducing the j-th coface / codegeneracy of Q^(.).
BoxOp q_coface_op(int n, int j, ConeKind kind = kLeftPositive);      // box^{n-1} -> box^n
BoxOp q_codegeneracy_op(int n, int j, ConeKind kind = kLeftPositive);  // box^n -> box^{n-1}

// The induced maps between the Q objects.
ComplexMap q_coface(int n, int j, ConeKind kind = kLeftPositive);
ComplexMap q_codegeneracy(int n, int j, ConeKind kind = kLeftPositive);
// Q of an arbitrary simplicial operator.
ComplexMap q_of_op(const SimpOp& w, ConeKind kind = kLeftPositive);

struct QFunctorResult {
  ComplexPtr complex;
  SimpPtr source;
  // per non-degenerate simplex of the source, the map Q^n -> QS
  std::vector<std::vector<ComplexMap>> glue;
};
QFunctorResult q_functor(SimpPtr S, ConeKind kind = kLeftPositive);
ComplexMap q_functor_map(const QFunctorResult& QA, const QFunctorResult& QB, const SimpMap& f,
                         ConeKind kind = kLeftPositive);

// integral(X)_n = (0,n)-cones of X, with simplicial operators from the
// cosimplicial structure; generic over the ambient complex.
template <CubicalLike X>
struct IntegralImpl {
  using Cube = typename X::Cube;
  const X* ambient;

  std::vector<Cube> level(int n) const { return enumerate_cones(*ambient, 0, n); }
  Cube act(const Cube& c, const SimpOp& w) const {
    // apply the letters right to left through the cosimplicial table:
    // face j acts by q_coface_op, degeneracy j by q_codegeneracy_op
    int n = ambient->dim(c);
    Cube cur = c;
    // right action: the leftmost letter acts first (faces, then degeneracies)
    for (int f : w.faces()) {
      cur = ambient->act(cur, q_coface_op(n, f));
      --n;
    }
    for (int d : w.degeneracies()) {
      cur = ambient->act(cur, q_codegeneracy_op(n + 1, d));
      ++n;
    }
    return cur;
  }
  int dim(const Cube& c) const { return ambient->dim(c); }
};

template <CubicalLike X>
Materialized<typename X::Cube> integral(const X& ambient, int bound) {
  IntegralImpl<X> impl{&ambient};
  return materialize_simplicial(impl, bound);
}

// --- counit -----------------------------------------------------------------

// A map from an explicit cubical complex into a generic one.
template <CubicalLike X>
struct GenMap {
  ComplexPtr dom;
  const X* cod;
  std::vector<std::vector<typename X::Cube>> assign;

  typename X::Cube apply(const CubeRef& r) const {
    return cod->act(assign[r.target.dim][r.target.idx], r.op);
  }
};

template <CubicalLike X>
bool gen_map_valid(const GenMap<X>& f) {
  const CubicalComplex& A = *f.dom;
  for (int n2 = 0; n2 <= A.dim_bound(); ++n2)
    for (int k = 0; k < A.count(n2); ++k) {
      CubeId x{n2, k};
      if (f.cod->dim(f.assign[n2][k]) != n2) return false;
      for (int i = 1; i <= n2; ++i)
        for (int e = 0; e <= 1; ++e) {
          auto lhs = f.cod->act(f.assign[n2][k], BoxOp::face(n2, i, e));
          auto rhs = f.apply(A.face(x, i, e));
          if (!(lhs == rhs)) return false;
        }
    }
  return true;
}

template <CubicalLike X>
bool gen_map_mono(const GenMap<X>& f) {
  for (size_t n = 0; n < f.assign.size(); ++n) {
    std::vector<typename X::Cube> seen;
    for (const auto& c : f.assign[n]) {
      if (!standard_form(*f.cod, c).second.is_identity()) return false;
      for (const auto& s : seen)
        if (s == c) return false;
      seen.push_back(c);
    }
  }
  return true;
}

struct CounitAnalysis {
  bool mono = false;
  // counts of non-degenerate cubes of the image per dimension
  std::vector<int> image_counts;
  bool image_is_cones = false;         // image = non-degenerate (0,n)-cones
  bool no_positive_connections = false;  // standard forms of image cubes
};

// Materialised integral plus the Q-side gluing; see cone.cpp for the
// explicit-complex instantiation used by tests and the CLI.
struct CounitResult {
  std::unique_ptr<ExplicitCubes> ambient;  // keeps the GenMap target alive
  QFunctorResult q_side;
  SimpPtr integral_complex;
  GenMap<ExplicitCubes> map;
  CounitAnalysis analysis;
};
CounitResult counit(ComplexPtr X, int bound);

// The same computation over a nerve.
struct NerveCounitResult {
  QFunctorResult q_side;
  SimpPtr integral_complex;
  GenMap<NerveComplex> map;
  CounitAnalysis analysis;
};
NerveCounitResult counit_nerve(const NerveComplex& N, int bound);

// --- F-bar ------------------------------------------------------------------

struct FBarResult {
  TriangulationResult TQ;  // triangulated Q-side
  SimpMap map;             // TQ(S) -> S
};
FBarResult f_bar(SimpPtr S);
// The component TQ^n -> Delta^n together with its naturality data.
FBarResult f_bar_component(int n);

}  // namespace cubik
