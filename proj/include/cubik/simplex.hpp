#pragma once

// Finite simplicial sets with their own operator normal form (descending
// face word, ascending degeneracy word, 0-based indices), the triangulation
// functor T, its truncated right adjoint U, the comparison maps F/G, and
// simplicial mapping spaces.

#include "cubik/complex.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubik {

// --- simplicial operator calculus ---------------------------------------

class SimpOp {
 public:
  SimpOp() = default;
  static SimpOp identity(int n);
  static SimpOp face(int n, int i);        // delta_i : [n-1] -> [n], 0 <= i <= n
  static SimpOp degeneracy(int n, int i);  // sigma_i : [n+1] -> [n], 0 <= i <= n; the
                                           // argument n is the codomain dimension

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  bool is_identity() const { return faces_.empty() && degens_.empty(); }
  bool is_minus() const { return faces_.empty(); }
  const std::vector<int>& faces() const { return faces_; }
  const std::vector<int>& degeneracies() const { return degens_; }

  SimpOp without_first_face() const;

  struct Raw {
    int dom, cod;
    std::vector<int> faces, degens;
  };
  static SimpOp from_raw(Raw r);

  auto operator<=>(const SimpOp&) const = default;

 private:
  friend SimpOp compose(const SimpOp&, const SimpOp&);
  int dom_ = 0, cod_ = 0;
  std::vector<int> faces_;   // strictly decreasing
  std::vector<int> degens_;  // strictly increasing
};

SimpOp compose(const SimpOp& g, const SimpOp& f);
std::vector<int> evaluate_simp(const SimpOp& f);  // the monotone map [dom] -> [cod]
SimpOp simp_op_from_function(const std::vector<int>& values, int cod);  // monotone
std::string render(const SimpOp& f);
SimpOp parse_simpop(const std::string& text, int dom);
std::vector<SimpOp> enumerate_simp_ops(int dom, int cod);
std::vector<SimpOp> enumerate_simp_minus_ops(int dom, int cod);

// --- simplicial complexes ------------------------------------------------

struct SimpId {
  int dim = -1;
  int idx = -1;
  auto operator<=>(const SimpId&) const = default;
  bool valid() const { return dim >= 0 && idx >= 0; }
};

struct SimpRef {
  SimpId target;
  SimpOp op;  // faces empty
  int dim() const { return op.dom(); }
  auto operator<=>(const SimpRef&) const = default;
};

class SimplicialComplex;
using SimpPtr = std::shared_ptr<const SimplicialComplex>;

class SimplicialComplex {
 public:
  SimpId add_simplex(int dim, std::string name = "");
  void set_face(SimpId x, int i, SimpRef f);  // 0 <= i <= dim

  int dim_bound() const { return static_cast<int>(simps_.size()) - 1; }
  int count(int dim) const;
  int total_count() const;
  const std::string& name(SimpId s) const { return simps_[s.dim][s.idx].name; }
  std::optional<SimpId> find_by_name(const std::string& name) const;
  const SimpRef& face(SimpId x, int i) const;

  SimpRef act(const SimpRef& x, const SimpOp& w) const;
  SimpRef ref(SimpId x) const { return SimpRef{x, SimpOp::identity(x.dim)}; }
  std::vector<SimpRef> level(int n) const;

  struct Entry {
    std::string name;
    std::vector<SimpRef> faces;
  };
  const std::vector<std::vector<Entry>>& storage() const { return simps_; }

 private:
  std::vector<std::vector<Entry>> simps_;
};

ValidationReport validate(const SimplicialComplex& S);

struct SimpMap {
  SimpPtr dom;
  SimpPtr cod;
  std::vector<std::vector<SimpRef>> assign;
  const SimpRef& operator()(SimpId x) const { return assign[x.dim][x.idx]; }
  SimpRef apply(const SimpRef& x) const;
  friend bool operator==(const SimpMap& a, const SimpMap& b) { return a.assign == b.assign; }
};

SimpMap simp_identity_map(SimpPtr S);
SimpMap simp_compose_maps(const SimpMap& g, const SimpMap& f);
ValidationReport validate_map(const SimpMap& f);
bool simp_is_mono(const SimpMap& f);

struct SimpUnionResult {
  SimpPtr complex;
  SimpMap inj_left, inj_right;
};
SimpUnionResult simp_disjoint_union(SimpPtr X, SimpPtr Y);

struct SimpQuotientResult {
  SimpPtr complex;
  SimpMap projection;
};
SimpQuotientResult simp_quotient(SimpPtr X,
                                 const std::vector<std::pair<SimpRef, SimpRef>>& gluings);

struct SimpSubcomplexResult {
  SimpPtr complex;
  SimpMap inclusion;
};
SimpSubcomplexResult simp_subcomplex(SimpPtr X, const std::set<SimpId>& generators);
SimpSubcomplexResult simp_image_subcomplex(const SimpMap& f);

std::vector<SimpMap> enumerate_simp_maps(SimpPtr A, SimpPtr X,
                                         long long budget = default_budget());
std::vector<SimpMap> enumerate_simp_maps_pinned(SimpPtr A, SimpPtr X,
                                                const std::map<SimpId, SimpRef>& pins,
                                                long long budget = default_budget());
std::optional<SimpMap> find_simp_isomorphism(SimpPtr X, SimpPtr Y);

SimpPtr simp_involute(SimpPtr S);  // the op involution (reverses vertex order)

// --- standard simplicial shapes ------------------------------------------

SimpPtr standard_simplex(int n);
SimpPtr boundary_simplex(int n);
SimpPtr horn(int n, int i);
SimpPtr shape_J();  // the walking-isomorphism complex built from two triangles
SimpId simplex_of_vertex_set(const SimplicialComplex& shape, const std::vector<int>& verts);
SimpMap horn_inclusion(int n, int i);

// Posets and their nerves; `leq` is the order relation on {0..size-1}.
struct Poset {
  int size = 0;
  std::function<bool(int, int)> leq;
};
Poset cube_poset(int n);          // [1]^n, elements are bitmasks
Poset chain_poset(int n);         // [n]
Poset product_poset(const Poset& A, const Poset& B);
SimpPtr nerve_of_poset(const Poset& P);
// Non-degenerate simplices of nerve_of_poset are strictly increasing chains;
// this resolves one by its vertex chain.
SimpId chain_simplex(const SimplicialComplex& nerve, const std::vector<int>& chain);
std::vector<int> chain_of_simplex(const SimplicialComplex& nerve, SimpId s);
// The simplicial map induced by a monotone map of posets.
SimpMap nerve_map(SimpPtr domN, SimpPtr codN, const std::function<int(int)>& f);

// Cartesian product of simplicial sets (explicit, truncated at the smaller
// dimension sum).
struct SimpProductResult {
  SimpPtr complex;
  std::vector<std::vector<std::pair<SimpRef, SimpRef>>> pairs;  // per non-deg simplex
};
SimpProductResult simp_product(SimpPtr X, SimpPtr Y, int bound);

// --- triangulation --------------------------------------------------------

struct TriangulationResult {
  SimpPtr complex;
  ComplexPtr source;
  // per non-degenerate cube x of the source, the composite N([1]^m) -> TX
  std::vector<std::vector<SimpMap>> glue;
  std::vector<std::vector<SimpPtr>> cube_nerves;
};
TriangulationResult triangulate(ComplexPtr X);
SimpMap triangulate_map(const TriangulationResult& TX, const TriangulationResult& TY,
                        const ComplexMap& f);

// --- truncated right adjoint U -------------------------------------------

class UComplex {
 public:
  struct Cube {
    int n = 0;
    std::vector<std::vector<SimpRef>> assign;  // a map (Delta^1)^n -> S
    auto operator<=>(const Cube&) const = default;
  };
  UComplex(SimpPtr S, int bound, long long budget = default_budget());
  int bound() const { return bound_; }
  const std::vector<Cube>& level(int n) const;
  Cube act(const Cube& c, const BoxOp& w) const;
  int dim(const Cube& c) const { return c.n; }
  SimpPtr level_domain(int n) const;
  SimpMap as_map(const Cube& c) const;

 private:
  SimpPtr S_;
  int bound_;
  long long budget_;
  mutable std::vector<std::vector<Cube>> levels_;
  mutable std::vector<bool> computed_;
  mutable std::vector<SimpPtr> domains_;
};

// --- the comparison maps F and G -----------------------------------------

// G : [n] -> [1]^n and F : [1]^n -> [n]; F is left adjoint to G.
uint32_t map_G(int n, int a);
int map_F(int n, uint32_t b);

// --- simplicial mapping spaces --------------------------------------------

enum class SimpHomKind { TwoSided, Left, Right };
SimpPtr simplicial_hom(SimpHomKind kind, SimpPtr S, SimpId x0, SimpId x1, int bound);

// --- generic materialisation ----------------------------------------------

template <typename X>
concept SimplicialLike = requires(const X& x, const typename X::Cube& c, const SimpOp& w, int n) {
  { x.level(n) } -> std::convertible_to<std::vector<typename X::Cube>>;
  { x.act(c, w) } -> std::convertible_to<typename X::Cube>;
  { x.dim(c) } -> std::convertible_to<int>;
};

template <SimplicialLike X>
std::pair<typename X::Cube, SimpOp> standard_form_simp(const X& x, const typename X::Cube& c) {
  int n = x.dim(c);
  for (int i = 0; i <= n - 1; ++i) {
    auto z = x.act(c, SimpOp::face(n, i));
    if (x.act(z, SimpOp::degeneracy(n - 1, i)) == c) {
      auto [y, w] = standard_form_simp(x, z);
      return {y, compose(w, SimpOp::degeneracy(n - 1, i))};
    }
  }
  return {c, SimpOp::identity(n)};
}

template <typename Cube>
struct Materialized {
  SimpPtr complex;
  std::vector<std::vector<Cube>> cube_of;
  std::optional<SimpId> find(const Cube& c, int dim) const {
    for (int k = 0; k < static_cast<int>(cube_of[dim].size()); ++k)
      if (cube_of[dim][k] == c) return SimpId{dim, k};
    return std::nullopt;
  }
};

template <SimplicialLike X>
Materialized<typename X::Cube> materialize_simplicial(const X& I, int bound) {
  Materialized<typename X::Cube> t;
  auto S = std::make_shared<SimplicialComplex>();
  t.cube_of.resize(bound + 1);
  for (int n = 0; n <= bound; ++n)
    for (const auto& c : I.level(n)) {
      auto [base, word] = standard_form_simp(I, c);
      if (!word.is_identity()) continue;
      t.cube_of[n].push_back(c);
      S->add_simplex(n);
    }
  for (int n = 1; n <= bound; ++n)
    for (int k = 0; k < static_cast<int>(t.cube_of[n].size()); ++k)
      for (int i = 0; i <= n; ++i) {
        auto f = I.act(t.cube_of[n][k], SimpOp::face(n, i));
        auto [base, word] = standard_form_simp(I, f);
        auto id = t.find(base, I.dim(base));
        if (!id) throw std::logic_error("materialize: missing face target");
        S->set_face(SimpId{n, k}, i, SimpRef{*id, word});
      }
  t.complex = S;
  return t;
}

}  // namespace cubik
