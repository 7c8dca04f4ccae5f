#pragma once

// Finite cubical sets stored by non-degenerate cubes with face tables valued
// in standard-form references, plus the presheaf machinery built on top of
// them: validation, standard shapes, quotients, pushouts, maps, enumeration.

#include "cubik/boxcat.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubik {

struct CubeId {
  int dim = -1;
  int idx = -1;
  auto operator<=>(const CubeId&) const = default;
  bool valid() const { return dim >= 0 && idx >= 0; }
};

// A cube in standard form: a non-degenerate cube acted on by a Box_- word.
struct CubeRef {
  CubeId target;
  BoxOp op;  // faces empty; dom = dimension of this cube, cod = target.dim

  int dim() const { return op.dom(); }
  auto operator<=>(const CubeRef&) const = default;
};

class CubicalComplex;
using ComplexPtr = std::shared_ptr<const CubicalComplex>;

struct ValidationReport {
  bool ok = true;
  std::string message;
};

class CubicalComplex {
 public:
  CubeId add_cube(int dim, std::string name = "");
  void set_face(CubeId x, int i, int eps, CubeRef f);

  int dim_bound() const { return static_cast<int>(cubes_.size()) - 1; }
  int count(int dim) const;
  int total_count() const;
  const std::string& name(CubeId c) const { return cubes_[c.dim][c.idx].name; }
  std::optional<CubeId> find_by_name(const std::string& name) const;
  const CubeRef& face(CubeId x, int i, int eps) const;

  // Right action of an arbitrary box operator, reduced to standard form.
  CubeRef act(const CubeRef& x, const BoxOp& w) const;
  CubeRef ref(CubeId x) const { return CubeRef{x, BoxOp::identity(x.dim)}; }

  // All cubes of dimension n (non-degenerate and degenerate), sorted.
  std::vector<CubeRef> level(int n) const;

  // Marking decoration.  Degenerate edges are implicitly marked; the set
  // stores marked non-degenerate edges.
  bool has_marking() const { return marked_; }
  void enable_marking() { marked_ = true; }
  void mark_edge(CubeId e);
  bool is_marked(const CubeRef& e) const;  // true for degenerate edges
  const std::set<CubeId>& marked_edges() const { return marks_; }

  struct Entry {
    std::string name;
    std::vector<CubeRef> faces;  // index 2*(i-1) + eps
  };
  const std::vector<std::vector<Entry>>& storage() const { return cubes_; }

 private:
  std::vector<std::vector<Entry>> cubes_;
  bool marked_ = false;
  std::set<CubeId> marks_;
};

ValidationReport validate(const CubicalComplex& X);

// --- maps -------------------------------------------------------------

struct ComplexMap {
  ComplexPtr dom;
  ComplexPtr cod;
  // assign[dim][idx] = image of the non-degenerate cube (dim, idx)
  std::vector<std::vector<CubeRef>> assign;

  const CubeRef& operator()(CubeId x) const { return assign[x.dim][x.idx]; }
  CubeRef apply(const CubeRef& x) const;
  friend bool operator==(const ComplexMap& a, const ComplexMap& b) {
    return a.assign == b.assign;
  }
};

ComplexMap identity_map(ComplexPtr X);
ComplexMap compose_maps(const ComplexMap& g, const ComplexMap& f);
ValidationReport validate_map(const ComplexMap& f);
bool is_mono(const ComplexMap& f);

// --- construction helpers ----------------------------------------------

struct UnionResult {
  ComplexPtr complex;
  ComplexMap inj_left, inj_right;
};
UnionResult disjoint_union(ComplexPtr X, ComplexPtr Y);

struct QuotientResult {
  ComplexPtr complex;
  ComplexMap projection;
};
// Coequalizer identifying each pair of parallel cubes.
QuotientResult quotient(ComplexPtr X, const std::vector<std::pair<CubeRef, CubeRef>>& gluings);

struct PushoutResult {
  ComplexPtr complex;
  ComplexMap from_left;   // X -> P
  ComplexMap from_right;  // Y -> P
};
PushoutResult pushout(const ComplexMap& f, const ComplexMap& g);  // f : A -> X, g : A -> Y

// The map P -> W induced by u : X -> W, v : Y -> W with u f = v g.
ComplexMap induced_from_pushout(const PushoutResult& p, const ComplexMap& u, const ComplexMap& v);

struct SubcomplexResult {
  ComplexPtr complex;
  ComplexMap inclusion;
};
SubcomplexResult subcomplex(ComplexPtr X, const std::set<CubeId>& generators);
SubcomplexResult image_subcomplex(const ComplexMap& f);

// --- standard shapes -----------------------------------------------------

ComplexPtr empty_complex();
ComplexPtr point();
ComplexPtr standard_cube(int n);
ComplexPtr boundary_cube(int n);
ComplexPtr open_box(int n, int i, int eps);
// Quotients with the critical edge collapsed (n >= 2).
QuotientResult inner_open_box(int n, int i, int eps);
QuotientResult inner_cube(int n, int i, int eps);
ComplexPtr shape_K();
ComplexPtr shape_K_prime();                   // K with the middle edge marked
ComplexPtr marked_open_box(int n, int i, int eps);
ComplexPtr three_out_of_four(int i, int eps);  // square with all faces but (i, eps) marked
ComplexPtr fully_marked_square();

// In standard_cube(n) and its relatives, non-degenerate cubes are the face
// words of [1]^n; this resolves a face-word operator to its cube.
CubeId cube_of_face_word(const CubicalComplex& shape, const BoxOp& w);

// The face word of a cube of a face shape, recovered from its pattern name.
BoxOp face_word_as_op(const CubicalComplex& shape, CubeId x);

// An arbitrary operator [1]^k -> [1]^n as a cube of a face shape: the face
// part resolves to a cube id, the Box_- part is the standard-form word.
CubeRef box_ref(const CubicalComplex& shape, const BoxOp& u);

// The inclusions distinguished by the shapes above.
ComplexMap boundary_inclusion(int n);                    // boundary -> cube
ComplexMap open_box_inclusion(int n, int i, int eps);    // open box -> cube

// --- enumeration ---------------------------------------------------------

// Enumeration budget; throws BudgetError when exceeded.
struct BudgetError : std::runtime_error {
  long long partial_count;
  explicit BudgetError(long long n)
      : std::runtime_error("enumeration budget exceeded"), partial_count(n) {}
};
long long default_budget();  // reads CUBIK_BUDGET, defaults to 1'000'000

// All maps A -> X, in deterministic (lexicographic-least candidate) order.
std::vector<ComplexMap> enumerate_maps(ComplexPtr A, ComplexPtr X,
                                       long long budget = default_budget());

// Maps with some non-degenerate cubes pinned to prescribed images.
std::vector<ComplexMap> enumerate_maps_pinned(ComplexPtr A, ComplexPtr X,
                                              const std::map<CubeId, CubeRef>& pins,
                                              long long budget = default_budget());

std::optional<ComplexMap> find_isomorphism(ComplexPtr X, ComplexPtr Y);

// Isomorphism X -> Y carrying subcomplex incl_X onto incl_Y (images agree).
std::optional<ComplexMap> find_isomorphism_of_pairs(ComplexPtr X, const ComplexMap& incl_X,
                                                    ComplexPtr Y, const ComplexMap& incl_Y);

// Involutions co, co-op, op applied to a whole complex.
ComplexPtr complex_involute(ComplexPtr X, Involution kind);
// The canonical relabelling x -> x^w on non-degenerate cubes.
CubeRef involute_ref(const CubicalComplex& Xw, const CubeRef& x, Involution kind);

// --- generic standard-form machinery (shared with implicit complexes) ----

// Complex-like: anything with levels of cubes, a right action, and ordered
// cube handles.  The explicit complex satisfies this with Cube = CubeRef.
template <typename X>
concept CubicalLike = requires(const X& x, const typename X::Cube& c, const BoxOp& w, int n) {
  { x.level(n) } -> std::convertible_to<std::vector<typename X::Cube>>;
  { x.act(c, w) } -> std::convertible_to<typename X::Cube>;
  { x.dim(c) } -> std::convertible_to<int>;
};

struct ExplicitCubes {
  using Cube = CubeRef;
  ComplexPtr complex;
  std::vector<Cube> level(int n) const { return complex->level(n); }
  Cube act(const Cube& c, const BoxOp& w) const { return complex->act(c, w); }
  int dim(const Cube& c) const { return c.dim(); }
};

// Standard form of a cube: the unique non-degenerate cube and Box_- word.
template <CubicalLike X>
std::pair<typename X::Cube, BoxOp> standard_form(const X& x, const typename X::Cube& c) {
  int n = x.dim(c);
  for (int i = 1; i <= n; ++i) {
    // c = z s_i iff z = c d_{i,0} satisfies z s_i = c
    auto z = x.act(c, BoxOp::face(n, i, 0));
    if (x.act(z, BoxOp::degeneracy(n, i)) == c) {
      auto [y, w] = standard_form(x, z);
      return {y, compose(w, BoxOp::degeneracy(n, i))};
    }
    for (int e = 0; e <= 1 && i <= n - 1; ++e) {
      auto ze = x.act(c, BoxOp::face(n, i, e));
      if (x.act(ze, BoxOp::connection(n, i, e)) == c) {
        auto [y, w] = standard_form(x, ze);
        return {y, compose(w, BoxOp::connection(n, i, e))};
      }
    }
  }
  return {c, BoxOp::identity(n)};
}

template <CubicalLike X>
bool is_degenerate_cube(const X& x, const typename X::Cube& c) {
  return !standard_form(x, c).second.is_identity();
}

}  // namespace cubik
