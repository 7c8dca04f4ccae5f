#pragma once

// Finite categories as composition tables, poset and corpus constructors,
// nerves as implicit cubical complexes, and the fundamental category tau_1.

#include "cubik/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubik {

struct FinCategory {
  struct Morphism {
    int src = 0, dst = 0;
    std::string name;
  };
  std::string name;
  int num_objects = 0;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;           // per object, index into morphisms
  std::vector<std::vector<int>> comp;  // comp[g][f] = g after f, -1 if not composable

  int compose(int g, int f) const { return comp[g][f]; }
  bool composable(int g, int f) const { return morphisms[f].dst == morphisms[g].src; }
  std::vector<int> hom(int a, int b) const;
  bool is_invertible(int f) const;
};

ValidationReport validate(const FinCategory& C);

FinCategory poset_category(int n);  // the chain [n]
FinCategory walking_isomorphism();
FinCategory discrete_category(int n);
FinCategory parallel_pair();  // two objects, two parallel non-identity arrows
FinCategory monoid_category(const std::string& name, int order,
                            const std::vector<std::vector<int>>& table);  // element 0 is the unit

// Every category with at most `max_morphisms` morphisms in total (identities
// included) on a fixed object set, up to the generated table data.  Only
// intended for small bounds.
std::vector<FinCategory> enumerate_small_categories(int max_objects, int max_morphisms);

// A fixed corpus of test categories with <= 3 objects and <= 6 morphisms.
std::vector<FinCategory> category_corpus();

bool categories_isomorphic(const FinCategory& C, const FinCategory& D);

// --- nerve -----------------------------------------------------------

// A functor [1]^n -> C: objects on the vertices of the n-cube and morphisms
// on its edges, squares commuting.
struct NerveCube {
  int n = 0;
  std::vector<int> vert;  // size 2^n
  std::vector<int> edge;  // indexed by (direction d, vertex v with bit d-1 clear)
  auto operator<=>(const NerveCube&) const = default;
};

class NerveComplex {
 public:
  using Cube = NerveCube;

  explicit NerveComplex(FinCategory C) : cat_(std::move(C)) {}
  const FinCategory& category() const { return cat_; }

  const std::vector<Cube>& level(int n) const;
  Cube act(const Cube& c, const BoxOp& w) const;
  int dim(const Cube& c) const { return c.n; }

  Cube vertex(int obj) const;
  Cube from_morphism(int mor) const;
  // The composite morphism along any monotone path a -> b in the cube c.
  int path_morphism(const Cube& c, uint32_t a, uint32_t b) const;

  static int edge_slot(int n, int d, uint32_t v);

 private:
  FinCategory cat_;
  mutable std::vector<std::vector<Cube>> levels_;
  mutable std::vector<bool> computed_;
};

// Explicit truncation of a nerve: all cubes up to dimension D materialised
// with their standard forms.
struct NerveTruncation {
  ComplexPtr complex;
  std::vector<std::vector<NerveCube>> cube_of;  // [dim][idx] -> functor
  std::optional<CubeId> find(const NerveCube& c) const;
};
NerveTruncation truncate_nerve(const NerveComplex& N, int D);

// --- fundamental category ---------------------------------------------

struct CategoryPresentation {
  int num_objects = 0;
  std::vector<std::pair<int, int>> generators;  // (src, dst) of each edge generator
  std::vector<std::string> generator_names;
  // relation: two parallel generator paths (function order: path[0] applied last)
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
};

struct Tau1Result {
  CategoryPresentation presentation;
  std::optional<FinCategory> normalized;  // present when rewriting terminated
};

Tau1Result tau1(ComplexPtr X, long long step_budget = 20000);

// Functor data for tests: object map + morphism map.
struct Functor {
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};
bool is_functor(const FinCategory& C, const FinCategory& D, const Functor& F);

}  // namespace cubik
