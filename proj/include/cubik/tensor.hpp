#pragma once

// Geometric product of (marked) cubical complexes, pushout products, and
// dimension-truncated internal homs.

#include "cubik/complex.hpp"

#include <map>

namespace cubik {

// A cube of X (x) Y in canonical form: a pair of standard-form cubes with
// the sigma-identification resolved by pushing shared degeneracies into the
// left factor (the right operator does not factor through s_1).
struct PairCube {
  CubeRef left, right;
  int dim() const { return left.dim() + right.dim(); }
  auto operator<=>(const PairCube&) const = default;
};

PairCube canonical_pair(const CubicalComplex& X, const CubicalComplex& Y, CubeRef l, CubeRef r);
PairCube pair_act(const CubicalComplex& X, const CubicalComplex& Y, const PairCube& p,
                  const BoxOp& w);

struct ProductResult {
  ComplexPtr complex;
  ComplexPtr left_factor, right_factor;
  // non-degenerate cube (dim, idx) of the product <-> pair of factor ids
  std::vector<std::vector<std::pair<CubeId, CubeId>>> pairs;
  std::map<std::pair<CubeId, CubeId>, CubeId> pair_index;

  CubeId of_pair(CubeId x, CubeId y) const { return pair_index.at({x, y}); }
  CubeRef ref_of(const PairCube& p) const;  // standard form in the product
  PairCube pair_of(const CubeRef& r) const;
};

// Explicit geometric product; markings are propagated when both factors are
// marked (an edge pair is marked iff its 1-dimensional factor is).
ProductResult product(ComplexPtr X, ComplexPtr Y);
ProductResult marked_product(ComplexPtr X, ComplexPtr Y);

// Reference construction: the product built as a colimit of standard cubes
// over pairs of non-degenerate cubes, using the generic quotient engine.
ComplexPtr product_via_colimit(ComplexPtr X, ComplexPtr Y);

// Functoriality: (f (x) g) on the explicit products.
ComplexMap product_map(const ProductResult& dom, const ProductResult& cod, const ComplexMap& f,
                       const ComplexMap& g);

// Tensor a box operator with a complex on either side; maps between the
// standard-cube products.
ComplexMap op_tensor_complex(const BoxOp& w, ComplexPtr X);  // [] (x) X
ComplexMap complex_tensor_op(ComplexPtr X, const BoxOp& w);  // X (x) []

struct PushoutProductResult {
  PushoutResult corner;  // A(x)Y cup_{A(x)X} B(x)X
  ComplexMap map;        // corner -> B (x) Y
};
PushoutProductResult pushout_product(const ComplexMap& f, const ComplexMap& g);

// The canonical associator (X(x)Y)(x)Z -> X(x)(Y(x)Z); throws if it fails to
// be an isomorphism.
ComplexMap associator(ComplexPtr X, ComplexPtr Y, ComplexPtr Z);

// Internal homs, dimension-truncated: level n of hom_L(X,Y) is
// cSet(box^n (x) X, Y); level n of hom_R(X,Y) is cSet(X (x) box^n, Y).
enum class HomSide { L, R };

class HomComplex {
 public:
  struct Cube {
    int n = 0;
    std::vector<std::vector<CubeRef>> assign;  // a map out of the level's product
    auto operator<=>(const Cube&) const = default;
  };

  HomComplex(HomSide side, ComplexPtr X, ComplexPtr Y, int bound,
             long long budget = default_budget());

  int bound() const { return bound_; }
  const std::vector<Cube>& level(int n) const;
  Cube act(const Cube& c, const BoxOp& w) const;
  int dim(const Cube& c) const { return c.n; }
  ComplexMap as_map(const Cube& c) const;  // the underlying map product -> Y

  const ProductResult& level_product(int n) const;

 private:
  HomSide side_;
  ComplexPtr X_, Y_;
  int bound_;
  long long budget_;
  mutable std::vector<std::vector<Cube>> levels_;
  mutable std::vector<bool> computed_;
  mutable std::vector<ProductResult> products_;
};

}  // namespace cubik
