#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/fincat.hpp"

using namespace cubik;

TEST_CASE("constructors validate") {
  CHECK(validate(poset_category(0)).ok);
  CHECK(validate(poset_category(2)).ok);
  CHECK(validate(walking_isomorphism()).ok);
  CHECK(validate(parallel_pair()).ok);
  for (const FinCategory& C : category_corpus()) {
    INFO(C.name);
    CHECK(validate(C).ok);
    CHECK(C.num_objects <= 3);
    CHECK(C.morphisms.size() <= 6);
  }
}

TEST_CASE("invertibility") {
  FinCategory I = walking_isomorphism();
  CHECK(I.is_invertible(2));
  CHECK(I.is_invertible(0));
  FinCategory P = poset_category(1);
  for (size_t m = 0; m < P.morphisms.size(); ++m)
    CHECK(P.is_invertible(static_cast<int>(m)) ==
          (P.morphisms[m].src == P.morphisms[m].dst));
}

TEST_CASE("nerve levels of the interval") {
  NerveComplex N(poset_category(1));
  CHECK(N.level(0).size() == 2);
  CHECK(N.level(1).size() == 3);
  int nondeg = 0;
  for (const NerveCube& c : N.level(1))
    if (!is_degenerate_cube(N, c)) ++nondeg;
  CHECK(nondeg == 1);
  CHECK(N.level(2).size() == 6);  // monotone maps [1]^2 -> [1]
}

TEST_CASE("nerve of the terminal category is the point") {
  NerveComplex N(poset_category(0));
  for (int n = 0; n <= 3; ++n) CHECK(N.level(n).size() == 1);
  NerveTruncation T = truncate_nerve(N, 3);
  CHECK(T.complex->count(0) == 1);
  for (int n = 1; n <= 3; ++n) CHECK(T.complex->count(n) == 0);
}

TEST_CASE("nerve of [1] truncates to the interval up to level 2") {
  NerveComplex N(poset_category(1));
  NerveTruncation T = truncate_nerve(N, 2);
  CHECK(validate(*T.complex).ok);
  CHECK(find_isomorphism(T.complex, standard_cube(1)).has_value());
}

TEST_CASE("nerve of [1] deviates from the interval at level 3") {
  // Cat([1]^3,[1]) has 20 monotone maps, but only 17 are box-realizable; the
  // majority map and its two relatives are non-degenerate 3-cubes.
  NerveComplex N(poset_category(1));
  CHECK(N.level(3).size() == 20);
  CHECK(enumerate_hom(3, 1).size() == 17);
  NerveTruncation T = truncate_nerve(N, 3);
  CHECK(T.complex->count(3) == 3);
  CHECK(validate(*T.complex).ok);
}

namespace {

std::vector<BoxOp> single_generators(int dim, int max_dim) {
  std::vector<BoxOp> gens;
  for (int i = 1; i <= dim; ++i)
    for (int e = 0; e <= 1; ++e) gens.push_back(BoxOp::face(dim, i, e));
  if (dim + 1 <= max_dim) {
    for (int i = 1; i <= dim + 1; ++i) gens.push_back(BoxOp::degeneracy(dim + 1, i));
    for (int i = 1; i <= dim; ++i)
      for (int e = 0; e <= 1; ++e) gens.push_back(BoxOp::connection(dim + 1, i, e));
  }
  return gens;
}

}  // namespace

TEST_CASE("nerve satisfies the cubical identities on generator pairs") {
  for (const FinCategory& C : category_corpus()) {
    INFO(C.name);
    NerveComplex N(C);
    for (int n = 1; n <= 2; ++n) {
      const auto& lvl = N.level(n);
      size_t stride = std::max<size_t>(1, lvl.size() / 25);
      for (size_t at = 0; at < lvl.size(); at += stride) {
        const NerveCube& c = lvl[at];
        for (const BoxOp& g1 : single_generators(n, 3))
          for (const BoxOp& g2 : single_generators(g1.dom(), 3)) {
            NerveCube lhs = N.act(N.act(c, g1), g2);
            NerveCube rhs = N.act(c, compose(g1, g2));
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("tau1 of the interval is free on one arrow") {
  Tau1Result r = tau1(standard_cube(1));
  CHECK(r.presentation.generators.size() == 1);
  CHECK(r.presentation.relations.empty());
  REQUIRE(r.normalized.has_value());
  CHECK(r.normalized->num_objects == 2);
  CHECK(r.normalized->morphisms.size() == 3);
  CHECK(categories_isomorphic(*r.normalized, poset_category(1)));
}

TEST_CASE("tau1 of the square presents gf = qp") {
  Tau1Result r = tau1(standard_cube(2));
  CHECK(r.presentation.generators.size() == 4);
  CHECK(r.presentation.relations.size() == 1);
  REQUIRE(r.normalized.has_value());
  CHECK(r.normalized->num_objects == 4);
  CHECK(r.normalized->morphisms.size() == 9);  // commutative square
}

TEST_CASE("tau1 of K is the walking isomorphism") {
  Tau1Result r = tau1(shape_K());
  REQUIRE(r.normalized.has_value());
  CHECK(categories_isomorphic(*r.normalized, walking_isomorphism()));
}

TEST_CASE("small category enumeration") {
  std::vector<FinCategory> cats = enumerate_small_categories(2, 3);
  for (const FinCategory& C : cats) CHECK(validate(C).ok);
  // contains the terminal category, [1], and a discrete pair
  bool has_terminal = false, has_interval = false;
  for (const FinCategory& C : cats) {
    if (categories_isomorphic(C, poset_category(0))) has_terminal = true;
    if (categories_isomorphic(C, poset_category(1))) has_interval = true;
  }
  CHECK(has_terminal);
  CHECK(has_interval);
}
