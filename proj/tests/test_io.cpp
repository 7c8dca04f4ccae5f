#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/io.hpp"
#include "cubik/cone.hpp"
#include "cubik/tensor.hpp"

using namespace cubik;

TEST_CASE("cub round trip is byte identical") {
  std::vector<std::pair<std::string, ComplexPtr>> cases{
      {"point", point()},
      {"interval", standard_cube(1)},
      {"square", standard_cube(2)},
      {"K", shape_K()},
      {"Kprime", shape_K_prime()},
      {"box", open_box(3, 2, 1)},
      {"inner", inner_open_box(2, 1, 0).complex},
      {"prod", product(shape_K(), standard_cube(1)).complex},
      {"cone", cone(standard_cube(1), kLeftPositive).complex},
  };
  for (auto& [name, X] : cases) {
    INFO(name);
    std::string s1 = serialize_cub(*X, name);
    std::string back_name;
    ComplexPtr Y = parse_cub(s1, &back_name);
    CHECK(back_name == name);
    std::string s2 = serialize_cub(*Y, back_name);
    CHECK(s1 == s2);
    CHECK(find_isomorphism(X, Y).has_value());
  }
}

TEST_CASE("sim round trip is byte identical") {
  std::vector<std::pair<std::string, SimpPtr>> cases{
      {"simplex2", standard_simplex(2)},
      {"J", shape_J()},
      {"horn", horn(2, 1)},
      {"tq", triangulate(standard_cube(2)).complex},
  };
  for (auto& [name, S] : cases) {
    INFO(name);
    std::string s1 = serialize_sim(*S, name);
    SimpPtr T = parse_sim(s1);
    std::string s2 = serialize_sim(*T, name);
    CHECK(s1 == s2);
    CHECK(find_simp_isomorphism(S, T).has_value());
  }
}

TEST_CASE("marks survive the round trip") {
  ComplexPtr Kp = shape_K_prime();
  ComplexPtr back = parse_cub(serialize_cub(*Kp, "kp"));
  CHECK(back->has_marking());
  CHECK(back->marked_edges().size() == 1);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_cub("cube a"), ParseError);
  CHECK_THROWS_AS(parse_cub("cube a 1\ncube a 1"), ParseError);
  CHECK_THROWS_AS(parse_cub("nonsense x"), ParseError);
  // a square whose faces do not close up is rejected by validation
  std::string bad =
      "complex bad dim 2\ncube v 0\ncube w 0\ncube e 1\ncube s 2\n"
      "face e 1 0 -> v [id0]\nface e 1 1 -> w [id0]\n"
      "face s 1 0 -> e [id1]\nface s 1 1 -> e [id1]\n"
      "face s 2 0 -> e [id1]\nface s 2 1 -> e [id1]\n";
  CHECK_THROWS_AS(parse_cub(bad), ParseError);
}

TEST_CASE("comments are accepted and ignored") {
  std::string s = serialize_cub(*standard_cube(1), "i", {"pair a b"});
  CHECK(s.find("# pair a b") != std::string::npos);
  ComplexPtr X = parse_cub(s);
  CHECK(X->count(1) == 1);
}
