#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubik/boxcat.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

using namespace cubik;

TEST_CASE("generator evaluation matches the coordinate formulas") {
  // g_{1,0} : [1]^2 -> [1] at (0,1) is max{0,1} = 1
  VertexMap g10 = evaluate(BoxOp::connection(2, 1, 0));
  CHECK(g10(0b10) == 1);
  CHECK(g10(0b01) == 1);
  CHECK(g10(0b00) == 0);
  CHECK(g10(0b11) == 1);

  VertexMap g11 = evaluate(BoxOp::connection(2, 1, 1));
  CHECK(g11(0b10) == 0);
  CHECK(g11(0b11) == 1);

  // d_{2,0} : [1] -> [1]^2 sends 1 to (1,0)
  VertexMap d20 = evaluate(BoxOp::face(2, 2, 0));
  CHECK(d20(1) == 0b01);
  CHECK(d20(0) == 0b00);

  CHECK(evaluate(BoxOp::identity(3)) == VertexMap::identity(3));
}

TEST_CASE("composition collapses to the identities table") {
  // s_1 d_{1,0} = id on [1]^0
  CHECK(compose(BoxOp::degeneracy(1, 1), BoxOp::face(1, 1, 0)) == BoxOp::identity(0));
  // g_{1,0} d_{1,1} = d_{1,1} s_1
  BoxOp lhs = compose(BoxOp::connection(2, 1, 0), BoxOp::face(2, 1, 1));
  BoxOp rhs = compose(BoxOp::face(1, 1, 1), BoxOp::degeneracy(1, 1));
  CHECK(lhs == rhs);
  CHECK(render(lhs) == "d1_1 s1");
  // s_1 s_1 on [1]^2 = s_1 s_2
  BoxOp ss = compose(BoxOp::degeneracy(1, 1), BoxOp::degeneracy(2, 1));
  CHECK(ss.degeneracies() == std::vector<int>{1, 2});
  // boundary case of the connection/face identity: g_{1,0} d_{2,1} = d_{1,1} s_1
  BoxOp b = compose(BoxOp::connection(2, 1, 0), BoxOp::face(2, 2, 1));
  CHECK(b == compose(BoxOp::face(1, 1, 1), BoxOp::degeneracy(1, 1)));
}

TEST_CASE("normalize") {
  std::vector<Generator> w1{{GenKind::Degeneracy, 1, 0, 1}, {GenKind::Face, 1, 1, 1}};
  CHECK(normalize(w1) == BoxOp::identity(0));

  std::vector<Generator> w2{{GenKind::Connection, 1, 0, 2}, {GenKind::Connection, 1, 0, 3}};
  BoxOp n2 = normalize(w2);
  CHECK(n2.connections() == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}});
  CHECK(n2.dom() == 3);
  CHECK(n2.cod() == 1);

  CHECK(normalize({}, 4) == BoxOp::identity(4));

  // idempotent on already-normal words
  CHECK(normalize(std::span<const Generator>(n2.letters()), 3) == n2);
}

TEST_CASE("composition dimension mismatch throws") {
  CHECK_THROWS_AS(compose(BoxOp::degeneracy(3, 1), BoxOp::degeneracy(3, 1)), DimensionError);
}

TEST_CASE("involutions on generators and involutivity") {
  CHECK(involute(BoxOp::face(2, 1, 0), Involution::Co) == BoxOp::face(2, 2, 0));
  CHECK(involute(BoxOp::connection(2, 1, 0), Involution::CoOp) == BoxOp::connection(2, 1, 1));
  for (const BoxOp& f : enumerate_hom(2, 1)) {
    for (auto kind : {Involution::Co, Involution::CoOp, Involution::Op})
      CHECK(involute(involute(f, kind), kind) == f);
  }
}

TEST_CASE("involutions are functorial on small hom-sets") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const BoxOp& f : enumerate_hom(a, b))
          for (const BoxOp& g : enumerate_hom(b, c))
            for (auto kind : {Involution::Co, Involution::CoOp, Involution::Op})
              CHECK(involute(compose(g, f), kind) ==
                    compose(involute(g, kind), involute(f, kind)));
}

TEST_CASE("classification") {
  Classification s1 = classify(BoxOp::degeneracy(1, 1));
  CHECK(s1.in_minus);
  CHECK_FALSE(s1.in_plus);
  CHECK(s1.in_box0);
  CHECK(s1.in_box1);
  CHECK(s1.in_box_empty);

  Classification g11 = classify(BoxOp::connection(2, 1, 1));
  CHECK(g11.in_minus);
  CHECK(g11.in_box1);
  CHECK_FALSE(g11.in_box0);
  CHECK_FALSE(g11.in_box_empty);

  Classification d = classify(BoxOp::face(1, 1, 0));
  CHECK(d.in_plus);
  CHECK(d.in_box0);
  CHECK(d.in_box1);
  CHECK(d.in_box_empty);
}

TEST_CASE("hom-set cardinalities") {
  CHECK(enumerate_hom(1, 1).size() == 3);
  CHECK(enumerate_hom(1, 2).size() == 8);
  // the diagonal [1] -> [1]^2 is monotone but not realizable: 3^2 - 1 = 8
}

TEST_CASE("normal form soundness and completeness on short words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    int d = static_cast<int>(rng() % 4);
    std::vector<Generator> word;
    int cur = d;
    int len = 1 + static_cast<int>(rng() % 5);
    bool ok = true;
    for (int k = 0; k < len; ++k) {
      std::vector<Generator> choices;
      for (int i = 1; i <= cur + 1 && cur + 1 <= 4; ++i)
        for (int e = 0; e <= 1; ++e) choices.push_back({GenKind::Face, i, e, cur + 1});
      for (int i = 1; i <= cur; ++i) choices.push_back({GenKind::Degeneracy, i, 0, cur});
      for (int i = 1; i + 1 <= cur; ++i)
        for (int e = 0; e <= 1; ++e) choices.push_back({GenKind::Connection, i, e, cur});
      if (choices.empty()) {
        ok = false;
        break;
      }
      Generator g = choices[rng() % choices.size()];
      word.insert(word.begin(), g);
      cur = g.cod();
    }
    if (!ok) continue;
    BoxOp nf = normalize(word, d);
    VertexMap direct = VertexMap::identity(d);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      direct = compose(evaluate(BoxOp::from_generator(*it)), direct);
    CHECK(evaluate(nf) == direct);
    CHECK(direct.is_monotone());
  }
}

TEST_CASE("distinct normal forms have distinct vertex maps (dims <= 3)") {
  for (int a = 0; a <= 3; ++a) {
    std::set<std::pair<int, std::vector<uint32_t>>> maps;
    size_t count = 0;
    for (const BoxOp& f : enumerate_hom_from(a, 3)) {
      maps.insert({f.cod(), evaluate(f).table});
      ++count;
    }
    CHECK(maps.size() == count);
  }
}

TEST_CASE("render and parse round-trip, parser normalizes") {
  for (const BoxOp& f : enumerate_hom(2, 2)) {
    CHECK(parse_boxop(render(f), f.dom()) == f);
  }
  // a non-normal word normalizes: s1 d1_0 = id0
  CHECK(parse_boxop("s1 d1_0", 0) == BoxOp::identity(0));
  CHECK(parse_boxop("id3", 3) == BoxOp::identity(3));
  CHECK_THROWS_AS(parse_boxop("q1_0", 1), ParseError);
}

TEST_CASE("tensor of operators") {
  // s_1 (x) id_1 : [1]^2 -> [1]^1 equals s_1 at ambient 2
  CHECK(tensor_ops(BoxOp::degeneracy(1, 1), BoxOp::identity(1)) == BoxOp::degeneracy(2, 1));
  // id_1 (x) s_1 = s_2 at ambient 2
  CHECK(tensor_ops(BoxOp::identity(1), BoxOp::degeneracy(1, 1)) == BoxOp::degeneracy(2, 2));
  // evaluation is the blockwise product
  BoxOp t = tensor_ops(BoxOp::connection(2, 1, 0), BoxOp::face(1, 1, 1));
  VertexMap v = evaluate(t);
  CHECK(v.dom == 2);
  CHECK(v.cod == 2);
  CHECK(v(0b11) == 0b11);
  CHECK(v(0b01) == 0b11);
}

TEST_CASE("normalization is sound on all words of length <= 4 from dims <= 3") {
  // exhaustive: normalize agrees with the vertex-function composite, and
  // words with equal vertex maps share a normal form
  std::map<std::pair<int, std::pair<int, std::vector<uint32_t>>>, BoxOp> classes;
  long long words = 0;
  std::function<void(int, std::vector<Generator>&, int)> rec =
      [&](int dom, std::vector<Generator>& word, int budget) {
        if (!word.empty()) {
          BoxOp nf = normalize(word, dom);
          VertexMap direct = VertexMap::identity(dom);
          for (auto it = word.rbegin(); it != word.rend(); ++it)
            direct = compose(evaluate(BoxOp::from_generator(*it)), direct);
          REQUIRE(evaluate(nf) == direct);
          auto key = std::make_pair(dom, std::make_pair(nf.cod(), direct.table));
          auto [it, inserted] = classes.emplace(key, nf);
          REQUIRE(it->second == nf);
          ++words;
        }
        if (budget == 0) return;
        int cur = word.empty() ? dom : word.front().cod();
        std::vector<Generator> gens;
        if (cur + 1 <= 4)
          for (int i = 1; i <= cur + 1; ++i)
            for (int e = 0; e <= 1; ++e) gens.push_back({GenKind::Face, i, e, cur + 1});
        for (int i = 1; i <= cur; ++i) gens.push_back({GenKind::Degeneracy, i, 0, cur});
        for (int i = 1; i + 1 <= cur; ++i)
          for (int e = 0; e <= 1; ++e) gens.push_back({GenKind::Connection, i, e, cur});
        for (const Generator& g : gens) {
          word.insert(word.begin(), g);
          rec(dom, word, budget - 1);
          word.erase(word.begin());
        }
      };
  for (int dom = 0; dom <= 3; ++dom) {
    std::vector<Generator> word;
    rec(dom, word, 4);
  }
  CHECK(words == 42268);
}
