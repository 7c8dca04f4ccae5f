#include "cubik/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace cubik {

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(morphisms.size()); ++m)
    if (morphisms[m].src == a && morphisms[m].dst == b) out.push_back(m);
  return out;
}

bool FinCategory::is_invertible(int f) const {
  int a = morphisms[f].src, b = morphisms[f].dst;
  for (int g : hom(b, a))
    if (compose(g, f) == identity[a] && compose(f, g) == identity[b]) return true;
  return false;
}

ValidationReport validate(const FinCategory& C) {
  ValidationReport r;
  auto fail = [&](const std::string& m) {
    r.ok = false;
    r.message = m;
    return r;
  };
  int M = static_cast<int>(C.morphisms.size());
  if (static_cast<int>(C.identity.size()) != C.num_objects) return fail("identity table size");
  for (int o = 0; o < C.num_objects; ++o) {
    int i = C.identity[o];
    if (C.morphisms[i].src != o || C.morphisms[i].dst != o) return fail("identity endpoints");
  }
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      bool c = C.composable(g, f);
      int gf = C.comp[g][f];
      if (!c && gf != -1) return fail("composite defined for non-composable pair");
      if (c) {
        if (gf < 0 || gf >= M) return fail("missing composite");
        if (C.morphisms[gf].src != C.morphisms[f].src ||
            C.morphisms[gf].dst != C.morphisms[g].dst)
          return fail("composite endpoints");
      }
    }
  for (int f = 0; f < M; ++f) {
    if (C.comp[C.identity[C.morphisms[f].dst]][f] != f) return fail("left unit law");
    if (C.comp[f][C.identity[C.morphisms[f].src]] != f) return fail("right unit law");
  }
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g)
      for (int f = 0; f < M; ++f)
        if (C.composable(g, f) && C.composable(h, g))
          if (C.comp[h][C.comp[g][f]] != C.comp[C.comp[h][g]][f]) return fail("associativity");
  return r;
}

namespace {

FinCategory finish_table(FinCategory C) {
  int M = static_cast<int>(C.morphisms.size());
  if (C.comp.empty()) C.comp.assign(M, std::vector<int>(M, -1));
  return C;
}

}  // namespace

FinCategory poset_category(int n) {
  FinCategory C;
  C.name = "poset:" + std::to_string(n);
  C.num_objects = n + 1;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      idx[{i, j}] = static_cast<int>(C.morphisms.size());
      C.morphisms.push_back({i, j, std::to_string(i) + "->" + std::to_string(j)});
    }
  for (int i = 0; i <= n; ++i) C.identity.push_back(idx[{i, i}]);
  C = finish_table(std::move(C));
  for (auto& [ab, f] : idx)
    for (auto& [bc, g] : idx)
      if (ab.second == bc.first) C.comp[g][f] = idx[{ab.first, bc.second}];
  return C;
}

FinCategory walking_isomorphism() {
  FinCategory C;
  C.name = "walking-iso";
  C.num_objects = 2;
  C.morphisms = {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "u"}, {1, 0, "v"}};
  C.identity = {0, 1};
  C = finish_table(std::move(C));
  C.comp[0][0] = 0;
  C.comp[1][1] = 1;
  C.comp[0][3] = 3;  // id0 . v = v
  C.comp[1][2] = 2;
  C.comp[2][0] = 2;
  C.comp[3][1] = 3;
  C.comp[3][2] = 0;  // v u = id0
  C.comp[2][3] = 1;  // u v = id1
  return C;
}

FinCategory discrete_category(int n) {
  FinCategory C;
  C.name = "discrete:" + std::to_string(n);
  C.num_objects = n;
  for (int i = 0; i < n; ++i) {
    C.identity.push_back(i);
    C.morphisms.push_back({i, i, "id" + std::to_string(i)});
  }
  C = finish_table(std::move(C));
  for (int i = 0; i < n; ++i) C.comp[i][i] = i;
  return C;
}

FinCategory parallel_pair() {
  FinCategory C;
  C.name = "parallel-pair";
  C.num_objects = 2;
  C.morphisms = {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "f"}, {0, 1, "g"}};
  C.identity = {0, 1};
  C = finish_table(std::move(C));
  C.comp[0][0] = 0;
  C.comp[1][1] = 1;
  C.comp[1][2] = 2;
  C.comp[2][0] = 2;
  C.comp[1][3] = 3;
  C.comp[3][0] = 3;
  return C;
}

FinCategory monoid_category(const std::string& name, int order,
                            const std::vector<std::vector<int>>& table) {
  FinCategory C;
  C.name = name;
  C.num_objects = 1;
  for (int i = 0; i < order; ++i) C.morphisms.push_back({0, 0, "m" + std::to_string(i)});
  C.identity = {0};
  C.comp = table;
  ValidationReport r = validate(C);
  if (!r.ok) throw std::logic_error("monoid table invalid: " + r.message);
  return C;
}

std::vector<FinCategory> enumerate_small_categories(int max_objects, int max_morphisms) {
  std::vector<FinCategory> out;
  for (int o = 1; o <= max_objects; ++o) {
    for (int extra = 0; extra + o <= max_morphisms; ++extra) {
      // choose sources and targets of the non-identity morphisms
      std::vector<std::pair<int, int>> st(extra);
      std::function<void(int)> pick = [&](int k) {
        if (k == extra) {
          FinCategory C;
          C.num_objects = o;
          for (int i = 0; i < o; ++i) {
            C.identity.push_back(i);
            C.morphisms.push_back({i, i, "id" + std::to_string(i)});
          }
          for (int j = 0; j < extra; ++j)
            C.morphisms.push_back({st[j].first, st[j].second, "a" + std::to_string(j)});
          int M = o + extra;
          C.comp.assign(M, std::vector<int>(M, -1));
          for (int f = 0; f < M; ++f) {
            C.comp[C.identity[C.morphisms[f].dst]][f] = f;
            C.comp[f][C.identity[C.morphisms[f].src]] = f;
          }
          // fill composites of non-identity composable pairs
          std::vector<std::pair<int, int>> unknown;
          for (int g = o; g < M; ++g)
            for (int f = o; f < M; ++f)
              if (C.composable(g, f)) unknown.emplace_back(g, f);
          std::function<void(size_t)> fill = [&](size_t u) {
            if (u == unknown.size()) {
              if (validate(C).ok) {
                bool dup = false;
                for (const FinCategory& D : out)
                  if (categories_isomorphic(C, D)) {
                    dup = true;
                    break;
                  }
                if (!dup) {
                  C.name = "enum:" + std::to_string(out.size());
                  out.push_back(C);
                }
              }
              return;
            }
            auto [g, f] = unknown[u];
            for (int h = 0; h < M; ++h) {
              if (C.morphisms[h].src != C.morphisms[f].src ||
                  C.morphisms[h].dst != C.morphisms[g].dst)
                continue;
              C.comp[g][f] = h;
              fill(u + 1);
            }
            C.comp[g][f] = -1;
          };
          fill(0);
          return;
        }
        for (int s = 0; s < o; ++s)
          for (int d = 0; d < o; ++d) {
            // avoid relabellings of the chosen arrows: enforce lexicographic order
            if (k > 0 && std::make_pair(s, d) < st[k - 1]) continue;
            st[k] = {s, d};
            pick(k + 1);
          }
      };
      pick(0);
    }
  }
  return out;
}

std::vector<FinCategory> category_corpus() {
  std::vector<FinCategory> out;
  out.push_back(poset_category(0));
  out.push_back(poset_category(1));
  out.push_back(poset_category(2));  // 3 objects, 6 morphisms
  out.push_back(walking_isomorphism());
  out.push_back(parallel_pair());
  out.push_back(discrete_category(3));
  {
    FinCategory C;  // span: a <- c -> b
    C.name = "span";
    C.num_objects = 3;
    C.morphisms = {{0, 0, "id_a"}, {1, 1, "id_b"}, {2, 2, "id_c"}, {2, 0, "l"}, {2, 1, "r"}};
    C.identity = {0, 1, 2};
    C = finish_table(std::move(C));
    for (int f = 0; f < 5; ++f) {
      C.comp[C.identity[C.morphisms[f].dst]][f] = f;
      C.comp[f][C.identity[C.morphisms[f].src]] = f;
    }
    out.push_back(C);
  }
  {
    FinCategory C;  // cospan: a -> c <- b
    C.name = "cospan";
    C.num_objects = 3;
    C.morphisms = {{0, 0, "id_a"}, {1, 1, "id_b"}, {2, 2, "id_c"}, {0, 2, "l"}, {1, 2, "r"}};
    C.identity = {0, 1, 2};
    C = finish_table(std::move(C));
    for (int f = 0; f < 5; ++f) {
      C.comp[C.identity[C.morphisms[f].dst]][f] = f;
      C.comp[f][C.identity[C.morphisms[f].src]] = f;
    }
    out.push_back(C);
  }
  // monoids, as one-object categories
  auto cyclic = [](int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
  };
  out.push_back(monoid_category("Z/2", 2, cyclic(2)));
  out.push_back(monoid_category("Z/3", 3, cyclic(3)));
  out.push_back(monoid_category("Z/6", 6, cyclic(6)));
  {
    // symmetric group S3: elements id, r, r2, s, sr, sr2
    auto mul = [](int a, int b) {
      auto perm = [](int x) {
        // encode as permutations of {0,1,2}
        static const int P[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
        (void)x;
        return P;
      };
      const auto P = perm(0);
      int c[3];
      for (int i = 0; i < 3; ++i) c[i] = P[a][P[b][i]];
      for (int k = 0; k < 6; ++k)
        if (c[0] == P[k][0] && c[1] == P[k][1] && c[2] == P[k][2]) return k;
      return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) t[a][b] = mul(a, b);
    out.push_back(monoid_category("S3", 6, t));
  }
  {
    // idempotent 2-element monoid {1, a}, aa = a
    std::vector<std::vector<int>> t = {{0, 1}, {1, 1}};
    out.push_back(monoid_category("idem2", 2, t));
  }
  {
    // 3-element monoid with absorbing element: aa = ab = ba = bb = b
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    out.push_back(monoid_category("nil3", 3, t));
  }
  {
    // two objects, an idempotent loop and parallel arrows absorbing it
    FinCategory C;
    C.name = "loop-parallel";
    C.num_objects = 2;
    C.morphisms = {{0, 0, "id_a"}, {1, 1, "id_b"}, {0, 0, "l"},
                   {0, 1, "f"},    {0, 1, "g"},    {0, 1, "h"}};
    C.identity = {0, 1};
    C = finish_table(std::move(C));
    for (int f = 0; f < 6; ++f) {
      C.comp[C.identity[C.morphisms[f].dst]][f] = f;
      C.comp[f][C.identity[C.morphisms[f].src]] = f;
    }
    C.comp[2][2] = 2;  // l l = l
    C.comp[3][2] = 3;  // f l = f
    C.comp[4][2] = 4;
    C.comp[5][2] = 5;
    ValidationReport r = validate(C);
    if (!r.ok) throw std::logic_error("corpus category invalid: " + r.message);
    out.push_back(C);
  }
  return out;
}

bool categories_isomorphic(const FinCategory& C, const FinCategory& D) {
  if (C.num_objects != D.num_objects || C.morphisms.size() != D.morphisms.size()) return false;
  int O = C.num_objects;
  std::vector<int> obj(O, -1);
  std::vector<bool> used(O, false);
  int M = static_cast<int>(C.morphisms.size());

  std::function<bool()> match_morphisms = [&]() {
    std::vector<int> mor(M, -1);
    std::vector<bool> mused(M, false);
    std::function<bool(int)> rec = [&](int f) {
      if (f == M) {
        for (int g = 0; g < M; ++g)
          for (int h = 0; h < M; ++h) {
            int gh = C.comp[g][h];
            int img = (gh == -1) ? -1 : mor[gh];
            int dgh = (D.comp[mor[g]][mor[h]]);
            if (img != dgh) return false;
          }
        return true;
      }
      for (int d = 0; d < M; ++d) {
        if (mused[d]) continue;
        if (D.morphisms[d].src != obj[C.morphisms[f].src] ||
            D.morphisms[d].dst != obj[C.morphisms[f].dst])
          continue;
        bool f_is_id = false, d_is_id = false;
        for (int o = 0; o < O; ++o) {
          if (C.identity[o] == f) f_is_id = true;
          if (D.identity[obj[o]] == d) d_is_id = true;
        }
        if (f_is_id != d_is_id) continue;
        mor[f] = d;
        mused[d] = true;
        if (rec(f + 1)) return true;
        mused[d] = false;
      }
      return false;
    };
    return rec(0);
  };

  std::function<bool(int)> rec_obj = [&](int o) {
    if (o == O) return match_morphisms();
    for (int d = 0; d < O; ++d) {
      if (used[d]) continue;
      obj[o] = d;
      used[d] = true;
      if (rec_obj(o + 1)) return true;
      used[d] = false;
    }
    return false;
  };
  return rec_obj(0);
}

// --- nerve -----------------------------------------------------------

int NerveComplex::edge_slot(int n, int d, uint32_t v) {
  uint32_t low = v & ((1u << (d - 1)) - 1);
  uint32_t high = (v >> d) << (d - 1);
  uint32_t compressed = low | high;
  return (d - 1) * (1 << (n - 1)) + static_cast<int>(compressed);
}

NerveCube NerveComplex::vertex(int obj) const { return NerveCube{0, {obj}, {}}; }

NerveCube NerveComplex::from_morphism(int mor) const {
  NerveCube c;
  c.n = 1;
  c.vert = {cat_.morphisms[mor].src, cat_.morphisms[mor].dst};
  c.edge = {mor};
  return c;
}

int NerveComplex::path_morphism(const Cube& c, uint32_t a, uint32_t b) const {
  assert((a & b) == a);  // a <= b in the product order
  int acc = cat_.identity[c.vert[a]];
  uint32_t cur = a;
  for (int d = 1; d <= c.n; ++d) {
    uint32_t bit = 1u << (d - 1);
    if ((b & bit) && !(cur & bit)) {
      int e = c.edge[edge_slot(c.n, d, cur)];
      acc = cat_.compose(e, acc);
      cur |= bit;
    }
  }
  return acc;
}

const std::vector<NerveCube>& NerveComplex::level(int n) const {
  if (static_cast<int>(computed_.size()) > n && computed_[n]) return levels_[n];
  if (static_cast<int>(levels_.size()) <= n) {
    levels_.resize(n + 1);
    computed_.resize(n + 1, false);
  }
  std::vector<Cube>& out = levels_[n];
  if (n == 0) {
    for (int o = 0; o < cat_.num_objects; ++o) out.push_back(vertex(o));
  } else {
    const auto& below = level(n - 1);
    int half = 1 << (n - 1);
    for (const Cube& x0 : below)
      for (const Cube& x1 : below) {
        std::vector<int> alpha(half, -1);
        std::function<void(int)> rec = [&](int u) {
          if (u == half) {
            Cube z;
            z.n = n;
            z.vert.resize(1 << n);
            z.edge.resize(n * half);
            for (uint32_t v = 0; v < (1u << n); ++v) {
              bool top = (v >> (n - 1)) & 1;
              uint32_t w = v & ~(1u << (n - 1));
              z.vert[v] = (top ? x1 : x0).vert[w];
            }
            for (int d = 1; d <= n - 1; ++d)
              for (uint32_t v = 0; v < (1u << n); ++v) {
                if ((v >> (d - 1)) & 1) continue;
                bool top = (v >> (n - 1)) & 1;
                uint32_t w = v & ~(1u << (n - 1));
                z.edge[edge_slot(n, d, v)] =
                    (top ? x1 : x0).edge[edge_slot(n - 1, d, w)];
              }
            for (uint32_t v = 0; v < (1u << (n - 1)); ++v)
              z.edge[edge_slot(n, n, v)] = alpha[v];
            out.push_back(std::move(z));
            return;
          }
          for (int m = 0; m < static_cast<int>(cat_.morphisms.size()); ++m) {
            if (cat_.morphisms[m].src != x0.vert[u] || cat_.morphisms[m].dst != x1.vert[u])
              continue;
            bool ok = true;
            for (int d = 1; d <= n - 1 && ok; ++d) {
              uint32_t bit = 1u << (d - 1);
              if (!(u & bit)) continue;
              uint32_t w = u & ~bit;
              int e0 = x0.edge[edge_slot(n - 1, d, w)];
              int e1 = x1.edge[edge_slot(n - 1, d, w)];
              if (cat_.compose(e1, alpha[w]) != cat_.compose(m, e0)) ok = false;
            }
            if (!ok) continue;
            alpha[u] = m;
            rec(u + 1);
          }
          alpha[u] = -1;
        };
        rec(0);
      }
    std::sort(out.begin(), out.end());
  }
  computed_[n] = true;
  return out;
}

NerveCube NerveComplex::act(const Cube& c, const BoxOp& w) const {
  if (w.cod() != c.n) throw DimensionError("nerve act: dimension mismatch");
  int m = w.dom();
  VertexMap vm = evaluate(w);
  Cube z;
  z.n = m;
  z.vert.resize(1 << m);
  for (uint32_t u = 0; u < (1u << m); ++u) z.vert[u] = c.vert[vm(u)];
  if (m >= 1) {
    z.edge.resize(m * (1 << (m - 1)));
    for (int d = 1; d <= m; ++d)
      for (uint32_t u = 0; u < (1u << m); ++u) {
        if ((u >> (d - 1)) & 1) continue;
        uint32_t a = vm(u), b = vm(u | (1u << (d - 1)));
        z.edge[edge_slot(m, d, u)] = path_morphism(c, a, b);
      }
  }
  return z;
}

std::optional<CubeId> NerveTruncation::find(const NerveCube& c) const {
  if (c.n >= static_cast<int>(cube_of.size())) return std::nullopt;
  for (int k = 0; k < static_cast<int>(cube_of[c.n].size()); ++k)
    if (cube_of[c.n][k] == c) return CubeId{c.n, k};
  return std::nullopt;
}

NerveTruncation truncate_nerve(const NerveComplex& N, int D) {
  NerveTruncation t;
  auto X = std::make_shared<CubicalComplex>();
  t.cube_of.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    for (const NerveCube& c : N.level(n)) {
      auto [base, word] = standard_form(N, c);
      if (!word.is_identity()) continue;
      t.cube_of[n].push_back(c);
      X->add_cube(n);
    }
  }
  for (int n = 1; n <= D; ++n)
    for (int k = 0; k < static_cast<int>(t.cube_of[n].size()); ++k)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          NerveCube f = N.act(t.cube_of[n][k], BoxOp::face(n, i, e));
          auto [base, word] = standard_form(N, f);
          auto id = t.find(base);
          if (!id) throw std::logic_error("nerve truncation: missing face target");
          X->set_face(CubeId{n, k}, i, e, CubeRef{*id, word});
        }
  t.complex = X;
  return t;
}

// --- fundamental category ---------------------------------------------

namespace {

using Word = std::vector<int>;  // generator ids, function order (front acts last)

struct Rewriter {
  std::vector<std::pair<Word, Word>> rules;  // lhs -> rhs, lhs > rhs shortlex
  long long steps = 0;
  long long budget;

  explicit Rewriter(long long b) : budget(b) {}

  static bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  bool reduce_once(Word& w) {
    for (const auto& [lhs, rhs] : rules) {
      if (lhs.size() > w.size()) continue;
      for (size_t at = 0; at + lhs.size() <= w.size(); ++at) {
        if (std::equal(lhs.begin(), lhs.end(), w.begin() + at)) {
          Word next(w.begin(), w.begin() + at);
          next.insert(next.end(), rhs.begin(), rhs.end());
          next.insert(next.end(), w.begin() + at + lhs.size(), w.end());
          w = std::move(next);
          return true;
        }
      }
    }
    return false;
  }

  Word reduce(Word w) {
    while (reduce_once(w))
      if (++steps > budget) throw BudgetError(0);
    return w;
  }

  // Returns false if the budget ran out.
  bool complete() {
    try {
      bool changed = true;
      while (changed) {
        changed = false;
        size_t R = rules.size();
        for (size_t a = 0; a < R && !changed; ++a)
          for (size_t b = 0; b < R && !changed; ++b) {
            const Word l1 = rules[a].first, r1 = rules[a].second;
            const Word l2 = rules[b].first, r2 = rules[b].second;
            // overlaps: a suffix of l1 equals a prefix of l2
            for (size_t k = 1; k <= std::min(l1.size(), l2.size()) && !changed; ++k) {
              if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
              // word = l1 + l2[k..]
              Word w(l1.begin(), l1.end());
              w.insert(w.end(), l2.begin() + k, l2.end());
              Word u = r1;
              u.insert(u.end(), l2.begin() + k, l2.end());
              Word v(l1.begin(), l1.end() - k);
              v.insert(v.end(), r2.begin(), r2.end());
              u = reduce(u);
              v = reduce(v);
              if (u == v) continue;
              if (shortlex_less(u, v)) std::swap(u, v);
              rules.emplace_back(u, v);
              if (rules.size() > 200) return false;
              changed = true;
            }
            // l2 a factor of l1 (distinct rules)
            if (!changed && a != b && l2.size() < l1.size()) {
              for (size_t at = 0; at + l2.size() <= l1.size() && !changed; ++at) {
                if (!std::equal(l2.begin(), l2.end(), l1.begin() + at)) continue;
                Word u = r1;
                Word v(l1.begin(), l1.begin() + at);
                v.insert(v.end(), r2.begin(), r2.end());
                v.insert(v.end(), l1.begin() + at + l2.size(), l1.end());
                u = reduce(u);
                v = reduce(v);
                if (u == v) {
                  rules.erase(rules.begin() + a);
                  changed = true;
                  break;
                }
                if (shortlex_less(u, v)) std::swap(u, v);
                rules[a] = {u, v};
                changed = true;
              }
            }
          }
        if (++steps > budget) return false;
      }
      return true;
    } catch (const BudgetError&) {
      return false;
    }
  }
};

}  // namespace

Tau1Result tau1(ComplexPtr X, long long step_budget) {
  Tau1Result res;
  CategoryPresentation& P = res.presentation;
  P.num_objects = X->count(0);
  std::vector<int> edge_gen(X->count(1));
  for (int k = 0; k < X->count(1); ++k) {
    CubeId e{1, k};
    edge_gen[k] = static_cast<int>(P.generators.size());
    P.generators.emplace_back(X->face(e, 1, 0).target.idx, X->face(e, 1, 1).target.idx);
    P.generator_names.push_back(X->name(e));
  }
  auto path_of = [&](const CubeRef& r) -> Word {
    if (!r.op.is_identity()) return {};  // degenerate edge: identity path
    return {edge_gen[r.target.idx]};
  };
  for (int k = 0; k < X->count(2); ++k) {
    CubeId s{2, k};
    // right . top = bottom . left for every square
    Word lhs = path_of(X->face(s, 1, 1));
    Word top = path_of(X->face(s, 2, 0));
    lhs.insert(lhs.end(), top.begin(), top.end());
    Word rhs = path_of(X->face(s, 2, 1));
    Word left = path_of(X->face(s, 1, 0));
    rhs.insert(rhs.end(), left.begin(), left.end());
    if (lhs != rhs) P.relations.emplace_back(lhs, rhs);
  }

  Rewriter rw(step_budget);
  for (const auto& [l, r] : P.relations) {
    Word a = l, b = r;
    if (Rewriter::shortlex_less(a, b)) std::swap(a, b);
    if (a != b) rw.rules.emplace_back(a, b);
  }
  if (!rw.complete()) return res;

  // enumerate normal-form words per source object
  int O = P.num_objects;
  std::map<std::pair<int, Word>, int> seen;  // (src, word) -> morphism index
  FinCategory C;
  C.num_objects = O;
  std::vector<std::pair<int, Word>> list;
  auto target_of = [&](int src, const Word& w) {
    int cur = src;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (P.generators[*it].first != cur) return -1;
      cur = P.generators[*it].second;
    }
    return cur;
  };
  std::vector<std::pair<int, Word>> frontier;
  for (int o = 0; o < O; ++o) {
    seen[{o, {}}] = static_cast<int>(list.size());
    list.emplace_back(o, Word{});
    frontier.emplace_back(o, Word{});
  }
  long long guard = 0;
  while (!frontier.empty()) {
    std::vector<std::pair<int, Word>> next;
    for (const auto& [src, w] : frontier) {
      int dst = target_of(src, w);
      for (size_t g = 0; g < P.generators.size(); ++g) {
        if (P.generators[g].first != dst) continue;
        Word ext{static_cast<int>(g)};
        ext.insert(ext.end(), w.begin(), w.end());
        Word red;
        try {
          red = rw.reduce(ext);
        } catch (const BudgetError&) {
          return res;
        }
        if (red != ext) continue;  // not a normal form; its class is reachable elsewhere
        if (seen.count({src, red})) continue;
        seen[{src, red}] = static_cast<int>(list.size());
        list.emplace_back(src, red);
        next.emplace_back(src, red);
        if (++guard > step_budget || list.size() > 4000) return res;
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [src, w] : list) {
    std::string nm;
    for (int g : w) nm += P.generator_names[g] + ".";
    if (nm.empty()) nm = "id" + std::to_string(src);
    C.morphisms.push_back({src, target_of(src, w), nm});
  }
  for (int o = 0; o < O; ++o) C.identity.push_back(seen.at({o, {}}));
  int M = static_cast<int>(list.size());
  C.comp.assign(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (C.morphisms[f].dst != C.morphisms[g].src) continue;
      Word w = list[g].second;
      w.insert(w.end(), list[f].second.begin(), list[f].second.end());
      Word red;
      try {
        red = rw.reduce(w);
      } catch (const BudgetError&) {
        return res;
      }
      auto it = seen.find({C.morphisms[f].src, red});
      if (it == seen.end()) return res;
      C.comp[g][f] = it->second;
    }
  if (!validate(C).ok) return res;
  res.normalized = C;
  return res;
}

bool is_functor(const FinCategory& C, const FinCategory& D, const Functor& F) {
  for (int o = 0; o < C.num_objects; ++o)
    if (F.on_morphisms[C.identity[o]] != D.identity[F.on_objects[o]]) return false;
  for (size_t m = 0; m < C.morphisms.size(); ++m) {
    if (D.morphisms[F.on_morphisms[m]].src != F.on_objects[C.morphisms[m].src]) return false;
    if (D.morphisms[F.on_morphisms[m]].dst != F.on_objects[C.morphisms[m].dst]) return false;
  }
  for (size_t g = 0; g < C.morphisms.size(); ++g)
    for (size_t f = 0; f < C.morphisms.size(); ++f)
      if (C.composable(static_cast<int>(g), static_cast<int>(f)))
        if (F.on_morphisms[C.comp[g][f]] != D.comp[F.on_morphisms[g]][F.on_morphisms[f]])
          return false;
  return true;
}

}  // namespace cubik
