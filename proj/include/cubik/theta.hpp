#pragma once

// Coherent families of composites: the base-case and inductive definitions
// of theta^{m,n}, the lift through B^{m,n+1,n+1}, exhaustive verification of
// the eight identities, and the counit-filtration step check.

#include "cubik/cone.hpp"
#include "cubik/quasicat.hpp"

#include <sstream>

namespace cubik {

struct ThetaError : std::runtime_error {
  explicit ThetaError(const std::string& what) : std::runtime_error(what) {}
};

template <CubicalLike X>
class ThetaFamily {
 public:
  using Cube = typename X::Cube;

  // Builds theta^{m,n} for every (m,n)-cone with m+n+1 <= bound, in
  // lexicographic (m,n) order.
  ThetaFamily(const X& ambient, int bound) : ambient_(&ambient), bound_(bound) {
    for (int m = 0; m + 1 <= bound; ++m)
      for (int n = 0; m + n + 1 <= bound; ++n) build_level(m, n);
  }

  int bound() const { return bound_; }
  const X& ambient() const { return *ambient_; }

  bool defined(int m, int n) const { return memo_.count({m, n}) > 0; }

  const Cube& theta(int m, int n, const Cube& x) const {
    const auto& lvl = memo_.at({m, n});
    auto it = lvl.find(x);
    if (it == lvl.end()) throw ThetaError("theta: cone not in the family");
    return it->second.first;
  }
  int case_of(int m, int n, const Cube& x) const {
    return memo_.at({m, n}).at(x).second;
  }
  const std::map<Cube, std::pair<Cube, int>>& level(int m, int n) const {
    return memo_.at({m, n});
  }

 private:
  const X* ambient_;
  int bound_;
  std::map<std::pair<int, int>, std::map<Cube, std::pair<Cube, int>>> memo_;
  std::map<std::pair<int, int>, std::set<Cube>> outputs_;

  Cube act(const Cube& c, const BoxOp& w) const { return ambient_->act(c, w); }

  void build_level(int m, int n) {
    auto& lvl = memo_[{m, n}];
    for (const Cube& x : enumerate_cones(*ambient_, m, n)) {
      auto [value, tag] = compute(m, n, x);
      lvl.emplace(x, std::make_pair(value, tag));
      outputs_[{m, n}].insert(value);
    }
  }

  std::pair<Cube, int> compute(int m, int n, const Cube& x) {
    int total = m + n;
    if (m == 0) return {act(x, BoxOp::degeneracy(total + 1, n + 1)), 0};
    if (m == 1) return {act(x, BoxOp::connection(total + 1, n + 1, 0)), 0};
    auto [base, word] = standard_form(*ambient_, x);
    if (!word.is_identity()) {
      Generator last = word.last_letter();
      Cube z = act(base, word.without_last_letter());
      if (last.kind == GenKind::Degeneracy) {
        if (last.index < n + 1) throw ThetaError("degenerate cone violates the sa1 bound");
        // theta^{m,n}(z s_a) = theta^{m-1,n}(z) s_{a+1}
        return {act(theta(m - 1, n, z), BoxOp::degeneracy(total + 1, last.index + 1)), 1};
      }
      if (last.kind == GenKind::Connection && last.sign == 0 && last.index <= n - 1)
        return {act(theta(m, n - 1, z), BoxOp::connection(total + 1, last.index, 0)), 2};
      if (last.kind == GenKind::Connection && last.index >= n + 1)
        return {act(theta(m - 1, n, z), BoxOp::connection(total + 1, last.index + 1, last.sign)),
                3};
      if (last.kind == GenKind::Connection && last.sign == 1)
        throw ThetaError("degenerate cone ends in a low positive connection");
      // remaining: gamma_{n,0}; the cube is an (m-1,n+1)-cone
    }
    if (is_cone(*ambient_, x, m - 1, n + 1))
      return {act(x, BoxOp::connection(total + 1, n + 1, 0)), 4};
    if (n >= 1 && outputs_.count({m, n - 1}) && outputs_.at({m, n - 1}).count(x))
      return {act(x, BoxOp::connection(total + 1, n, 0)), 5};
    return {lift(m, n, x), 6};
  }

  // Extend a compatible family of faces over B^{m,n,k} (free data: the
  // (i,0)-faces for i <= k and the (i,1)-faces for i >= n+1) to an
  // (m+n)-cube, recursing through the anodyne decomposition and ending with
  // one (m+n,0)-open-box filling.
  Cube extend_B(int m, int n, int k, std::map<std::pair<int, int>, Cube> faces) const {
    int total = m + n;
    while (k < total - 1) {
      // build the (k+1,0)-face from its own B-data over C^{m-1,n}
      std::map<std::pair<int, int>, Cube> sub;
      for (int i = 1; i <= k; ++i)
        sub[{i, 0}] = act(faces.at({i, 0}), BoxOp::face(total - 1, k, 0));
      for (int i = n + 1; i <= total - 1; ++i) {
        if (i < k + 1)
          sub[{i, 1}] = act(faces.at({i, 1}), BoxOp::face(total - 1, k, 0));
        else
          sub[{i, 1}] = act(faces.at({i + 1, 1}), BoxOp::face(total - 1, k + 1, 0));
      }
      faces[{k + 1, 0}] = extend_B(m - 1, n, k, std::move(sub));
      ++k;
    }
    // final (total, 0)-open box; the (i,1)-faces for i <= n are forced
    OpenBoxProblem<Cube> p;
    p.n = total;
    p.i = total;
    p.eps = 0;
    for (int i = 1; i <= total - 1; ++i) p.boundary[{i, 0}] = faces.at({i, 0});
    for (int i = n + 1; i <= total; ++i) p.boundary[{i, 1}] = faces.at({i, 1});
    for (int i = 1; i <= n; ++i) {
      // contained in the image of the (total,1)-face: insert the constant
      // after dropping the last coordinate
      BoxOp forced =
          compose(BoxOp::face(total - 1, i, 1), BoxOp::degeneracy(total - 1, total - 1));
      p.boundary[{i, 1}] = act(faces.at({total, 1}), forced);
    }
    auto filler = find_filler(*ambient_, p);
    if (!filler) throw FillerError(total, total, 0);
    return *filler;
  }

  Cube lift(int m, int n, const Cube& x) {
    // boundary data for theta over B^{m,n+1,n+1}
    int total = m + n + 1;
    std::map<std::pair<int, int>, Cube> faces;
    for (int i = 1; i <= n; ++i)
      faces[{i, 0}] = theta(m, n - 1, act(x, BoxOp::face(total - 1, i, 0)));
    faces[{n + 1, 0}] = x;
    for (int i = n + 2; i <= total; ++i)
      faces[{i, 1}] = theta(m - 1, n, act(x, BoxOp::face(total - 1, i - 1, 1)));
    // consistency of the assembled data (signals an upstream bug)
    for (const auto& [k1, c1] : faces)
      for (const auto& [k2, c2] : faces) {
        auto [i1, e1] = k1;
        auto [i2, e2] = k2;
        if (i1 >= i2 || i1 > total - 1 || i2 > total) continue;
        if (i1 == i2) continue;
        auto a = act(c2, BoxOp::face(total - 1, i1, e1));
        auto b = act(c1, BoxOp::face(total - 1, i2 - 1, e2));
        if (!(a == b)) throw ThetaError("theta lift boundary is inconsistent");
      }
    return extend_B(m, n + 1, n + 1, std::move(faces));
  }
};

struct ThetaReportLine {
  int m = 0, n = 0, id = 0;
  long long checked = 0, failed = 0;
};

std::string render_theta_report(const std::vector<ThetaReportLine>& lines);

// Checks the eight identities on every stored cone; one line per identity
// per (m,n).
template <CubicalLike X>
std::vector<ThetaReportLine> verify_theta(const ThetaFamily<X>& F) {
  const X& A = F.ambient();
  std::vector<ThetaReportLine> out;
  int bound = F.bound();
  for (int m = 0; m + 1 <= bound; ++m)
    for (int n = 0; m + n + 1 <= bound; ++n) {
      int total = m + n;
      std::vector<ThetaReportLine> lines(8);
      for (int t = 0; t < 8; ++t) lines[t] = {m, n, t + 1, 0, 0};
      for (const auto& [x, entry] : F.level(m, n)) {
        const auto& th = entry.first;
        for (int i = 1; i <= n; ++i) {
          ++lines[0].checked;
          if (!(A.act(th, BoxOp::face(total + 1, i, 0)) ==
                F.theta(m, n - 1, A.act(x, BoxOp::face(total, i, 0)))))
            ++lines[0].failed;
        }
        ++lines[1].checked;
        if (!(A.act(th, BoxOp::face(total + 1, n + 1, 0)) == x)) ++lines[1].failed;
        if (m >= 1)
          for (int i = n + 2; i <= total + 1; ++i) {
            ++lines[2].checked;
            if (!(A.act(th, BoxOp::face(total + 1, i, 1)) ==
                  F.theta(m - 1, n, A.act(x, BoxOp::face(total, i - 1, 1)))))
              ++lines[2].failed;
          }
      }
      if (m >= 1)
        for (const auto& [xp, entry] : F.level(m - 1, n))
          for (int i = n + 1; i <= total; ++i) {
            ++lines[3].checked;
            if (!(F.theta(m, n, A.act(xp, BoxOp::degeneracy(total, i))) ==
                  A.act(entry.first, BoxOp::degeneracy(total + 1, i + 1))))
              ++lines[3].failed;
          }
      if (n >= 1)
        for (const auto& [xp, entry] : F.level(m, n - 1))
          for (int i = 1; i <= n - 1; ++i) {
            ++lines[4].checked;
            if (!(F.theta(m, n, A.act(xp, BoxOp::connection(total, i, 0))) ==
                  A.act(entry.first, BoxOp::connection(total + 1, i, 0))))
              ++lines[4].failed;
          }
      if (m >= 1)
        for (const auto& [xp, entry] : F.level(m - 1, n))
          for (int i = n + 1; i <= total - 1; ++i)
            for (int e = 0; e <= 1; ++e) {
              ++lines[5].checked;
              if (!(F.theta(m, n, A.act(xp, BoxOp::connection(total, i, e))) ==
                    A.act(entry.first, BoxOp::connection(total + 1, i + 1, e))))
                ++lines[5].failed;
            }
      if (n >= 1)
        for (const auto& [xp, entry] : F.level(m, n - 1)) {
          ++lines[6].checked;
          if (!(F.theta(m, n, entry.first) ==
                A.act(entry.first, BoxOp::connection(total + 1, n, 0))))
            ++lines[6].failed;
        }
      if (m >= 1)
        for (const auto& [x, entry] : F.level(m, n)) {
          if (!is_cone(A, x, m - 1, n + 1)) continue;
          ++lines[7].checked;
          if (!(entry.first == A.act(x, BoxOp::connection(total + 1, n + 1, 0))))
            ++lines[7].failed;
        }
      for (auto& l : lines) out.push_back(l);
    }
  return out;
}

// x falls under case 6 iff theta(x) is non-degenerate and not an
// (m-1,n+2)-cone (the case-5 recognition criterion one level up).
template <CubicalLike X>
bool check_theta_case_biconditional(const ThetaFamily<X>& F, int m, int n) {
  const X& A = F.ambient();
  for (const auto& [x, entry] : F.level(m, n)) {
    bool case6 = entry.second == 6;
    bool image_case5 = !standard_form(A, entry.first).second.is_identity()
                           ? false
                           : (m >= 1 ? !is_cone(A, entry.first, m - 1, n + 2) : false);
    if (case6 != image_case5) return false;
  }
  return true;
}

// The critical edge of theta^{m,0}(x) with respect to its (1,0)-face is
// degenerate.
template <CubicalLike X>
bool check_theta_degenerate_edges(const ThetaFamily<X>& F, int m) {
  const X& A = F.ambient();
  for (const auto& [x, entry] : F.level(m, 0)) {
    BoxOp w = BoxOp::identity(1);
    for (int j = 2; j <= m + 1; ++j) w = compose(BoxOp::face(w.cod() + 1, j, 1), w);
    auto edge = A.act(entry.first, w);
    if (standard_form(A, edge).second.is_identity()) return false;
  }
  return true;
}

struct CounitStepReport {
  bool ok = true;
  int case6_cones = 0;
  std::string message;
};

// The subcomplex X^{m,n}: non-degenerate parts of all (m',n')-cones and
// theta images for (m' < m) or (m' = m, n' <= n), closed under faces.
template <CubicalLike X>
std::set<typename X::Cube> filtration_subcomplex(const ThetaFamily<X>& F, int m, int n) {
  const X& A = F.ambient();
  std::set<typename X::Cube> seeds;
  auto add = [&](const typename X::Cube& c) {
    auto [base, word] = standard_form(A, c);
    seeds.insert(base);
  };
  for (int mp = 0; mp + 1 <= F.bound(); ++mp)
    for (int np = 0; mp + np + 1 <= F.bound(); ++np) {
      if (!(mp < m || (mp == m && np <= n))) continue;
      for (const auto& [x, entry] : F.level(mp, np)) {
        add(x);
        add(entry.first);
      }
    }
  // close under faces
  std::vector<typename X::Cube> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    int d = A.dim(c);
    for (int i = 1; i <= d; ++i)
      for (int e = 0; e <= 1; ++e) {
        auto [base, word] = standard_form(A, A.act(c, BoxOp::face(d, i, e)));
        if (seeds.insert(base).second) stack.push_back(base);
      }
  }
  return seeds;
}

template <CubicalLike X>
CounitStepReport counit_step_check(const ThetaFamily<X>& F, int m, int n) {
  const X& A = F.ambient();
  CounitStepReport rep;
  if (m < 2) {
    rep.ok = false;
    rep.message = "step check needs m >= 2";
    return rep;
  }
  std::set<typename X::Cube> lower = filtration_subcomplex(F, m, n - 1);
  auto member = [&](const typename X::Cube& c) {
    auto [base, word] = standard_form(A, c);
    return lower.count(base) > 0;
  };
  int total = m + n;
  for (const auto& [x, entry] : F.level(m, n)) {
    if (entry.second != 6) continue;
    ++rep.case6_cones;
    const auto& th = entry.first;
    for (int i = 1; i <= total + 1; ++i)
      for (int e = 0; e <= 1; ++e) {
        if (i == n + 1 && e == 0) continue;
        if (!member(A.act(th, BoxOp::face(total + 1, i, e)))) {
          rep.ok = false;
          rep.message = "a theta face escapes the lower filtration stage";
          return rep;
        }
      }
    // the critical edge with respect to (n+1,0) is degenerate
    BoxOp w = BoxOp::identity(1);
    for (int j = 1; j <= total + 1; ++j) {
      if (j == n + 1) continue;
      w = compose(BoxOp::face(w.cod() + 1, j, 1), w);
    }
    if (standard_form(A, A.act(th, w)).second.is_identity()) {
      rep.ok = false;
      rep.message = "critical edge of a theta cube is non-degenerate";
      return rep;
    }
  }
  return rep;
}

}  // namespace cubik
