#include "cubik/boxcat.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace cubik {

void Generator::check() const {
  switch (kind) {
    case GenKind::Face:
      if (index < 1 || index > ambient)
        throw DimensionError("face index out of range");
      break;
    case GenKind::Degeneracy:
      if (index < 1 || index > ambient)
        throw DimensionError("degeneracy index out of range");
      break;
    case GenKind::Connection:
      if (index < 1 || index > ambient - 1)
        throw DimensionError("connection index out of range");
      break;
  }
  if (sign != 0 && sign != 1) throw DimensionError("sign must be 0 or 1");
}

VertexMap VertexMap::identity(int n) {
  VertexMap m;
  m.dom = m.cod = n;
  m.table.resize(1u << n);
  for (uint32_t v = 0; v < m.table.size(); ++v) m.table[v] = v;
  return m;
}

bool VertexMap::is_monotone() const {
  // v <= w in the product order iff (v & w) == v on bitmasks.
  for (uint32_t v = 0; v < table.size(); ++v)
    for (int b = 0; b < dom; ++b) {
      uint32_t w = v | (1u << b);
      if (w != v && (table[v] & table[w]) != table[v]) return false;
    }
  return true;
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
  if (f.cod != g.dom) throw DimensionError("vertex map composition mismatch");
  VertexMap r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.table.resize(f.table.size());
  for (uint32_t v = 0; v < f.table.size(); ++v) r.table[v] = g.table[f.table[v]];
  return r;
}

namespace {

uint32_t insert_bit(uint32_t v, int pos, uint32_t bit) {
  // pos is 1-based coordinate position for the inserted bit
  uint32_t low = v & ((1u << (pos - 1)) - 1);
  uint32_t high = v >> (pos - 1);
  return low | (bit << (pos - 1)) | (high << pos);
}

uint32_t delete_bit(uint32_t v, int pos) {
  uint32_t low = v & ((1u << (pos - 1)) - 1);
  uint32_t high = v >> pos;
  return low | (high << (pos - 1));
}

VertexMap generator_vertex_map(const Generator& g) {
  VertexMap m;
  m.dom = g.dom();
  m.cod = g.cod();
  m.table.resize(1u << m.dom);
  for (uint32_t v = 0; v < m.table.size(); ++v) {
    switch (g.kind) {
      case GenKind::Face:
        m.table[v] = insert_bit(v, g.index, static_cast<uint32_t>(g.sign));
        break;
      case GenKind::Degeneracy:
        m.table[v] = delete_bit(v, g.index);
        break;
      case GenKind::Connection: {
        uint32_t a = (v >> (g.index - 1)) & 1u;
        uint32_t b = (v >> g.index) & 1u;
        uint32_t c = g.sign == 0 ? (a | b) : (a & b);
        uint32_t w = delete_bit(v, g.index + 1);
        w = (w & ~(1u << (g.index - 1))) | (c << (g.index - 1));
        m.table[v] = w;
        break;
      }
    }
  }
  return m;
}

}  // namespace

BoxOp BoxOp::identity(int n) {
  if (n < 0) throw DimensionError("negative dimension");
  BoxOp op;
  op.dom_ = op.cod_ = n;
  return op;
}

BoxOp BoxOp::from_generator(const Generator& g) {
  g.check();
  BoxOp op;
  op.dom_ = g.dom();
  op.cod_ = g.cod();
  switch (g.kind) {
    case GenKind::Face: op.faces_.emplace_back(g.index, g.sign); break;
    case GenKind::Degeneracy: op.degens_.push_back(g.index); break;
    case GenKind::Connection: op.conns_.emplace_back(g.index, g.sign); break;
  }
  return op;
}

BoxOp BoxOp::face(int ambient, int i, int sign) {
  return from_generator({GenKind::Face, i, sign, ambient});
}
BoxOp BoxOp::degeneracy(int ambient, int i) {
  return from_generator({GenKind::Degeneracy, i, 0, ambient});
}
BoxOp BoxOp::connection(int ambient, int i, int sign) {
  return from_generator({GenKind::Connection, i, sign, ambient});
}

BoxOp BoxOp::from_raw(Raw r) {
  BoxOp op;
  op.dom_ = r.dom;
  op.cod_ = r.cod;
  op.faces_ = std::move(r.faces);
  op.conns_ = std::move(r.conns);
  op.degens_ = std::move(r.degens);
  for (size_t k = 1; k < op.faces_.size(); ++k)
    if (op.faces_[k - 1].first <= op.faces_[k].first)
      throw DimensionError("face word not strictly decreasing");
  for (size_t k = 1; k < op.conns_.size(); ++k) {
    auto [b0, e0] = op.conns_[k - 1];
    auto [b1, e1] = op.conns_[k];
    if (b0 > b1 || (b0 == b1 && e0 == e1))
      throw DimensionError("connection word violates normal order");
  }
  for (size_t k = 1; k < op.degens_.size(); ++k)
    if (op.degens_[k - 1] >= op.degens_[k])
      throw DimensionError("degeneracy word not strictly increasing");
  int p = static_cast<int>(op.degens_.size());
  int q = static_cast<int>(op.conns_.size());
  int rr = static_cast<int>(op.faces_.size());
  if (op.dom_ - p - q + rr != op.cod_)
    throw DimensionError("dimension bookkeeping mismatch");
  return op;
}

std::vector<Generator> BoxOp::letters() const {
  std::vector<Generator> out;
  // Reconstruct ambients walking from the domain: degeneracies act first.
  int d = dom_;
  std::vector<Generator> degen_letters;
  for (auto it = degens_.rbegin(); it != degens_.rend(); ++it) {
    degen_letters.push_back({GenKind::Degeneracy, *it, 0, d});
    --d;
  }
  std::vector<Generator> conn_letters;
  for (auto it = conns_.rbegin(); it != conns_.rend(); ++it) {
    conn_letters.push_back({GenKind::Connection, it->first, it->second, d});
    --d;
  }
  std::vector<Generator> face_letters;
  for (auto it = faces_.rbegin(); it != faces_.rend(); ++it) {
    ++d;
    face_letters.push_back({GenKind::Face, it->first, it->second, d});
  }
  for (auto it = face_letters.rbegin(); it != face_letters.rend(); ++it) out.push_back(*it);
  for (auto it = conn_letters.rbegin(); it != conn_letters.rend(); ++it) out.push_back(*it);
  for (auto it = degen_letters.rbegin(); it != degen_letters.rend(); ++it) out.push_back(*it);
  assert(d == cod_);
  return out;
}

Generator BoxOp::last_letter() const {
  if (is_identity()) throw DimensionError("identity has no letters");
  if (!degens_.empty()) return {GenKind::Degeneracy, degens_.back(), 0, dom_};
  if (!conns_.empty()) return {GenKind::Connection, conns_.back().first, conns_.back().second, dom_};
  return {GenKind::Face, faces_.back().first, faces_.back().second, dom_ + 1};
}

BoxOp BoxOp::without_last_letter() const {
  BoxOp op = *this;
  if (!degens_.empty()) {
    op.degens_.pop_back();
    op.dom_ -= 1;
  } else if (!conns_.empty()) {
    op.conns_.pop_back();
    op.dom_ -= 1;
  } else if (!faces_.empty()) {
    op.faces_.pop_back();
    op.dom_ += 1;
  } else {
    throw DimensionError("identity has no letters");
  }
  return op;
}

BoxOp BoxOp::without_first_face() const {
  if (faces_.empty()) throw DimensionError("no face letters");
  BoxOp op = *this;
  op.faces_.erase(op.faces_.begin());
  op.cod_ -= 1;
  return op;
}

BoxOp push_left(const Generator& gen, const BoxOp& op) {
  gen.check();
  if (gen.dom() != op.cod())
    throw DimensionError("push_left: generator domain " + std::to_string(gen.dom()) +
                         " != operator codomain " + std::to_string(op.cod()));
  BoxOp r = op;
  switch (gen.kind) {
    case GenKind::Face: {
      // d_{i,e} d_{c,e'} = d_{c+1,e'} d_{i,e}  for i <= c
      int i = gen.index;
      size_t pos = 0;
      while (pos < r.faces_.size() && i <= r.faces_[pos].first) {
        r.faces_[pos].first += 1;
        ++pos;
      }
      r.faces_.insert(r.faces_.begin() + pos, {i, gen.sign});
      r.cod_ += 1;
      return r;
    }
    case GenKind::Degeneracy: {
      int j = gen.index;
      if (!r.faces_.empty()) {
        auto [c, e] = r.faces_.front();
        r.faces_.erase(r.faces_.begin());
        r.cod_ -= 1;
        if (j < c)
          return push_left({GenKind::Face, c - 1, e, r.cod_},
                           push_left({GenKind::Degeneracy, j, 0, r.cod_}, r));
        if (j == c) return r;  // s_i d_{i,e} = id
        return push_left({GenKind::Face, c, e, r.cod_},
                         push_left({GenKind::Degeneracy, j - 1, 0, r.cod_}, r));
      }
      if (!r.conns_.empty()) {
        auto [b, eb] = r.conns_.front();
        r.conns_.erase(r.conns_.begin());
        r.cod_ += 1;
        if (j < b)
          return push_left({GenKind::Connection, b - 1, eb, r.cod_ - 1},
                           push_left({GenKind::Degeneracy, j, 0, r.cod_}, r));
        if (j == b)  // s_i g_{i,e} = s_i s_i
          return push_left({GenKind::Degeneracy, b, 0, r.cod_ - 1},
                           push_left({GenKind::Degeneracy, b, 0, r.cod_}, r));
        return push_left({GenKind::Connection, b, eb, r.cod_ - 1},
                         push_left({GenKind::Degeneracy, j + 1, 0, r.cod_}, r));
      }
      // s_i s_j = s_j s_{i+1}  for j <= i
      size_t pos = 0;
      while (pos < r.degens_.size() && r.degens_[pos] <= j) {
        ++j;
        ++pos;
      }
      r.degens_.insert(r.degens_.begin() + pos, j);
      r.cod_ -= 1;
      return r;
    }
    case GenKind::Connection: {
      int j = gen.index;
      int eg = gen.sign;
      if (!r.faces_.empty()) {
        auto [c, ef] = r.faces_.front();
        r.faces_.erase(r.faces_.begin());
        r.cod_ -= 1;
        if (j < c - 1)
          return push_left({GenKind::Face, c - 1, ef, r.cod_},
                           push_left({GenKind::Connection, j, eg, r.cod_}, r));
        if (j == c - 1 || j == c) {
          if (ef == eg) return r;  // g_{j,e} d_{i,e} = id
          // g_{i,e'} d_{i,1-e'} = d_{i,1-e'} s_i and
          // g_{i-1,e'} d_{i,1-e'} = d_{i-1,1-e'} s_{i-1}
          int k = (j == c) ? c : c - 1;
          return push_left({GenKind::Face, k, ef, r.cod_},
                           push_left({GenKind::Degeneracy, k, 0, r.cod_}, r));
        }
        return push_left({GenKind::Face, c, ef, r.cod_},
                         push_left({GenKind::Connection, j - 1, eg, r.cod_}, r));
      }
      // Insert into the connection word:
      //   g_{j,e'} g_{b,e} = g_{b,e} g_{j+1,e'}  for j > b, or j = b with e' = e.
      size_t pos = 0;
      while (pos < r.conns_.size() &&
             (r.conns_[pos].first < j || (r.conns_[pos].first == j && r.conns_[pos].second == eg))) {
        ++j;
        ++pos;
      }
      r.conns_.insert(r.conns_.begin() + pos, {j, eg});
      r.cod_ -= 1;
      return r;
    }
  }
  throw DimensionError("unreachable");
}

BoxOp compose(const BoxOp& g, const BoxOp& f) {
  if (f.cod() != g.dom())
    throw DimensionError("compose: cod(f) = " + std::to_string(f.cod()) +
                         " but dom(g) = " + std::to_string(g.dom()));
  BoxOp acc = f;
  auto word = g.letters();
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = push_left(*it, acc);
#ifndef NDEBUG
  assert(evaluate(acc) == compose(evaluate(g), evaluate(f)));
#endif
  return acc;
}

BoxOp normalize(std::span<const Generator> word, int dim_if_empty) {
  if (word.empty()) return BoxOp::identity(dim_if_empty);
  BoxOp acc = BoxOp::identity(word.back().dom());
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = push_left(*it, acc);
  return acc;
}

VertexMap evaluate(const BoxOp& op) {
  VertexMap m = VertexMap::identity(op.dom());
  auto word = op.letters();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = compose(generator_vertex_map(*it), m);
  return m;
}

BoxOp involute(const BoxOp& op, Involution kind) {
  auto word = op.letters();
  std::vector<Generator> image;
  image.reserve(word.size());
  for (const Generator& g : word) {
    Generator h = g;
    bool flip_index = (kind == Involution::Co || kind == Involution::Op);
    bool flip_sign = (kind == Involution::CoOp || kind == Involution::Op);
    if (flip_index) {
      switch (g.kind) {
        case GenKind::Face: h.index = g.ambient - g.index + 1; break;
        case GenKind::Degeneracy: h.index = g.ambient - g.index + 1; break;
        case GenKind::Connection: h.index = g.ambient - g.index; break;
      }
    }
    if (flip_sign && g.kind != GenKind::Degeneracy) h.sign = 1 - g.sign;
    image.push_back(h);
  }
  return normalize(image, op.dom());
}

Classification classify(const BoxOp& op) {
  Classification c;
  c.in_plus = op.in_box_plus();
  c.in_minus = op.in_box_minus();
  c.mixed = !c.in_plus && !c.in_minus;
  bool has_neg = false, has_pos = false;
  for (auto [i, e] : op.connections()) (e == 0 ? has_neg : has_pos) = true;
  c.in_box0 = !has_pos;
  c.in_box1 = !has_neg;
  c.in_box_empty = !has_pos && !has_neg;
  return c;
}

std::string render(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GenKind::Face: os << 'd' << g.index << '_' << g.sign; break;
    case GenKind::Degeneracy: os << 's' << g.index; break;
    case GenKind::Connection: os << 'g' << g.index << '_' << g.sign; break;
  }
  return os.str();
}

std::string render(const BoxOp& op) {
  if (op.is_identity()) return "id" + std::to_string(op.dom());
  std::ostringstream os;
  bool first = true;
  for (const Generator& g : op.letters()) {
    if (!first) os << ' ';
    os << render(g);
    first = false;
  }
  return os.str();
}

BoxOp parse_boxop(const std::string& text, int dom) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0].rfind("id", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(tokens[0].substr(2));
    } catch (...) {
      throw ParseError("bad identity token: " + tokens[0]);
    }
    if (n != dom) throw DimensionError("identity dimension does not match context");
    return BoxOp::identity(n);
  }
  // Walk the word right to left, tracking dimensions from `dom`.
  struct Letter {
    GenKind kind;
    int index, sign;
  };
  std::vector<Letter> raw;
  for (const std::string& t : tokens) {
    if (t.empty()) continue;
    Letter l{};
    char c = t[0];
    std::string rest = t.substr(1);
    auto us = rest.find('_');
    try {
      if (c == 's') {
        l.kind = GenKind::Degeneracy;
        l.index = std::stoi(rest);
        l.sign = 0;
      } else if (c == 'd' || c == 'g') {
        if (us == std::string::npos) throw ParseError("missing sign in token: " + t);
        l.kind = c == 'd' ? GenKind::Face : GenKind::Connection;
        l.index = std::stoi(rest.substr(0, us));
        l.sign = std::stoi(rest.substr(us + 1));
      } else {
        throw ParseError("unknown token: " + t);
      }
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("bad token: " + t);
    }
    raw.push_back(l);
  }
  std::vector<Generator> word(raw.size());
  int d = dom;
  for (size_t k = raw.size(); k-- > 0;) {
    const Letter& l = raw[k];
    Generator g{l.kind, l.index, l.sign, 0};
    g.ambient = (l.kind == GenKind::Face) ? d + 1 : d;
    g.check();
    word[k] = g;
    d = g.cod();
  }
  return normalize(word, dom);
}

std::vector<BoxOp> enumerate_hom_from(int dom, int max_cod) {
  // Breadth-first closure under generator post-composition, dedup by vertex
  // function.  Intermediate codomain bounded by max(dom, max_cod), which
  // covers every normal word's suffix chain.
  int bound = std::max(dom, max_cod);
  std::map<std::pair<int, std::vector<uint32_t>>, BoxOp> seen;
  std::vector<BoxOp> frontier{BoxOp::identity(dom)};
  seen[{dom, evaluate(frontier[0]).table}] = frontier[0];
  while (!frontier.empty()) {
    std::vector<BoxOp> next;
    for (const BoxOp& f : frontier) {
      int k = f.cod();
      std::vector<Generator> gens;
      for (int i = 1; i <= k + 1; ++i)
        for (int e = 0; e <= 1; ++e) gens.push_back({GenKind::Face, i, e, k + 1});
      if (k >= 1)
        for (int i = 1; i <= k; ++i) gens.push_back({GenKind::Degeneracy, i, 0, k});
      for (int i = 1; i + 1 <= k; ++i)
        for (int e = 0; e <= 1; ++e) gens.push_back({GenKind::Connection, i, e, k});
      for (const Generator& g : gens) {
        if (g.cod() > bound) continue;
        BoxOp h = push_left(g, f);
        auto key = std::make_pair(h.cod(), evaluate(h).table);
        auto [it, inserted] = seen.emplace(key, h);
        if (inserted)
          next.push_back(h);
        else if (it->second != h)
          throw std::logic_error("normal form not unique for a vertex function");
      }
    }
    frontier = std::move(next);
  }
  std::vector<BoxOp> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoxOp> enumerate_hom(int dom, int cod) {
  std::vector<BoxOp> out;
  for (const BoxOp& f : enumerate_hom_from(dom, cod))
    if (f.cod() == cod) out.push_back(f);
  return out;
}

std::vector<BoxOp> enumerate_minus_ops(int dom, int cod) {
  std::vector<BoxOp> out;
  for (const BoxOp& f : enumerate_hom(dom, cod))
    if (f.in_box_minus()) out.push_back(f);
  return out;
}

BoxOp tensor_ops(const BoxOp& left, const BoxOp& right) {
  // left (x) right = (left (x) id_cod(right-block)) . (id (x) right)
  std::vector<Generator> word;
  for (Generator g : left.letters()) {
    g.ambient += right.cod();
    word.push_back(g);
  }
  for (Generator g : right.letters()) {
    g.index += left.dom();
    g.ambient += left.dom();
    word.push_back(g);
  }
  return normalize(word, left.dom() + right.dom());
}

}  // namespace cubik
