#pragma once

// Operator calculus for the box category: normal forms, composition by
// rewriting, vertex-function evaluation, involutions, hom-set enumeration.
//
// A morphism [1]^m -> [1]^n is stored in its unique normal form
//   (d_{c1,e1} ... d_{cr,er}) (g_{b1,e1} ... g_{bq,eq}) (s_{a1} ... s_{ap})
// with a1 < ... < ap, b1 <= ... <= bq (strict when adjacent signs agree),
// c1 > ... > cr >= 1.  Words are kept in function-composition order: the
// rightmost letter acts first, matching juxtaposition in the identities.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubik {

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class GenKind : uint8_t { Face, Degeneracy, Connection };

// A single generator.  `ambient` is the larger of the two dimensions involved:
// faces d^n_{i,e} : [1]^{n-1} -> [1]^n (1 <= i <= n), degeneracies
// s^n_i : [1]^n -> [1]^{n-1} (1 <= i <= n), connections
// g^n_{i,e} : [1]^n -> [1]^{n-1} (1 <= i <= n-1).
struct Generator {
  GenKind kind;
  int index = 0;
  int sign = 0;  // unused for degeneracies
  int ambient = 0;

  int dom() const { return kind == GenKind::Face ? ambient - 1 : ambient; }
  int cod() const { return kind == GenKind::Face ? ambient : ambient - 1; }
  void check() const;
};

// Monotone vertex function {0,1}^dom -> {0,1}^cod; entry v is a bitmask whose
// bit i-1 carries output coordinate i.
struct VertexMap {
  int dom = 0;
  int cod = 0;
  std::vector<uint32_t> table;

  static VertexMap identity(int n);
  uint32_t operator()(uint32_t v) const { return table[v]; }
  bool is_monotone() const;
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

VertexMap compose(const VertexMap& g, const VertexMap& f);

class BoxOp {
 public:
  BoxOp() = default;

  static BoxOp identity(int n);
  static BoxOp face(int ambient, int i, int sign);
  static BoxOp degeneracy(int ambient, int i);
  static BoxOp connection(int ambient, int i, int sign);
  static BoxOp from_generator(const Generator& g);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  bool is_identity() const { return faces_.empty() && conns_.empty() && degens_.empty(); }

  const std::vector<std::pair<int, int>>& faces() const { return faces_; }
  const std::vector<std::pair<int, int>>& connections() const { return conns_; }
  const std::vector<int>& degeneracies() const { return degens_; }

  bool in_box_minus() const { return faces_.empty(); }
  bool in_box_plus() const { return conns_.empty() && degens_.empty(); }

  // Letters in written order (faces, then connections, then degeneracies);
  // the last letter of the list acts first.
  std::vector<Generator> letters() const;

  // Drops the letter that acts first; precondition: not the identity.
  BoxOp without_last_letter() const;
  Generator last_letter() const;

  // Drops the leftmost face letter; precondition: face word nonempty.
  BoxOp without_first_face() const;

  std::strong_ordering operator<=>(const BoxOp&) const = default;
  bool operator==(const BoxOp&) const = default;

  struct Raw {
    int dom, cod;
    std::vector<std::pair<int, int>> faces, conns;
    std::vector<int> degens;
  };
  static BoxOp from_raw(Raw r);  // validates the normal-form side conditions

 private:
  friend BoxOp compose(const BoxOp&, const BoxOp&);
  friend BoxOp push_left(const Generator&, const BoxOp&);

  int dom_ = 0;
  int cod_ = 0;
  std::vector<std::pair<int, int>> faces_;  // (index, sign), strictly decreasing indices
  std::vector<std::pair<int, int>> conns_;  // (index, sign), nondecreasing, strict when signs agree
  std::vector<int> degens_;                 // strictly increasing
};

// Normal form of g after f.  Throws DimensionError unless cod(f) = dom(g).
BoxOp compose(const BoxOp& g, const BoxOp& f);

// Normal form of gen composed after op.
BoxOp push_left(const Generator& gen, const BoxOp& op);

// Normal form of a generator word given in function-composition order
// (rightmost acts first); `word` empty yields identity at `dim_if_empty`.
BoxOp normalize(std::span<const Generator> word, int dim_if_empty = 0);

VertexMap evaluate(const BoxOp& op);

enum class Involution { Co, CoOp, Op };

BoxOp involute(const BoxOp& op, Involution kind);

struct Classification {
  bool in_plus = false;    // face word only
  bool in_minus = false;   // no faces
  bool mixed = false;
  bool in_box0 = false;    // no positive connections
  bool in_box1 = false;    // no negative connections
  bool in_box_empty = false;  // no connections at all
};

Classification classify(const BoxOp& op);

// Canonical rendering: "d2_1 g1_0 s3", identity as "id<n>".
std::string render(const BoxOp& op);
std::string render(const Generator& g);

// Parses a (not necessarily normal) word given the domain dimension and
// returns its normal form.
BoxOp parse_boxop(const std::string& text, int dom);

// All maps [1]^dom -> [1]^cod' for cod' <= max_cod, enumerated by closing
// {id} under generator post-composition with vertex-map dedup.  Result is
// sorted (deterministic canonical order).
std::vector<BoxOp> enumerate_hom_from(int dom, int max_cod);

// The hom-set Box([1]^dom, [1]^cod), sorted.
std::vector<BoxOp> enumerate_hom(int dom, int cod);

// All operators of the monoidal subcategory Box_-: maps [1]^dom -> [1]^cod
// with empty face word (cod <= dom).
std::vector<BoxOp> enumerate_minus_ops(int dom, int cod);

// Whiskering through the geometric product: the operator acting as `op` on
// the first block and the identity on `right` extra coordinates, or the
// other way around.  Used for products and mapping spaces.
BoxOp tensor_ops(const BoxOp& left, const BoxOp& right);

}  // namespace cubik
