#pragma once

// The arity-3 component F_V(3) of the free symmetric operad on a space V of
// binary operations, together with its S3 action and the built-in catalog of
// binary quadratic presentations.
//
// A monomial is a two-level tree over leaves x1, x2, x3:
//   LeftComb  (x_a ∘inner x_b) ∘outer x_c
//   RightComb x_a ∘outer (x_b ∘inner x_c)
// For a paired operation both argument orders are independent basis
// elements (e2 = (12)e1 is just e1 with swapped leaves). For a (anti)symmetric
// operation the two orders are identified up to sign, and the canonical
// representative puts the argument with the smaller minimal leaf first.

#include "opforge/exactlin.hpp"
#include "opforge/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opforge {

enum class Symmetry : std::uint8_t { Paired, Symmetric, Antisymmetric };

struct OpSpec {
  std::string symbol;  // single printable character used in relation text
  Symmetry symmetry = Symmetry::Paired;
  friend bool operator==(const OpSpec&, const OpSpec&) = default;
};

class OpSpace {
 public:
  OpSpace() = default;
  explicit OpSpace(std::vector<OpSpec> ops);

  /// One paired operation written `*`.
  static OpSpace single_paired();
  /// Two paired operations `<` (≺) and `>` (≻), in that order.
  static OpSpace two_paired();

  const std::vector<OpSpec>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const OpSpec& operator[](std::size_t i) const { return ops_[i]; }
  /// Σ over operations of the S2-slice dimension (2 for paired, 1 otherwise).
  int dim() const;
  std::optional<int> find(char symbol) const;

  friend bool operator==(const OpSpace&, const OpSpace&) = default;

 private:
  std::vector<OpSpec> ops_;
};

enum class Shape : std::uint8_t { LeftComb, RightComb };

using Leaves = std::array<int, 3>;

struct Monomial3 {
  Shape shape = Shape::LeftComb;
  Leaves leaves{1, 2, 3};
  int outer = 0;  // index into the OpSpace
  int inner = 0;

  // shape, then leaf permutation, then operations: the basis order.
  friend auto operator<=>(const Monomial3&, const Monomial3&) = default;
};

/// The leaf attached directly to the root (x_c of a left comb, x_a of a
/// right comb). It identifies the coset U0/U1/U2 of F_V(3) = Ind(V ⊗ V).
int outside_leaf(const Monomial3& m);

struct SignedMonomial {
  Monomial3 monomial;
  int sign = 1;
};

SignedMonomial canonicalize(const Monomial3& m, const OpSpace& ops);

/// σ as the images (σ(1), σ(2), σ(3)).
using Permutation = std::array<int, 3>;

/// All six elements in lexicographic order of their image tuples.
const std::vector<Permutation>& s3_elements();
/// (σ ∘ τ)(i) = σ(τ(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation transposition(int i, int j);

/// Sparse rational combination of canonical monomials.
class Arity3Element {
 public:
  using Terms = std::map<Monomial3, Rat>;

  Arity3Element() = default;

  /// Adds c·m after canonicalizing m in `ops`.
  void add(const OpSpace& ops, const Monomial3& m, const Rat& c);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coefficient(const Monomial3& canonical) const;

  Arity3Element& operator+=(const Arity3Element& other);
  Arity3Element& operator-=(const Arity3Element& other);
  Arity3Element& operator*=(const Rat& c);
  friend Arity3Element operator+(Arity3Element a, const Arity3Element& b) { return a += b; }
  friend Arity3Element operator-(Arity3Element a, const Arity3Element& b) { return a -= b; }
  friend Arity3Element operator*(const Rat& c, Arity3Element a) { return a *= c; }
  friend bool operator==(const Arity3Element&, const Arity3Element&) = default;

 private:
  void accumulate(const Monomial3& canonical, const Rat& c);
  Terms terms_;
};

/// Canonical monomials of F_V(3) in basis order; 3·(dim V)² of them.
std::vector<Monomial3> basis3(const OpSpace& ops);

/// Coordinate system on F_V(3).
class Basis3 {
 public:
  explicit Basis3(OpSpace ops);

  const OpSpace& ops() const { return ops_; }
  const std::vector<Monomial3>& monomials() const { return monomials_; }
  Index size() const { return static_cast<Index>(monomials_.size()); }
  Index index_of(const Monomial3& canonical) const;

  Vector<Rat> coords(const Arity3Element& e) const;
  Arity3Element element(const Vector<Rat>& v) const;
  std::vector<Arity3Element> elements(const Subspace<Rat>& s) const;
  Subspace<Rat> span(const std::vector<Arity3Element>& elements) const;

 private:
  OpSpace ops_;
  std::vector<Monomial3> monomials_;
  std::map<Monomial3, Index> index_;
};

/// Substitutes x_i ↦ x_σ(i) and re-canonicalizes.
Arity3Element act(const Permutation& sigma, const Arity3Element& e, const OpSpace& ops);

/// Span of the S3-orbit of `gens` in basis3(ops) coordinates.
Subspace<Rat> s3_closure(const std::vector<Arity3Element>& gens, const OpSpace& ops);

struct OperadPresentation {
  std::string name;
  OpSpace ops;
  std::vector<Arity3Element> relations;
};

/// R: the S3-submodule generated by the presentation's relations.
Subspace<Rat> relation_space(const OperadPresentation& p);
/// dim P(3) = 3·(dim V)² − dim R.
Index quotient_dim3(const OperadPresentation& p);

/// Built-in presentations. Single-operation entries (one paired `*`): As,
/// Nov, Zin, Bicom, Alt, Flex, AntiFlex, Leib, PreLie, Assosym. Two-operation
/// entries over `<` and `>`: NcNov, NcZin, NcBicom, NcFlex, NcAntiFlex.
///
/// Alt and Assosym are not taken from a displayed identity; they encode the
/// linearized left/right alternative laws and the total (12),(23) symmetry of
/// the associator respectively. Alt is checked against dim Alt(3) = 7.
OperadPresentation catalog(std::string_view name);
const std::vector<std::string>& catalog_names();
/// The single-operation subset of catalog_names(), in catalog order.
const std::vector<std::string>& single_op_catalog_names();

// Relation text.
//
//   element  := "0" | term { term }
//   term     := sign [ coeff "*" ] monomial      (the first sign is optional)
//   coeff    := digits [ "/" digits ]
//   monomial := "(" var op var ")" op var        left comb
//             | var op "(" var op var ")"        right comb
//   var      := "x1" | "x2" | "x3"
//   op       := any operation symbol of the OpSpace, e.g. "*" or "<" / ">"
//
// Whitespace is ignored. The printer writes every coefficient explicitly,
// e.g. "+1*(x1*x2)*x3 -1*x1*(x2*x3)", and round-trips through the parser.
Arity3Element parse_relation(std::string_view text, const OpSpace& ops);
std::string format_relation(const Arity3Element& e, const OpSpace& ops);
std::string format_monomial(const Monomial3& m, const OpSpace& ops);

}  // namespace opforge
