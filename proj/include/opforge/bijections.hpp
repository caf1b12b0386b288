#pragma once

// Combinatorial models of the normal forms:
//   Zin   arity n  <->  planar binary trees with n internal vertices
//   Bicom arity n  <->  words with n-1 letters E and n-1 letters N
//   Flex  arity n  <->  normal trees of the L-operad (ops z, t)

#include "opforge/tree.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opforge {

/// Full parenthesization of bullets: "•" or "(AB)".
class Pbt {
 public:
  Pbt() = default;  // the bullet
  static Pbt bullet() { return {}; }
  static Pbt pair(const Pbt& left, const Pbt& right);

  bool is_bullet() const { return shape_.is_leaf(); }
  Pbt left() const;
  Pbt right() const;
  int internal_vertices() const { return shape_.arity() - 1; }

  friend bool operator==(const Pbt&, const Pbt&) = default;
  friend auto operator<=>(const Pbt&, const Pbt&) = default;

 private:
  explicit Pbt(PlanarTree shape) : shape_(std::move(shape)) {}
  PlanarTree shape_;
};

std::string to_string(const Pbt& b);
/// Accepts "•" or "*" for a bullet; whitespace is ignored.
Pbt parse_pbt(std::string_view text);
std::vector<Pbt> all_pbts(int internal_vertices);

Pbt zin_to_pbt(const PlanarTree& t);
PlanarTree pbt_to_zin(const Pbt& b);

// EN words.
bool is_balanced(std::string_view w);
bool is_dyck(std::string_view w);            // every prefix has #E >= #N
bool is_reflected_dyck(std::string_view w);  // every prefix has #N >= #E
/// All balanced words with m letters of each kind, lexicographic (E < N).
std::vector<std::string> balanced_words(int m);

/// δx(x(a,b)) = E δx(a) N δx(b) on trees built from x alone; δy likewise
/// with N, E on y-trees.
std::string delta_x(const PlanarTree& t);
std::string delta_y(const PlanarTree& t);
PlanarTree delta_x_inverse(std::string_view w);
PlanarTree delta_y_inverse(std::string_view w);

/// x-only trees go through δx, y-only trees through δy, and every other
/// normal form is read along its left spine: x(u,a) ↦ w(u) E δx(a) N,
/// y(u,b) ↦ w(u) N δy(b) E.
std::string bicom_to_word(const PlanarTree& t);
PlanarTree word_to_bicom(std::string_view w);
/// The spine reading applied everywhere, pure combs included.
std::string bicom_spine_word(const PlanarTree& t);

PlanarTree flex_to_L(const PlanarTree& t);
PlanarTree L_to_flex(const PlanarTree& s);

/// (tree, image) pairs for the arity-n normal forms of Zin, Bicom, Flex or
/// AntiFlex, in normal_forms order.
std::vector<std::pair<std::string, std::string>> correspondence(std::string_view system, int n);
/// One "<tree>\t<image>" line per pair.
std::string format_correspondence(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace opforge
