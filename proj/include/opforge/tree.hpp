#pragma once

// Planar binary tree monomials of a nonsymmetric operad, oriented rewriting to
// normal form, and overlap enumeration for confluence certification.
//
// Leaves are anonymous: the left-to-right leaf order is the argument order.
// Node labels are single lowercase letters; the ≺/≻ systems use x (≺) and
// y (≻), the L-operad uses z and t.

#include "opforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opforge {

class PlanarTree {
 public:
  /// The unit tree "1".
  PlanarTree() = default;

  static PlanarTree leaf() { return {}; }
  static PlanarTree node(char op, PlanarTree left, PlanarTree right);

  bool is_leaf() const { return node_ == nullptr; }
  char op() const;
  const PlanarTree& left() const;
  const PlanarTree& right() const;
  int arity() const;
  std::size_t hash() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b);
  /// Leaf first, then by label, left subtree, right subtree. Agrees with
  /// the lexicographic order of preorder ("Polish") spellings.
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct PlanarTreeHash {
  std::size_t operator()(const PlanarTree& t) const { return t.hash(); }
};

/// tree := "1" | label "(" tree "," tree ")"; "*" is accepted for a leaf so
/// rule patterns can be written as in print. Whitespace is ignored.
PlanarTree parse_tree(std::string_view text);
std::string to_string(const PlanarTree& t);

/// Every planar tree with `arity` leaves over `labels`, in tree order.
std::vector<PlanarTree> all_trees(int arity, std::string_view labels);

/// Path from the root: 'L'/'R' per step; "" is the root.
using Address = std::string;

/// Preorder addresses of internal nodes.
std::vector<Address> positions(const PlanarTree& t);
const PlanarTree& subtree_at(const PlanarTree& t, const Address& addr);
PlanarTree replace_at(const PlanarTree& t, const Address& addr, const PlanarTree& replacement);
/// Substitutes `args` into the leaves of `pattern`, left to right.
PlanarTree graft(const PlanarTree& pattern, const std::vector<PlanarTree>& args);
/// Grafts `t` into leaf number `leaf` (0-based) of `outer`.
PlanarTree graft_at_leaf(const PlanarTree& outer, int leaf, const PlanarTree& t);

/// Rational combination of planar trees, no zero coefficients.
class NsElement {
 public:
  using Terms = std::map<PlanarTree, Rat>;

  NsElement() = default;
  NsElement(const PlanarTree& t) { add(t, 1); }  // NOLINT: a monomial is an element

  void add(const PlanarTree& t, const Rat& c);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coefficient(const PlanarTree& t) const;

  NsElement& operator+=(const NsElement& other);
  NsElement& operator-=(const NsElement& other);
  NsElement& operator*=(const Rat& c);
  friend NsElement operator+(NsElement a, const NsElement& b) { return a += b; }
  friend NsElement operator-(NsElement a, const NsElement& b) { return a -= b; }
  friend NsElement operator*(const Rat& c, NsElement a) { return a *= c; }
  friend bool operator==(const NsElement&, const NsElement&) = default;

 private:
  Terms terms_;
};

/// Signed sum in tree order, e.g. "-1*y(1,x(1,1)) +1*y(y(1,1),1)"; "0" if
/// empty. parse_element accepts the same text (a leading "+" optional,
/// "c*" optional for c = 1).
std::string to_string(const NsElement& e);
NsElement parse_element(std::string_view text);

/// lhs → rhs. Every leaf of a pattern is a wildcard; linearity and leaf order
/// are therefore structural, and the constructor checks that all rhs terms
/// have the arity of lhs.
class RewriteRule {
 public:
  RewriteRule(std::string label, PlanarTree lhs, NsElement rhs);

  const std::string& label() const { return label_; }
  const PlanarTree& lhs() const { return lhs_; }
  const NsElement& rhs() const { return rhs_; }
  int arity() const { return lhs_.arity(); }

  /// Image of the lhs instance with the given wildcard bindings.
  NsElement instantiate(const std::vector<PlanarTree>& bindings) const;

 private:
  std::string label_;
  PlanarTree lhs_;
  NsElement rhs_;
};

struct RewriteSystem {
  std::string name;
  std::vector<RewriteRule> rules;
  /// Largest arity the rule list is complete for (0 = finite system).
  int arity_cap = 0;
};

/// Checks that rule left-hand sides are pairwise distinct.
void validate(const RewriteSystem& sys);

/// Wildcard bindings if `rule.lhs()` matches `t` at `addr`.
std::optional<std::vector<PlanarTree>> match_at(const PlanarTree& t, const RewriteRule& rule,
                                                const Address& addr);
/// Rule-major, then preorder: the first applicable (rule, position).
struct Redex {
  std::size_t rule = 0;
  Address addr;
  std::vector<PlanarTree> bindings;
};
std::optional<Redex> find_redex(const PlanarTree& t, const RewriteSystem& sys);

bool is_normal(const PlanarTree& t, const RewriteSystem& sys);
/// Rewrites `t` at `addr` with `rule` (which must match there).
NsElement rewrite_at(const PlanarTree& t, const RewriteRule& rule, const Address& addr);
std::optional<NsElement> rewrite_once(const PlanarTree& t, const RewriteSystem& sys);

struct StepCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultStepCap = 10000;

/// Fixed point of rewrite_once on every term. Throws StepCapExceeded once
/// more than step_cap · max(1, |e|) rewrite steps have been taken.
NsElement normalize(const NsElement& e, const RewriteSystem& sys, long step_cap = kDefaultStepCap);

struct Overlap {
  std::size_t rule_i = 0;  // matches at the root of `tree`
  std::size_t rule_j = 0;  // matches at `pos_j`
  PlanarTree tree;
  Address pos_i;           // always the root
  Address pos_j;
};

/// Minimal trees of arity ≤ max_arity on which two left-hand sides occur
/// sharing at least one internal node (trivial self-overlaps excluded).
std::vector<Overlap> overlaps(const RewriteSystem& sys, int max_arity);

struct OverlapCheck {
  Overlap overlap;
  NsElement left_normal;   // normal form after rule_i at the root
  NsElement right_normal;  // normal form after rule_j at pos_j
  bool pass = false;
};

struct ConfluenceReport {
  std::vector<OverlapCheck> checks;
  bool all_pass() const;
  std::size_t failures() const;
};

ConfluenceReport check_confluence(const RewriteSystem& sys, int max_arity, long step_cap = kDefaultStepCap);

/// Normalizes every tree of arity ≤ max_arity over `labels`; returns false if
/// some tree exceeds the step cap.
bool check_termination(const RewriteSystem& sys, int max_arity, std::string_view labels,
                       long step_cap = kDefaultStepCap);

}  // namespace opforge

template <>
struct std::hash<opforge::PlanarTree> {
  std::size_t operator()(const opforge::PlanarTree& t) const { return t.hash(); }
};
