#include "opforge/systems.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace opforge {

const std::vector<std::string>& system_names() {
  static const std::vector<std::string> names{"Zin", "Bicom", "Flex", "AntiFlex", "L"};
  return names;
}

namespace {

void require_system(std::string_view name) {
  for (const auto& s : system_names())
    if (s == name) return;
  throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

RewriteRule rule(std::string label, std::string_view lhs, std::string_view rhs) {
  return RewriteRule(std::move(label), parse_tree(lhs), parse_element(rhs));
}

// x(X_{k-1}, *) iterated n times over `base`.
PlanarTree left_comb_over(char op, PlanarTree base, int n) {
  for (int k = 0; k < n; ++k) base = PlanarTree::node(op, std::move(base), PlanarTree::leaf());
  return base;
}

RewriteRule bicom_rule(char a, char b, int n) {
  const PlanarTree leaf;
  const PlanarTree lhs = PlanarTree::node(a, leaf, left_comb_over(a, PlanarTree::node(b, leaf, leaf), n));
  const PlanarTree rhs = left_comb_over(a, PlanarTree::node(b, PlanarTree::node(a, leaf, leaf), leaf), n);
  return RewriteRule(std::string(a == 'x' ? "f" : "g") + std::to_string(n), lhs, NsElement(rhs));
}

const char* const kFlex1Lhs = "y(*,y(*,*))";
const char* const kFlex1Rhs = "x(*,x(*,*)) + y(y(*,*),*) - x(x(*,*),*)";
const char* const kFlex2Lhs = "y(*,x(*,x(*,*)))";
const char* const kFlex2Rhs =
    "y(*,x(x(*,*),*)) + x(*,x(*,y(*,*))) - x(*,x(y(*,*),*)) - y(x(*,x(*,*)),*)"
    " + x(y(*,*),x(*,*)) - x(x(*,*),y(*,*)) + x(x(*,y(*,*)),*)"
    " + y(x(x(*,*),*),*) - x(x(y(*,*),*),*)";

}  // namespace

std::string_view system_labels(std::string_view name) {
  require_system(name);
  return name == "L" ? "zt" : "xy";
}

RewriteRule derive_second_rule(const RewriteRule& first, std::string label) {
  const PlanarTree yy = parse_tree("y(1,y(1,1))");
  if (!(first.lhs() == yy)) throw std::invalid_argument("derive_second_rule: left-hand side must be y(*,y(*,*))");
  const RewriteSystem alone{"", {first}, 0};
  const PlanarTree overlap = replace_at(yy, "R", yy);
  const NsElement d = normalize(rewrite_at(overlap, first, ""), alone) - normalize(rewrite_at(overlap, first, "R"), alone);
  const PlanarTree target = parse_tree("y(1,x(1,x(1,1)))");
  const Rat c = d.coefficient(target);
  if (c == 0) throw std::logic_error("derive_second_rule: consequence does not involve y(*,x(*,x(*,*)))");
  NsElement rhs = d - c * NsElement(target);
  rhs *= Rat(-1) / c;
  return RewriteRule(std::move(label), target, std::move(rhs));
}

RewriteSystem system(std::string_view name, int arity_cap) {
  require_system(name);
  RewriteSystem sys;
  sys.name = std::string(name);
  if (name == "Zin") {
    sys.rules = {rule("Zin1", "x(*,y(*,*))", "y(x(*,*),*)"),
                 rule("Zin2", "x(*,x(*,*))", "x(y(*,*),*) + x(x(*,*),*)"),
                 rule("Zin3", "y(*,y(*,*))", "-y(*,x(*,*)) + y(y(*,*),*)")};
  } else if (name == "Bicom") {
    if (arity_cap < 3) throw std::invalid_argument("system Bicom: arity cap must be >= 3");
    sys.arity_cap = arity_cap;
    for (int n = 0; n + 3 <= arity_cap; ++n) {
      sys.rules.push_back(bicom_rule('x', 'y', n));
      sys.rules.push_back(bicom_rule('y', 'x', n));
    }
  } else if (name == "Flex") {
    sys.rules = {rule("Flex1", kFlex1Lhs, kFlex1Rhs), rule("Flex2", kFlex2Lhs, kFlex2Rhs)};
  } else if (name == "AntiFlex") {
    RewriteRule first = rule("AntiFlex1", "y(*,y(*,*))", "y(y(*,*),*) + x(x(*,*),*) - x(*,x(*,*))");
    RewriteRule second = derive_second_rule(first, "AntiFlex2");
    sys.rules = {std::move(first), std::move(second)};
  } else {
    sys.rules = {rule("L1", "t(*,z(*,*))", "z(t(*,*),*)")};
  }
  validate(sys);
  return sys;
}

// ---------------------------------------------------------------- grammar

namespace {

// A class of trees: optionally the unit, then the listed productions
// op(Left, Right) summed over all arity splits, left arity ascending.
struct Production {
  char op;
  char left;
  char right;
};

struct ClassDef {
  bool unit = true;
  std::vector<Production> productions;
};

using Grammar = std::map<char, ClassDef>;

// Start symbol is 'N' (or 'S' for L). '1' is the unit alone.
const Grammar& grammar(std::string_view name) {
  static const std::map<std::string, Grammar, std::less<>> all = [] {
    std::map<std::string, Grammar, std::less<>> g;
    g["Zin"] = {{'N', {true, {{'x', 'N', '1'}, {'y', 'N', '1'}, {'y', 'N', 'P'}}}},
                {'P', {false, {{'x', 'N', '1'}}}},
                {'1', {true, {}}}};
    g["Bicom"] = {{'N', {true, {{'x', 'N', 'X'}, {'y', 'N', 'Y'}}}},
                  {'X', {true, {{'x', 'X', 'X'}}}},
                  {'Y', {true, {{'y', 'Y', 'Y'}}}}};
    g["Flex"] = {{'N', {true, {{'x', 'N', 'N'}, {'y', 'N', 'R'}}}},
                 {'R', {true, {{'x', 'N', 'Q'}}}},
                 {'Q', {true, {{'y', 'N', 'R'}}}}};
    g["AntiFlex"] = g["Flex"];
    g["L"] = {{'S', {true, {{'z', 'S', 'S'}, {'t', 'S', 'U'}}}}, {'U', {true, {{'t', 'S', 'U'}}}}};
    return g;
  }();
  require_system(name);
  return all.find(name)->second;
}

char start_symbol(std::string_view name) { return name == "L" ? 'S' : 'N'; }

class Enumerator {
 public:
  explicit Enumerator(const Grammar& g) : g_(g) {}

  const std::vector<PlanarTree>& get(char cls, int n) {
    const auto key = std::make_pair(cls, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<PlanarTree> out;
    const ClassDef& def = g_.at(cls);
    if (n == 1) {
      if (def.unit) out.push_back(PlanarTree::leaf());
    } else {
      for (const auto& p : def.productions)
        for (int a = 1; a < n; ++a) {
          const auto& lefts = get(p.left, a);
          const auto& rights = get(p.right, n - a);
          for (const auto& u : lefts)
            for (const auto& v : rights) out.push_back(PlanarTree::node(p.op, u, v));
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const Grammar& g_;
  std::map<std::pair<char, int>, std::vector<PlanarTree>> memo_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw std::overflow_error("count overflows 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) throw std::overflow_error("count overflows 64 bits");
  return a + b;
}

class Counter {
 public:
  explicit Counter(const Grammar& g) : g_(g) {}

  std::uint64_t get(char cls, int n) {
    const auto key = std::make_pair(cls, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    const ClassDef& def = g_.at(cls);
    if (n == 1) {
      total = def.unit ? 1 : 0;
    } else {
      for (const auto& p : def.productions)
        for (int a = 1; a < n; ++a) total = checked_add(total, checked_mul(get(p.left, a), get(p.right, n - a)));
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  const Grammar& g_;
  std::map<std::pair<char, int>, std::uint64_t> memo_;
};

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("value does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_arity(int n) {
  if (n < 1) throw std::invalid_argument("arity must be >= 1");
}

}  // namespace

std::vector<PlanarTree> normal_forms(std::string_view name, int n) {
  require_arity(n);
  Enumerator e(grammar(name));
  return e.get(start_symbol(name), n);
}

std::uint64_t grammar_count(std::string_view name, int n) {
  require_arity(n);
  Counter c(grammar(name));
  return c.get(start_symbol(name), n);
}

std::uint64_t dim_formula(std::string_view name, int n) {
  require_system(name);
  require_arity(n);
  if (name == "Zin") return to_u64(binomial(2 * n, n) / (n + 1));
  if (name == "Bicom") return to_u64(binomial(2 * n - 2, n - 1));
  return to_u64(binomial(3 * n - 2, n - 1) / n);
}

std::uint64_t ternary_pair_count(int n) {
  require_arity(n);
  BigInt total = 0;
  for (int i = 0; i <= n - 1; ++i) {
    const int j = n - 1 - i;
    total += (binomial(3 * i, i) / (2 * i + 1)) * (binomial(3 * j, j) / (2 * j + 1));
  }
  return to_u64(total);
}

OperadPresentation nc_presentation(std::string_view name) {
  std::string base(name);
  if (base.rfind("Nc", 0) == 0) base = base.substr(2);
  if (base != "Nov" && base != "Zin" && base != "Bicom" && base != "Flex" && base != "AntiFlex")
    throw std::invalid_argument("no noncommutative presentation for '" + std::string(name) + "'");
  return catalog("Nc" + base);
}

}  // namespace opforge
