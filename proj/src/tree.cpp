#include "opforge/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace opforge {

// ------------------------------------------------------------- PlanarTree

struct PlanarTree::Node {
  char op;
  PlanarTree left;
  PlanarTree right;
  int arity;
  std::size_t hash;
};

namespace {
constexpr std::size_t kLeafHash = 0x51ed270b27c3a5f1ULL;
}

PlanarTree PlanarTree::node(char op, PlanarTree left, PlanarTree right) {
  const int arity = left.arity() + right.arity();
  std::size_t h = static_cast<std::size_t>(static_cast<unsigned char>(op)) * 0x9e3779b97f4a7c15ULL;
  h ^= left.hash() + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  h ^= right.hash() * 0xc2b2ae3d27d4eb4fULL + 0x165667b19e3779f9ULL + (h << 6) + (h >> 2);
  PlanarTree t;
  t.node_ = std::make_shared<const Node>(Node{op, std::move(left), std::move(right), arity, h});
  return t;
}

char PlanarTree::op() const {
  if (!node_) throw std::logic_error("leaf has no operation");
  return node_->op;
}

const PlanarTree& PlanarTree::left() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->left;
}

const PlanarTree& PlanarTree::right() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->right;
}

int PlanarTree::arity() const { return node_ ? node_->arity : 1; }

std::size_t PlanarTree::hash() const { return node_ ? node_->hash : kLeafHash; }

bool operator==(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->arity != b.node_->arity || a.node_->op != b.node_->op)
    return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.node_->op <=> b.node_->op; c != 0) return c;
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse_all() {
    PlanarTree t = parse();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

  PlanarTree parse() {
    skip();
    const char c = peek();
    if (c == '1' || c == '*') {
      ++pos_;
      return PlanarTree::leaf();
    }
    if (!std::islower(static_cast<unsigned char>(c))) fail("expected '1' or an operation label");
    ++pos_;
    expect('(');
    PlanarTree l = parse();
    expect(',');
    PlanarTree r = parse();
    expect(')');
    return PlanarTree::node(c, std::move(l), std::move(r));
  }

  std::size_t pos() const { return pos_; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_tree(const PlanarTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += '1';
    return;
  }
  out += t.op();
  out += '(';
  write_tree(t.left(), out);
  out += ',';
  write_tree(t.right(), out);
  out += ')';
}

}  // namespace

PlanarTree parse_tree(std::string_view text) { return TreeParser(text).parse_all(); }

std::string to_string(const PlanarTree& t) {
  std::string s;
  write_tree(t, s);
  return s;
}

std::vector<PlanarTree> all_trees(int arity, std::string_view labels) {
  if (arity < 1) throw std::invalid_argument("all_trees: arity must be >= 1");
  std::vector<std::vector<PlanarTree>> by_arity(static_cast<std::size_t>(arity) + 1);
  by_arity[1] = {PlanarTree::leaf()};
  for (int n = 2; n <= arity; ++n) {
    auto& level = by_arity[static_cast<std::size_t>(n)];
    for (char op : labels)
      for (int k = 1; k < n; ++k)
        for (const auto& l : by_arity[static_cast<std::size_t>(k)])
          for (const auto& r : by_arity[static_cast<std::size_t>(n - k)]) level.push_back(PlanarTree::node(op, l, r));
    std::sort(level.begin(), level.end());
  }
  return by_arity[static_cast<std::size_t>(arity)];
}

// -------------------------------------------------------------- addresses

namespace {

void collect_positions(const PlanarTree& t, Address& here, std::vector<Address>& out) {
  if (t.is_leaf()) return;
  out.push_back(here);
  here.push_back('L');
  collect_positions(t.left(), here, out);
  here.back() = 'R';
  collect_positions(t.right(), here, out);
  here.pop_back();
}

PlanarTree replace_from(const PlanarTree& t, const Address& addr, std::size_t depth, const PlanarTree& repl) {
  if (depth == addr.size()) return repl;
  if (t.is_leaf()) throw std::invalid_argument("invalid address '" + addr + "'");
  if (addr[depth] == 'L') return PlanarTree::node(t.op(), replace_from(t.left(), addr, depth + 1, repl), t.right());
  if (addr[depth] == 'R') return PlanarTree::node(t.op(), t.left(), replace_from(t.right(), addr, depth + 1, repl));
  throw std::invalid_argument("invalid address '" + addr + "'");
}

PlanarTree graft_leaves(const PlanarTree& pattern, const std::vector<PlanarTree>& args, std::size_t& next) {
  if (pattern.is_leaf()) return args[next++];
  PlanarTree l = graft_leaves(pattern.left(), args, next);
  PlanarTree r = graft_leaves(pattern.right(), args, next);
  return PlanarTree::node(pattern.op(), std::move(l), std::move(r));
}

}  // namespace

std::vector<Address> positions(const PlanarTree& t) {
  std::vector<Address> out;
  Address here;
  collect_positions(t, here, out);
  return out;
}

const PlanarTree& subtree_at(const PlanarTree& t, const Address& addr) {
  const PlanarTree* cur = &t;
  for (char step : addr) {
    if (cur->is_leaf() || (step != 'L' && step != 'R')) throw std::invalid_argument("invalid address '" + addr + "'");
    cur = step == 'L' ? &cur->left() : &cur->right();
  }
  return *cur;
}

PlanarTree replace_at(const PlanarTree& t, const Address& addr, const PlanarTree& replacement) {
  return replace_from(t, addr, 0, replacement);
}

PlanarTree graft(const PlanarTree& pattern, const std::vector<PlanarTree>& args) {
  if (static_cast<int>(args.size()) != pattern.arity())
    throw std::invalid_argument("graft: argument count differs from pattern arity");
  std::size_t next = 0;
  return graft_leaves(pattern, args, next);
}

PlanarTree graft_at_leaf(const PlanarTree& outer, int leaf, const PlanarTree& t) {
  if (leaf < 0 || leaf >= outer.arity()) throw std::invalid_argument("graft_at_leaf: leaf index out of range");
  std::vector<PlanarTree> args(static_cast<std::size_t>(outer.arity()));
  args[static_cast<std::size_t>(leaf)] = t;
  return graft(outer, args);
}

// -------------------------------------------------------------- NsElement

void NsElement::add(const PlanarTree& t, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat NsElement::coefficient(const PlanarTree& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

NsElement& NsElement::operator+=(const NsElement& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

NsElement& NsElement::operator-=(const NsElement& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

NsElement& NsElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

std::string to_string(const NsElement& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : e.terms()) {
    if (!s.empty()) s += ' ';
    s += c > 0 ? "+" + format_rat(c) : format_rat(c);
    s += '*';
    s += to_string(t);
  }
  return s;
}

NsElement parse_element(std::string_view text) {
  NsElement e;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return e;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    Rat sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw std::invalid_argument("element parse error: expected '+' or '-' in '" + std::string(text) + "'");
    }
    // A run of digits followed by '*' is a coefficient; a lone "1" is a leaf.
    Rat coeff = 1;
    std::size_t end = pos;
    while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/')) ++end;
    std::size_t after = end;
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (end > pos && after < text.size() && text[after] == '*') {
      coeff = parse_rat(text.substr(pos, end - pos));
      pos = after + 1;
    }
    // Parse one tree starting at pos.
    std::size_t depth = 0;
    std::size_t stop = pos;
    skip();
    stop = pos;
    do {
      if (stop >= text.size()) throw std::invalid_argument("element parse error: unterminated tree in '" + std::string(text) + "'");
      if (text[stop] == '(') ++depth;
      if (text[stop] == ')') --depth;
      ++stop;
    } while (depth > 0 || (stop < text.size() && text[stop] == '('));
    e.add(parse_tree(text.substr(pos, stop - pos)), sign * coeff);
    pos = stop;
    first = false;
  }
  if (first) throw std::invalid_argument("element parse error: empty input");
  return e;
}

// ------------------------------------------------------------------ rules

RewriteRule::RewriteRule(std::string label, PlanarTree lhs, NsElement rhs)
    : label_(std::move(label)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.is_leaf()) throw std::invalid_argument("rule '" + label_ + "': left-hand side must not be a leaf");
  for (const auto& [t, c] : rhs_.terms()) {
    if (t.arity() != lhs_.arity())
      throw std::invalid_argument("rule '" + label_ + "': right-hand term " + to_string(t) + " changes arity");
    if (t == lhs_) throw std::invalid_argument("rule '" + label_ + "': right-hand side contains the left-hand side");
  }
}

NsElement RewriteRule::instantiate(const std::vector<PlanarTree>& bindings) const {
  NsElement out;
  for (const auto& [pattern, c] : rhs_.terms()) out.add(graft(pattern, bindings), c);
  return out;
}

void validate(const RewriteSystem& sys) {
  std::set<PlanarTree> seen;
  for (const auto& r : sys.rules)
    if (!seen.insert(r.lhs()).second)
      throw std::invalid_argument("system '" + sys.name + "': duplicate left-hand side " + to_string(r.lhs()));
}

namespace {

bool match(const PlanarTree& pattern, const PlanarTree& t, std::vector<PlanarTree>& bindings) {
  if (pattern.is_leaf()) {
    bindings.push_back(t);
    return true;
  }
  if (t.is_leaf() || t.op() != pattern.op() || t.arity() < pattern.arity()) return false;
  return match(pattern.left(), t.left(), bindings) && match(pattern.right(), t.right(), bindings);
}

}  // namespace

std::optional<std::vector<PlanarTree>> match_at(const PlanarTree& t, const RewriteRule& rule, const Address& addr) {
  const PlanarTree& sub = subtree_at(t, addr);
  std::vector<PlanarTree> bindings;
  bindings.reserve(static_cast<std::size_t>(rule.arity()));
  if (!match(rule.lhs(), sub, bindings)) return std::nullopt;
  return bindings;
}

std::optional<Redex> find_redex(const PlanarTree& t, const RewriteSystem& sys) {
  if (t.is_leaf()) return std::nullopt;
  const std::vector<Address> where = positions(t);
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    const RewriteRule& rule = sys.rules[i];
    if (rule.arity() > t.arity()) continue;
    for (const auto& addr : where)
      if (auto b = match_at(t, rule, addr)) return Redex{i, addr, std::move(*b)};
  }
  return std::nullopt;
}

bool is_normal(const PlanarTree& t, const RewriteSystem& sys) { return !find_redex(t, sys).has_value(); }

NsElement rewrite_at(const PlanarTree& t, const RewriteRule& rule, const Address& addr) {
  const auto bindings = match_at(t, rule, addr);
  if (!bindings) throw std::invalid_argument("rule '" + rule.label() + "' does not match " + to_string(t) + " at '" + addr + "'");
  NsElement out;
  for (const auto& [pattern, c] : rule.rhs().terms()) out.add(replace_at(t, addr, graft(pattern, *bindings)), c);
  return out;
}

std::optional<NsElement> rewrite_once(const PlanarTree& t, const RewriteSystem& sys) {
  const auto redex = find_redex(t, sys);
  if (!redex) return std::nullopt;
  NsElement out;
  for (const auto& [pattern, c] : sys.rules[redex->rule].rhs().terms())
    out.add(replace_at(t, redex->addr, graft(pattern, redex->bindings)), c);
  return out;
}

NsElement normalize(const NsElement& e, const RewriteSystem& sys, long step_cap) {
  if (step_cap <= 0) throw std::invalid_argument("normalize: step_cap must be positive");
  const long budget = step_cap * std::max<long>(1, static_cast<long>(e.size()));
  std::unordered_map<PlanarTree, std::optional<NsElement>, PlanarTreeHash> one_step;
  std::map<PlanarTree, Rat> pending(e.terms().begin(), e.terms().end());
  NsElement result;
  long steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const PlanarTree& t = node.key();
    const Rat& c = node.mapped();
    auto cached = one_step.find(t);
    if (cached == one_step.end()) cached = one_step.emplace(t, rewrite_once(t, sys)).first;
    if (!cached->second) {
      result.add(t, c);
      continue;
    }
    if (++steps > budget)
      throw StepCapExceeded("normalize: step cap exceeded in system '" + sys.name + "' (suspected non-termination)");
    for (const auto& [s, d] : cached->second->terms()) {
      auto [it, inserted] = pending.try_emplace(s, c * d);
      if (!inserted) {
        it->second += c * d;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return result;
}

// --------------------------------------------------------------- overlaps

namespace {

std::optional<PlanarTree> merge(const PlanarTree& a, const PlanarTree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  if (a.op() != b.op()) return std::nullopt;
  auto l = merge(a.left(), b.left());
  if (!l) return std::nullopt;
  auto r = merge(a.right(), b.right());
  if (!r) return std::nullopt;
  return PlanarTree::node(a.op(), std::move(*l), std::move(*r));
}

}  // namespace

std::vector<Overlap> overlaps(const RewriteSystem& sys, int max_arity) {
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    const PlanarTree& outer = sys.rules[i].lhs();
    for (const Address& p : positions(outer)) {
      for (std::size_t j = 0; j < sys.rules.size(); ++j) {
        if (p.empty() && j <= i) continue;  // root/root: count each unordered pair once
        const auto merged = merge(subtree_at(outer, p), sys.rules[j].lhs());
        if (!merged) continue;
        PlanarTree tree = replace_at(outer, p, *merged);
        if (tree.arity() > max_arity) continue;
        out.push_back({i, j, std::move(tree), Address{}, p});
      }
    }
  }
  return out;
}

bool ConfluenceReport::all_pass() const { return failures() == 0; }

std::size_t ConfluenceReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

ConfluenceReport check_confluence(const RewriteSystem& sys, int max_arity, long step_cap) {
  ConfluenceReport report;
  for (auto& ov : overlaps(sys, max_arity)) {
    OverlapCheck check;
    check.left_normal = normalize(rewrite_at(ov.tree, sys.rules[ov.rule_i], ov.pos_i), sys, step_cap);
    check.right_normal = normalize(rewrite_at(ov.tree, sys.rules[ov.rule_j], ov.pos_j), sys, step_cap);
    check.pass = check.left_normal == check.right_normal;
    check.overlap = std::move(ov);
    report.checks.push_back(std::move(check));
  }
  return report;
}

bool check_termination(const RewriteSystem& sys, int max_arity, std::string_view labels, long step_cap) {
  try {
    for (int n = 1; n <= max_arity; ++n)
      for (const auto& t : all_trees(n, labels)) normalize(NsElement(t), sys, step_cap);
  } catch (const StepCapExceeded&) {
    return false;
  }
  return true;
}

}  // namespace opforge
