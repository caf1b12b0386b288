#include "opforge/arity3.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opforge {

// ---------------------------------------------------------------- OpSpace

OpSpace::OpSpace(std::vector<OpSpec> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (op.symbol.size() != 1)
      throw std::invalid_argument("operation symbol must be a single character: '" + op.symbol + "'");
    const char c = op.symbol[0];
    if (std::isalnum(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) ||
        c == '(' || c == ')' || c == '+' || c == '-' || c == '/')
      throw std::invalid_argument("reserved operation symbol: '" + op.symbol + "'");
    if (!seen.insert(op.symbol).second)
      throw std::invalid_argument("duplicate operation symbol: '" + op.symbol + "'");
  }
}

OpSpace OpSpace::single_paired() { return OpSpace({{"*", Symmetry::Paired}}); }

OpSpace OpSpace::two_paired() {
  return OpSpace({{"<", Symmetry::Paired}, {">", Symmetry::Paired}});
}

int OpSpace::dim() const {
  int d = 0;
  for (const auto& op : ops_) d += op.symmetry == Symmetry::Paired ? 2 : 1;
  return d;
}

std::optional<int> OpSpace::find(char symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].symbol[0] == symbol) return static_cast<int>(i);
  return std::nullopt;
}

// -------------------------------------------------------------- monomials

int outside_leaf(const Monomial3& m) {
  return m.shape == Shape::LeftComb ? m.leaves[2] : m.leaves[0];
}

namespace {

int swap_sign(const OpSpace& ops, int op) {
  switch (ops[static_cast<std::size_t>(op)].symmetry) {
    case Symmetry::Paired: return 0;
    case Symmetry::Symmetric: return 1;
    case Symmetry::Antisymmetric: return -1;
  }
  return 0;
}

void validate(const Monomial3& m, const OpSpace& ops) {
  Leaves sorted = m.leaves;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Leaves{1, 2, 3}) throw std::invalid_argument("monomial leaves must permute x1, x2, x3");
  const int n = static_cast<int>(ops.size());
  if (m.outer < 0 || m.outer >= n || m.inner < 0 || m.inner >= n)
    throw std::invalid_argument("monomial uses an operation outside its OpSpace");
}

}  // namespace

SignedMonomial canonicalize(const Monomial3& m, const OpSpace& ops) {
  validate(m, ops);
  SignedMonomial out{m, 1};
  Monomial3& r = out.monomial;

  if (const int s = swap_sign(ops, r.inner); s != 0) {
    int& a = r.shape == Shape::LeftComb ? r.leaves[0] : r.leaves[1];
    int& b = r.shape == Shape::LeftComb ? r.leaves[1] : r.leaves[2];
    if (a > b) {
      std::swap(a, b);
      out.sign *= s;
    }
  }
  if (const int s = swap_sign(ops, r.outer); s != 0) {
    const auto [l0, l1, l2] = r.leaves;
    if (r.shape == Shape::LeftComb && l2 < std::min(l0, l1)) {
      r.shape = Shape::RightComb;
      r.leaves = {l2, l0, l1};
      out.sign *= s;
    } else if (r.shape == Shape::RightComb && std::min(l1, l2) < l0) {
      r.shape = Shape::LeftComb;
      r.leaves = {l1, l2, l0};
      out.sign *= s;
    }
  }
  return out;
}

// ------------------------------------------------------------------- S3

const std::vector<Permutation>& s3_elements() {
  static const std::vector<Permutation> elements = [] {
    std::vector<Permutation> all;
    Permutation p{1, 2, 3};
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
  }();
  return elements;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  Permutation out{};
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)] - 1)];
  return out;
}

Permutation transposition(int i, int j) {
  Permutation p{1, 2, 3};
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return p;
}

// -------------------------------------------------------- Arity3Element

void Arity3Element::accumulate(const Monomial3& canonical, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(canonical, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Arity3Element::add(const OpSpace& ops, const Monomial3& m, const Rat& c) {
  const auto s = canonicalize(m, ops);
  accumulate(s.monomial, s.sign == 1 ? c : Rat(-c));
}

Rat Arity3Element::coefficient(const Monomial3& canonical) const {
  const auto it = terms_.find(canonical);
  return it == terms_.end() ? Rat(0) : it->second;
}

Arity3Element& Arity3Element::operator+=(const Arity3Element& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

Arity3Element& Arity3Element::operator-=(const Arity3Element& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

Arity3Element& Arity3Element::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

// ------------------------------------------------------------- basis3

std::vector<Monomial3> basis3(const OpSpace& ops) {
  std::set<Monomial3> canonical;
  const int n = static_cast<int>(ops.size());
  for (Shape shape : {Shape::LeftComb, Shape::RightComb})
    for (const Permutation& leaves : s3_elements())
      for (int outer = 0; outer < n; ++outer)
        for (int inner = 0; inner < n; ++inner)
          canonical.insert(canonicalize({shape, leaves, outer, inner}, ops).monomial);
  return {canonical.begin(), canonical.end()};
}

Basis3::Basis3(OpSpace ops) : ops_(std::move(ops)), monomials_(basis3(ops_)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], static_cast<Index>(i));
}

Index Basis3::index_of(const Monomial3& canonical) const {
  const auto it = index_.find(canonical);
  if (it == index_.end()) throw std::invalid_argument("monomial is not a canonical basis element");
  return it->second;
}

Vector<Rat> Basis3::coords(const Arity3Element& e) const {
  Vector<Rat> v = Vector<Rat>::Zero(size());
  for (const auto& [m, c] : e.terms()) v(index_of(m)) = c;
  return v;
}

Arity3Element Basis3::element(const Vector<Rat>& v) const {
  if (v.size() != size()) throw std::invalid_argument("coordinate vector has wrong length");
  Arity3Element e;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) e.add(ops_, monomials_[static_cast<std::size_t>(i)], v(i));
  return e;
}

std::vector<Arity3Element> Basis3::elements(const Subspace<Rat>& s) const {
  std::vector<Arity3Element> out;
  out.reserve(static_cast<std::size_t>(s.dim()));
  for (Index i = 0; i < s.dim(); ++i) out.push_back(element(s.basis_vector(i)));
  return out;
}

Subspace<Rat> Basis3::span(const std::vector<Arity3Element>& elements) const {
  std::vector<Vector<Rat>> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.push_back(coords(e));
  return opforge::span(rows, size());
}

// ------------------------------------------------------------ action

Arity3Element act(const Permutation& sigma, const Arity3Element& e, const OpSpace& ops) {
  Arity3Element out;
  for (const auto& [m, c] : e.terms()) {
    Monomial3 image = m;
    for (int& leaf : image.leaves) leaf = sigma[static_cast<std::size_t>(leaf - 1)];
    out.add(ops, image, c);
  }
  return out;
}

Subspace<Rat> s3_closure(const std::vector<Arity3Element>& gens, const OpSpace& ops) {
  const Basis3 basis(ops);
  std::vector<Arity3Element> orbit;
  orbit.reserve(gens.size() * 6);
  for (const auto& g : gens)
    for (const auto& sigma : s3_elements()) orbit.push_back(act(sigma, g, ops));
  return basis.span(orbit);
}

Subspace<Rat> relation_space(const OperadPresentation& p) { return s3_closure(p.relations, p.ops); }

Index quotient_dim3(const OperadPresentation& p) {
  return Basis3(p.ops).size() - relation_space(p).dim();
}

// ------------------------------------------------------------- parsing

namespace {

class RelationParser {
 public:
  RelationParser(std::string_view text, const OpSpace& ops) : text_(text), ops_(ops) {}

  Arity3Element parse() {
    Arity3Element e;
    skip();
    if (peek() == '0') {
      ++pos_;
      skip();
      if (pos_ != text_.size()) fail("trailing input after 0");
      return e;
    }
    bool first = true;
    while (pos_ < text_.size()) {
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Rat coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_coefficient();
        expect('*');
      }
      const Monomial3 m = parse_monomial();
      e.add(ops_, m, sign * coeff);
      first = false;
      skip();
    }
    if (first) fail("empty relation");
    return e;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("relation parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in '" + std::string(text_) + "'");
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  Rat parse_coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    return parse_rat(text_.substr(start, pos_ - start));
  }

  int parse_var() {
    skip();
    if (peek() != 'x') fail("expected variable x1, x2 or x3");
    ++pos_;
    const char d = peek();
    if (d < '1' || d > '3') fail("variable index must be 1, 2 or 3");
    ++pos_;
    skip();
    return d - '0';
  }

  int parse_op() {
    skip();
    const auto op = ops_.find(peek());
    if (!op) fail(std::string("unknown operation symbol '") + peek() + "'");
    ++pos_;
    skip();
    return *op;
  }

  Monomial3 parse_monomial() {
    Monomial3 m;
    skip();
    if (peek() == '(') {
      ++pos_;
      const int a = parse_var();
      m.inner = parse_op();
      const int b = parse_var();
      expect(')');
      m.outer = parse_op();
      const int c = parse_var();
      m.shape = Shape::LeftComb;
      m.leaves = {a, b, c};
    } else {
      const int a = parse_var();
      m.outer = parse_op();
      expect('(');
      const int b = parse_var();
      m.inner = parse_op();
      const int c = parse_var();
      expect(')');
      m.shape = Shape::RightComb;
      m.leaves = {a, b, c};
    }
    return m;
  }

  std::string_view text_;
  const OpSpace& ops_;
  std::size_t pos_ = 0;
};

}  // namespace

Arity3Element parse_relation(std::string_view text, const OpSpace& ops) {
  return RelationParser(text, ops).parse();
}

std::string format_monomial(const Monomial3& m, const OpSpace& ops) {
  const std::string& out = ops[static_cast<std::size_t>(m.outer)].symbol;
  const std::string& in = ops[static_cast<std::size_t>(m.inner)].symbol;
  const auto x = [](int i) { return "x" + std::to_string(i); };
  if (m.shape == Shape::LeftComb)
    return "(" + x(m.leaves[0]) + in + x(m.leaves[1]) + ")" + out + x(m.leaves[2]);
  return x(m.leaves[0]) + out + "(" + x(m.leaves[1]) + in + x(m.leaves[2]) + ")";
}

std::string format_relation(const Arity3Element& e, const OpSpace& ops) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : e.terms()) {
    if (!s.empty()) s += ' ';
    s += c > 0 ? "+" + format_rat(c) : format_rat(c);
    s += '*';
    s += format_monomial(m, ops);
  }
  return s;
}

// ------------------------------------------------------------- catalog

namespace {

struct CatalogEntry {
  const char* name;
  bool two_ops;
  std::vector<const char*> relations;
};

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> table = {
      {"As", false, {"(x1*x2)*x3 - x1*(x2*x3)"}},
      // right-commutative and left-symmetric, in the two-outside form
      {"Nov", false, {"(x1*x2)*x3 - x1*(x3*x2) - (x3*x2)*x1 + x3*(x1*x2)", "(x2*x1)*x3 - (x2*x3)*x1"}},
      {"Zin", false, {"x1*(x2*x3) - (x1*x2)*x3 - (x2*x1)*x3"}},
      {"Bicom", false, {"(x2*x1)*x3 - (x2*x3)*x1", "x1*(x3*x2) - x3*(x1*x2)"}},
      // linearized left and right alternative laws
      {"Alt",
       false,
       {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x1)*x3 - x2*(x1*x3)",
        "(x1*x2)*x3 - x1*(x2*x3) + (x1*x3)*x2 - x1*(x3*x2)"}},
      // (a,b,c) = -(c,b,a)
      {"Flex", false, {"x3*(x2*x1) - (x3*x2)*x1 - (x1*x2)*x3 + x1*(x2*x3)"}},
      // (a,b,c) = (c,b,a)
      {"AntiFlex", false, {"(x1*x2)*x3 - x1*(x2*x3) - (x3*x2)*x1 + x3*(x2*x1)"}},
      {"Leib", false, {"(x1*x2)*x3 - x1*(x2*x3) + x2*(x1*x3)"}},
      {"PreLie", false, {"(x1*x2)*x3 - x1*(x2*x3) - (x2*x1)*x3 + x2*(x1*x3)"}},
      // associator invariant under (12) and (23)
      {"Assosym",
       false,
       {"(x1*x2)*x3 - x1*(x2*x3) - (x2*x1)*x3 + x2*(x1*x3)",
        "(x1*x2)*x3 - x1*(x2*x3) - (x1*x3)*x2 + x1*(x3*x2)"}},
      {"NcNov", true, {"x1>(x2<x3) - (x1>x2)<x3", "(x1<x2)>x3 - x1>(x2>x3) - x1<(x2>x3) + (x1<x2)<x3"}},
      {"NcZin",
       true,
       {"(x1>x2)>x3 - x1>(x2>x3) - x1>(x2<x3)", "(x1<x2)>x3 - x1<(x2>x3)",
        "x1<(x2<x3) - (x1>x2)<x3 - (x1<x2)<x3"}},
      {"NcBicom", true, {"x1>(x2<x3) - (x1>x2)<x3", "x1<(x2>x3) - (x1<x2)>x3"}},
      {"NcFlex", true, {"(x1>x2)>x3 - x1>(x2>x3) - (x1<x2)<x3 + x1<(x2<x3)"}},
      {"NcAntiFlex", true, {"(x1>x2)>x3 - x1>(x2>x3) + (x1<x2)<x3 - x1<(x2<x3)"}},
  };
  return table;
}

}  // namespace

OperadPresentation catalog(std::string_view name) {
  for (const auto& entry : entries()) {
    if (name != entry.name) continue;
    OperadPresentation p{entry.name, entry.two_ops ? OpSpace::two_paired() : OpSpace::single_paired(), {}};
    for (const char* text : entry.relations) p.relations.push_back(parse_relation(text, p.ops));
    return p;
  }
  throw std::invalid_argument("unknown operad: '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& single_op_catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : entries())
      if (!e.two_ops) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

}  // namespace opforge
