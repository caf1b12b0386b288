#include "opforge/bijections.hpp"

#include "opforge/systems.hpp"

#include <stdexcept>

namespace opforge {

namespace {

const PlanarTree kLeaf;
constexpr std::string_view kBullet = "•";

[[noreturn]] void not_normal(std::string_view system, const PlanarTree& t) {
  throw std::invalid_argument(to_string(t) + " is not a normal form of " + std::string(system));
}

bool only_label(const PlanarTree& t, char op) {
  if (t.is_leaf()) return true;
  return t.op() == op && only_label(t.left(), op) && only_label(t.right(), op);
}

PlanarTree x(const PlanarTree& a, const PlanarTree& b) { return PlanarTree::node('x', a, b); }
PlanarTree y(const PlanarTree& a, const PlanarTree& b) { return PlanarTree::node('y', a, b); }

}  // namespace

// -------------------------------------------------------------------- PBT

Pbt Pbt::pair(const Pbt& left, const Pbt& right) { return Pbt(PlanarTree::node('p', left.shape_, right.shape_)); }

Pbt Pbt::left() const {
  if (is_bullet()) throw std::logic_error("bullet has no children");
  return Pbt(shape_.left());
}

Pbt Pbt::right() const {
  if (is_bullet()) throw std::logic_error("bullet has no children");
  return Pbt(shape_.right());
}

std::string to_string(const Pbt& b) {
  if (b.is_bullet()) return std::string(kBullet);
  return "(" + to_string(b.left()) + to_string(b.right()) + ")";
}

namespace {

Pbt parse_pbt_at(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (text.substr(pos, 1) == "*") {
    ++pos;
    return Pbt::bullet();
  }
  if (text.substr(pos, kBullet.size()) == kBullet) {
    pos += kBullet.size();
    return Pbt::bullet();
  }
  if (text.substr(pos, 1) != "(") throw std::invalid_argument("bad planar binary tree '" + std::string(text) + "'");
  ++pos;
  Pbt l = parse_pbt_at(text, pos);
  Pbt r = parse_pbt_at(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (text.substr(pos, 1) != ")") throw std::invalid_argument("bad planar binary tree '" + std::string(text) + "'");
  ++pos;
  return Pbt::pair(l, r);
}

}  // namespace

Pbt parse_pbt(std::string_view text) {
  std::size_t pos = 0;
  Pbt b = parse_pbt_at(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos != text.size()) throw std::invalid_argument("trailing input in '" + std::string(text) + "'");
  return b;
}

std::vector<Pbt> all_pbts(int internal_vertices) {
  if (internal_vertices < 0) throw std::invalid_argument("all_pbts: negative vertex count");
  std::vector<std::vector<Pbt>> by(static_cast<std::size_t>(internal_vertices) + 1);
  by[0] = {Pbt::bullet()};
  for (int k = 1; k <= internal_vertices; ++k)
    for (int a = 0; a < k; ++a)
      for (const auto& l : by[static_cast<std::size_t>(a)])
        for (const auto& r : by[static_cast<std::size_t>(k - 1 - a)]) by[static_cast<std::size_t>(k)].push_back(Pbt::pair(l, r));
  return by[static_cast<std::size_t>(internal_vertices)];
}

Pbt zin_to_pbt(const PlanarTree& t) {
  if (t.is_leaf()) return Pbt::pair(Pbt::bullet(), Pbt::bullet());
  if (t.op() != 'x' && t.op() != 'y') not_normal("Zin", t);
  if (t.right().is_leaf()) {
    const Pbt u = zin_to_pbt(t.left());
    return t.op() == 'x' ? Pbt::pair(u, Pbt::bullet()) : Pbt::pair(Pbt::bullet(), u);
  }
  const PlanarTree& r = t.right();
  if (t.op() == 'y' && r.op() == 'x' && r.right().is_leaf()) return Pbt::pair(zin_to_pbt(r.left()), zin_to_pbt(t.left()));
  not_normal("Zin", t);
}

PlanarTree pbt_to_zin(const Pbt& b) {
  if (b.is_bullet()) throw std::invalid_argument("a bullet has no internal vertex");
  const Pbt l = b.left();
  const Pbt r = b.right();
  if (l.is_bullet() && r.is_bullet()) return kLeaf;
  if (r.is_bullet()) return x(pbt_to_zin(l), kLeaf);
  if (l.is_bullet()) return y(pbt_to_zin(r), kLeaf);
  return y(pbt_to_zin(r), x(pbt_to_zin(l), kLeaf));
}

// ---------------------------------------------------------------- EN words

bool is_balanced(std::string_view w) {
  long h = 0;
  for (char c : w) {
    if (c == 'E') ++h;
    else if (c == 'N') --h;
    else return false;
  }
  return h == 0;
}

bool is_dyck(std::string_view w) {
  long h = 0;
  for (char c : w) {
    h += c == 'E' ? 1 : c == 'N' ? -1 : 0;
    if ((c != 'E' && c != 'N') || h < 0) return false;
  }
  return h == 0;
}

bool is_reflected_dyck(std::string_view w) {
  long h = 0;
  for (char c : w) {
    h += c == 'N' ? 1 : c == 'E' ? -1 : 0;
    if ((c != 'E' && c != 'N') || h < 0) return false;
  }
  return h == 0;
}

std::vector<std::string> balanced_words(int m) {
  if (m < 0) throw std::invalid_argument("balanced_words: negative length");
  std::vector<std::string> out;
  std::string w;
  const auto rec = [&](auto&& self, int e, int n) -> void {
    if (e == m && n == m) {
      out.push_back(w);
      return;
    }
    if (e < m) {
      w.push_back('E');
      self(self, e + 1, n);
      w.pop_back();
    }
    if (n < m) {
      w.push_back('N');
      self(self, e, n + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

std::string delta(const PlanarTree& t, char op, char up, char down) {
  if (t.is_leaf()) return {};
  if (t.op() != op) throw std::invalid_argument(to_string(t) + " is not built from " + std::string(1, op) + " alone");
  return up + delta(t.left(), op, up, down) + down + delta(t.right(), op, up, down);
}

// Length of the first primitive factor of a nonempty balanced word.
std::size_t first_return(std::string_view w) {
  long h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w[i] == 'E' ? 1 : -1;
    if (h == 0) return i + 1;
  }
  throw std::invalid_argument("word '" + std::string(w) + "' is not balanced");
}

PlanarTree delta_inverse(std::string_view w, char op, char up) {
  if (w.empty()) return kLeaf;
  const std::size_t k = first_return(w);
  if (w.front() != up) throw std::invalid_argument("word '" + std::string(w) + "' leaves its half-plane");
  return PlanarTree::node(op, delta_inverse(w.substr(1, k - 2), op, up), delta_inverse(w.substr(k), op, up));
}

}  // namespace

std::string delta_x(const PlanarTree& t) { return delta(t, 'x', 'E', 'N'); }
std::string delta_y(const PlanarTree& t) { return delta(t, 'y', 'N', 'E'); }

PlanarTree delta_x_inverse(std::string_view w) {
  if (!is_dyck(w)) throw std::invalid_argument("'" + std::string(w) + "' is not a Dyck word");
  return delta_inverse(w, 'x', 'E');
}

PlanarTree delta_y_inverse(std::string_view w) {
  if (!is_reflected_dyck(w)) throw std::invalid_argument("'" + std::string(w) + "' is not a reflected Dyck word");
  return delta_inverse(w, 'y', 'N');
}

std::string bicom_spine_word(const PlanarTree& t) {
  if (t.is_leaf()) return {};
  const PlanarTree& a = t.right();
  if (t.op() == 'x' && only_label(a, 'x')) return bicom_spine_word(t.left()) + "E" + delta_x(a) + "N";
  if (t.op() == 'y' && only_label(a, 'y')) return bicom_spine_word(t.left()) + "N" + delta_y(a) + "E";
  not_normal("Bicom", t);
}

std::string bicom_to_word(const PlanarTree& t) {
  if (only_label(t, 'x')) return delta_x(t);
  if (only_label(t, 'y')) return delta_y(t);
  const PlanarTree& a = t.right();
  if (t.op() == 'x' && only_label(a, 'x')) return bicom_to_word(t.left()) + "E" + delta_x(a) + "N";
  if (t.op() == 'y' && only_label(a, 'y')) return bicom_to_word(t.left()) + "N" + delta_y(a) + "E";
  not_normal("Bicom", t);
}

PlanarTree word_to_bicom(std::string_view w) {
  if (!is_balanced(w)) throw std::invalid_argument("'" + std::string(w) + "' is not a balanced EN word");
  if (is_dyck(w)) return delta_x_inverse(w);
  if (is_reflected_dyck(w)) return delta_y_inverse(w);
  // Split off the last primitive factor.
  std::size_t start = 0;
  std::size_t last = 0;
  while (start < w.size()) {
    last = start;
    start += first_return(w.substr(start));
  }
  const PlanarTree u = word_to_bicom(w.substr(0, last));
  const std::string_view inner = w.substr(last + 1, w.size() - last - 2);
  return w[last] == 'E' ? x(u, delta_x_inverse(inner)) : y(u, delta_y_inverse(inner));
}

// -------------------------------------------------------------- Flex <-> L

namespace {

enum class Slot { N, R, Q };

// Ψ, Ψ_R, Ψ_Q.
PlanarTree to_L(const PlanarTree& t, Slot slot) {
  if (t.is_leaf()) return kLeaf;
  switch (slot) {
    case Slot::N:
      if (t.op() == 'x') return PlanarTree::node('z', to_L(t.left(), Slot::N), to_L(t.right(), Slot::N));
      if (t.op() == 'y') return PlanarTree::node('t', to_L(t.left(), Slot::N), to_L(t.right(), Slot::R));
      break;
    case Slot::R:
      if (t.op() == 'x') return PlanarTree::node('t', to_L(t.left(), Slot::N), to_L(t.right(), Slot::Q));
      break;
    case Slot::Q:
      if (t.op() == 'y') return PlanarTree::node('t', to_L(t.left(), Slot::N), to_L(t.right(), Slot::R));
      break;
  }
  not_normal("Flex", t);
}

// Φ on S, Φ_R / Φ_Q on U.
PlanarTree from_L(const PlanarTree& s, Slot slot) {
  if (s.is_leaf()) return kLeaf;
  if (slot == Slot::N && s.op() == 'z') return x(from_L(s.left(), Slot::N), from_L(s.right(), Slot::N));
  if (s.op() == 't') {
    switch (slot) {
      case Slot::N: return y(from_L(s.left(), Slot::N), from_L(s.right(), Slot::R));
      case Slot::R: return x(from_L(s.left(), Slot::N), from_L(s.right(), Slot::Q));
      case Slot::Q: return y(from_L(s.left(), Slot::N), from_L(s.right(), Slot::R));
    }
  }
  throw std::invalid_argument(to_string(s) + " is not a normal form of the L-operad");
}

}  // namespace

PlanarTree flex_to_L(const PlanarTree& t) {
  try {
    return to_L(t, Slot::N);
  } catch (const std::invalid_argument&) {
    not_normal("Flex", t);
  }
}

PlanarTree L_to_flex(const PlanarTree& s) {
  try {
    return from_L(s, Slot::N);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(to_string(s) + " is not a normal form of the L-operad");
  }
}

// ----------------------------------------------------------- dump format

std::vector<std::pair<std::string, std::string>> correspondence(std::string_view system, int n) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& t : normal_forms(system, n)) {
    std::string image;
    if (system == "Zin") image = to_string(zin_to_pbt(t));
    else if (system == "Bicom") image = bicom_to_word(t);
    else if (system == "Flex" || system == "AntiFlex") image = to_string(flex_to_L(t));
    else throw std::invalid_argument("no bijection for system '" + std::string(system) + "'");
    out.emplace_back(to_string(t), std::move(image));
  }
  return out;
}

std::string format_correspondence(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs) s += a + "\t" + b + "\n";
  return s;
}

}  // namespace opforge
