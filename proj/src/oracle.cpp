#include "opforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace opforge {

FreeBasis::FreeBasis(int arity, std::string labels)
    : arity_(arity), labels_(std::move(labels)), trees_(all_trees(arity, labels_)) {
  index_.reserve(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) index_.emplace(trees_[i], i);
}

std::size_t FreeBasis::index_of(const PlanarTree& t) const {
  const auto it = index_.find(t);
  if (it == index_.end()) throw std::invalid_argument("tree " + to_string(t) + " is not in the free basis");
  return it->second;
}

std::uint64_t free_dim(int n, int num_labels) {
  if (n < 1) throw std::invalid_argument("free_dim: arity must be >= 1");
  const int m = n - 1;
  std::uint64_t catalan = 1;  // C_k = C_{k-1} * 2(2k-1) / (k+1)
  for (int k = 1; k <= m; ++k) catalan = catalan * 2 * (2 * k - 1) / (k + 1);
  std::uint64_t power = 1;
  for (int k = 0; k < m; ++k) power *= static_cast<std::uint64_t>(num_labels);
  return power * catalan;
}

std::string tree_labels(const OperadPresentation& p) {
  if (p.ops.size() == 1) return "x";
  if (p.ops.size() == 2) return "xy";
  throw std::invalid_argument("presentation '" + p.name + "' must have one or two operations");
}

std::vector<NsElement> to_ns_relations(const OperadPresentation& p) {
  const std::string labels = tree_labels(p);
  for (const auto& op : p.ops.ops())
    if (op.symmetry != Symmetry::Paired)
      throw std::invalid_argument("presentation '" + p.name + "' has a (anti)symmetric operation");
  std::vector<NsElement> out;
  const PlanarTree leaf;
  for (const auto& rel : p.relations) {
    NsElement e;
    for (const auto& [m, c] : rel.terms()) {
      if (m.leaves != Leaves{1, 2, 3})
        throw std::invalid_argument("relation term " + format_monomial(m, p.ops) + " permutes the arguments");
      const char outer = labels[static_cast<std::size_t>(m.outer)];
      const char inner = labels[static_cast<std::size_t>(m.inner)];
      const PlanarTree in = PlanarTree::node(inner, leaf, leaf);
      e.add(m.shape == Shape::LeftComb ? PlanarTree::node(outer, in, leaf) : PlanarTree::node(outer, leaf, in), c);
    }
    if (!e.empty()) out.push_back(std::move(e));
  }
  return out;
}

void for_each_consequence(const std::vector<NsElement>& rels, int n, std::string_view labels,
                          const std::function<void(const NsElement&)>& visit) {
  if (n < 3 || rels.empty()) return;
  std::vector<std::vector<PlanarTree>> trees(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) trees[static_cast<std::size_t>(k)] = all_trees(k, labels);

  for (const auto& r : rels) {
    for (const auto& [t, c] : r.terms())
      if (t.arity() != 3) throw std::invalid_argument("consequences: relations must have arity 3");
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b)
        for (int c = 1; a + b + c <= n; ++c) {
          const int outer_arity = n - (a + b + c) + 1;
          for (const auto& t1 : trees[static_cast<std::size_t>(a)])
            for (const auto& t2 : trees[static_cast<std::size_t>(b)])
              for (const auto& t3 : trees[static_cast<std::size_t>(c)]) {
                NsElement inner;
                for (const auto& [pattern, coeff] : r.terms()) inner.add(graft(pattern, {t1, t2, t3}), coeff);
                for (const auto& outer : trees[static_cast<std::size_t>(outer_arity)])
                  for (int leaf = 0; leaf < outer_arity; ++leaf) {
                    NsElement e;
                    for (const auto& [t, coeff] : inner.terms()) e.add(graft_at_leaf(outer, leaf, t), coeff);
                    visit(e);
                  }
              }
        }
  }
}

std::vector<NsElement> consequences(const std::vector<NsElement>& rels, int n, std::string_view labels) {
  std::vector<NsElement> out;
  for_each_consequence(rels, n, labels, [&](const NsElement& e) { out.push_back(e); });
  return out;
}

// ------------------------------------------------------------ elimination

SparseEliminator::SparseEliminator(std::size_t columns) : pivots_(columns) {}

namespace {

// a - f·b, both sorted by column.
SparseRow axpy(const SparseRow& a, const Rat& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rat v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow SparseEliminator::reduce(SparseRow row) const {
  while (!row.empty()) {
    const SparseRow& p = pivots_[row.front().first];
    if (p.empty()) break;
    const Rat f = row.front().second;
    row = axpy(row, f, p);
  }
  return row;
}

bool SparseEliminator::add(SparseRow row) {
  for (const auto& [col, v] : row)
    if (col >= pivots_.size()) throw std::invalid_argument("SparseEliminator: column out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rat inv = Rat(1) / row.front().second;
  for (auto& [col, v] : row) v *= inv;
  pivots_[row.front().first] = std::move(row);
  ++rank_;
  return true;
}

bool SparseEliminator::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

SparseRow to_row(const NsElement& e, const FreeBasis& basis) {
  SparseRow row;
  row.reserve(e.size());
  for (const auto& [t, c] : e.terms()) row.emplace_back(basis.index_of(t), c);
  std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return row;
}

// ------------------------------------------------------------------ oracle

int oracle_cap() {
  if (const char* env = std::getenv("OPERAD_FORGE_ORACLE_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleCap;
}

OracleResult bruteforce(const OperadPresentation& p, int n, int cap) {
  if (n < 1) throw std::invalid_argument("bruteforce: arity must be >= 1");
  if (n > cap)
    throw OracleCapExceeded("oracle arity " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                            " (set OPERAD_FORGE_ORACLE_CAP to raise it)");
  const std::string labels = tree_labels(p);
  const auto rels = to_ns_relations(p);
  OracleResult r;
  r.n = n;
  r.free_dim = free_dim(n, static_cast<int>(labels.size()));
  if (n >= 3) {
    const FreeBasis basis(n, labels);
    SparseEliminator elim(basis.size());
    for_each_consequence(rels, n, labels, [&](const NsElement& e) { elim.add(to_row(e, basis)); });
    r.ideal_rank = elim.rank();
  }
  r.operad_dim = r.free_dim - r.ideal_rank;
  return r;
}

std::uint64_t bruteforce_dim(const OperadPresentation& p, int n, int cap) { return bruteforce(p, n, cap).operad_dim; }

std::string oracle_csv_header() { return "system,n,free_dim,ideal_rank,operad_dim"; }

std::string oracle_csv_row(std::string_view system, const OracleResult& r) {
  return std::string(system) + "," + std::to_string(r.n) + "," + std::to_string(r.free_dim) + "," +
         std::to_string(r.ideal_rank) + "," + std::to_string(r.operad_dim);
}

}  // namespace opforge
