#pragma once

// Brute-force dimensions of a nonsymmetric operad given by arity-3
// relations: span every consequence of the relations inside the free planar
// tree space of arity n, then take an exact sparse rank.

#include "opforge/arity3.hpp"
#include "opforge/tree.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace opforge {

/// All planar trees of arity n over `labels`, in tree order.
class FreeBasis {
 public:
  FreeBasis(int arity, std::string labels);

  int arity() const { return arity_; }
  const std::string& labels() const { return labels_; }
  const std::vector<PlanarTree>& trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  std::size_t index_of(const PlanarTree& t) const;

 private:
  int arity_;
  std::string labels_;
  std::vector<PlanarTree> trees_;
  std::unordered_map<PlanarTree, std::size_t, PlanarTreeHash> index_;
};

/// k^(n-1) · Catalan(n-1) for k labels.
std::uint64_t free_dim(int n, int num_labels);

/// Labels used for a presentation's operations: "x" or "xy" (op 0 ↦ x = ≺,
/// op 1 ↦ y = ≻).
std::string tree_labels(const OperadPresentation& p);

/// The relations as planar elements. Every term must keep the leaf order
/// x1, x2, x3; anything else has no nonsymmetric reading.
std::vector<NsElement> to_ns_relations(const OperadPresentation& p);

/// Every r(t1, t2, t3) grafted into every leaf of every outer tree, at total
/// arity n.
std::vector<NsElement> consequences(const std::vector<NsElement>& rels, int n, std::string_view labels);
void for_each_consequence(const std::vector<NsElement>& rels, int n, std::string_view labels,
                          const std::function<void(const NsElement&)>& visit);

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Incremental row echelon form over ℚ; rows are sorted by column.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t columns);

  /// Reduces `row` and keeps it if independent. Returns true if rank grew.
  bool add(SparseRow row);
  /// True if `row` lies in the span of the rows added so far.
  bool contains(SparseRow row) const;
  std::size_t rank() const { return rank_; }
  std::size_t columns() const { return pivots_.size(); }

 private:
  SparseRow reduce(SparseRow row) const;
  std::vector<SparseRow> pivots_;  // indexed by leading column; empty = none
  std::size_t rank_ = 0;
};

SparseRow to_row(const NsElement& e, const FreeBasis& basis);

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleCap = 7;
/// OPERAD_FORGE_ORACLE_CAP if set to a positive integer, else 7.
int oracle_cap();

struct OracleResult {
  int n = 0;
  std::uint64_t free_dim = 0;
  std::uint64_t ideal_rank = 0;
  std::uint64_t operad_dim = 0;
};

/// Below arity 3 there are no consequences and the result is the free
/// dimension. Throws OracleCapExceeded for n > cap.
OracleResult bruteforce(const OperadPresentation& p, int n, int cap = oracle_cap());
std::uint64_t bruteforce_dim(const OperadPresentation& p, int n, int cap = oracle_cap());

std::string oracle_csv_header();  // system,n,free_dim,ideal_rank,operad_dim
std::string oracle_csv_row(std::string_view system, const OracleResult& r);

}  // namespace opforge
