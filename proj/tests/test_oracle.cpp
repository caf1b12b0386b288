#include "doctest.h"

#include "opforge/oracle.hpp"
#include "opforge/systems.hpp"

#include <cstdlib>
#include <map>
#include <set>

using namespace opforge;

namespace {

PlanarTree T(std::string_view s) { return parse_tree(s); }

// Second route: the arity-n part of the ideal as I(n) = Σ over splits of
// r ∘ (trees) and trees ∘ I(smaller), built level by level with plain sets of
// elements instead of the streaming consequence loop.
std::uint64_t ideal_rank_recursive(const std::vector<NsElement>& rels, int n, const std::string& labels) {
  std::map<int, std::vector<NsElement>> ideal;
  for (int m = 3; m <= n; ++m) {
    std::vector<NsElement>& cur = ideal[m];
    // relation at the root, free trees below
    for (const auto& r : rels)
      for (int a = 1; a <= m - 2; ++a)
        for (int b = 1; a + b <= m - 1; ++b) {
          const int c = m - a - b;
          for (const auto& t1 : all_trees(a, labels))
            for (const auto& t2 : all_trees(b, labels))
              for (const auto& t3 : all_trees(c, labels)) {
                NsElement e;
                for (const auto& [tree, coef] : r.terms()) e.add(graft(tree, {t1, t2, t3}), coef);
                cur.push_back(e);
              }
        }
    // a free operation at the root with an ideal element on one side
    for (int k = 3; k < m; ++k)
      for (const auto& i : ideal[k])
        for (const auto& t : all_trees(m - k, labels))
          for (char op : labels) {
            NsElement left;
            NsElement right;
            for (const auto& [tree, coef] : i.terms()) {
              left.add(PlanarTree::node(op, tree, t), coef);
              right.add(PlanarTree::node(op, t, tree), coef);
            }
            cur.push_back(left);
            cur.push_back(right);
          }
  }
  const FreeBasis basis(n, labels);
  SparseEliminator elim(basis.size());
  for (const auto& e : ideal[n]) elim.add(to_row(e, basis));
  return elim.rank();
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("OPERAD_FORGE_ORACLE_CAP", value, 1);
    else
      unsetenv("OPERAD_FORGE_ORACLE_CAP");
  }
  ~EnvGuard() { unsetenv("OPERAD_FORGE_ORACLE_CAP"); }
};

}  // namespace

TEST_CASE("free dimensions") {
  CHECK(free_dim(1, 2) == 1);
  CHECK(free_dim(3, 2) == 8);
  CHECK(free_dim(5, 2) == 14 * 16);
  CHECK(free_dim(4, 1) == 5);
  for (int n = 1; n <= 6; ++n) CHECK(FreeBasis(n, "xy").size() == free_dim(n, 2));
  const FreeBasis b(3, "xy");
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.trees()[i]) == i);
  CHECK_THROWS(b.index_of(T("x(1,1)")));
}

TEST_CASE("planar relations") {
  const auto rels = to_ns_relations(nc_presentation("Zin"));
  REQUIRE(rels.size() == 3);
  for (const auto& r : rels)
    for (const auto& [t, c] : r.terms()) CHECK(t.arity() == 3);
  CHECK(tree_labels(nc_presentation("Zin")) == "xy");
  CHECK(tree_labels(catalog("As")) == "x");
  CHECK_THROWS_AS(to_ns_relations(catalog("Zin")), std::invalid_argument);
}

TEST_CASE("sparse eliminator") {
  SparseEliminator e(4);
  CHECK(e.add({{0, Rat(1)}, {2, Rat(2)}}));
  CHECK(e.add({{2, Rat(1)}, {3, Rat(1)}}));
  CHECK_FALSE(e.add({{0, Rat(2)}, {2, Rat(6)}, {3, Rat(2)}}));
  CHECK(e.contains({{0, Rat(1)}, {2, Rat(3)}, {3, Rat(1)}}));
  CHECK_FALSE(e.contains({{1, Rat(1)}}));
  CHECK_FALSE(e.add({}));
  CHECK(e.rank() == 2);
}

TEST_CASE("arity 3 ranks") {
  CHECK(bruteforce(nc_presentation("Zin"), 3).ideal_rank == 3);
  CHECK(bruteforce_dim(nc_presentation("Nov"), 3) == 6);
  CHECK(bruteforce_dim(nc_presentation("Bicom"), 3) == 6);
  CHECK(bruteforce_dim(catalog("As"), 3) == 1);
  const OracleResult r = bruteforce(nc_presentation("Flex"), 3);
  CHECK(r.free_dim == 8);
  CHECK(r.free_dim == r.ideal_rank + r.operad_dim);
}

TEST_CASE("known dimensions") {
  CHECK(bruteforce_dim(nc_presentation("Zin"), 4) == 14);
  CHECK(bruteforce_dim(nc_presentation("Bicom"), 5) == 70);
  CHECK(bruteforce_dim(nc_presentation("Flex"), 5) == 143);
  CHECK(bruteforce_dim(nc_presentation("AntiFlex"), 5) == 143);
  CHECK(bruteforce_dim(catalog("As"), 6) == 1);
  for (int n = 1; n <= 2; ++n) CHECK(bruteforce_dim(nc_presentation("Zin"), n) == free_dim(n, 2));
}

TEST_CASE("oracle agrees with the rewriting systems") {
  for (const char* name : {"Zin", "Bicom", "Flex", "AntiFlex"})
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(bruteforce_dim(nc_presentation(name), n) == grammar_count(name, n));
    }
}

TEST_CASE("second route to the ideal") {
  for (const char* name : {"Zin", "Nov", "Bicom", "Flex"})
    for (int n = 3; n <= 5; ++n) {
      const OperadPresentation p = nc_presentation(name);
      CAPTURE(name);
      CAPTURE(n);
      CHECK(ideal_rank_recursive(to_ns_relations(p), n, tree_labels(p)) == bruteforce(p, n).ideal_rank);
    }
}

TEST_CASE("every consequence lies in the ideal of the normalizing system") {
  const RewriteSystem flex = opforge::system("Flex");
  for (const auto& e : consequences(to_ns_relations(nc_presentation("Flex")), 4, "xy"))
    CHECK(normalize(e, flex).empty());
}

TEST_CASE("monotone in the relations") {
  const OperadPresentation nov = nc_presentation("Nov");
  OperadPresentation one = nov;
  one.relations.resize(1);
  OperadPresentation none = nov;
  none.relations.clear();
  for (int n = 3; n <= 5; ++n) {
    CHECK(bruteforce_dim(nov, n) <= bruteforce_dim(one, n));
    CHECK(bruteforce_dim(one, n) <= bruteforce_dim(none, n));
    CHECK(bruteforce_dim(none, n) == free_dim(n, 2));
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(bruteforce(nc_presentation("Zin"), 5, 4), OracleCapExceeded);
  {
    EnvGuard g(nullptr);
    CHECK(oracle_cap() == kDefaultOracleCap);
  }
  {
    EnvGuard g("3");
    CHECK(oracle_cap() == 3);
    CHECK_THROWS_AS(bruteforce(nc_presentation("Zin"), 4), OracleCapExceeded);
  }
  {
    EnvGuard g("junk");
    CHECK(oracle_cap() == kDefaultOracleCap);
  }
  {
    EnvGuard g("-2");
    CHECK(oracle_cap() == kDefaultOracleCap);
  }
}

TEST_CASE("csv") {
  CHECK(oracle_csv_header() == "system,n,free_dim,ideal_rank,operad_dim");
  CHECK(oracle_csv_row("NcZin", bruteforce(nc_presentation("Zin"), 4)) == "NcZin,4,40,26,14");
}
