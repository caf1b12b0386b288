#include "doctest.h"

#include "opforge/systems.hpp"
#include "opforge/tree.hpp"

#include <algorithm>

using namespace opforge;

namespace {

PlanarTree T(std::string_view s) { return parse_tree(s); }
NsElement E(std::string_view s) { return parse_element(s); }

RewriteRule R(std::string label, std::string_view lhs, std::string_view rhs) {
  return RewriteRule(std::move(label), T(lhs), E(rhs));
}

}  // namespace

TEST_CASE("parse and print trees") {
  CHECK(to_string(T("1")) == "1");
  CHECK(to_string(T("*")) == "1");
  CHECK(to_string(T(" x( y(*,1), 1 ) ")) == "x(y(1,1),1)");
  CHECK(T("x(y(1,1),1)").arity() == 3);
  CHECK(T("x(y(1,1),1)").left().op() == 'y');
  CHECK_THROWS_AS(T("x(1)"), std::invalid_argument);
  CHECK_THROWS_AS(T("X(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(T("x(1,1))"), std::invalid_argument);
  CHECK_THROWS_AS(T(""), std::invalid_argument);
  CHECK_THROWS(T("1").op());
}

TEST_CASE("tree order and enumeration") {
  CHECK(T("1") < T("x(1,1)"));
  CHECK(T("x(1,1)") < T("y(1,1)"));
  CHECK(T("x(1,x(1,1))") < T("x(x(1,1),1)"));
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    const auto trees = all_trees(n, "xy");
    CAPTURE(n);
    CHECK(trees.size() == catalan[n - 1] << (n - 1));
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (const auto& t : trees) CHECK(T(to_string(t)) == t);
  }
  CHECK(all_trees(4, "x").size() == 5);
}

TEST_CASE("positions and surgery") {
  const PlanarTree t = T("x(y(1,1),x(1,y(1,1)))");
  CHECK(positions(t) == std::vector<Address>{"", "L", "R", "RR"});
  CHECK(subtree_at(t, "RR") == T("y(1,1)"));
  CHECK(replace_at(t, "L", T("1")) == T("x(1,x(1,y(1,1)))"));
  CHECK(replace_at(t, "", T("1")) == T("1"));
  CHECK(subtree_at(t, "LL").is_leaf());
  CHECK_THROWS(subtree_at(t, "LLL"));

  CHECK(graft(T("x(1,y(1,1))"), {T("z(1,1)"), T("1"), T("1")}) == T("x(z(1,1),y(1,1))"));
  CHECK_THROWS_AS(graft(T("x(1,1)"), {T("1")}), std::invalid_argument);
  CHECK(graft_at_leaf(T("x(1,y(1,1))"), 2, T("x(1,1)")) == T("x(1,y(1,x(1,1)))"));
  CHECK(graft_at_leaf(T("1"), 0, T("x(1,1)")) == T("x(1,1)"));
}

TEST_CASE("elements") {
  NsElement e = E("x(1,1) - 2*y(1,1) + 1/2*x(1,1)");
  CHECK(e.coefficient(T("x(1,1)")) == Rat(3) / 2);
  CHECK(e.coefficient(T("y(1,1)")) == -2);
  CHECK((e - e).empty());
  CHECK(to_string(NsElement{}) == "0");
  CHECK(to_string(E("y(1,1) - x(1,1)")) == "-1*x(1,1) +1*y(1,1)");
  CHECK(E(to_string(e)) == e);
  CHECK(E("1") == NsElement(T("1")));
  CHECK(E("3*1").coefficient(T("1")) == 3);
}

TEST_CASE("rule construction") {
  CHECK_THROWS_AS(R("a", "1", "x(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(R("a", "x(1,x(1,1))", "x(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(R("a", "x(1,x(1,1))", "x(1,x(1,1)) + y(1,y(1,1))"), std::invalid_argument);
  const RewriteRule ok = R("a", "x(1,y(1,1))", "y(x(1,1),1)");
  CHECK(ok.arity() == 3);
  CHECK(ok.instantiate({T("1"), T("z(1,1)"), T("1")}) == NsElement(T("y(x(1,z(1,1)),1)")));

  RewriteSystem dup{"d", {ok, R("b", "x(1,y(1,1))", "y(1,y(1,1))")}, 0};
  CHECK_THROWS_AS(validate(dup), std::invalid_argument);
  CHECK_NOTHROW(validate(opforge::system("Zin")));
}

TEST_CASE("matching and single steps") {
  const RewriteSystem zin = opforge::system("Zin");
  const PlanarTree t = T("y(1,x(1,y(1,1)))");
  CHECK_FALSE(match_at(t, zin.rules[0], ""));
  const auto b = match_at(t, zin.rules[0], "R");
  REQUIRE(b);
  CHECK(b->size() == 3);
  const auto r = find_redex(t, zin);
  REQUIRE(r);
  CHECK(r->rule == 0);
  CHECK(r->addr == "R");
  CHECK(rewrite_once(t, zin) == E("y(1,y(x(1,1),1))"));
  CHECK_FALSE(rewrite_once(T("y(x(1,1),1)"), zin));
  CHECK(is_normal(T("y(x(1,1),1)"), zin));

  // rule order wins over position order
  const PlanarTree u = T("x(1,x(1,y(1,1)))");
  REQUIRE(find_redex(u, zin));
  CHECK(find_redex(u, zin)->rule == 0);
  CHECK(find_redex(u, zin)->addr == "R");
}

TEST_CASE("normalize") {
  const RewriteSystem zin = opforge::system("Zin");
  const NsElement n = normalize(T("x(1,x(1,1))"), zin);
  CHECK(n == E("x(y(1,1),1) + x(x(1,1),1)"));
  CHECK(normalize(n, zin) == n);
  CHECK(normalize(NsElement{}, zin).empty());

  const RewriteSystem flex = opforge::system("Flex");
  const NsElement f = normalize(T("y(1,x(1,x(1,1)))"), flex);
  CHECK(f.size() == 9);
  CHECK(f == flex.rules[1].rhs());
  for (const auto& [tree, c] : f.terms()) CHECK(is_normal(tree, flex));

  for (const auto& t : all_trees(5, "xy")) {
    const NsElement m = normalize(t, flex);
    for (const auto& [tree, c] : m.terms()) CHECK(is_normal(tree, flex));
  }
}

TEST_CASE("step cap") {
  const RewriteSystem loop{"loop", {R("a", "x(1,x(1,1))", "x(x(1,1),1)"), R("b", "x(x(1,1),1)", "x(1,x(1,1))")}, 0};
  CHECK_THROWS_AS(normalize(T("x(1,x(1,1))"), loop, 50), StepCapExceeded);
  CHECK_FALSE(check_termination(loop, 3, "x", 50));
  CHECK(check_termination(opforge::system("Zin"), 6, "xy"));
}

TEST_CASE("overlaps") {
  const auto zin = overlaps(opforge::system("Zin"), 4);
  CHECK(zin.size() == 4);
  for (const auto& o : zin) {
    CHECK(o.pos_i.empty());
    CHECK(match_at(o.tree, opforge::system("Zin").rules[o.rule_i], o.pos_i));
    CHECK(match_at(o.tree, opforge::system("Zin").rules[o.rule_j], o.pos_j));
    CHECK(o.tree.arity() == 4);
  }
  const auto flex4 = overlaps(opforge::system("Flex"), 4);
  REQUIRE(flex4.size() == 1);
  CHECK(flex4[0].tree == T("y(1,y(1,y(1,1)))"));
  const auto flex5 = overlaps(opforge::system("Flex"), 5);
  REQUIRE(flex5.size() == 2);
  CHECK(flex5[1].tree == T("y(1,y(1,x(1,x(1,1))))"));
}

TEST_CASE("confluence") {
  CHECK(check_confluence(opforge::system("Zin"), 4).all_pass());
  CHECK(check_confluence(opforge::system("Flex"), 6).all_pass());
  CHECK(check_confluence(opforge::system("AntiFlex"), 6).all_pass());
  CHECK(check_confluence(opforge::system("L"), 5).all_pass());

  // flipping a sign breaks it
  RewriteSystem bad = opforge::system("Zin");
  bad.rules[1] = R("Zin2", "x(*,x(*,*))", "x(y(*,*),*) - x(x(*,*),*)");
  const ConfluenceReport rep = check_confluence(bad, 4);
  CHECK(rep.failures() > 0);
  CHECK_FALSE(rep.all_pass());
  for (const auto& c : rep.checks) CHECK(c.pass == (c.left_normal == c.right_normal));
}
