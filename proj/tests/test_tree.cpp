#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kurepa/tree.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace kurepa;

namespace {

Tree chain_tree(Level height) {
  Tree t = Tree::single_root();
  NodeId cur = 0;
  for (Level l = 1; l <= height; ++l) cur = t.add_node(l, cur);
  return t;
}

}  // namespace

TEST_CASE("single root tree") {
  Tree t = Tree::single_root();
  CHECK(t.size() == 1);
  CHECK(t.level_of(0) == 0);
  CHECK(!t.parent_of(0));
  CHECK(t.max_level() == 0);
  CHECK(t.structurally_valid());
}

TEST_CASE("add_node assigns dense ids and indexes levels") {
  Tree t = Tree::single_root();
  NodeId a = t.add_node(1, 0);
  NodeId b = t.add_node(1, 0);
  NodeId c = t.add_node(2, a);
  CHECK(a == 1);
  CHECK(b == 2);
  CHECK(c == 3);
  CHECK(t.at_level(1) == std::vector<NodeId>{1, 2});
  CHECK(t.children_of(0) == std::vector<NodeId>{1, 2});
  CHECK(t.children_of(a) == std::vector<NodeId>{3});
  CHECK(*t.parent_of(c) == a);
}

TEST_CASE("from_nodes round trip") {
  Tree t = oracle::cbt(3);
  Tree u = Tree::from_nodes(t.all_nodes());
  CHECK(t == u);
  CHECK(u.at_level(3).size() == 8);
}

TEST_CASE("from_nodes rejects sparse ids") {
  std::vector<TreeNode> nodes = {{0, 0, std::nullopt}, {2, 1, 0}};
  CHECK_THROWS_AS((void)Tree::from_nodes(nodes), malformed_error);
}

TEST_CASE("structure violations") {
  SUBCASE("empty tree") {
    Tree t;
    CHECK(!t.structurally_valid());
  }
  SUBCASE("parentless node off level zero") {
    Tree t = Tree::single_root();
    t.add_node(2, std::nullopt);
    CHECK(t.structure_violations().size() == 1);
  }
  SUBCASE("parent on the wrong level") {
    Tree t = Tree::single_root();
    t.add_node(2, 0);
    CHECK(!t.structurally_valid());
  }
  SUBCASE("level zero with a parent") {
    Tree t = Tree::single_root();
    t.add_node(0, 0);
    CHECK(!t.structurally_valid());
  }
  SUBCASE("dangling parent id") {
    Tree t = Tree::single_root();
    t.add_node(1, 17);
    CHECK(!t.structurally_valid());
  }
}

TEST_CASE("comparable and meet on a small tree") {
  // 0 - {1, 2}, 1 - {3, 4}, 2 - {5}
  Tree t = Tree::single_root();
  t.add_node(1, 0);
  t.add_node(1, 0);
  t.add_node(2, 1);
  t.add_node(2, 1);
  t.add_node(2, 2);

  CHECK(comparable(t, 0, 5));
  CHECK(comparable(t, 3, 1));
  CHECK(!comparable(t, 1, 2));
  CHECK(!comparable(t, 3, 4));
  CHECK(comparable(t, 4, 4));

  CHECK(meet(t, 3, 4) == 1);
  CHECK(meet(t, 3, 5) == 0);
  CHECK(meet(t, 1, 4) == 1);
  CHECK(meet(t, 0, 0) == 0);
}

TEST_CASE("comparable and meet agree with the path oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    Tree t = gen::random_tree(rng, 12);
    for (NodeId x = 0; x < t.size(); ++x)
      for (NodeId y = 0; y < t.size(); ++y) {
        CHECK(comparable(t, x, y) == oracle::comparable(t, x, y));
        CHECK(meet(t, x, y) == oracle::meet(t, x, y));
      }
  }
}

TEST_CASE("meet requires a shared root") {
  std::vector<TreeNode> nodes = {{0, 0, std::nullopt}, {1, 0, std::nullopt},
                                 {2, 1, 0},            {3, 1, 1}};
  Tree forest = Tree::from_nodes(nodes);
  CHECK(!comparable(forest, 2, 3));
  CHECK_THROWS_AS((void)meet(forest, 2, 3), malformed_error);
}

TEST_CASE("is_antichain") {
  Tree t = oracle::cbt(2);
  CHECK(is_antichain(t, {3, 4, 5, 6}));
  CHECK(is_antichain(t, {1, 2}));
  CHECK(is_antichain(t, {3, 3}));  // duplicates collapse
  CHECK(is_antichain(t, {}));
  CHECK(!is_antichain(t, {1, 3}));
  CHECK(!is_antichain(t, {0, 6}));
}

TEST_CASE("branches enumerate top-level root paths") {
  Tree t = oracle::cbt(2);
  auto bs = branches(t);
  REQUIRE(bs.size() == 4);
  CHECK(bs[0] == std::vector<NodeId>{0, 1, 3});
  CHECK(bs[3] == std::vector<NodeId>{0, 2, 6});
  for (const auto& b : bs) CHECK(b.front() == 0);
}

TEST_CASE("ancestor_at") {
  Tree t = chain_tree(5);
  CHECK(ancestor_at(t, 5, 2) == 2);
  CHECK(ancestor_at(t, 5, 5) == 5);
  CHECK(ancestor_at(t, 0, 0) == 0);
  CHECK_THROWS_AS((void)ancestor_at(t, 2, 4), malformed_error);
}

TEST_CASE("restrict_levels") {
  Tree t = oracle::cbt(2);
  auto got = restrict_levels(t, {0, 2});
  CHECK(got == std::vector<NodeId>{0, 3, 4, 5, 6});
  CHECK(restrict_levels(t, {}).empty());
}

TEST_CASE("desk normality accepts built shapes") {
  Config cfg;
  Tree t = Tree::single_root();
  t.add_node(1, 0);
  t.add_node(1, 0);
  CHECK(check_desk_normal(t, 1, cfg).ok);
  CHECK(check_desk_normal(Tree::single_root(), 0, cfg).ok);
}

TEST_CASE("desk normality rules") {
  Config cfg;

  SUBCASE("structure problems short-circuit") {
    Tree t = Tree::single_root();
    t.add_node(3, 0);
    auto rep = check_desk_normal(t, 3, cfg);
    REQUIRE(!rep.ok);
    for (const auto& v : rep.violations) CHECK(v.rule == "structure");
  }
  SUBCASE("top level must match") {
    Tree t = Tree::single_root();
    t.add_node(1, 0);
    t.add_node(1, 0);
    CHECK(!check_desk_normal(t, 2, cfg).ok);
    CHECK(!check_desk_normal(t, 0, cfg).ok);
  }
  SUBCASE("N1 one root only") {
    std::vector<TreeNode> nodes = {
        {0, 0, std::nullopt}, {1, 0, std::nullopt}, {2, 1, 0}, {3, 1, 0}, {4, 1, 1}};
    auto rep = check_desk_normal(Tree::from_nodes(nodes), 1, cfg);
    REQUIRE(!rep.ok);
    CHECK(rep.violations.front().rule == "N1");
  }
  SUBCASE("N2 no dead ends below the top") {
    Tree t = Tree::single_root();
    t.add_node(1, 0);
    t.add_node(1, 0);
    t.add_node(2, 1);
    auto rep = check_desk_normal(t, 2, cfg);
    REQUIRE(!rep.ok);
    CHECK(rep.violations.front().rule == "N2");
    CHECK(rep.violations.front().node == 2);
  }
  SUBCASE("N3 the root splits") {
    auto rep = check_desk_normal(chain_tree(2), 2, cfg);
    REQUIRE(!rep.ok);
    CHECK(rep.violations.front().rule == "N3");
  }
  SUBCASE("N4 one crossing per parent into a limit-like level") {
    Tree t = Tree::single_root();
    NodeId a = t.add_node(1, 0);
    NodeId b = t.add_node(1, 0);
    NodeId a2 = t.add_node(2, a);
    NodeId b2 = t.add_node(2, b);
    t.add_node(3, a2);
    t.add_node(3, b2);
    Tree bad = t;
    for (NodeId top : t.at_level(3)) t.add_node(4, top);
    CHECK(check_desk_normal(t, 4, cfg).ok);
    bad.add_node(4, bad.at_level(3)[0]);
    bad.add_node(4, bad.at_level(3)[0]);
    bad.add_node(4, bad.at_level(3)[1]);
    auto rep = check_desk_normal(bad, 4, cfg);
    REQUIRE(!rep.ok);
    CHECK(rep.violations.front().rule == "N4");
  }
}
