#include <random>
#include <set>

#include "doctest.h"
#include "kurepa/condition.hpp"
#include "support/gen.hpp"

using namespace kurepa;

namespace {

std::set<int> clauses(const Condition& p, const Config& cfg) {
  std::set<int> out;
  for (const auto& v : check_condition(p, cfg)) out.insert(v.clause);
  return out;
}

}  // namespace

TEST_CASE("minimal condition is valid") {
  Config cfg;
  Condition p = minimal_condition(3);
  CHECK(clauses(p, cfg).empty());
  CHECK(p.alpha == 0);
  CHECK(p.g.at(3) == 0);
  CHECK(p.f.empty());
}

TEST_CASE("make_seed") {
  Config cfg;
  SUBCASE("one label lands on the root") {
    Condition p = make_seed({7}, cfg);
    CHECK(p.alpha == 0);
    CHECK(p.tree.size() == 1);
    CHECK(clauses(p, cfg).empty());
  }
  SUBCASE("several labels split the root") {
    Condition p = make_seed({4, 1, 9}, cfg);
    CHECK(p.alpha == 1);
    CHECK(p.tree.at_level(1).size() == 3);
    CHECK(clauses(p, cfg).empty());
    std::set<NodeId> tops(p.tree.at_level(1).begin(), p.tree.at_level(1).end());
    for (const auto& [xi, node] : p.g) CHECK(tops.count(node) == 1);
  }
  SUBCASE("rejects duplicates, empties and out-of-range labels") {
    CHECK_THROWS_AS((void)make_seed({1, 1}, cfg), malformed_error);
    CHECK_THROWS_AS((void)make_seed({}, cfg), malformed_error);
    CHECK_THROWS_AS((void)make_seed({cfg.label_max}, cfg), malformed_error);
  }
}

TEST_CASE("check_condition clause one handles the height budget") {
  Config cfg;
  cfg.max_height = 4;
  Condition p = extend_to(make_seed({0, 1}, cfg), 2, cfg);
  CHECK(clauses(p, cfg).empty());
  p.alpha = 5;
  CHECK(clauses(p, cfg) == std::set<int>{1});
}

TEST_CASE("leq is reflexive and transitive along a built chain") {
  Config cfg;
  std::mt19937_64 rng(21);
  Chain chain = gen::random_chain(rng, cfg, 8);
  for (const auto& p : chain.conditions) CHECK(leq(p, p, cfg).ok);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) CHECK(leq(chain.conditions[i], chain.conditions[j], cfg).ok);
}

TEST_CASE("absorb_label") {
  Config cfg;
  Condition seed = make_seed({0, 1}, cfg);

  SUBCASE("adds one level, one label and one extra node per top") {
    Condition p = absorb_label(seed, 2, cfg);
    CHECK(p.alpha == seed.alpha + 1);
    CHECK(p.g.size() == 3);
    CHECK(p.tree.at_level(p.alpha).size() == 3);
    CHECK(clauses(p, cfg).empty());
    CHECK(leq(p, seed, cfg).ok);
  }
  SUBCASE("host picks where the split happens") {
    NodeId host = seed.g.at(0);
    Condition p = absorb_label(seed, 2, cfg, host);
    CHECK(p.tree.children_of(host).size() == 2);
    CHECK(p.tree.children_of(seed.g.at(1)).size() == 1);
  }
  SUBCASE("refuses labels already on board or out of range") {
    CHECK_THROWS_AS((void)absorb_label(seed, 1, cfg), malformed_error);
    CHECK_THROWS_AS((void)absorb_label(seed, cfg.label_max, cfg), malformed_error);
  }
  SUBCASE("refuses to split across a limit-like level") {
    Condition p = extend_to(seed, 3, cfg);
    CHECK_THROWS_AS((void)absorb_label(p, 2, cfg), malformed_error);
  }
  SUBCASE("height budget is a capacity error") {
    Config tight = cfg;
    tight.max_height = 3;
    Condition p = absorb_label(seed, 2, tight);
    CHECK_THROWS_AS((void)absorb_label(p, 3, tight), capacity_error);
  }
  SUBCASE("width budget is a capacity error") {
    Config tight = cfg;
    tight.max_width = 2;
    CHECK_THROWS_AS((void)absorb_label(seed, 2, tight), capacity_error);
  }
}

TEST_CASE("extend_to") {
  Config cfg;
  Condition seed = make_seed({0, 1}, cfg);

  SUBCASE("grows single file and stays valid") {
    Condition p = extend_to(seed, 6, cfg);
    CHECK(p.alpha == 6);
    CHECK(p.g.size() == 2);
    for (Level l = 1; l <= 6; ++l) CHECK(p.tree.at_level(l).size() == 2);
    CHECK(clauses(p, cfg).empty());
    CHECK(leq(p, seed, cfg).ok);
  }
  SUBCASE("fills f at every limit-like crossing") {
    Condition p = extend_to(seed, 9, cfg);
    std::size_t limit_nodes = 0;
    for (Level l = 1; l <= 9; ++l)
      if (limit_like(l, cfg)) limit_nodes += p.tree.at_level(l).size();
    CHECK(p.f.size() == limit_nodes);
    CHECK(limit_nodes == 4);
  }
  SUBCASE("target must be above alpha") {
    CHECK_THROWS_AS((void)extend_to(seed, seed.alpha, cfg), malformed_error);
  }
  SUBCASE("height budget is a capacity error") {
    CHECK_THROWS_AS((void)extend_to(seed, cfg.max_height + 1, cfg), capacity_error);
  }
}

TEST_CASE("amalgamate") {
  Config cfg;
  Condition seed = make_seed({0, 1}, cfg);
  Condition mid = absorb_label(seed, 2, cfg);
  std::vector<Condition> chain = {seed, mid};

  SUBCASE("extends the whole chain to the requested level") {
    Condition top = amalgamate(chain, 8, cfg);
    CHECK(top.alpha == 8);
    CHECK(clauses(top, cfg).empty());
    for (const auto& q : chain) CHECK(leq(top, q, cfg).ok);
  }
  SUBCASE("lambda must be limit-like and above the chain") {
    CHECK_THROWS_AS((void)amalgamate(chain, 7, cfg), malformed_error);
    CHECK_THROWS_AS((void)amalgamate({extend_to(seed, 9, cfg)}, 8, cfg), malformed_error);
    CHECK_THROWS_AS((void)amalgamate({}, 8, cfg), malformed_error);
  }
  SUBCASE("chain must be descending") {
    CHECK_THROWS_AS((void)amalgamate({mid, seed}, 8, cfg), malformed_error);
  }
}

TEST_CASE("common_extension") {
  Config cfg;
  Condition seed = make_seed({0, 1}, cfg);

  SUBCASE("comparable pair returns the taller condition") {
    Condition p = extend_to(seed, 5, cfg);
    auto r = common_extension(p, seed, cfg);
    REQUIRE(r);
    CHECK(*r == p);
    CHECK(*common_extension(seed, p, cfg) == p);
  }
  SUBCASE("extra labels ride up and split") {
    // same carrier tree, one label renamed: the merge must absorb label 5
    // above the taller condition and split where labels collide
    Condition tall = extend_to(seed, 2, cfg);
    Condition low = seed;
    low.g.erase(1);
    low.g[5] = seed.g.at(1);
    auto r = common_extension(tall, low, cfg);
    REQUIRE(r);
    CHECK(r->alpha == 3);
    CHECK(clauses(*r, cfg).empty());
    CHECK(leq(*r, tall, cfg).ok);
    CHECK(leq(*r, low, cfg).ok);
    CHECK(r->g.size() == 3);
    CHECK(meet(r->tree, r->g.at(1), r->g.at(5)) == r->tree.parent_of(r->g.at(1)).value());
  }
  SUBCASE("one-level splits of the same height cannot merge") {
    // the side split parks a node at the shared top level, which no
    // end-extension of the plain extension can contain
    Condition tall = extend_to(seed, 2, cfg);
    Condition low = absorb_label(seed, 2, cfg, seed.g.at(0));
    CHECK(!common_extension(tall, low, cfg));
    CHECK(!common_extension(low, tall, cfg));
  }
  SUBCASE("shared label on incomparable nodes is incompatible") {
    Condition a = absorb_label(seed, 2, cfg, seed.g.at(0));
    Condition b = absorb_label(seed, 2, cfg, seed.g.at(1));
    Condition bad = a;
    bad.g[2] = b.g.at(2);
    CHECK(!common_extension(bad, b, cfg));
  }
  SUBCASE("non-nested trees are incompatible") {
    Condition b = make_seed({0, 1}, cfg);
    Tree other = Tree::single_root();
    other.add_node(1, 0);
    other.add_node(1, 0);
    other.add_node(1, 0);
    Condition c = b;
    c.tree = other;
    c.g = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(clauses(c, cfg).empty());
    CHECK(!common_extension(b, c, cfg));
    CHECK(!common_extension(c, b, cfg));
  }
  SUBCASE("disagreeing f maps are incompatible") {
    Condition p = extend_to(seed, 4, cfg);
    Condition q = p;
    q.f.begin()->second = 0;
    if (p.f.begin()->second == 0) p.f.begin()->second = p.tree.at_level(1)[0];
    CHECK(!common_extension(p, q, cfg));
  }
}

TEST_CASE("random conditions are valid and extend their ancestors") {
  Config cfg;
  std::mt19937_64 rng(99);
  for (int round = 0; round < 25; ++round) {
    Chain chain = gen::random_chain(rng, cfg, 6);
    for (const auto& p : chain.conditions) CHECK(clauses(p, cfg).empty());
    for (std::size_t i = 1; i < chain.size(); ++i)
      CHECK(leq(chain.conditions[i], chain.conditions[i - 1], cfg).ok);
  }
}
