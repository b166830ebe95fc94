#include "doctest.h"
#include "support/mutations.hpp"

using namespace kurepa;

// Each mutation must flip exactly the clause it targets: the base input
// is green, the mutated input is red in one place, everything else quiet.

TEST_CASE("validity clause mutations") {
  Config cfg;
  Chain chain = mut::base_chain();
  const Condition& last = chain.last();

  CHECK(mut::m1_orphan(last, cfg));
  CHECK(mut::m2_single_file_root(last, cfg));
  CHECK(mut::m3_uncovered_top(last, cfg));
  CHECK(mut::m4_missing_f(last, cfg));
  CHECK(mut::m5_fixed_point(last, cfg));
  CHECK(mut::m6_meet_collision(last, cfg));
}

TEST_CASE("order clause mutations") {
  Config cfg;
  Chain chain = mut::base_chain();

  CHECK(mut::m7_rewritten_node(chain, cfg));
  CHECK(mut::m8_dropped_label(chain, cfg));
  CHECK(mut::m9_swapped_labels(chain, cfg));
  CHECK(mut::m10_rewritten_f(chain, cfg));
}

TEST_CASE("the whole battery in one sweep") {
  CHECK(mut::run_all(Config{}) == 10);
}
