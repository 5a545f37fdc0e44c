#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/partition.hpp"

using namespace unip;

namespace {

// Exhaustive-search oracle: the dominance-greatest valid partition below p.
// This, not the greedy algorithm, is the contract for collapse().
Partition collapse_oracle(const Partition& p, ParityFamily f) {
  Partition best;
  bool found = false;
  for (auto& q : enumerate_partitions(p.size(), f)) {
    if (!dominance_leq(q, p)) continue;
    if (!found || dominance_leq(best, q)) {
      best = q;
      found = true;
    }
  }
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("transpose basics") {
  CHECK(transpose(Partition{3, 1, 1}) == Partition{3, 1, 1});
  CHECK(transpose(Partition{4}) == Partition{1, 1, 1, 1});
  CHECK(transpose(Partition{2, 2}) == Partition{2, 2});
  CHECK(transpose(Partition{}) == Partition{});
}

TEST_CASE("transpose is an involution, sizes up to 20") {
  for (int n = 0; n <= 20; ++n)
    for (auto& p : enumerate_all_partitions(n)) {
      CHECK(transpose(transpose(p)) == p);
      CHECK(transpose(p).size() == n);
    }
}

TEST_CASE("dominance order examples") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominance_leq(Partition{2, 1, 1}, Partition{2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order, sizes up to 10") {
  for (int n = 1; n <= 10; ++n) {
    auto all = enumerate_all_partitions(n);
    for (auto& p : all) CHECK(dominance_leq(p, p));
    for (auto& p : all)
      for (auto& q : all) {
        if (dominance_leq(p, q) && dominance_leq(q, p)) CHECK(p == q);
        // order-reversal under transpose
        CHECK(dominance_leq(p, q) == dominance_leq(transpose(q), transpose(p)));
      }
    for (auto& p : all)
      for (auto& q : all)
        for (auto& r : all)
          if (dominance_leq(p, q) && dominance_leq(q, r)) CHECK(dominance_leq(p, r));
  }
}

TEST_CASE("parity validity") {
  CHECK(is_valid(Partition{3, 1, 1}, ParityFamily::B, 5));
  CHECK(is_valid(Partition{2, 2}, ParityFamily::C, 4));
  CHECK_FALSE(is_valid(Partition{3, 1}, ParityFamily::C, 4));
  CHECK_FALSE(is_valid(Partition{3, 1}, ParityFamily::B, 5));
  CHECK(is_valid(Partition{}, ParityFamily::B, 0));
}

TEST_CASE("collapse examples") {
  CHECK(collapse(Partition{3, 1}, ParityFamily::C) == Partition{2, 2});
  CHECK(collapse(Partition{4, 1}, ParityFamily::B) == Partition{3, 1, 1});
  CHECK(collapse(Partition{2, 2}, ParityFamily::C) == Partition{2, 2});
  CHECK_THROWS_AS(collapse(Partition{3, 1}, ParityFamily::B), std::invalid_argument);
}

TEST_CASE("collapse agrees with the exhaustive oracle, sizes up to 12") {
  for (int n = 0; n <= 12; ++n) {
    for (auto& p : enumerate_all_partitions(n)) {
      for (ParityFamily f : {ParityFamily::B, ParityFamily::C, ParityFamily::D}) {
        bool feasible = (f == ParityFamily::B) ? n % 2 == 1 : n % 2 == 0;
        if (!feasible) continue;
        Partition got = collapse(p, f);
        CHECK(parity_rule_holds(got, f));
        CHECK(dominance_leq(got, p));
        CHECK(collapse(got, f) == got);  // idempotent
        CHECK(got == collapse_oracle(p, f));
      }
    }
  }
}

TEST_CASE("enumerate_partitions is complete, ordered, family-filtered") {
  auto b5 = enumerate_partitions(5, ParityFamily::B);
  REQUIRE(b5.size() == 4);
  CHECK(b5[0] == Partition{5});
  CHECK(b5[1] == Partition{3, 1, 1});
  CHECK(b5[2] == Partition{2, 2, 1});
  CHECK(b5[3] == Partition{1, 1, 1, 1, 1});

  auto c4 = enumerate_partitions(4, ParityFamily::C);
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == Partition{4});
  CHECK(c4[1] == Partition{2, 2});
  CHECK(c4[2] == Partition{2, 1, 1});
  CHECK(c4[3] == Partition{1, 1, 1, 1});

  CHECK(enumerate_partitions(0, ParityFamily::A) == std::vector<Partition>{Partition{}});
}

TEST_CASE("partition parse and render") {
  CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(parse_partition(" 3 , 1 , 1 ") == Partition{3, 1, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("-") == Partition{});
  CHECK(Partition{3, 1, 1}.str() == "3,1,1");
  CHECK(Partition{}.str() == "-");
  CHECK_THROWS(parse_partition("1,3"));
  CHECK_THROWS(parse_partition("0"));
}
