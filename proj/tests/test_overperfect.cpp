#include <doctest.h>

#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "perfover/overperfect.hpp"
#include "testutil.hpp"

using namespace perfover;
using testutil::key;
using testutil::op;
using testutil::pp;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

TEST_CASE("Overpartition validates its groups") {
  CHECK(op({{1, 2, false}, {3, 1, true}, {6, 1, false}}).weight() == 11);
  CHECK(op({{1, 2, false}, {3, 1, true}, {6, 1, true}}).overlined_count() == 2);
  CHECK_THROWS_AS(op({{2, 1, false}, {2, 1, true}}), std::invalid_argument);
  CHECK_THROWS_AS(op({{1, 0, false}}), std::invalid_argument);
}

TEST_CASE("exhaustive overpartitions of small n") {
  CHECK(all_overpartitions(3).size() == 8);

  const auto one = all_overpartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == op({{1, 1, false}}));
  CHECK(one[1] == op({{1, 1, true}}));

  std::set<std::string> two;
  for (const auto& o : all_overpartitions(2)) two.insert(key(o));
  CHECK(two == std::set<std::string>{key(op({{2, 1, false}})), key(op({{2, 1, true}})),
                                     key(op({{1, 2, false}})), key(op({{1, 2, true}}))});

  // A015128 prefix: 2, 4, 8, 14, 24, 40, 64, 100
  const u64 counts[] = {2, 4, 8, 14, 24, 40, 64, 100};
  for (u64 n = 1; n <= 8; ++n) CHECK(all_overpartitions(n).size() == counts[n - 1]);

  // no duplicates
  for (u64 n = 1; n <= 12; ++n) {
    std::set<std::string> seen;
    for (const auto& o : all_overpartitions(n)) CHECK(seen.insert(key(o)).second);
  }
}

TEST_CASE("overline_variants of (1^2, 3, 6)") {
  const auto variants = overline_variants(pp({{1, 2}, {3, 1}, {6, 1}}));
  REQUIRE(variants.size() == 4);
  CHECK(variants[0] == op({{1, 2, false}, {3, 1, false}, {6, 1, false}}));
  CHECK(variants[1] == op({{1, 2, false}, {3, 1, true}, {6, 1, false}}));
  CHECK(variants[2] == op({{1, 2, false}, {3, 1, false}, {6, 1, true}}));
  CHECK(variants[3] == op({{1, 2, false}, {3, 1, true}, {6, 1, true}}));
}

TEST_CASE("overline_variants with a fixed number of overlines") {
  // (1^5) has no singleton group, so a single overline is impossible.
  CHECK_THROWS_AS(overline_variants(pp({{1, 5}}), 1), TooManyOverlines);
  CHECK(overline_variants(pp({{1, 5}}), 0).size() == 1);

  const auto one = overline_variants(pp({{1, 1}, {2, 5}}), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == op({{1, 1, true}, {2, 5, false}}));

  // C(v, r) variants in general
  const auto two_of_three = overline_variants(pp({{1, 1}, {2, 1}, {4, 1}, {8, 2}}), 2);
  CHECK(two_of_three.size() == 3);
}

TEST_CASE("perfectness of overpartitions: worked examples") {
  CHECK(is_perfect_overpartition(op({{1, 2, false}, {3, 1, true}, {6, 1, false}})));
  CHECK(is_perfect_overpartition(op({{1, 1, true}, {2, 2, false}, {6, 1, true}})));

  const auto doubled = check_perfect_overpartition(
      op({{1, 2, true}, {3, 1, false}, {6, 1, false}}));  // (1, 1bar, 3, 6)
  CHECK_FALSE(doubled.perfect);
  CHECK(doubled.witness_weight == 1);  // contains (1) and (1bar)
  CHECK(doubled.witness_count == Count{2});
}

TEST_CASE("the count of distinct sub-overpartitions is necessary, not sufficient") {
  // A perfect overpartition of weight n has exactly n nonempty
  // sub-overpartitions, one per weight.
  for (u64 n = 1; n <= 25; ++n) {
    for (const auto& o : perfect_overpartitions(n)) {
      CHECK(distinct_suboverpartitions(o) == Count{n});
    }
  }
  // The converse fails: (1, 3, 3bar) has weight 7 and exactly 7 distinct
  // nonempty sub-overpartitions, but misses weight 2 and doubles weight 3.
  const auto counterexample = op({{1, 1, false}, {3, 2, true}});
  CHECK(distinct_suboverpartitions(counterexample) == Count{7});
  CHECK(counterexample.weight() == 7);
  const auto report = check_perfect_overpartition(counterexample);
  CHECK_FALSE(report.perfect);
  CHECK(report.witness_weight == 2);
  CHECK(report.witness_count == Count{0});
}

TEST_CASE("constructive enumeration reproduces the worked n = 11 lists") {
  std::set<std::string> r0, r1, r2;
  for (const auto& o : perfect_overpartitions(11, 0)) r0.insert(key(o));
  for (const auto& o : perfect_overpartitions(11, 1)) r1.insert(key(o));
  for (const auto& o : perfect_overpartitions(11, 2)) r2.insert(key(o));

  const std::set<std::string> expected_r0 = {
      key(op({{1, 11, false}})),
      key(op({{1, 1, false}, {2, 5, false}})),
      key(op({{1, 2, false}, {3, 3, false}})),
      key(op({{1, 3, false}, {4, 2, false}})),
      key(op({{1, 1, false}, {2, 1, false}, {4, 2, false}})),
      key(op({{1, 5, false}, {6, 1, false}})),
      key(op({{1, 1, false}, {2, 2, false}, {6, 1, false}})),
      key(op({{1, 2, false}, {3, 1, false}, {6, 1, false}}))};
  const std::set<std::string> expected_r1 = {
      key(op({{1, 1, true}, {2, 5, false}})),
      key(op({{1, 1, true}, {2, 1, false}, {4, 2, false}})),
      key(op({{1, 1, false}, {2, 1, true}, {4, 2, false}})),
      key(op({{1, 5, false}, {6, 1, true}})),
      key(op({{1, 1, true}, {2, 2, false}, {6, 1, false}})),
      key(op({{1, 1, false}, {2, 2, false}, {6, 1, true}})),
      key(op({{1, 2, false}, {3, 1, true}, {6, 1, false}})),
      key(op({{1, 2, false}, {3, 1, false}, {6, 1, true}}))};
  const std::set<std::string> expected_r2 = {
      key(op({{1, 1, true}, {2, 1, true}, {4, 2, false}})),
      key(op({{1, 1, true}, {2, 2, false}, {6, 1, true}})),
      key(op({{1, 2, false}, {3, 1, true}, {6, 1, true}}))};

  CHECK(r0 == expected_r0);
  CHECK(r1 == expected_r1);
  CHECK(r2 == expected_r2);
  CHECK(perfect_overpartitions(11).size() == 19);
}

TEST_CASE("even weights only admit the overline-free objects") {
  for (u64 n = 2; n <= 40; n += 2) {
    CHECK(count_pop(n, 0) == count_factorizations(n + 1));
    CHECK(count_pop(n, 1) == Count{0});
    for (const auto& o : perfect_overpartitions(n)) CHECK(o.overlined_count() == 0);
  }
}

TEST_CASE("count_pop on the worked values") {
  CHECK(count_pop(11, 0) == Count{8});
  CHECK(count_pop(11, 1) == Count{8});
  CHECK(count_pop(11, 2) == Count{3});
  CHECK(count_pop_total(11) == Count{19});

  const u64 row479[] = {976, 1888, 1737, 944, 305, 48};
  for (u32 r = 0; r <= 5; ++r) CHECK(count_pop(479, r) == Count{row479[r]});
  CHECK(count_pop(479, 6) == Count{0});
  CHECK(count_pop_total(479) == Count{5898});

  const u64 row7[] = {4, 5, 3, 1};
  for (u32 r = 0; r <= 3; ++r) CHECK(count_pop(7, r) == Count{row7[r]});

  CHECK(count_pop_total(23) == Count{65});
  CHECK(count_pop_total(31) == Count{89});
}

TEST_CASE("count_pop matches the constructive stream") {
  for (u64 n = 1; n <= 60; ++n) {
    const u32 s = static_cast<u32>(std::countr_zero(n + 1));
    u64 total = 0;
    for (u32 r = 0; r <= s; ++r) {
      const auto stream = perfect_overpartitions(n, r);
      CHECK(count_pop(n, r) == Count{stream.size()});
      for (const auto& o : stream) CHECK(o.overlined_count() == r);
      total += stream.size();
    }
    CHECK(count_pop_total(n) == Count{total});
    CHECK(perfect_overpartitions(n).size() == total);
  }
}

TEST_CASE("every constructed perfect overpartition is perfect (n <= 60)") {
  for (u64 n = 1; n <= 60; ++n) {
    for_each_perfect_overpartition(n, [&](const Overpartition& o) {
      CHECK(o.weight() == n);
      CHECK(is_perfect_overpartition(o));
      // an overlined part size always has multiplicity 1
      for (const auto& g : o.groups())
        if (g.overlined) CHECK(g.multiplicity == 1);
    });
  }
}

TEST_CASE("exhaustive definition-level oracle agrees (n <= 20)") {
  for (u64 n = 1; n <= 20; ++n) {
    std::map<u32, u64> by_r;
    std::set<std::string> filtered;
    for_each_overpartition(n, [&](const Overpartition& o) {
      if (!is_perfect_overpartition(o)) return;
      ++by_r[o.overlined_count()];
      filtered.insert(key(o));
    });
    const u32 s = static_cast<u32>(std::countr_zero(n + 1));
    for (u32 r = 0; r <= s + 1; ++r) {
      const u64 expected = by_r.count(r) ? by_r[r] : 0;
      CHECK(count_pop(n, r) == Count{expected});
    }
    std::set<std::string> constructed;
    for (const auto& o : perfect_overpartitions(n)) constructed.insert(key(o));
    CHECK(filtered == constructed);
  }
}

TEST_CASE("closed forms for 2-adic order 1, 2, 3") {
  CHECK(count_pop_order1(5) == Count{5});
  CHECK(count_pop_order2(11) == Count{19});
  CHECK(count_pop_order3(23) == Count{65});
  CHECK_THROWS_AS(count_pop_order1(11), std::invalid_argument);  // 12 has order 2
  CHECK_THROWS_AS(count_pop_order2(5), std::invalid_argument);
  CHECK_THROWS_AS(count_pop_order3(7), std::invalid_argument);  // 8 is a power of 2

  for (u64 n = 1; n <= 1000; ++n) {
    const u64 big_n = n + 1;
    const u32 s = static_cast<u32>(std::countr_zero(big_n));
    if ((big_n >> s) == 1) continue;
    if (s == 1) CHECK(count_pop_order1(n) == count_pop_total(n));
    if (s == 2) CHECK(count_pop_order2(n) == count_pop_total(n));
    if (s == 3) CHECK(count_pop_order3(n) == count_pop_total(n));
  }
}

TEST_CASE("power-of-two weights: closed row and total") {
  CHECK(count_pop_pow2(4) == Count{34});
  CHECK(count_pop_pow2(5) == Count{89});
  const u64 row7[] = {4, 5, 3, 1};
  for (u32 r = 0; r <= 3; ++r) CHECK(count_pop_pow2(3, r) == Count{row7[r]});

  for (u32 s = 1; s <= 12; ++s) {
    const u64 n = (u64{1} << s) - 1;
    Count total{0};
    for (u32 r = 0; r <= s; ++r) {
      CHECK(count_pop_pow2(s, r) == count_pop(n, r));
      total += count_pop_pow2(s, r);
    }
    CHECK(count_pop_pow2(s) == count_pop_total(n));
    CHECK(count_pop_pow2(s) == total);
  }
}

TEST_CASE("pop_row assembles counts up to the 2-adic order") {
  const auto row47 = pop_row(47);
  CHECK(row47.n == 47);
  CHECK(row47.counts_by_r ==
        std::vector<Count>{Count{48}, Count{76}, Count{57}, Count{24}, Count{5}});
  CHECK(row47.total == Count{210});

  const auto row2 = pop_row(2);
  CHECK(row2.counts_by_r == std::vector<Count>{Count{1}});
  CHECK(row2.total == Count{1});

  const auto row15 = pop_row(15);
  CHECK(row15.counts_by_r ==
        std::vector<Count>{Count{8}, Count{12}, Count{9}, Count{4}, Count{1}});
  CHECK(row15.total == Count{34});
}

TEST_CASE("first summand law: pop(n, 0) = f(n+1)") {
  for (u64 n = 1; n <= 300; ++n) CHECK(count_pop(n, 0) == count_factorizations(n + 1));
}
