#include "verify.hpp"

#include <array>
#include <bit>
#include <map>
#include <set>
#include <vector>

#include "perfover/factorize.hpp"
#include "perfover/overperfect.hpp"
#include "perfover/perfect.hpp"

namespace perfover::cli {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Check {
  std::string name;
  u64 cases = 0;
  bool passed = true;
  std::string counterexample;

  // Records the first failing case; later cases still count.
  template <typename MakeMessage>
  void expect(bool ok, MakeMessage&& make_message) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      counterexample = make_message();
    }
  }
};

std::string show(u64 n, const char* what, Count got, Count want) {
  return "N=" + std::to_string(n) + " " + what + ": got " + to_string(got) + ", expected " +
         to_string(want);
}

// f_v by the closed form that covers the shape of n.
Count closed_dispatch(u64 n, u32 v) {
  const u32 s = static_cast<u32>(std::countr_zero(n));
  const u64 m = n >> s;
  if (s == 0) return v == 0 ? count_factorizations(n) : Count{0};
  if (m == 1) return v <= s ? count_by_twos_pow2(s, v) : Count{0};
  return count_by_twos_closed(n, v);
}

// ---- suite: fv ---------------------------------------------------------

std::vector<Check> suite_fv(u64 nmax) {
  Check lex{"enumeration_lex_unique"};
  Check f_routes{"f_routes_agree"};
  Check fv_routes{"fv_routes_agree"};
  Check fv_split{"fv_class_split"};

  for (u64 n = 2; n <= nmax; ++n) {
    const u32 s = static_cast<u32>(std::countr_zero(n));
    const u64 m = n >> s;
    u64 length = 0;
    std::vector<u64> counts(s + 1, 0);
    std::vector<std::array<u64, 3>> splits(s + 1, {0, 0, 0});
    std::vector<u64> previous;
    for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
      ++length;
      u64 product = 1;
      u32 twos = 0;
      bool higher_pow2 = false, even_non_pow2 = false, factors_ok = true;
      for (u64 f : fs) {
        if (f < 2) factors_ok = false;
        product *= f;
        switch (classify_factor(f)) {
          case FactorClass::Two: ++twos; break;
          case FactorClass::HigherPow2: higher_pow2 = true; break;
          case FactorClass::EvenNonPow2: even_non_pow2 = true; break;
          case FactorClass::Odd: break;
        }
      }
      const bool ordered = previous.empty() || previous < fs;
      lex.expect(factors_ok && product == n && twos <= s && ordered, [&] {
        return "N=" + std::to_string(n) + ": enumeration order or shape violated";
      });
      previous = fs;
      ++counts[twos];
      ++splits[twos][!higher_pow2 ? 0 : (!even_non_pow2 ? 1 : 2)];
    });

    const Count f_rec = count_factorizations(n);
    f_routes.expect(f_rec == count_factorizations_by_parts(n) && f_rec == Count{length},
                    [&] { return show(n, "f routes", Count{length}, f_rec); });

    Count sum{0};
    for (u32 v = 0; v <= s; ++v) {
      const Count oracle{counts[v]};
      const Count rec = count_by_twos(n, v);
      const Count unfiltered = detail::count_by_twos_unfiltered(n, v);
      const Count closed = closed_dispatch(n, v);
      fv_routes.expect(rec == oracle && unfiltered == oracle && closed == oracle, [&] {
        return show(n, ("f_v v=" + std::to_string(v)).c_str(), rec, oracle);
      });
      sum += oracle;
    }
    fv_routes.expect(sum == f_rec, [&] { return show(n, "sum of f_v", sum, f_rec); });

    if (s >= 1 && m > 1) {
      for (u32 v = 0; v <= s; ++v) {
        const auto& split = splits[v];
        const bool ok = count_by_twos_no_higher_pow2(n, v) == Count{split[0]} &&
                        count_by_twos_higher_pow2_only(n, v) == Count{split[1]} &&
                        count_by_twos_mixed_even(n, v) == Count{split[2]} &&
                        count_by_twos_closed(n, v) ==
                            Count{split[0]} + Count{split[1]} + Count{split[2]};
        fv_split.expect(ok, [&] {
          return "N=" + std::to_string(n) + " v=" + std::to_string(v) +
                 ": class split disagrees with the closed forms";
        });
      }
    }
  }
  return {lex, f_routes, fv_routes, fv_split};
}

// ---- suite: identities -------------------------------------------------

std::vector<Check> suite_identities(u64 nmax, u32 pow2_smax, u32 oracle_smax) {
  Check id1{"identity_order1_f1_minus_f0"};
  Check id2{"identity_order2_f0_eq_f2"};
  Check odd{"odd_rule_no_twos"};
  Check pf1{"popform_order1"};
  Check pf2{"popform_order2"};
  Check pf3{"popform_order3"};
  Check p2r{"pow2_row_closed"};
  Check p2t{"pow2_total_closed"};
  Check prop3{"pow2_prop_vs_enumeration"};
  Check props{"short_props_vs_enumeration"};

  for (u64 n = 2; n <= nmax; ++n) {
    const u32 s = static_cast<u32>(std::countr_zero(n));
    if (s == 1) {
      const Count lhs = count_by_twos(n, 1) - count_by_twos(n, 0);
      id1.expect(lhs == count_factorizations(n / 2),
                 [&] { return show(n, "f1 - f0 vs f(N/2)", lhs, count_factorizations(n / 2)); });
    } else if (s == 2) {
      const Count f0 = count_by_twos(n, 0);
      const Count f1 = count_by_twos(n, 1);
      const Count f2 = count_by_twos(n, 2);
      const Count f = count_factorizations(n);
      id2.expect(f0 == f2 && f == Count{2} * f0 + f1 && f == f1 + Count{2} * f2,
                 [&] { return show(n, "order-2 identities", f0, f2); });
    }
  }

  // Odd integers: every enumerated factorization is two-free.
  for (u64 n = 3; n <= nmax; n += 2) {
    u64 length = 0;
    bool no_twos = true;
    for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
      ++length;
      for (u64 f : fs)
        if (f == 2) no_twos = false;
    });
    odd.expect(no_twos && Count{length} == count_by_twos(n, 0) &&
                   count_by_twos(n, 1) == Count{0},
               [&] { return "N=" + std::to_string(n) + ": odd rule violated"; });
  }

  for (u64 n = 1; n <= nmax; ++n) {
    const u64 big_n = n + 1;
    const u32 s = static_cast<u32>(std::countr_zero(big_n));
    const u64 m = big_n >> s;
    if (m == 1) continue;
    if (s == 1)
      pf1.expect(count_pop_order1(n) == count_pop_total(n),
                 [&] { return show(n, "popform order 1", count_pop_order1(n), count_pop_total(n)); });
    if (s == 2)
      pf2.expect(count_pop_order2(n) == count_pop_total(n),
                 [&] { return show(n, "popform order 2", count_pop_order2(n), count_pop_total(n)); });
    if (s == 3)
      pf3.expect(count_pop_order3(n) == count_pop_total(n),
                 [&] { return show(n, "popform order 3", count_pop_order3(n), count_pop_total(n)); });
  }

  for (u32 s = 1; s <= pow2_smax; ++s) {
    const u64 n = (u64{1} << s) - 1;
    for (u32 r = 0; r <= s; ++r)
      p2r.expect(count_pop_pow2(s, r) == count_pop(n, r),
                 [&] { return show(n, "pow2 row", count_pop_pow2(s, r), count_pop(n, r)); });
    p2t.expect(count_pop_pow2(s) == count_pop_total(n),
               [&] { return show(n, "pow2 total", count_pop_pow2(s), count_pop_total(n)); });
  }

  // Propositions against raw enumeration: powers of two ...
  for (u32 s = 0; s <= oracle_smax; ++s) {
    const u64 n = u64{1} << s;
    std::vector<u64> counts(s + 1, 0);
    for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
      u32 twos = 0;
      for (u64 f : fs)
        if (f == 2) ++twos;
      ++counts[twos];
    });
    if (s == 0) continue;  // 2^0 = 1 has no factorizations
    for (u32 v = 0; v <= s; ++v)
      prop3.expect(count_by_twos_pow2(s, v) == Count{counts[v]}, [&] {
        return show(n, ("prop3 v=" + std::to_string(v)).c_str(), count_by_twos_pow2(s, v),
                    Count{counts[v]});
      });
  }

  // ... and 2^s * m for odd m > 1 (all-twos, one-short, two-short forms).
  for (u32 s = 1; s <= oracle_smax; ++s) {
    std::vector<u64> odd_parts{3};
    if (s <= 8) odd_parts.insert(odd_parts.end(), {5, 9, 15});
    for (u64 m : odd_parts) {
      const u64 n = (u64{1} << s) * m;
      std::vector<u64> counts(s + 1, 0);
      for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
        u32 twos = 0;
        for (u64 f : fs)
          if (f == 2) ++twos;
        ++counts[twos];
      });
      props.expect(count_all_twos(n) == Count{counts[s]},
                   [&] { return show(n, "all-twos", count_all_twos(n), Count{counts[s]}); });
      props.expect(count_twos_one_short(n) == Count{counts[s - 1]}, [&] {
        return show(n, "one-short", count_twos_one_short(n), Count{counts[s - 1]});
      });
      if (s >= 2)
        props.expect(count_twos_two_short(n) == Count{counts[s - 2]}, [&] {
          return show(n, "two-short", count_twos_two_short(n), Count{counts[s - 2]});
        });
    }
  }

  return {id1, id2, odd, pf1, pf2, pf3, p2r, p2t, prop3, props};
}

// ---- suite: bijection ---------------------------------------------------

std::vector<Check> suite_bijection(u64 nmax, u64 brute_nmax) {
  Check round_trip{"bijection_roundtrip_and_perfect"};
  Check counting{"bijection_count_consistency"};
  Check onto{"bijection_onto_by_brute_force"};

  for (u64 n = 2; n <= nmax; ++n) {
    u64 length = 0;
    std::map<std::size_t, u64> by_groups;
    for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
      ++length;
      const OrderedFactorization of(fs);
      const Partition image = partition_from_factorization(of);
      ++by_groups[image.groups().size()];
      round_trip.expect(image.weight() == n - 1 && factorization_from_partition(image) == of &&
                            is_perfect_partition(image),
                        [&] {
                          return "N=" + std::to_string(n) + " " + render_factors(fs, false) +
                                 ": round trip or perfectness failed";
                        });
    });
    counting.expect(Count{length} == count_factorizations(n),
                    [&] { return show(n, "stream length", Count{length}, count_factorizations(n)); });
    const u64 omega = prime_factorize(n).big_omega();
    for (u64 k = 1; k <= omega; ++k) {
      const u64 got = by_groups.count(k) ? by_groups[k] : 0;
      counting.expect(Count{got} == count_factorizations_into(n, static_cast<u32>(k)), [&] {
        return show(n, ("blocks k=" + std::to_string(k)).c_str(), Count{got},
                    count_factorizations_into(n, static_cast<u32>(k)));
      });
    }
  }

  for (u64 n = 1; n <= brute_nmax; ++n) {
    // every perfect partition found by exhaustive search is a bijection image
    std::set<std::string> brute;
    std::vector<u64> parts;
    auto rec = [&](auto&& self, u64 remaining, u64 min_part) -> void {
      if (remaining == 0) {
        std::vector<PartGroup> groups;
        for (u64 part : parts) {
          if (!groups.empty() && groups.back().part == part)
            ++groups.back().multiplicity;
          else
            groups.push_back({part, 1});
        }
        const Partition candidate(std::move(groups));
        if (is_perfect_partition(candidate)) brute.insert(render_partition(candidate));
        return;
      }
      for (u64 p = min_part; p <= remaining; ++p) {
        parts.push_back(p);
        self(self, remaining - p, p);
        parts.pop_back();
      }
    };
    rec(rec, n, 1);
    std::set<std::string> images;
    for_each_perfect_partition(n, [&](const Partition& p) { images.insert(render_partition(p)); });
    onto.expect(brute == images,
                [&] { return "n=" + std::to_string(n) + ": brute-force set differs from images"; });
  }

  return {round_trip, counting, onto};
}

// ---- suite: oracle ------------------------------------------------------

std::vector<Check> suite_oracle(u64 nmax, u64 sound_nmax, u64 parity_nmax) {
  Check filter{"exhaustive_filter_matches_counts"};
  Check set_eq{"exhaustive_equals_constructive"};
  Check sound{"constructive_soundness"};
  Check subcount{"suboverpartition_count_law"};
  Check parity{"even_weight_parity"};

  for (u64 n = 1; n <= nmax; ++n) {
    std::map<u32, u64> by_r;
    std::set<std::string> filtered;
    for_each_overpartition(n, [&](const Overpartition& o) {
      if (!is_perfect_overpartition(o)) return;
      ++by_r[o.overlined_count()];
      filtered.insert(render_overpartition(o, false));
    });
    const u32 s = static_cast<u32>(std::countr_zero(n + 1));
    for (u32 r = 0; r <= s + 2; ++r) {
      const u64 expected = by_r.count(r) ? by_r[r] : 0;
      filter.expect(count_pop(n, r) == Count{expected}, [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": filter count " +
               std::to_string(expected) + " vs " + to_string(count_pop(n, r));
      });
    }
    std::set<std::string> constructed;
    for_each_perfect_overpartition(
        n, [&](const Overpartition& o) { constructed.insert(render_overpartition(o, false)); });
    set_eq.expect(filtered == constructed,
                  [&] { return "n=" + std::to_string(n) + ": sets differ"; });
  }

  for (u64 n = 1; n <= sound_nmax; ++n) {
    u64 total = 0;
    for_each_perfect_overpartition(n, [&](const Overpartition& o) {
      ++total;
      bool singletons_ok = true;
      for (const auto& g : o.groups())
        if (g.overlined && g.multiplicity != 1) singletons_ok = false;
      sound.expect(o.weight() == n && singletons_ok && is_perfect_overpartition(o), [&] {
        return "n=" + std::to_string(n) + " " + render_overpartition(o, false) +
               ": constructed object is not perfect";
      });
      if (n <= 25)
        subcount.expect(distinct_suboverpartitions(o) == Count{n}, [&] {
          return "n=" + std::to_string(n) + " " + render_overpartition(o, false) +
                 ": sub-overpartition count differs from n";
        });
    });
    sound.expect(Count{total} == count_pop_total(n),
                 [&] { return show(n, "constructive total", Count{total}, count_pop_total(n)); });
  }

  for (u64 n = 2; n <= parity_nmax; n += 2) {
    parity.expect(count_pop(n, 0) == count_factorizations(n + 1) &&
                      count_pop(n, 1) == Count{0} &&
                      count_pop_total(n) == count_factorizations(n + 1),
                  [&] { return "n=" + std::to_string(n) + ": parity law violated"; });
  }

  return {filter, set_eq, sound, subcount, parity};
}

// ---- suite: tables ------------------------------------------------------

// Values of pop(n, r) for n = 1..50 and r = 0..5, with the row totals.
constexpr u64 kTable3[50][7] = {
    {1, 1, 0, 0, 0, 0, 2},    {1, 0, 0, 0, 0, 0, 1},   {2, 2, 1, 0, 0, 0, 5},
    {1, 0, 0, 0, 0, 0, 1},    {3, 2, 0, 0, 0, 0, 5},   {1, 0, 0, 0, 0, 0, 1},
    {4, 5, 3, 1, 0, 0, 13},   {2, 0, 0, 0, 0, 0, 2},   {3, 2, 0, 0, 0, 0, 5},
    {1, 0, 0, 0, 0, 0, 1},    {8, 8, 3, 0, 0, 0, 19},  {1, 0, 0, 0, 0, 0, 1},
    {3, 2, 0, 0, 0, 0, 5},    {3, 0, 0, 0, 0, 0, 3},   {8, 12, 9, 4, 1, 0, 34},
    {1, 0, 0, 0, 0, 0, 1},    {8, 5, 0, 0, 0, 0, 13},  {1, 0, 0, 0, 0, 0, 1},
    {8, 8, 3, 0, 0, 0, 19},   {3, 0, 0, 0, 0, 0, 3},   {3, 2, 0, 0, 0, 0, 5},
    {1, 0, 0, 0, 0, 0, 1},    {20, 26, 15, 4, 0, 0, 65}, {2, 0, 0, 0, 0, 0, 2},
    {3, 2, 0, 0, 0, 0, 5},    {4, 0, 0, 0, 0, 0, 4},   {8, 8, 3, 0, 0, 0, 19},
    {1, 0, 0, 0, 0, 0, 1},    {13, 8, 0, 0, 0, 0, 21}, {1, 0, 0, 0, 0, 0, 1},
    {16, 28, 25, 14, 5, 1, 89}, {3, 0, 0, 0, 0, 0, 3}, {3, 2, 0, 0, 0, 0, 5},
    {3, 0, 0, 0, 0, 0, 3},    {26, 26, 9, 0, 0, 0, 61}, {1, 0, 0, 0, 0, 0, 1},
    {3, 2, 0, 0, 0, 0, 5},    {3, 0, 0, 0, 0, 0, 3},   {20, 26, 15, 4, 0, 0, 65},
    {1, 0, 0, 0, 0, 0, 1},    {13, 8, 0, 0, 0, 0, 21}, {1, 0, 0, 0, 0, 0, 1},
    {8, 8, 3, 0, 0, 0, 19},   {8, 0, 0, 0, 0, 0, 8},   {3, 2, 0, 0, 0, 0, 5},
    {1, 0, 0, 0, 0, 0, 1},    {48, 76, 57, 24, 5, 0, 210}, {2, 0, 0, 0, 0, 0, 2},
    {8, 5, 0, 0, 0, 0, 13},   {3, 0, 0, 0, 0, 0, 3}};

// The v-refinement of the 976 factorizations of 480: the three class
// columns and their sum, for v = 0..5.
constexpr u64 kTable2Grid[6][4] = {{13, 38, 87, 138},  {32, 102, 132, 266},
                                   {51, 72, 132, 255}, {64, 140, 0, 204},
                                   {65, 0, 0, 65},     {48, 0, 0, 48}};
constexpr u64 kTable2Pop[6] = {976, 1888, 1737, 944, 305, 48};

constexpr u64 kSeqPop[26] = {2, 1, 5, 1, 5,  1, 13, 2, 5,  1, 19, 1, 5,
                             3, 34, 1, 13, 1, 19, 3, 5,  1, 65, 2, 5, 4};
constexpr u64 kSeqPopEven[12] = {1, 1, 1, 2, 1, 1, 3, 1, 1, 3, 1, 2};
constexpr u64 kSeqPopOdd[13] = {2, 5, 5, 13, 5, 19, 5, 34, 13, 19, 5, 65, 5};

std::vector<Check> suite_tables() {
  Check t2{"table2_reproduction"};
  Check t3{"table3_reproduction"};
  Check seq{"sequence_prefixes"};

  Count f480{0};
  for (u32 v = 0; v <= 5; ++v) {
    const Count fv = count_by_twos(480, v);
    const bool ok = count_by_twos_no_higher_pow2(480, v) == Count{kTable2Grid[v][0]} &&
                    count_by_twos_higher_pow2_only(480, v) == Count{kTable2Grid[v][1]} &&
                    count_by_twos_mixed_even(480, v) == Count{kTable2Grid[v][2]} &&
                    fv == Count{kTable2Grid[v][3]};
    t2.expect(ok, [&] { return "480 v=" + std::to_string(v) + ": grid mismatch"; });
    f480 += fv;
  }
  t2.expect(f480 == Count{976} && count_factorizations(480) == Count{976},
            [&] { return show(480, "f(480)", f480, Count{976}); });
  Count pop479{0};
  for (u32 r = 0; r <= 5; ++r) {
    t2.expect(count_pop(479, r) == Count{kTable2Pop[r]}, [&] {
      return show(479, ("pop r=" + std::to_string(r)).c_str(), count_pop(479, r),
                  Count{kTable2Pop[r]});
    });
    pop479 += count_pop(479, r);
  }
  t2.expect(pop479 == Count{5898} && count_pop_total(479) == Count{5898},
            [&] { return show(479, "pop(479)", pop479, Count{5898}); });

  for (u64 n = 1; n <= 50; ++n) {
    const PopRow row = pop_row(n);
    bool ok = row.total == Count{kTable3[n - 1][6]};
    for (u32 r = 0; r <= 5; ++r) {
      const Count got = r < row.counts_by_r.size() ? row.counts_by_r[r] : Count{0};
      if (got != Count{kTable3[n - 1][r]}) ok = false;
    }
    t3.expect(ok, [&] { return "n=" + std::to_string(n) + ": table row mismatch"; });
  }

  for (u64 i = 1; i <= 26; ++i)
    seq.expect(count_pop_total(i) == Count{kSeqPop[i - 1]},
               [&] { return show(i, "pop prefix", count_pop_total(i), Count{kSeqPop[i - 1]}); });
  for (u64 i = 1; i <= 12; ++i)
    seq.expect(count_pop_total(2 * i) == Count{kSeqPopEven[i - 1]}, [&] {
      return show(2 * i, "pop_even prefix", count_pop_total(2 * i), Count{kSeqPopEven[i - 1]});
    });
  for (u64 i = 1; i <= 13; ++i)
    seq.expect(count_pop_total(2 * i - 1) == Count{kSeqPopOdd[i - 1]}, [&] {
      return show(2 * i - 1, "pop_odd prefix", count_pop_total(2 * i - 1),
                  Count{kSeqPopOdd[i - 1]});
    });

  return {t2, t3, seq};
}

}  // namespace

int cmd_verify(const std::string& suite, const VerifyLimits& limits, const GlobalOpts& opts,
               std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  auto append = [&checks](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };

  if (suite == "fv" || suite == "all") append(suite_fv(limits.fv_nmax));
  if (suite == "identities" || suite == "all")
    append(suite_identities(limits.id_nmax, limits.pow2_smax, limits.oracle_smax));
  if (suite == "bijection" || suite == "all")
    append(suite_bijection(limits.bij_nmax, limits.brute_nmax));
  if (suite == "oracle" || suite == "all")
    append(suite_oracle(limits.oracle_nmax, limits.sound_nmax, limits.parity_nmax));
  if (suite == "tables" || suite == "all") append(suite_tables());

  if (checks.empty()) {
    err << "verify: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }

  Emitter emitter(out, opts);
  bool all_passed = true;
  for (const auto& c : checks) {
    json rec{{"kind", "check_result"}, {"check", c.name}, {"cases", c.cases}, {"passed", c.passed}};
    if (!c.passed) {
      rec["counterexample"] = c.counterexample;
      all_passed = false;
    }
    emitter.add(std::move(rec));
  }
  emitter.flush();
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace perfover::cli
