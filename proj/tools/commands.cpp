#include "commands.hpp"

#include <bit>
#include <vector>

#include "perfover/factorize.hpp"
#include "perfover/overperfect.hpp"
#include "perfover/perfect.hpp"

namespace perfover::cli {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct PathValue {
  std::string path;
  Count value;
};

// f_v by the closed route appropriate for the shape of n.
PathValue closed_twos_path(u64 n, u32 v) {
  const u32 s = static_cast<u32>(std::countr_zero(n));
  const u64 m = n >> s;
  if (s == 0) return {"odd-rule", v == 0 ? count_factorizations(n) : Count{0}};
  if (m == 1) return {"pow2-closed", v <= s ? count_by_twos_pow2(s, v) : Count{0}};
  return {"classes-closed", count_by_twos_closed(n, v)};
}

int emit_count(Emitter& emitter, const std::string& function, u64 n,
               std::optional<u32> k, std::optional<u32> v, std::optional<u32> r,
               const PathValue& primary, const std::vector<PathValue>& alternatives,
               bool xcheck) {
  json rec{{"kind", "count"}, {"function", function}, {"n", n}};
  if (k) rec["k"] = *k;
  if (v) rec["v"] = *v;
  if (r) rec["r"] = *r;
  rec["value"] = primary.value.value();
  rec["path"] = primary.path;
  bool agree = true;
  if (xcheck) {
    json alts = json::array();
    for (const auto& alt : alternatives) {
      alts.push_back({{"path", alt.path}, {"value", alt.value.value()}});
      if (alt.value != primary.value) agree = false;
    }
    rec["alternatives"] = std::move(alts);
    rec["agree"] = agree;
  }
  emitter.add(std::move(rec));
  emitter.flush();
  return agree ? kExitOk : kExitCheckFailed;
}

u64 stream_count(u64 n) {
  u64 total = 0;
  for_each_ordered_factorization(n, [&total](const std::vector<u64>&) { ++total; });
  return total;
}

}  // namespace

int cmd_count(const std::string& kind, u64 n, std::optional<u32> k, std::optional<u32> v,
              std::optional<u32> r, const GlobalOpts& opts, std::ostream& out,
              std::ostream& err) {
  Emitter emitter(out, opts);
  try {
    if (kind == "f") {
      if (n == 0) throw std::invalid_argument("count f: n must be >= 1");
      const PathValue primary{"divisor-recurrence", count_factorizations(n)};
      std::vector<PathValue> alts;
      if (opts.xcheck) {
        alts.push_back({"length-sum", count_factorizations_by_parts(n)});
        if (n <= opts.guard) alts.push_back({"enumeration", Count{stream_count(n)}});
      }
      return emit_count(emitter, kind, n, {}, {}, {}, primary, alts, opts.xcheck);
    }
    if (kind == "fnk") {
      if (!k) throw std::invalid_argument("count fnk: --k is required");
      const PathValue primary{"inclusion-exclusion", count_factorizations_into(n, *k)};
      std::vector<PathValue> alts;
      if (opts.xcheck && n <= opts.guard) {
        u64 hits = 0;
        for_each_ordered_factorization(n, [&](const std::vector<u64>& fs) {
          if (fs.size() == *k) ++hits;
        });
        alts.push_back({"enumeration", Count{hits}});
      }
      return emit_count(emitter, kind, n, k, {}, {}, primary, alts, opts.xcheck);
    }
    if (kind == "fv") {
      if (!v) throw std::invalid_argument("count fv: --v is required");
      if (n < 2) throw std::invalid_argument("count fv: n must be >= 2");
      const PathValue primary{"twos-recurrence", count_by_twos(n, *v)};
      std::vector<PathValue> alts;
      if (opts.xcheck) {
        if (n <= opts.guard) alts.push_back({"twos-enumeration", count_by_twos_enumerated(n, *v)});
        alts.push_back(closed_twos_path(n, *v));
        const u32 s = static_cast<u32>(std::countr_zero(n));
        const u64 m = n >> s;
        if (m > 1 && s >= 1) {
          if (*v == s) alts.push_back({"all-twos-closed", count_all_twos(n)});
          if (*v + 1 == s) alts.push_back({"one-short-closed", count_twos_one_short(n)});
          if (s >= 2 && *v + 2 == s)
            alts.push_back({"two-short-closed", count_twos_two_short(n)});
        }
      }
      return emit_count(emitter, kind, n, {}, v, {}, primary, alts, opts.xcheck);
    }
    if (kind == "pp") {
      if (n == 0) throw std::invalid_argument("count pp: n must be >= 1");
      PathValue primary;
      std::vector<PathValue> alts;
      if (k) {
        primary = {"inclusion-exclusion", count_perfect_partitions(n, *k)};
        if (opts.xcheck && n + 1 <= opts.guard) {
          u64 hits = 0;
          for_each_perfect_partition(n, [&](const Partition& p) {
            if (p.groups().size() == *k) ++hits;
          });
          alts.push_back({"bijection-enumeration", Count{hits}});
        }
      } else {
        primary = {"divisor-recurrence", count_perfect_partitions(n)};
        if (opts.xcheck) {
          alts.push_back({"length-sum", count_factorizations_by_parts(n + 1)});
          if (n + 1 <= opts.guard)
            alts.push_back({"bijection-enumeration", Count{stream_count(n + 1)}});
        }
      }
      return emit_count(emitter, kind, n, k, {}, {}, primary, alts, opts.xcheck);
    }
    if (kind == "pop" || kind == "pop_r") {
      if (n == 0) throw std::invalid_argument("count pop: n must be >= 1");
      if (kind == "pop_r" && !r) throw std::invalid_argument("count pop_r: --r is required");
      const u64 big_n = n + 1;
      const u32 s = static_cast<u32>(std::countr_zero(big_n));
      const u64 m = big_n >> s;
      std::vector<PathValue> alts;
      PathValue primary;
      if (r) {
        primary = {"theorem-sum-recurrence", count_pop(n, *r)};
        if (opts.xcheck) {
          // the same theorem sum, fed by closed forms instead of the recurrence
          Count closed{0};
          for (u32 w = *r; w <= s; ++w)
            closed += binomial(w, *r) * closed_twos_path(big_n, w).value;
          alts.push_back({"theorem-sum-closed", closed});
          if (m == 1 && s >= 1) alts.push_back({"pow2-row-closed", count_pop_pow2(s, *r)});
          if (n <= opts.guard && n <= 2000) {
            u64 hits = 0;
            if (*r <= s) for_each_perfect_overpartition(n, *r, [&](const Overpartition&) { ++hits; });
            alts.push_back({"constructive-enumeration", Count{hits}});
          }
          if (n <= 25) {
            u64 hits = 0;
            for_each_overpartition(n, [&](const Overpartition& o) {
              if (o.overlined_count() == *r && is_perfect_overpartition(o)) ++hits;
            });
            alts.push_back({"definition-oracle", Count{hits}});
          }
        }
      } else {
        primary = {"theorem-sum-recurrence", count_pop_total(n)};
        if (opts.xcheck) {
          Count closed{0};
          for (u32 w = 0; w <= s; ++w)
            for (u32 q = 0; q <= w; ++q)
              closed += binomial(w, q) * closed_twos_path(big_n, w).value;
          alts.push_back({"theorem-sum-closed", closed});
          if (m > 1) {
            if (s == 1) alts.push_back({"closed-order1", count_pop_order1(n)});
            if (s == 2) alts.push_back({"closed-order2", count_pop_order2(n)});
            if (s == 3) alts.push_back({"closed-order3", count_pop_order3(n)});
          } else if (s >= 1) {
            alts.push_back({"pow2-total-closed", count_pop_pow2(s)});
          }
          if (n <= opts.guard && n <= 2000) {
            u64 hits = 0;
            for_each_perfect_overpartition(n, [&](const Overpartition&) { ++hits; });
            alts.push_back({"constructive-enumeration", Count{hits}});
          }
          if (n <= 25) {
            u64 hits = 0;
            for_each_overpartition(n, [&](const Overpartition& o) {
              if (is_perfect_overpartition(o)) ++hits;
            });
            alts.push_back({"definition-oracle", Count{hits}});
          }
        }
      }
      return emit_count(emitter, "pop", n, {}, {}, r, primary, alts, opts.xcheck);
    }
    err << "count: unknown kind '" << kind << "'\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_enumerate(const std::string& kind, u64 n, std::optional<u32> r,
                  const GlobalOpts& opts, std::ostream& out, std::ostream& err) {
  if (n == 0) {
    err << "enumerate: n must be >= 1\n";
    return kExitUsage;
  }
  if (n > opts.guard && !opts.force) {
    err << "enumerate: n = " << n << " exceeds the size guard " << opts.guard
        << " (raise with --guard or override with --force)\n";
    return kExitGuard;
  }
  Emitter emitter(out, opts);
  if (kind == "factorizations") {
    for_each_ordered_factorization(n, [&](const std::vector<u64>& factors) {
      emitter.add({{"kind", "factorization"}, {"product", n}, {"factors", factors}});
    });
  } else if (kind == "perfect") {
    for_each_perfect_partition(n, [&](const Partition& p) {
      emitter.add({{"kind", "partition"},
                   {"weight", p.weight()},
                   {"groups", partition_groups_json(p)}});
    });
  } else if (kind == "overperfect") {
    auto add = [&emitter](const Overpartition& o) {
      emitter.add({{"kind", "overpartition"},
                   {"weight", o.weight()},
                   {"r", o.overlined_count()},
                   {"groups", overpartition_groups_json(o)}});
    };
    if (r) {
      const u32 s = static_cast<u32>(std::countr_zero(n + 1));
      if (*r <= s) for_each_perfect_overpartition(n, *r, add);
    } else {
      for_each_perfect_overpartition(n, add);
    }
  } else {
    err << "enumerate: unknown kind '" << kind << "'\n";
    return kExitUsage;
  }
  emitter.flush();
  return kExitOk;
}

int cmd_table(const std::string& which, u64 nmax, u32 rmax, const GlobalOpts& opts,
              std::ostream& out, std::ostream& err) {
  Emitter emitter(out, opts);
  if (which == "t1") {
    // factorizations of 6 against the perfect partitions of 5
    for_each_ordered_factorization(6, [&](const std::vector<u64>& factors) {
      const Partition p = partition_from_factorization(OrderedFactorization(factors));
      emitter.add({{"kind", "table_row"},
                   {"table", "t1"},
                   {"factorization", factors},
                   {"partition", partition_groups_json(p)}});
    });
  } else if (which == "t2") {
    // the v-refinement of the factorizations of 480 and pop(479, r)
    Count f480{0};
    for (u32 v = 0; v <= 5; ++v) {
      const Count fv = count_by_twos(480, v);
      f480 += fv;
      emitter.add({{"kind", "table_row"},
                   {"table", "t2"},
                   {"v", v},
                   {"no_higher_pow2", count_by_twos_no_higher_pow2(480, v).value()},
                   {"higher_pow2_only", count_by_twos_higher_pow2_only(480, v).value()},
                   {"mixed_even", count_by_twos_mixed_even(480, v).value()},
                   {"total", fv.value()}});
    }
    emitter.add(
        {{"kind", "table_row"}, {"table", "t2"}, {"label", "f(480)"}, {"value", f480.value()}});
    Count total{0};
    for (u32 r = 0; r <= 5; ++r) {
      const Count pop = count_pop(479, r);
      total += pop;
      emitter.add({{"kind", "table_row"}, {"table", "t2"}, {"r", r}, {"pop", pop.value()}});
    }
    emitter.add({{"kind", "table_row"},
                 {"table", "t2"},
                 {"label", "pop(479)"},
                 {"value", total.value()}});
  } else if (which == "t3") {
    if (nmax == 0) {
      err << "table t3: --nmax must be >= 1\n";
      return kExitUsage;
    }
    for (u64 n = 1; n <= nmax; ++n) {
      const PopRow row = pop_row(n);
      std::vector<u64> counts(rmax + 1, 0);
      for (std::size_t i = 0; i < row.counts_by_r.size() && i <= rmax; ++i)
        counts[i] = row.counts_by_r[i].value();
      emitter.add({{"kind", "table_row"},
                   {"table", "t3"},
                   {"n", n},
                   {"counts", counts},
                   {"total", row.total.value()}});
    }
  } else {
    err << "table: unknown table '" << which << "'\n";
    return kExitUsage;
  }
  emitter.flush();
  return kExitOk;
}

int cmd_sequence(const std::string& which, u64 terms, bool bfile, const GlobalOpts& opts,
                 std::ostream& out, std::ostream& err) {
  Emitter emitter(out, opts);
  u64 count = terms;
  if (which == "pop") {
    if (count == 0) count = 26;
    for (u64 i = 1; i <= count; ++i)
      emitter.add({{"kind", "seq_term"},
                   {"sequence", "pop"},
                   {"index", i},
                   {"value", count_pop_total(i).value()}});
  } else if (which == "pop_even") {
    if (count == 0) count = 12;
    for (u64 i = 1; i <= count; ++i)
      emitter.add({{"kind", "seq_term"},
                   {"sequence", "pop_even"},
                   {"index", i},
                   {"value", count_pop_total(2 * i).value()}});
  } else if (which == "pop_odd") {
    if (count == 0) count = 13;
    for (u64 i = 1; i <= count; ++i)
      emitter.add({{"kind", "seq_term"},
                   {"sequence", "pop_odd"},
                   {"index", i},
                   {"value", count_pop_total(2 * i - 1).value()}});
  } else {
    err << "sequence: unknown sequence '" << which << "'\n";
    return kExitUsage;
  }
  emitter.flush(bfile);
  return kExitOk;
}

}  // namespace perfover::cli
