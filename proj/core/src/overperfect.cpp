#include "perfover/overperfect.hpp"

#include <bit>
#include <string>
#include <utility>

namespace perfover {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Partitions of n as ascending part lists, in lexicographic order.
void for_each_partition_parts(u64 n, const std::function<void(const std::vector<u64>&)>& visit) {
  std::vector<u64> parts;
  auto rec = [&](auto&& self, u64 remaining, u64 min_part) -> void {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (u64 p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, 1);
}

std::vector<OverGroup> groups_of_parts(const std::vector<u64>& parts) {
  std::vector<OverGroup> groups;
  for (u64 p : parts) {
    if (!groups.empty() && groups.back().part == p) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({p, 1, false});
    }
  }
  return groups;
}

// Next bit pattern with the same popcount, ascending (Gosper's hack).
u64 next_same_popcount(u64 mask) {
  const u64 low = mask & ~(mask - 1);
  const u64 ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

}  // namespace

Overpartition::Overpartition(std::vector<OverGroup> groups) : groups_(std::move(groups)) {
  Count weight{0};
  u64 prev_part = 0;
  for (const auto& g : groups_) {
    if (g.part == 0) throw std::invalid_argument("Overpartition: parts must be positive");
    if (g.part <= prev_part)
      throw std::invalid_argument("Overpartition: parts must be strictly increasing");
    if (g.multiplicity == 0)
      throw std::invalid_argument("Overpartition: multiplicities must be positive");
    weight += Count(g.part) * Count(g.multiplicity);
    prev_part = g.part;
  }
  weight_ = weight.value();
}

std::uint32_t Overpartition::overlined_count() const {
  u32 r = 0;
  for (const auto& g : groups_)
    if (g.overlined) ++r;
  return r;
}

void for_each_overpartition(std::uint64_t n,
                            const std::function<void(const Overpartition&)>& visit) {
  if (n == 0) throw std::invalid_argument("for_each_overpartition: n must be positive");
  for_each_partition_parts(n, [&](const std::vector<u64>& parts) {
    std::vector<OverGroup> groups = groups_of_parts(parts);
    const u64 mask_end = u64{1} << groups.size();
    for (u64 mask = 0; mask < mask_end; ++mask) {
      for (std::size_t i = 0; i < groups.size(); ++i)
        groups[i].overlined = (mask >> i) & 1;
      visit(Overpartition(groups));
    }
  });
}

std::vector<Overpartition> all_overpartitions(std::uint64_t n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&out](const Overpartition& op) { out.push_back(op); });
  return out;
}

namespace {

std::vector<std::size_t> singleton_group_indices(const Partition& p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < p.groups().size(); ++i)
    if (p.groups()[i].multiplicity == 1) idx.push_back(i);
  return idx;
}

Overpartition apply_overline_mask(const Partition& p,
                                  const std::vector<std::size_t>& singletons, u64 mask) {
  std::vector<OverGroup> groups;
  groups.reserve(p.groups().size());
  for (const auto& g : p.groups()) groups.push_back({g.part, g.multiplicity, false});
  for (std::size_t j = 0; j < singletons.size(); ++j)
    if ((mask >> j) & 1) groups[singletons[j]].overlined = true;
  return Overpartition(std::move(groups));
}

}  // namespace

std::vector<Overpartition> overline_variants(const Partition& p) {
  const auto singletons = singleton_group_indices(p);
  std::vector<Overpartition> out;
  const u64 mask_end = u64{1} << singletons.size();
  out.reserve(mask_end);
  for (u64 mask = 0; mask < mask_end; ++mask)
    out.push_back(apply_overline_mask(p, singletons, mask));
  return out;
}

std::vector<Overpartition> overline_variants(const Partition& p, std::uint32_t r) {
  const auto singletons = singleton_group_indices(p);
  const u32 v = static_cast<u32>(singletons.size());
  if (r > v) throw TooManyOverlines(r, v);
  std::vector<Overpartition> out;
  if (r == 0) {
    out.push_back(apply_overline_mask(p, singletons, 0));
    return out;
  }
  const u64 end = u64{1} << v;
  for (u64 mask = (u64{1} << r) - 1; mask < end; mask = next_same_popcount(mask))
    out.push_back(apply_overline_mask(p, singletons, mask));
  return out;
}

PerfectnessReport check_perfect_overpartition(const Overpartition& op) {
  const u64 weight = op.weight();
  // ways[m] = number of distinct sub-overpartitions of weight m. Per
  // group, selecting c plain copies plus optionally the overlined copy
  // gives pairwise distinct objects, so coefficients just multiply:
  // a group of multiplicity mu contributes coefficient 1,1,...,1 (no
  // overline) or 1,2,...,2,1 (overlined) on weights 0, part, 2*part, ...
  std::vector<Count> ways(weight + 1, Count(0));
  ways[0] = 1;
  for (const auto& g : op.groups()) {
    std::vector<Count> next(weight + 1, Count(0));
    for (u64 m = 0; m <= weight; ++m) {
      if (ways[m] == Count(0)) continue;
      for (u64 k = 0; k <= g.multiplicity; ++k) {
        const u64 add = g.part * k;
        if (add > weight - m) break;
        Count coeff{1};
        if (g.overlined && k >= 1 && k < g.multiplicity) coeff = 2;
        next[m + add] += ways[m] * coeff;
      }
    }
    ways = std::move(next);
  }
  for (u64 m = 1; m + 1 <= weight; ++m) {
    if (ways[m] != Count(1)) return {false, m, ways[m]};
  }
  return {true};
}

bool is_perfect_overpartition(const Overpartition& op) {
  return check_perfect_overpartition(op).perfect;
}

Count distinct_suboverpartitions(const Overpartition& op) {
  Count total{1};
  for (const auto& g : op.groups()) {
    const Count choices = g.overlined ? Count(2) * Count(g.multiplicity)
                                      : Count(g.multiplicity) + Count(1);
    total *= choices;
  }
  return total - Count(1);  // drop the empty selection
}

void for_each_perfect_overpartition(std::uint64_t n,
                                    const std::function<void(const Overpartition&)>& visit) {
  if (n == 0)
    throw std::invalid_argument("for_each_perfect_overpartition: n must be positive");
  for_each_ordered_factorization(n + 1, [&](const std::vector<u64>& factors) {
    const Partition p = partition_from_factorization(OrderedFactorization(factors));
    for (const Overpartition& op : overline_variants(p)) visit(op);
  });
}

void for_each_perfect_overpartition(std::uint64_t n, std::uint32_t r,
                                    const std::function<void(const Overpartition&)>& visit) {
  if (n == 0)
    throw std::invalid_argument("for_each_perfect_overpartition: n must be positive");
  for_each_ordered_factorization(n + 1, [&](const std::vector<u64>& factors) {
    const Partition p = partition_from_factorization(OrderedFactorization(factors));
    const auto singletons = singleton_group_indices(p);
    if (r > singletons.size()) return;  // this factorization contributes nothing
    for (const Overpartition& op : overline_variants(p, r)) visit(op);
  });
}

std::vector<Overpartition> perfect_overpartitions(std::uint64_t n) {
  std::vector<Overpartition> out;
  for_each_perfect_overpartition(n, [&out](const Overpartition& op) { out.push_back(op); });
  return out;
}

std::vector<Overpartition> perfect_overpartitions(std::uint64_t n, std::uint32_t r) {
  std::vector<Overpartition> out;
  for_each_perfect_overpartition(n, r,
                                 [&out](const Overpartition& op) { out.push_back(op); });
  return out;
}

Count count_pop(std::uint64_t n, std::uint32_t r) {
  if (n == 0) throw std::invalid_argument("count_pop: n must be positive");
  const u64 big_n = n + 1;
  const u32 s = static_cast<u32>(std::countr_zero(big_n));
  if (r > s) return 0;
  Count total{0};
  for (u32 v = r; v <= s; ++v) total += binomial(v, r) * count_by_twos(big_n, v);
  return total;
}

Count count_pop_total(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_pop_total: n must be positive");
  const u32 s = static_cast<u32>(std::countr_zero(n + 1));
  Count total{0};
  for (u32 r = 0; r <= s; ++r) total += count_pop(n, r);
  return total;
}

namespace {

// n+1 = 2^order * m with odd m > 1, for the small-order closed forms.
u64 require_order(u64 n, u32 order, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be positive");
  const u64 big_n = n + 1;
  const u32 s = static_cast<u32>(std::countr_zero(big_n));
  if (s != order)
    throw std::invalid_argument(std::string(who) + ": n+1 must have 2-adic order " +
                                std::to_string(order));
  const u64 m = big_n >> s;
  if (m == 1)
    throw std::invalid_argument(std::string(who) + ": n+1 must not be a power of 2");
  return m;
}

}  // namespace

Count count_pop_order1(std::uint64_t n) {
  const u64 m = require_order(n, 1, "count_pop_order1");
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total = count_factorizations(n + 1);
  for (u64 j = 1; j <= omega_m; ++j)
    total += Count(j + 1) * count_factorizations_into(m, static_cast<u32>(j));
  return total;
}

Count count_pop_order2(std::uint64_t n) {
  const u64 m = require_order(n, 2, "count_pop_order2");
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total = Count(2) * count_factorizations(n + 1);
  for (u64 j = 1; j <= omega_m; ++j)
    total += binomial(static_cast<i64>(j) + 2, 2) *
             count_factorizations_into(m, static_cast<u32>(j));
  return total;
}

Count count_pop_order3(std::uint64_t n) {
  const u64 m = require_order(n, 3, "count_pop_order3");
  const u64 omega_m = prime_factorize(m).big_omega();
  // The bracket C(j+2,3) - (j+1)^2 (j+3) is negative for small j, so the
  // positive and negative parts accumulate separately.
  Count plus = Count(4) * count_factorizations(n + 1);
  Count minus{0};
  for (u64 j = 1; j <= omega_m; ++j) {
    const Count fmj = count_factorizations_into(m, static_cast<u32>(j));
    plus += binomial(static_cast<i64>(j) + 2, 3) * fmj;
    minus += Count(j + 1) * Count(j + 1) * Count(j + 3) * fmj;
  }
  return plus - minus;
}

Count count_pop_pow2(std::uint32_t s, std::uint32_t r) {
  if (s == 0) throw std::invalid_argument("count_pop_pow2: s must be >= 1");
  const i64 si = s;
  Count total = binomial(si, r);
  for (i64 v = r; v <= si; ++v) {
    Count inner{0};
    for (i64 i = 1; i <= (si - v) / 2; ++i)
      inner += binomial(v + i, v) * binomial(si - v - i - 1, i - 1);
    total += binomial(v, r) * inner;
  }
  return total;
}

Count count_pop_pow2(std::uint32_t s) {
  if (s == 0) throw std::invalid_argument("count_pop_pow2: s must be >= 1");
  if (s >= 64) throw std::overflow_error("count_pop_pow2: 2^s exceeds the count range");
  const i64 si = s;
  Count total{u64{1} << s};
  for (i64 r = 0; r <= si; ++r) {
    for (i64 v = r; v <= si; ++v) {
      Count inner{0};
      for (i64 i = 1; i <= (si - v) / 2; ++i)
        inner += binomial(v + i, v) * binomial(si - v - i - 1, i - 1);
      total += binomial(v, r) * inner;
    }
  }
  return total;
}

PopRow pop_row(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("pop_row: n must be positive");
  const u32 s = static_cast<u32>(std::countr_zero(n + 1));
  PopRow row{n, {}, Count{0}};
  row.counts_by_r.reserve(s + 1);
  for (u32 r = 0; r <= s; ++r) {
    row.counts_by_r.push_back(count_pop(n, r));
    row.total += row.counts_by_r.back();
  }
  return row;
}

}  // namespace perfover
