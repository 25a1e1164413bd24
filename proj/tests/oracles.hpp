// Brute-force reference implementations used as independent oracles by
// the unit and acceptance tests. Everything here enumerates objects
// explicitly and stays deliberately separate from the library's own
// computation paths.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

using u64 = std::uint64_t;

// All compositions of n into k positive parts, counted by enumeration.
inline u64 count_compositions_brute(u64 n, u64 k, u64 min_part = 1) {
  if (k == 0) return n == 0 ? 1 : 0;
  u64 total = 0;
  for (u64 first = min_part; first <= n; ++first)
    total += count_compositions_brute(n - first, k - 1, min_part);
  return total;
}

// Pascal-triangle binomial, independent of the multiplicative formula.
inline u64 binomial_pascal(u64 n, u64 k) {
  if (k > n) return 0;
  std::vector<u64> row{1};
  for (u64 i = 1; i <= n; ++i) {
    std::vector<u64> next(i + 1, 1);
    for (u64 j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// Number of set partitions of {0..t-1} into exactly j nonempty blocks,
// by enumerating block assignments in restricted-growth form.
inline u64 count_set_partitions_brute(u64 t, u64 j) {
  if (t == 0) return j == 0 ? 1 : 0;
  u64 total = 0;
  std::vector<u64> assign(t, 0);
  auto rec = [&](auto&& self, u64 i, u64 blocks) -> void {
    if (i == t) {
      if (blocks == j) ++total;
      return;
    }
    for (u64 b = 0; b <= blocks; ++b) {
      assign[i] = b;
      self(self, i + 1, blocks + (b == blocks ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  return total;
}

// Number of ordered set partitions (set partitions with ordered blocks)
// of a t-set into any number of blocks: enumerate set partitions and
// weigh each by the number of block orderings.
inline u64 count_ordered_set_partitions_brute(u64 t) {
  u64 total = 0;
  std::vector<u64> assign(t, 0);
  auto factorial = [](u64 x) {
    u64 r = 1;
    for (u64 i = 2; i <= x; ++i) r *= i;
    return r;
  };
  auto rec = [&](auto&& self, u64 i, u64 blocks) -> void {
    if (i == t) {
      total += factorial(blocks);
      return;
    }
    for (u64 b = 0; b <= blocks; ++b) {
      assign[i] = b;
      self(self, i + 1, blocks + (b == blocks ? 1 : 0));
    }
  };
  if (t == 0) return 1;
  rec(rec, 0, 0);
  return total;
}

// All partitions of n as ascending part lists, lexicographic order.
inline void for_each_partition_brute(u64 n, const std::function<void(const std::vector<u64>&)>& visit) {
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

// Divisors by plain trial division, for the pairing property.
inline std::vector<u64> divisors_brute(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace oracles
