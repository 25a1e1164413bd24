#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "perfover/factorize.hpp"
#include "perfover/numkit.hpp"
#include "perfover/perfect.hpp"

namespace perfover {

struct OverGroup {
  std::uint64_t part;
  std::uint64_t multiplicity;
  bool overlined;  // the last occurrence of this part size carries the overline
  friend constexpr bool operator==(OverGroup, OverGroup) = default;
};

// An overpartition in grouped form: strictly increasing part sizes with
// positive multiplicities, where each size's final occurrence may be
// overlined (at most one overline per size).
class Overpartition {
 public:
  explicit Overpartition(std::vector<OverGroup> groups);

  const std::vector<OverGroup>& groups() const { return groups_; }
  std::uint64_t weight() const { return weight_; }
  // Number of overlined parts, usually called r.
  std::uint32_t overlined_count() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;

 private:
  std::vector<OverGroup> groups_;
  std::uint64_t weight_;
};

class TooManyOverlines : public std::domain_error {
 public:
  TooManyOverlines(std::uint32_t requested, std::uint32_t available)
      : std::domain_error("overline_variants: requested " + std::to_string(requested) +
                          " overlines but only " + std::to_string(available) +
                          " singleton groups are available"),
        requested(requested),
        available(available) {}
  std::uint32_t requested;
  std::uint32_t available;
};

// Exhaustively visits every overpartition of n exactly once: partitions
// of n in lexicographic order of their ascending part lists, then
// overline masks over the groups in binary counting order. Intended as a
// small-n oracle; the object count grows like exp(pi*sqrt(n)).
void for_each_overpartition(std::uint64_t n,
                            const std::function<void(const Overpartition&)>& visit);
std::vector<Overpartition> all_overpartitions(std::uint64_t n);

// Overpartitions obtained from a partition by overlining some of its
// multiplicity-1 groups (only such groups can carry an overline in a
// perfect overpartition). With v singleton groups the first overload
// yields all 2^v variants, the second the C(v, r) variants with exactly
// r overlines; both in binary mask order over the singleton groups taken
// in ascending part order. The second throws TooManyOverlines if r > v.
std::vector<Overpartition> overline_variants(const Partition& p);
std::vector<Overpartition> overline_variants(const Partition& p, std::uint32_t r);

// An overpartition of n is perfect when it contains exactly one distinct
// sub-overpartition of every weight 1..n-1 (uniqueness at n is automatic:
// only the full selection reaches it). Per group, the non-overlined
// copies are interchangeable while the overlined copy is a distinct
// selectable object; distinct resulting overpartitions are counted once.
PerfectnessReport check_perfect_overpartition(const Overpartition& op);
bool is_perfect_overpartition(const Overpartition& op);

// Number of distinct nonempty sub-overpartitions, by the per-group
// product. A perfect overpartition of weight n has exactly n of them,
// one per weight; the converse does not hold (see the tests), so this is
// a necessary-condition fast path, not a perfectness decision.
Count distinct_suboverpartitions(const Overpartition& op);

// Constructive enumeration of the perfect overpartitions of n: ordered
// factorizations of n+1, mapped through the bijection, then overlined.
// Order: factorization enumeration order, then overline mask order.
void for_each_perfect_overpartition(std::uint64_t n,
                                    const std::function<void(const Overpartition&)>& visit);
void for_each_perfect_overpartition(std::uint64_t n, std::uint32_t r,
                                    const std::function<void(const Overpartition&)>& visit);
std::vector<Overpartition> perfect_overpartitions(std::uint64_t n);
std::vector<Overpartition> perfect_overpartitions(std::uint64_t n, std::uint32_t r);

// pop(n, r): perfect overpartitions of n with exactly r overlined parts,
//   sum_{v=r}^{s} C(v, r) * f_v(n+1),   s = two-adic order of n+1.
// Zero when r > s. Uses the count_by_twos recurrence.
Count count_pop(std::uint64_t n, std::uint32_t r);

// pop(n): all perfect overpartitions of n.
Count count_pop_total(std::uint64_t n);

// Closed forms for n+1 = 2^s * m with odd m > 1 and small s; each equals
// count_pop_total on its domain and rejects inputs of the wrong shape.
//   s = 1:  f(n+1) + sum_j (j+1) f(m, j)
Count count_pop_order1(std::uint64_t n);
//   s = 2:  2 f(n+1) + sum_j C(j+2, 2) f(m, j)
Count count_pop_order2(std::uint64_t n);
//   s = 3:  4 f(n+1) + sum_j [C(j+2, 3) - (j+1)^2 (j+3)] f(m, j)
Count count_pop_order3(std::uint64_t n);

// n = 2^s - 1 (factorizations of a pure power of 2):
//   pop(2^s - 1, r) = C(s, r) + sum_{v=r}^{s} C(v, r) sum_i C(v+i, v) C(s-v-i-1, i-1)
Count count_pop_pow2(std::uint32_t s, std::uint32_t r);
//   pop(2^s - 1) = 2^s + the double sum over r and v.
Count count_pop_pow2(std::uint32_t s);

// One row of the pop(n, r) table: counts for r = 0..two_adic_order(n+1)
// plus the total.
struct PopRow {
  std::uint64_t n;
  std::vector<Count> counts_by_r;
  Count total;
};

PopRow pop_row(std::uint64_t n);

}  // namespace perfover
