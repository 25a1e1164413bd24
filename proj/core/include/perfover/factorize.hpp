#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "perfover/numkit.hpp"

namespace perfover {

// An ordered factorization: a nonempty sequence of integer factors, each
// >= 2, whose product is fixed. Order matters: 2*6 and 6*2 are distinct.
class OrderedFactorization {
 public:
  explicit OrderedFactorization(std::vector<std::uint64_t> factors);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t product() const { return product_; }
  std::size_t length() const { return factors_.size(); }
  // Number of factors equal to 2.
  std::uint32_t twos() const;

  friend bool operator==(const OrderedFactorization&, const OrderedFactorization&) = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t product_;
};

// Total, mutually exclusive classification of a single factor (>= 2):
// the plain factor 2, a higher power of 2 (4, 8, 16, ...), an even number
// with odd part > 1 (6, 12, 20, ...), or an odd number.
enum class FactorClass { Two, HigherPow2, EvenNonPow2, Odd };

FactorClass classify_factor(std::uint64_t factor);

// Visits every ordered factorization of n exactly once, in lexicographic
// order of the factor sequence. The visited vector is a working buffer;
// copy it if it must outlive the call. n = 1 visits nothing; n = 0 is
// rejected.
void for_each_ordered_factorization(
    std::uint64_t n, const std::function<void(const std::vector<std::uint64_t>&)>& visit);

std::vector<OrderedFactorization> ordered_factorizations(std::uint64_t n);

// f(n): number of ordered factorizations, by the memoized divisor-sum
// recurrence f(1) = 1, f(n) = sum over proper divisors d of f(d).
Count count_factorizations(std::uint64_t n);

// f(n,k): ordered factorizations of n into exactly k factors, by the
// inclusion-exclusion binomial sum over the prime exponents of n.
// Zero when k exceeds Omega(n). Requires n >= 2.
Count count_factorizations_into(std::uint64_t n, std::uint32_t k);

// f(n) as the sum of count_factorizations_into(n, k) over k = 1..Omega(n).
// Independent route; always equals count_factorizations(n).
Count count_factorizations_by_parts(std::uint64_t n);

// ---- Refinement by the number of factors equal to 2 ("twos") ----------
//
// count_by_twos* functions count ordered factorizations of n containing
// exactly v factors equal to 2. Several independent routes are provided
// and cross-checked by the test suite: exhaustive enumeration, a divisor
// recurrence, and closed binomial forms.

// Ground truth by exhaustive enumeration.
Count count_by_twos_enumerated(std::uint64_t n, std::uint32_t v);

// Primary route: odd n have no twos at all; for powers of two a closed
// form applies; otherwise a memoized divisor recurrence. v beyond the
// 2-adic order of n yields 0.
Count count_by_twos(std::uint64_t n, std::uint32_t v);

// Powers of two: factorizations of 2^s with exactly v twos,
//   delta(v, s) + sum_i C(v+i, v) * C(s-v-i-1, i-1).
// Requires v <= s.
Count count_by_twos_pow2(std::uint32_t s, std::uint32_t v);

// The next three functions split the factorizations of n = 2^s * m
// (s >= 1, m odd > 1) containing v twos into three disjoint classes by
// the kinds of even factors present. They reject odd n and powers of two;
// v outside each form's range yields 0.

// ... with no higher power of 2 among the factors. Valid for 0 <= v <= s
// (at v = s every factorization qualifies and the value equals
// count_all_twos(n)).
Count count_by_twos_no_higher_pow2(std::uint64_t n, std::uint32_t v);

// ... with at least one higher power of 2 and no even factor that is not
// a power of 2. Nonzero only for v <= s-2.
Count count_by_twos_higher_pow2_only(std::uint64_t n, std::uint32_t v);

// ... with at least one higher power of 2 and at least one even factor
// that is not a power of 2. Nonzero only for v <= s-3.
Count count_by_twos_mixed_even(std::uint64_t n, std::uint32_t v);

// Sum of the three classes for v < s; for v = s delegates to
// count_all_twos. Agrees with count_by_twos everywhere it applies.
Count count_by_twos_closed(std::uint64_t n, std::uint32_t v);

// Factorizations of n = 2^s * m (m odd > 1) in which every factor of 2
// appears as a plain 2, i.e. exactly s twos:
//   sum_j C(s+j, s) * f(m, j).
Count count_all_twos(std::uint64_t n);

// Factorizations with one two fewer than the maximum (v = s-1, s >= 1).
Count count_twos_one_short(std::uint64_t n);

// Factorizations with two twos fewer than the maximum (v = s-2, s >= 2).
Count count_twos_two_short(std::uint64_t n);

// Enumerated counts of the three classes above, as
// {no higher pow2, higher pow2 only, mixed even}. Ground truth for the
// closed forms.
std::array<Count, 3> count_by_twos_split_enumerated(std::uint64_t n, std::uint32_t v);

// ---- Special shapes of the odd part -----------------------------------

// f(p^alpha, j) for an odd prime p equals the number of compositions of
// alpha into j parts, C(alpha-1, j-1).
Count count_factorizations_prime_power(std::uint64_t p, std::uint32_t alpha, std::uint32_t j);

// f(p1 p2 ... pt, j) for t distinct odd primes equals j! * S(t, j).
Count count_factorizations_squarefree(std::uint32_t t, std::uint32_t j);

namespace detail {
// count_by_twos without the divisor pruning applied in the recurrence
// (the pruned sum skips divisors whose 2-adic order is below v; they
// contribute nothing). Used to validate the pruning.
Count count_by_twos_unfiltered(std::uint64_t n, std::uint32_t v);
}  // namespace detail

}  // namespace perfover
