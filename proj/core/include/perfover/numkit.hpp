#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace perfover {

// Nonnegative counter with overflow-checked arithmetic. Every counting
// result in this library is a Count; an operation that would wrap past
// 2^64-1 (or produce a negative value) throws std::overflow_error instead
// of returning a wrong number.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT: counts convert freely

  constexpr std::uint64_t value() const { return value_; }

  Count& operator+=(Count rhs);
  Count& operator-=(Count rhs);  // throws if rhs > *this
  Count& operator*=(Count rhs);

  friend Count operator+(Count a, Count b) { return a += b; }
  friend Count operator-(Count a, Count b) { return a -= b; }
  friend Count operator*(Count a, Count b) { return a *= b; }

  friend constexpr bool operator==(Count, Count) = default;
  friend constexpr auto operator<=>(Count, Count) = default;

 private:
  std::uint64_t value_ = 0;
};

std::string to_string(Count c);
std::ostream& operator<<(std::ostream& os, Count c);

struct PrimeFactor {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend constexpr bool operator==(PrimeFactor, PrimeFactor) = default;
};

// Sorted prime-power decomposition of a positive integer. The empty list
// represents 1. Obtained through prime_factorize(), which keeps the
// invariants (primes ascending, product equals value()).
class PrimeFactorization {
 public:
  const std::vector<PrimeFactor>& entries() const { return entries_; }
  std::uint64_t value() const { return n_; }

  // Omega(n): number of prime factors counted with multiplicity.
  std::uint64_t big_omega() const;
  // Exponent of 2, zero for odd n.
  std::uint32_t two_adic_order() const;
  // n with all factors of 2 removed.
  std::uint64_t odd_part() const;

 private:
  friend PrimeFactorization prime_factorize(std::uint64_t n);
  std::vector<PrimeFactor> entries_;
  std::uint64_t n_ = 1;
};

// Deterministic trial division up to sqrt(n). Intended for desk-scale
// inputs (up to ~10^9); larger inputs work but may be slow when the
// remaining cofactor is a large prime. Rejects n = 0.
PrimeFactorization prime_factorize(std::uint64_t n);

Count big_omega(const PrimeFactorization& pf);

// 2-adic order of n computed by the finite Legendre sum
//   sum_{i>=1} ( floor(n/2^i) - floor((n-1)/2^i) ),
// truncated once 2^i > n. Equals the exponent of 2 in prime_factorize(n).
std::uint32_t two_adic_order_legendre(std::uint64_t n);

// Binomial coefficient with the usual formula convention: C(n,k) = 0 when
// k < 0, k > n or n < 0, so sums may run over loose index bounds.
Count binomial(std::int64_t n, std::int64_t k);

Count factorial(std::uint64_t n);

// Number of compositions of n into k positive parts: C(n-1, k-1).
Count count_compositions(std::int64_t n, std::int64_t k);

// Number of compositions of n into k parts, each part >= 2: C(n-k-1, k-1).
Count count_compositions_no_ones(std::int64_t n, std::int64_t k);

// Stirling set number S(t, j): partitions of a t-set into j nonempty
// blocks, by the triangular recurrence.
Count stirling2(std::uint32_t t, std::uint32_t j);

// All divisors of n in ascending order, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace perfover
