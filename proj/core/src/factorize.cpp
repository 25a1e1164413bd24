#include "perfover/factorize.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace perfover {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct TwoAdicSplit {
  u32 order;     // exponent of 2
  u64 odd_part;  // n with all twos removed
};

TwoAdicSplit split_two_adic(u64 n) {
  const u32 s = static_cast<u32>(std::countr_zero(n));
  return {s, n >> s};
}

// n = 2^s * m with s >= 1 and odd m > 1; the closed forms for the even
// non-power-of-two case require exactly this shape.
TwoAdicSplit require_even_non_pow2(u64 n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  const auto split = split_two_adic(n);
  if (split.order == 0)
    throw std::invalid_argument(std::string(who) + ": n must be even");
  if (split.odd_part == 1)
    throw std::invalid_argument(std::string(who) + ": n must not be a power of 2");
  return split;
}

}  // namespace

OrderedFactorization::OrderedFactorization(std::vector<std::uint64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw std::invalid_argument("OrderedFactorization: factor list must be nonempty");
  Count product{1};
  for (u64 f : factors_) {
    if (f < 2) throw std::invalid_argument("OrderedFactorization: factors must be >= 2");
    product *= Count(f);
  }
  product_ = product.value();
}

std::uint32_t OrderedFactorization::twos() const {
  u32 v = 0;
  for (u64 f : factors_)
    if (f == 2) ++v;
  return v;
}

FactorClass classify_factor(std::uint64_t factor) {
  if (factor < 2) throw std::invalid_argument("classify_factor: factor must be >= 2");
  if (factor == 2) return FactorClass::Two;
  if (std::has_single_bit(factor)) return FactorClass::HigherPow2;
  if (factor % 2 == 0) return FactorClass::EvenNonPow2;
  return FactorClass::Odd;
}

void for_each_ordered_factorization(
    std::uint64_t n, const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (n == 0)
    throw std::invalid_argument("for_each_ordered_factorization: n must be positive");
  if (n == 1) return;
  // Any factor of any remainder divides n, so one divisor list serves the
  // whole recursion. Ascending divisors give lexicographic order: every
  // sequence starting with a smaller factor is visited first, and the
  // single-factor completion (the largest divisor) comes last.
  const std::vector<u64> divs = divisors(n);
  std::vector<u64> prefix;
  auto rec = [&](auto&& self, u64 remaining) -> void {
    for (u64 d : divs) {
      if (d < 2 || d > remaining || remaining % d != 0) continue;
      prefix.push_back(d);
      if (d == remaining) {
        visit(prefix);
      } else {
        self(self, remaining / d);
      }
      prefix.pop_back();
    }
  };
  rec(rec, n);
}

std::vector<OrderedFactorization> ordered_factorizations(std::uint64_t n) {
  std::vector<OrderedFactorization> out;
  for_each_ordered_factorization(
      n, [&out](const std::vector<u64>& factors) { out.emplace_back(factors); });
  return out;
}

Count count_factorizations(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_factorizations: n must be positive");
  static std::mutex mutex;
  static std::unordered_map<u64, u64> memo;
  std::scoped_lock lock(mutex);
  auto rec = [](auto&& self, u64 x) -> Count {
    if (x == 1) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Count total{0};
    for (u64 d : divisors(x))
      if (d < x) total += self(self, d);
    memo.emplace(x, total.value());
    return total;
  };
  return rec(rec, n);
}

Count count_factorizations_into(std::uint64_t n, std::uint32_t k) {
  if (n < 2)
    throw std::invalid_argument("count_factorizations_into: n must be >= 2");
  if (k == 0) return 0;
  const PrimeFactorization pf = prime_factorize(n);
  if (k > pf.big_omega()) return 0;
  // Alternating inclusion-exclusion sum; positive and negative parts are
  // accumulated separately so intermediate values stay nonnegative.
  Count plus{0}, minus{0};
  for (u32 i = 0; i < k; ++i) {
    Count term = binomial(k, i);
    for (const auto& e : pf.entries())
      term *= binomial(static_cast<i64>(e.exponent) + k - i - 1, e.exponent);
    (i % 2 == 0 ? plus : minus) += term;
  }
  return plus - minus;
}

Count count_factorizations_by_parts(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("count_factorizations_by_parts: n must be positive");
  if (n == 1) return 1;
  const u64 omega = prime_factorize(n).big_omega();
  Count total{0};
  for (u64 k = 1; k <= omega; ++k)
    total += count_factorizations_into(n, static_cast<u32>(k));
  return total;
}

Count count_by_twos_enumerated(std::uint64_t n, std::uint32_t v) {
  if (n < 2) throw std::invalid_argument("count_by_twos_enumerated: n must be >= 2");
  u64 hits = 0;
  for_each_ordered_factorization(n, [&](const std::vector<u64>& factors) {
    u32 twos = 0;
    for (u64 f : factors)
      if (f == 2) ++twos;
    if (twos == v) ++hits;
  });
  return hits;
}

namespace {

// Shared recurrence for count_by_twos. `prune` skips divisors whose
// 2-adic order is below v; they contribute nothing to the sum.
Count count_by_twos_rec(u64 n, u32 v, bool prune);

Count count_by_twos_dispatch(u64 n, u32 v, bool prune) {
  if (n == 1) return v == 0 ? 1 : 0;
  const auto [s, m] = split_two_adic(n);
  if (v > s) return 0;
  if (m == 1) return count_by_twos_pow2(s, v);
  if (s == 0) return v == 0 ? count_factorizations(n) : Count{0};
  return count_by_twos_rec(n, v, prune);
}

Count count_by_twos_rec(u64 n, u32 v, bool prune) {
  static std::mutex mutex;
  static std::map<std::pair<u64, u32>, u64> memo;
  std::scoped_lock lock(mutex);
  auto rec = [](auto&& self, u64 x, u32 w, bool do_prune) -> Count {
    if (x == 1) return w == 0 ? 1 : 0;
    const auto [s, m] = split_two_adic(x);
    if (w > s) return 0;
    if (m == 1) return count_by_twos_pow2(s, w);
    if (s == 0) return w == 0 ? count_factorizations(x) : Count{0};
    if (do_prune) {
      if (auto it = memo.find({x, w}); it != memo.end()) return it->second;
    }
    Count total{0};
    if (w > 0) {
      // Appending a factor 2 to a factorization of x/2 with w-1 twos, or
      // appending x/d != 2 to a factorization of d with w twos.
      total += self(self, x / 2, w - 1, true);
      for (u64 d : divisors(x)) {
        if (d > (x - 1) / 2) continue;  // only divisors with 2d < x
        if (do_prune && static_cast<u32>(std::countr_zero(d)) < w) continue;
        total += self(self, d, w, true);
      }
    } else {
      // The single-term factorization (x), plus appending x/d to a
      // two-free factorization of each proper divisor d > 1 with 2d < x.
      total += 1;
      for (u64 d : divisors(x)) {
        if (d <= 1 || d > (x - 1) / 2) continue;
        total += self(self, d, 0, true);
      }
    }
    if (do_prune) memo.emplace(std::make_pair(x, w), total.value());
    return total;
  };
  return rec(rec, n, v, prune);
}

}  // namespace

Count count_by_twos(std::uint64_t n, std::uint32_t v) {
  if (n == 0) throw std::invalid_argument("count_by_twos: n must be positive");
  return count_by_twos_dispatch(n, v, /*prune=*/true);
}

Count detail::count_by_twos_unfiltered(std::uint64_t n, std::uint32_t v) {
  if (n == 0)
    throw std::invalid_argument("count_by_twos_unfiltered: n must be positive");
  return count_by_twos_dispatch(n, v, /*prune=*/false);
}

Count count_by_twos_pow2(std::uint32_t s, std::uint32_t v) {
  if (v > s) throw std::invalid_argument("count_by_twos_pow2: v must be <= s");
  Count total = (v == s) ? Count{1} : Count{0};
  const i64 si = s, vi = v;
  for (i64 i = 1; i <= (si - vi) / 2; ++i)
    total += binomial(vi + i, vi) * binomial(si - vi - i - 1, i - 1);
  return total;
}

Count count_by_twos_no_higher_pow2(std::uint64_t n, std::uint32_t v) {
  const auto [s, m] = require_even_non_pow2(n, "count_by_twos_no_higher_pow2");
  if (v > s) return 0;
  const i64 si = s, vi = v;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j) {
    total += binomial(vi + j, vi) * binomial(j + si - vi - 1, si - vi) *
             count_factorizations_into(m, static_cast<u32>(j));
  }
  return total;
}

Count count_by_twos_higher_pow2_only(std::uint64_t n, std::uint32_t v) {
  const auto [s, m] = require_even_non_pow2(n, "count_by_twos_higher_pow2_only");
  if (v + 2 > s) return 0;
  const i64 si = s, vi = v;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j) {
    const Count fmj = count_factorizations_into(m, static_cast<u32>(j));
    for (i64 i = 1; i <= (si - vi) / 2; ++i) {
      total += binomial(vi + i + j, j) * binomial(vi + i, vi) *
               binomial(si - vi - i - 1, i - 1) * fmj;
    }
  }
  return total;
}

Count count_by_twos_mixed_even(std::uint64_t n, std::uint32_t v) {
  const auto [s, m] = require_even_non_pow2(n, "count_by_twos_mixed_even");
  if (v + 3 > s) return 0;
  const i64 si = s, vi = v;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j) {
    const Count fmj = count_factorizations_into(m, static_cast<u32>(j));
    for (i64 r = 2; r <= si - vi - 1; ++r) {
      // The i bound is kept as printed; terms with i > r/2 vanish through
      // the binomial zero convention.
      for (i64 i = 1; i <= (si - vi) / 2; ++i) {
        total += binomial(vi + i + j, j) * fmj * binomial(vi + i, i) *
                 binomial(r - i - 1, i - 1) * binomial(j + si - vi - r - 1, si - vi - r);
      }
    }
  }
  return total;
}

Count count_by_twos_closed(std::uint64_t n, std::uint32_t v) {
  const auto [s, m] = require_even_non_pow2(n, "count_by_twos_closed");
  if (v > s) return 0;
  if (v == s) return count_all_twos(n);
  return count_by_twos_no_higher_pow2(n, v) + count_by_twos_higher_pow2_only(n, v) +
         count_by_twos_mixed_even(n, v);
}

Count count_all_twos(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("count_all_twos: n must be >= 2");
  const auto [s, m] = split_two_adic(n);
  if (m == 1)
    throw std::invalid_argument("count_all_twos: n must not be a power of 2");
  const i64 si = s;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j)
    total += binomial(si + j, si) * count_factorizations_into(m, static_cast<u32>(j));
  return total;
}

Count count_twos_one_short(std::uint64_t n) {
  const auto [s, m] = require_even_non_pow2(n, "count_twos_one_short");
  const i64 si = s;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j) {
    total += Count(static_cast<u64>(j)) * binomial(j + si - 1, si - 1) *
             count_factorizations_into(m, static_cast<u32>(j));
  }
  return total;
}

Count count_twos_two_short(std::uint64_t n) {
  const auto [s, m] = require_even_non_pow2(n, "count_twos_two_short");
  if (s < 2) throw std::invalid_argument("count_twos_two_short: n must be divisible by 4");
  const i64 si = s;
  const u64 omega_m = prime_factorize(m).big_omega();
  Count total{0};
  for (i64 j = 1; j <= static_cast<i64>(omega_m); ++j) {
    const Count coeff = Count(static_cast<u64>(si - 1)) * binomial(j + si - 1, si - 1) +
                        binomial(j + 1, 2) * binomial(j + si - 2, si - 2);
    total += coeff * count_factorizations_into(m, static_cast<u32>(j));
  }
  return total;
}

std::array<Count, 3> count_by_twos_split_enumerated(std::uint64_t n, std::uint32_t v) {
  if (n < 2)
    throw std::invalid_argument("count_by_twos_split_enumerated: n must be >= 2");
  std::array<u64, 3> hits{0, 0, 0};
  for_each_ordered_factorization(n, [&](const std::vector<u64>& factors) {
    u32 twos = 0;
    bool higher_pow2 = false, even_non_pow2 = false;
    for (u64 f : factors) {
      switch (classify_factor(f)) {
        case FactorClass::Two: ++twos; break;
        case FactorClass::HigherPow2: higher_pow2 = true; break;
        case FactorClass::EvenNonPow2: even_non_pow2 = true; break;
        case FactorClass::Odd: break;
      }
    }
    if (twos != v) return;
    if (!higher_pow2) {
      ++hits[0];
    } else if (!even_non_pow2) {
      ++hits[1];
    } else {
      ++hits[2];
    }
  });
  return {Count(hits[0]), Count(hits[1]), Count(hits[2])};
}

Count count_factorizations_prime_power(std::uint64_t p, std::uint32_t alpha,
                                       std::uint32_t j) {
  const PrimeFactorization pf = prime_factorize(p);
  if (p < 3 || p % 2 == 0 || pf.entries().size() != 1 || pf.entries()[0].exponent != 1)
    throw std::invalid_argument("count_factorizations_prime_power: p must be an odd prime");
  return binomial(static_cast<i64>(alpha) - 1, static_cast<i64>(j) - 1);
}

Count count_factorizations_squarefree(std::uint32_t t, std::uint32_t j) {
  return factorial(j) * stirling2(t, j);
}

}  // namespace perfover
