#include "perfover/numkit.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace perfover {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

[[noreturn]] void overflow(const char* where) {
  throw std::overflow_error(std::string("perfover: count overflow in ") + where);
}

}  // namespace

Count& Count::operator+=(Count rhs) {
  if (__builtin_add_overflow(value_, rhs.value_, &value_)) overflow("operator+");
  return *this;
}

Count& Count::operator-=(Count rhs) {
  if (rhs.value_ > value_) overflow("operator- (negative result)");
  value_ -= rhs.value_;
  return *this;
}

Count& Count::operator*=(Count rhs) {
  if (__builtin_mul_overflow(value_, rhs.value_, &value_)) overflow("operator*");
  return *this;
}

std::string to_string(Count c) { return std::to_string(c.value()); }

std::ostream& operator<<(std::ostream& os, Count c) { return os << c.value(); }

std::uint64_t PrimeFactorization::big_omega() const {
  u64 total = 0;
  for (const auto& e : entries_) total += e.exponent;
  return total;
}

std::uint32_t PrimeFactorization::two_adic_order() const {
  if (!entries_.empty() && entries_.front().prime == 2) return entries_.front().exponent;
  return 0;
}

std::uint64_t PrimeFactorization::odd_part() const { return n_ >> two_adic_order(); }

PrimeFactorization prime_factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factorize: n must be positive");
  PrimeFactorization pf;
  pf.n_ = n;
  auto push = [&pf](u64 p, std::uint32_t e) { pf.entries_.push_back({p, e}); };

  std::uint32_t e2 = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++e2;
  }
  if (e2 > 0) push(2, e2);

  for (u64 p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    push(p, e);
  }
  if (n > 1) push(n, 1);
  return pf;
}

Count big_omega(const PrimeFactorization& pf) { return Count(pf.big_omega()); }

std::uint32_t two_adic_order_legendre(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_order_legendre: n must be positive");
  std::uint32_t s = 0;
  for (u64 p = 2; p <= n; p <<= 1) {
    s += static_cast<std::uint32_t>(n / p - (n - 1) / p);
    if (p > n / 2) break;  // next power of two exceeds n; later terms vanish
  }
  return s;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    u128 wide = static_cast<u128>(r) * static_cast<u64>(n - k + i);
    wide /= static_cast<u64>(i);  // exact: r is C(n-k+i-1, i-1)
    if (wide > ~static_cast<u64>(0)) overflow("binomial");
    r = static_cast<u64>(wide);
  }
  return Count(r);
}

Count factorial(std::uint64_t n) {
  Count r{1};
  for (u64 i = 2; i <= n; ++i) r *= Count(i);
  return r;
}

Count count_compositions(std::int64_t n, std::int64_t k) { return binomial(n - 1, k - 1); }

Count count_compositions_no_ones(std::int64_t n, std::int64_t k) {
  return binomial(n - k - 1, k - 1);
}

Count stirling2(std::uint32_t t, std::uint32_t j) {
  if (j > t) return 0;
  if (t == 0) return 1;  // S(0,0) = 1; j > t handled above
  if (j == 0) return 0;
  // One row of the triangle at a time; row[i] = S(row_index, i).
  std::vector<Count> row(j + 1, Count(0));
  row[0] = 1;  // S(0,0)
  for (std::uint32_t n = 1; n <= t; ++n) {
    for (std::uint32_t i = std::min(n, j); i >= 1; --i) {
      row[i] = Count(i) * row[i] + row[i - 1];
    }
    row[0] = 0;  // S(n,0) = 0 for n >= 1
  }
  return row[j];
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace perfover
