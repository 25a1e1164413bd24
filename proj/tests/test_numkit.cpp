#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "oracles.hpp"
#include "perfover/numkit.hpp"

using namespace perfover;

TEST_CASE("Count arithmetic is checked") {
  Count a{5}, b{7};
  CHECK(a + b == Count{12});
  CHECK(b - a == Count{2});
  CHECK(a * b == Count{35});
  CHECK_THROWS_AS(a - b, std::overflow_error);
  const Count big{~std::uint64_t{0}};
  CHECK_THROWS_AS(big + Count{1}, std::overflow_error);
  CHECK_THROWS_AS(big * Count{2}, std::overflow_error);
  CHECK(to_string(Count{42}) == "42");
}

TEST_CASE("prime_factorize on the worked values") {
  const auto pf12 = prime_factorize(12);
  REQUIRE(pf12.entries().size() == 2);
  CHECK(pf12.entries()[0] == PrimeFactor{2, 2});
  CHECK(pf12.entries()[1] == PrimeFactor{3, 1});

  CHECK(prime_factorize(1).entries().empty());

  const auto pf480 = prime_factorize(480);
  REQUIRE(pf480.entries().size() == 3);
  CHECK(pf480.entries()[0] == PrimeFactor{2, 5});
  CHECK(pf480.entries()[1] == PrimeFactor{3, 1});
  CHECK(pf480.entries()[2] == PrimeFactor{5, 1});

  CHECK_THROWS_AS(prime_factorize(0), std::invalid_argument);
}

TEST_CASE("prime_factorize reconstructs its input") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto pf = prime_factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t prev_prime = 0;
    for (const auto& e : pf.entries()) {
      CHECK(e.prime > prev_prime);
      prev_prime = e.prime;
      for (std::uint32_t i = 0; i < e.exponent; ++i) prod *= e.prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("big_omega") {
  CHECK(big_omega(prime_factorize(12)) == Count{3});
  CHECK(big_omega(prime_factorize(1)) == Count{0});
  CHECK(big_omega(prime_factorize(480)) == Count{7});
}

TEST_CASE("two_adic_order_legendre matches the factorization exponent") {
  CHECK(two_adic_order_legendre(480) == 5);
  CHECK(two_adic_order_legendre(12) == 2);
  CHECK(two_adic_order_legendre(7) == 0);
  CHECK(two_adic_order_legendre(1) == 0);

  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    CHECK(two_adic_order_legendre(n) == static_cast<std::uint32_t>(std::countr_zero(n)));
  }
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    CHECK(two_adic_order_legendre(n) == prime_factorize(n).two_adic_order());
  }
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(5, 2) == Count{10});
  CHECK(binomial(3, 5) == Count{0});
  CHECK(binomial(0, 0) == Count{1});
  CHECK(binomial(-1, 0) == Count{0});
  CHECK(binomial(4, -1) == Count{0});
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == Count{oracles::binomial_pascal(n, k)});
}

TEST_CASE("Vandermonde convolution holds for X, Y <= 30") {
  for (std::int64_t x = 0; x <= 30; ++x) {
    for (std::int64_t y = 0; y <= 30; ++y) {
      Count sum{0};
      for (std::int64_t i = 0; i <= x; ++i) sum += binomial(x, i) * binomial(y, y - i);
      CHECK(sum == binomial(x + y, y));
    }
  }
}

TEST_CASE("composition counts against brute force") {
  CHECK(count_compositions(2, 1) == Count{1});
  CHECK(count_compositions(2, 2) == Count{1});
  CHECK(count_compositions(5, 3) == Count{6});
  CHECK(count_compositions(4, 5) == Count{0});
  CHECK(count_compositions_no_ones(4, 2) == Count{1});
  CHECK(count_compositions_no_ones(4, 1) == Count{1});
  CHECK(count_compositions_no_ones(3, 2) == Count{0});

  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t k = 1; k <= n + 1; ++k) {
      CHECK(count_compositions(n, k) == Count{oracles::count_compositions_brute(n, k, 1)});
      CHECK(count_compositions_no_ones(n, k) ==
            Count{oracles::count_compositions_brute(n, k, 2)});
    }
  }
}

TEST_CASE("stirling2 against set-partition enumeration") {
  CHECK(stirling2(3, 2) == Count{3});
  CHECK(stirling2(0, 0) == Count{1});
  for (std::uint32_t t = 1; t <= 7; ++t) {
    CHECK(stirling2(t, t) == Count{1});
    CHECK(stirling2(t, 0) == Count{0});
    for (std::uint32_t j = 0; j <= t + 1; ++j)
      CHECK(stirling2(t, j) == Count{oracles::count_set_partitions_brute(t, j)});
  }
}

TEST_CASE("ordered set partitions are counted by sum of j! S(t,j)") {
  for (std::uint32_t t = 0; t <= 6; ++t) {
    Count sum{t == 0 ? std::uint64_t{1} : std::uint64_t{0}};
    for (std::uint32_t j = 1; j <= t; ++j) sum += factorial(j) * stirling2(t, j);
    CHECK(sum == Count{oracles::count_ordered_set_partitions_brute(t)});
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(24) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 24});

  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(divisors(n) == oracles::divisors_brute(n));

  // product pairing: d | n  <=>  n/d | n
  for (std::uint64_t n : {36ull, 48ull, 97ull, 360ull, 1024ull}) {
    const auto ds = divisors(n);
    for (std::uint64_t d : ds) {
      CHECK(n % d == 0);
      CHECK(std::find(ds.begin(), ds.end(), n / d) != ds.end());
    }
  }
}
