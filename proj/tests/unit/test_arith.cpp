#include <doctest.h>

#include <random>
#include <vector>

#include "large_atlas/arith.hpp"

using namespace large_atlas;

TEST_CASE("parse_prime_power examples") {
  CHECK(parse_prime_power(25) == PrimePower{5, 2, 25});
  CHECK(parse_prime_power(128) == PrimePower{2, 7, 128});
  CHECK_THROWS_AS(parse_prime_power(12), NotAPrimePower);
  CHECK_THROWS_AS(parse_prime_power(1), NotAPrimePower);
  CHECK_THROWS_AS(parse_prime_power(0), NotAPrimePower);
}

TEST_CASE("prime powers up to 10^6 against a sieve") {
  const long N = 1'000'000;
  std::vector<long> spf(N + 1, 0);
  for (long i = 2; i <= N; ++i)
    if (!spf[i])
      for (long j = i; j <= N; j += i)
        if (!spf[j]) spf[j] = i;
  long count = 0;
  for (long q = 2; q <= N; ++q) {
    long r = q;
    const long p = spf[q];
    int e = 0;
    while (r % p == 0) r /= p, ++e;
    const bool want = r == 1;
    const auto got = try_prime_power(q);
    REQUIRE(got.has_value() == want);
    if (got) {
      ++count;
      CHECK(got->p == p);
      CHECK(got->e == e);
      REQUIRE(ipow(got->p, static_cast<unsigned long>(got->e)) == q);
    }
  }
  CHECK(static_cast<long>(prime_powers_upto(N).size()) == count);
}

TEST_CASE("prime enumeration") {
  const auto ps = primes_upto(30);
  CHECK(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(999983));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(999981));
}

TEST_CASE("ExactRatio comparison matches cross-multiplication") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000'000);
  for (int i = 0; i < 1000; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const ExactRatio x = ratio(a, b), y = ratio(c, d);
    const Int l = Int(a) * d, r = Int(c) * b;
    CHECK((x < y) == (l < r));
    CHECK((x == y) == (l == r));
    CHECK((x > y) == (l > r));
    CHECK(gcd(Int(x.get_num()), Int(x.get_den())) == 1);
    CHECK(x.get_den() > 0);
  }
}

TEST_CASE("ratio is stored in lowest terms") {
  const ExactRatio r = ratio(6L, -4L);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(inv_pow(3, 2) == ratio(1L, 9L));
  CHECK(to_decimal(ratio(1L, 3L), 4) == "0.3333");
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(8L, 5L - 1) == 4);
  CHECK(lcm(4L, 6L) == 12);
  CHECK(gcd(4L, 15L) == 1);
  CHECK(gcd(-6L, 4L) == 2);
  CHECK_THROWS(gcd(0L, 0L));
  CHECK_THROWS(lcm(0L, 3L));
}
