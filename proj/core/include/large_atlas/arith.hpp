#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace large_atlas {

using Int = mpz_class;
// Always canonical (gcd(num, den) = 1, den > 0); comparisons are exact.
using ExactRatio = mpq_class;

struct NotAPrimePower : std::domain_error {
  using std::domain_error::domain_error;
};

struct PrimePower {
  long p = 0;
  int e = 0;
  long q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(long n);
std::optional<PrimePower> try_prime_power(long q);
PrimePower parse_prime_power(long q);

// Prime powers 2 <= q <= qmax in increasing order.
std::vector<PrimePower> prime_powers_upto(long qmax);
std::vector<long> primes_upto(long nmax);

Int factorial(unsigned long t);
Int ipow(const Int& base, unsigned long exp);
Int ipow(long base, unsigned long exp);

long gcd(long a, long b);
long lcm(long a, long b);
Int gcd(const Int& a, const Int& b);

ExactRatio ratio(const Int& num, const Int& den);
ExactRatio ratio(long num, long den);
// q^{-k} as an exact rational.
ExactRatio inv_pow(long q, unsigned long k);

std::string to_string(const Int& v);
std::string to_string(const ExactRatio& r);
// Decimal rendering with a fixed number of fractional digits (truncated), for display only.
std::string to_decimal(const ExactRatio& r, int digits = 6);

}  // namespace large_atlas
