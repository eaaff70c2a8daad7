#include "large_atlas/arith.hpp"

#include <numeric>

namespace large_atlas {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> try_prime_power(long q) {
  if (q < 2) return std::nullopt;
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1, q};
  long x = q;
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1) return std::nullopt;
  return PrimePower{p, e, q};
}

PrimePower parse_prime_power(long q) {
  auto pp = try_prime_power(q);
  if (!pp) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
  return *pp;
}

std::vector<PrimePower> prime_powers_upto(long qmax) {
  std::vector<PrimePower> out;
  for (long q = 2; q <= qmax; ++q)
    if (auto pp = try_prime_power(q)) out.push_back(*pp);
  return out;
}

std::vector<long> primes_upto(long nmax) {
  std::vector<long> out;
  for (long n = 2; n <= nmax; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

Int factorial(unsigned long t) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), t);
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

long gcd(long a, long b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

long lcm(long a, long b) {
  if (a == 0 || b == 0) throw std::domain_error("lcm needs nonzero arguments");
  return std::lcm(a, b);
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

ExactRatio ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  ExactRatio r(num, den);
  r.canonicalize();
  return r;
}

ExactRatio ratio(long num, long den) { return ratio(Int(num), Int(den)); }

ExactRatio inv_pow(long q, unsigned long k) { return ratio(Int(1), ipow(q, k)); }

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const ExactRatio& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const ExactRatio& r, int digits) {
  Int scale = ipow(10, static_cast<unsigned long>(digits));
  Int num = r.get_num();
  bool neg = num < 0;
  if (neg) num = -num;
  Int scaled = num * scale / r.get_den();
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return neg ? "-" + out : out;
}

}  // namespace large_atlas
