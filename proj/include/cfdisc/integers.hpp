#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfdisc {

// Every arithmetic value in the library. Exact arbitrary-precision
// integers; no floating point appears anywhere.
using Integer = mpz_class;

// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// floor(sqrt(n)). The result r satisfies r^2 <= n < (r+1)^2.
// Throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

// The root r >= 0 with r^2 == n, or nullopt. Always nullopt for n < 0.
std::optional<Integer> is_perfect_square(const Integer& n);

// Deterministic Miller-Rabin with the twelve prime bases 2..37,
// which decides primality exactly for n < 3.3e24.
bool is_prime(const Integer& n);

struct Factorization {
  int sign = 1;                                       // +1 or -1
  std::vector<std::pair<Integer, unsigned>> factors;  // (prime, exponent), primes strictly increasing

  Integer value() const;  // sign * product of prime^exponent
  std::string str() const;  // "2^3 * 5^2", "-1 * 3^2", "1", ...
};

// Complete prime factorization of n != 0: trial division by primes below
// 10^6, then Pollard rho on whatever survives. The result is re-multiplied
// before returning. Throws std::domain_error for n == 0.
Factorization factorize(const Integer& n);

}  // namespace cfdisc
