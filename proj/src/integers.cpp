#include "cfdisc/integers.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "cfdisc/errors.hpp"

namespace cfdisc {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

constexpr int kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (int b : kMrBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  // n odd, n > 37. Write n - 1 = 2^s * t with t odd.
  Integer t = n - 1;
  const unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
  t >>= s;
  const Integer n_minus_1 = n - 1;
  for (int b : kMrBases) {
    Integer x;
    const Integer base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) v *= p;
  }
  return v;
}

std::string Factorization::str() const {
  std::ostringstream os;
  if (sign < 0) os << "-1";
  if (factors.empty()) {
    if (sign > 0) os << "1";
    return os.str();
  }
  bool first = sign > 0;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kTrialLimit; j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

// Floyd-cycle Pollard rho; n odd composite with no prime factor below 10^6.
Integer pollard_rho(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x - y, n);
    }
    if (d != n) return d;
  }
}

}  // namespace

Factorization factorize(const Integer& n) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  Factorization f;
  Integer m = n;
  if (m < 0) {
    f.sign = -1;
    m = -m;
  }
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) {
    // Remaining cofactor: either prime, or split it with rho.
    std::vector<Integer> pending{m};
    std::vector<Integer> primes;
    while (!pending.empty()) {
      Integer t = pending.back();
      pending.pop_back();
      if (is_prime(t)) {
        primes.push_back(t);
        continue;
      }
      const Integer d = pollard_rho(t);
      pending.push_back(d);
      pending.push_back(t / d);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      f.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
      i = j;
    }
  }
  if (f.value() != n) throw internal_error("factorize: re-multiplication mismatch");
  return f;
}

}  // namespace cfdisc
