#include "cfdisc/conditions.hpp"

#include <cstdint>
#include <stdexcept>

#include "cfdisc/errors.hpp"
#include "cfdisc/pell.hpp"

namespace cfdisc {

bool check_star(const Integer& d) {
  if (d <= 6) return false;
  const unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 6);
  return r == 0 || r == 2;
}

bool check_star_star_factor(const Integer& d) {
  if (d < 1) throw std::domain_error("check_star_star_factor: d must be >= 1");
  // (**) holds only for even d: the A2 norm form 2(x^2 - xy + y^2) takes
  // even values only, so odd d is rejected up front to keep the three
  // characterizations in agreement.
  if (d % 2 != 0) return false;
  if (d % 4 == 0) return false;
  if (d % 9 == 0) return false;
  for (const auto& [p, e] : factorize(d).factors) {
    if (p == 2 || p == 3) continue;
    if (p % 3 == 2) return false;
  }
  return true;
}

std::optional<std::pair<Integer, Integer>> check_star_star_a2(const Integer& d,
                                                              const Integer& search_bound) {
  if (d < 1) throw std::domain_error("check_star_star_a2: d must be >= 1");
  if (!search_bound.fits_slong_p())
    throw std::domain_error("check_star_star_a2: search bound too large");
  const long B = search_bound.get_si();
  // Solutions come in pairs (x, y), (-x, -y), so x >= 0 covers the box.
  // For fixed x, 2y^2 - 2xy + (2x^2 - d) = 0 gives y = (x +- s)/2 with
  // s^2 = 2d - 3x^2.
  for (long xl = B; xl >= 0; --xl) {
    const Integer x(xl);
    const Integer disc = 2 * d - 3 * x * x;
    if (disc < 0) continue;
    const auto s = is_perfect_square(disc);
    if (!s) continue;
    if ((x - *s) % 2 != 0) continue;  // both candidates share this parity
    for (const Integer& y : {Integer((x - *s) / 2), Integer((x + *s) / 2)}) {
      if (abs(y) > B) continue;
      if (2 * x * x - 2 * x * y + 2 * y * y != d) continue;
      if (gcd(x, y) == 1) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::optional<Integer> check_star_star_divisor(const Integer& d) {
  if (d < 1) throw std::domain_error("check_star_star_divisor: d must be >= 1");
  // 2n^2 + 2n + 2 is twice an odd number, so only even d can divide it
  // within the (**) world; odd divisors do exist (7 divides 14) but are
  // rejected to keep the three characterizations in agreement.
  if (d % 2 != 0) return std::nullopt;
  if (d.fits_ulong_p()) {
    const std::uint64_t ud = d.get_ui();
    // r = (2n^2 + 2n + 2) mod d and s = (4n + 4) mod d, stepped incrementally.
    std::uint64_t r = 2 % ud;
    std::uint64_t s = 4 % ud;
    for (std::uint64_t n = 0; n < ud; ++n) {
      if (r == 0) return Integer(static_cast<unsigned long>(n));
      r += s;
      if (r >= ud) r -= ud;
      s += 4;
      if (s >= ud) s -= ud;
    }
    return std::nullopt;
  }
  Integer r = 2 % d;
  Integer s = 4 % d;
  for (Integer n = 0; n < d; ++n) {
    if (r == 0) return n;
    r += s;
    if (r >= d) r -= d;
    s += 4;
    if (s >= d) s -= d;
  }
  return std::nullopt;
}

std::optional<std::pair<Integer, Integer>> check_star_star_star(const Integer& d) {
  if (d < 1) throw std::domain_error("check_star_star_star: d must be >= 1");
  // m = 2n + 1 is odd, so m^2 + 3 = 4 (mod 8); a must be odd (else
  // 4 | d*a^2 = 2(n^2+n+1), twice an odd number), so d = 2 (mod 4).
  if (d % 4 != 2) return std::nullopt;
  const auto sol = solve_pell_like(2 * d, -3);
  if (!sol) return std::nullopt;
  if (sol->x % 2 == 0) throw internal_error("check_star_star_star: even m from Pell solver");
  const Integer n = (sol->x - 1) / 2;
  const Integer a = sol->y;
  if (d * a * a != 2 * n * n + 2 * n + 2)
    throw internal_error("check_star_star_star: certificate fails its identity");
  return std::make_pair(n, a);
}

ConditionReport full_report(const Integer& d) {
  if (d < 1) throw std::domain_error("full_report: d must be >= 1");
  ConditionReport rep;
  rep.d = d;
  rep.star = check_star(d);
  rep.cert_factorization = factorize(d);
  rep.star_star = check_star_star_factor(d);
  rep.cert_a2 = check_star_star_a2(d, isqrt(d));
  rep.cert_divisor_n = check_star_star_divisor(d);
  if (rep.cert_a2.has_value() != rep.star_star || rep.cert_divisor_n.has_value() != rep.star_star)
    throw internal_error("full_report: the three (**) characterizations disagree");
  rep.cert_pell = check_star_star_star(d);
  rep.star_star_star = rep.cert_pell.has_value();
  if (rep.star_star_star && !rep.star_star)
    throw internal_error("full_report: (***) without (**)");
  return rep;
}

}  // namespace cfdisc
