#pragma once

#include <optional>
#include <utility>

#include "cfdisc/integers.hpp"

namespace cfdisc {

// Verdicts and certificates for the three numerical conditions on a
// discriminant d:
//   (*)    d > 6 and d = 0 or 2 (mod 6)
//   (**)   d even, not divisible by 4, 9, or any odd prime p = 2 (mod 3);
//          equivalently d is the norm of a primitive vector of the A2
//          lattice, equivalently d divides 2n^2 + 2n + 2 for some n
//   (***)  d * a^2 = 2n^2 + 2n + 2 for some integers n >= 0, a >= 1;
//          equivalently m^2 - 2d*a^2 = -3 is solvable (m = 2n + 1)
struct ConditionReport {
  Integer d;
  bool star = false;
  bool star_star = false;
  bool star_star_star = false;
  Factorization cert_factorization;                        // of d itself
  std::optional<std::pair<Integer, Integer>> cert_a2;      // coprime (x, y), 2x^2 - 2xy + 2y^2 = d
  std::optional<Integer> cert_divisor_n;                   // least n in [0, d) with d | 2n^2 + 2n + 2
  std::optional<std::pair<Integer, Integer>> cert_pell;    // (n, a) with d * a^2 = 2n^2 + 2n + 2
};

bool check_star(const Integer& d);

// Factorization characterization of (**). d >= 1.
bool check_star_star_factor(const Integer& d);

// Primitive A2-norm characterization: a coprime (x, y) with
// 2x^2 - 2xy + 2y^2 = d and |x|, |y| <= search_bound. Any representation
// satisfies x^2 + y^2 <= d, so search_bound = isqrt(d) is exhaustive.
std::optional<std::pair<Integer, Integer>> check_star_star_a2(const Integer& d,
                                                              const Integer& search_bound);

// Divisor characterization: the least n in [0, d) with d | 2n^2 + 2n + 2
// (the residue is periodic in n with period d, so the scan is exhaustive).
std::optional<Integer> check_star_star_divisor(const Integer& d);

// (***) via the Pell-type equation m^2 - 2d*a^2 = -3 with m = 2n + 1.
// Returns the certificate (n, a) of minimal a, or nullopt.
std::optional<std::pair<Integer, Integer>> check_star_star_star(const Integer& d);

// All verdicts with certificates. (**) is decided by the factorization
// route and cross-checked against the other two characterizations.
ConditionReport full_report(const Integer& d);

}  // namespace cfdisc
