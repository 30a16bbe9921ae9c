#pragma once

#include <optional>
#include <vector>

#include "cfdisc/integers.hpp"

namespace cfdisc {

// Periodic continued fraction of sqrt(D) for D > 0 not a perfect square,
// computed by the exact integer PQa recurrence
//   P_{i+1} = a_i Q_i - P_i,   Q_{i+1} = (D - P_{i+1}^2) / Q_i,
//   a_i = floor((a0 + P_i) / Q_i).
// The last element of the period is always 2*a0.
struct ContinuedFraction {
  Integer D;
  Integer a0;
  std::vector<Integer> period;
};

// A solution of x^2 - D*y^2 = N. The equation is re-checked at
// construction; y >= 0 always.
struct PellSolution {
  Integer x, y, D, N;
  PellSolution(Integer x_, Integer y_, Integer D_, Integer N_);
};

ContinuedFraction cf_sqrt(const Integer& D);

// Minimal x, y > 0 with x^2 - D*y^2 = 1. D > 0 and not a perfect square.
PellSolution fundamental_pell(const Integer& D);

// Complete decision procedure for x^2 - D*y^2 = N with y >= 1, returning
// the solution of minimal y (x >= 0), or nullopt when none exists.
//
// Regime: for non-square D it requires 0 < |N| < sqrt(D); every positive
// coprime solution is then a convergent of sqrt(D), and the convergent
// values p^2 - D*q^2 repeat with period dividing twice the continued
// fraction period, so scanning two periods decides existence. Imprimitive
// solutions are covered by rerunning the scan on N/g^2 for every square
// divisor g^2 of N. For square D the equation factors as
// (x - s*y)(x + s*y) = N and the finitely many factor pairs of N decide.
// Parameters outside the regime throw std::domain_error.
std::optional<PellSolution> solve_pell_like(const Integer& D, const Integer& N);

// Exhaustive brute-force scan: all solutions with 1 <= y <= y_max, found
// by testing whether D*y^2 + N is a perfect square. Kept deliberately
// independent of the continued-fraction machinery.
std::vector<PellSolution> pell_oracle(const Integer& D, const Integer& N,
                                      const Integer& y_max);

}  // namespace cfdisc
