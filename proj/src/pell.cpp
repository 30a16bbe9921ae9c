#include "cfdisc/pell.hpp"

#include <stdexcept>
#include <utility>

#include "cfdisc/errors.hpp"

namespace cfdisc {

PellSolution::PellSolution(Integer x_, Integer y_, Integer D_, Integer N_)
    : x(std::move(x_)), y(std::move(y_)), D(std::move(D_)), N(std::move(N_)) {
  if (y < 0) throw internal_error("PellSolution: negative y");
  if (x * x - D * y * y != N) throw internal_error("PellSolution: equation violated");
}

ContinuedFraction cf_sqrt(const Integer& D) {
  if (D <= 0) throw std::domain_error("cf_sqrt: D must be positive");
  const Integer a0 = isqrt(D);
  if (a0 * a0 == D) throw std::domain_error("cf_sqrt: D is a perfect square");

  ContinuedFraction cf;
  cf.D = D;
  cf.a0 = a0;
  // The period of sqrt(D) starts right after a0 and ends at the first
  // index with Q = 1 (where the partial quotient is 2*a0).
  Integer P = a0;
  Integer Q = D - a0 * a0;
  for (;;) {
    const Integer a = (a0 + P) / Q;
    cf.period.push_back(a);
    if (Q == 1) break;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return cf;
}

namespace {

// Scans convergent indices i = 0 .. 2L-1 for the first i with
// p_i^2 - D*q_i^2 == target, using the small-integer identity
// p_i^2 - D*q_i^2 = (-1)^(i+1) * Q_{i+1} of the PQa recurrence.
// Returns the hit index, or nullopt if the target never appears.
std::optional<std::size_t> scan_convergent_values(const ContinuedFraction& cf,
                                                  const Integer& target) {
  const std::size_t L = cf.period.size();
  Integer P = 0, Q = 1;
  for (std::size_t i = 0; i < 2 * L; ++i) {
    const Integer a = (i == 0) ? cf.a0 : cf.period[(i - 1) % L];
    P = a * Q - P;
    Q = (cf.D - P * P) / Q;
    const Integer value = (i % 2 == 0) ? Integer(-Q) : Q;
    if (value == target) return i;
  }
  return std::nullopt;
}

// The convergent p_i / q_i of sqrt(D).
std::pair<Integer, Integer> convergent_at(const ContinuedFraction& cf, std::size_t index) {
  const std::size_t L = cf.period.size();
  Integer p_prev = 1, q_prev = 0;
  Integer p = cf.a0, q = 1;
  for (std::size_t j = 1; j <= index; ++j) {
    const Integer& a = cf.period[(j - 1) % L];
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

// Square D = s^2: (x - s*y)(x + s*y) = N over the factor pairs of N.
std::optional<PellSolution> solve_square_case(const Integer& D, const Integer& s,
                                              const Integer& N) {
  if (N == 0) return PellSolution(s, 1, D, N);  // x = s*y, minimal y = 1
  std::optional<std::pair<Integer, Integer>> best;  // (x, y), minimal y
  const Integer absN = abs(N);
  for (Integer u = 1; u * u <= absN; ++u) {
    if (absN % u != 0) continue;
    const Integer v = absN / u;
    // factor pairs (a, b) with a*b = N, covering both orders and signs
    const std::pair<Integer, Integer> pairs[] = {
        {u, N / u}, {-u, N / -u}, {v, N / v}, {-v, N / -v}};
    for (const auto& [a, b] : pairs) {
      // x = (a + b)/2, s*y = (b - a)/2
      if ((a + b) % 2 != 0) continue;
      const Integer x = (a + b) / 2;
      const Integer sy = (b - a) / 2;
      if (sy <= 0 || sy % s != 0) continue;
      const Integer y = sy / s;
      if (!best || y < best->second || (y == best->second && abs(x) < abs(best->first)))
        best = {abs(x), y};
    }
  }
  if (!best) return std::nullopt;
  return PellSolution(best->first, best->second, D, N);
}

}  // namespace

PellSolution fundamental_pell(const Integer& D) {
  const ContinuedFraction cf = cf_sqrt(D);  // validates D
  const auto hit = scan_convergent_values(cf, 1);
  if (!hit) throw internal_error("fundamental_pell: no +1 among convergent values");
  auto [x, y] = convergent_at(cf, *hit);
  return PellSolution(std::move(x), std::move(y), D, 1);
}

std::optional<PellSolution> solve_pell_like(const Integer& D, const Integer& N) {
  if (D <= 0) throw std::domain_error("solve_pell_like: D must be positive");
  const auto root = is_perfect_square(D);
  if (root) return solve_square_case(D, *root, N);

  if (N == 0 || N * N >= D)
    throw std::domain_error(
        "solve_pell_like: need 0 < |N| < sqrt(D) for non-square D (use pell_oracle)");

  const ContinuedFraction cf = cf_sqrt(D);
  std::optional<std::pair<Integer, Integer>> best;  // (x, y), minimal y
  // Solutions with gcd(x, y) = g need g^2 | N and come from the scan for N/g^2.
  for (Integer g = 1; g * g <= abs(N); ++g) {
    if (N % (g * g) != 0) continue;
    const auto hit = scan_convergent_values(cf, N / (g * g));
    if (!hit) continue;
    auto [p, q] = convergent_at(cf, *hit);
    Integer x = g * p, y = g * q;
    if (!best || y < best->second) best = {std::move(x), std::move(y)};
  }
  if (!best) return std::nullopt;
  return PellSolution(best->first, best->second, D, N);
}

std::vector<PellSolution> pell_oracle(const Integer& D, const Integer& N,
                                      const Integer& y_max) {
  if (D <= 0) throw std::domain_error("pell_oracle: D must be positive");
  if (y_max < 1) throw std::domain_error("pell_oracle: y_max must be >= 1");
  std::vector<PellSolution> out;
  for (Integer y = 1; y <= y_max; ++y) {
    const Integer t = D * y * y + N;
    if (const auto x = is_perfect_square(t)) out.emplace_back(*x, y, D, N);
  }
  return out;
}

}  // namespace cfdisc
