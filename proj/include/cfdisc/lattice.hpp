#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cfdisc/integers.hpp"

namespace cfdisc {

// Coordinates of a lattice vector in a fixed ordered basis. For the
// rank-3 lattices here the basis order is (lambda1, lambda2, tau).
using LatticeVector = std::vector<Integer>;

// Symmetric integer Gram matrix of rank 1..4.
class GramMatrix {
 public:
  GramMatrix(int rank, std::vector<Integer> entries);  // row-major; validates shape and symmetry

  static GramMatrix neg_a2();            // (-2, 1; 1, -2)
  static GramMatrix hyperbolic_plane();  // (0, 1; 1, 0)
  // The two canonical rank-3 shapes:
  //   c = 0:  (-2, 1, 0;  1, -2, 0;  0, 0, 2k)   det = 6k
  //   c = 1:  (-2, 1, 0;  1, -2, 1;  0, 1, 2k)   det = 6k + 2
  static GramMatrix canonical_rank3(const Integer& k, int c);

  int rank() const { return rank_; }
  const Integer& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  bool is_even() const;  // every diagonal entry divisible by 2
  const std::vector<Integer>& entries() const { return entries_; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  int rank_;
  std::vector<Integer> entries_;
};

// u^t G v. Throws std::domain_error on dimension mismatch.
Integer pairing(const GramMatrix& G, const LatticeVector& u, const LatticeVector& v);

// Exact determinant by cofactor expansion (rank <= 4).
Integer det(const GramMatrix& G);

// 3x3 integer matrix, row-major. Used for basis changes: columns are the
// new basis vectors written in the old coordinates.
struct Mat3 {
  std::array<Integer, 9> e;

  static Mat3 identity();
  const Integer& at(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }
  Integer& at(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
  Mat3 operator*(const Mat3& o) const;
  Integer det() const;

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

// T^t G T for rank-3 G.
GramMatrix apply_basis_change(const GramMatrix& G, const Mat3& T);

// Result of canonicalizing a rank-3 even Gram matrix whose top-left block
// is (-2, 1; 1, -2). gram = transform^t * input * transform, transform is
// unimodular, and gram has the canonical_rank3(k, c) shape.
struct CanonicalForm {
  GramMatrix gram;
  Integer k;
  int c;  // 0 or 1
  Mat3 transform;
};

// Basis moves, in order: clear the (1,3) entry with tau -> tau - a*lambda2,
// reduce the (2,3) entry 3b + c to c with tau -> tau + b*(lambda1 + 2*lambda2),
// and flip tau -> -tau if c = -1. Throws std::domain_error when the input
// is not rank 3, not even, or has the wrong top-left block.
CanonicalForm canonicalize_rank3(const GramMatrix& G);

// Exhaustive box scan for e, f with <e,e> = <f,f> = 0 and <e,f> = 1, all
// coordinates bounded by |coord| <= bound. nullopt means no pair in the
// box, not a proof that none exists.
std::optional<std::pair<LatticeVector, LatticeVector>> find_hyperbolic_plane(
    const GramMatrix& G, const Integer& bound);

// Exhaustive box scan for w with <w,w> = 0 and <v,w> = target.
std::optional<LatticeVector> find_isotropic_paired(const GramMatrix& G,
                                                   const LatticeVector& v,
                                                   const Integer& target,
                                                   const Integer& bound);

}  // namespace cfdisc
