#include "cfdisc/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cfdisc/errors.hpp"

namespace cfdisc {

GramMatrix::GramMatrix(int rank, std::vector<Integer> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1 || rank_ > 4) throw std::domain_error("GramMatrix: rank must be 1..4");
  if (entries_.size() != static_cast<std::size_t>(rank_ * rank_))
    throw std::domain_error("GramMatrix: entry count does not match rank");
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (at(i, j) != at(j, i)) throw std::domain_error("GramMatrix: not symmetric");
}

GramMatrix GramMatrix::neg_a2() { return GramMatrix(2, {-2, 1, 1, -2}); }

GramMatrix GramMatrix::hyperbolic_plane() { return GramMatrix(2, {0, 1, 1, 0}); }

GramMatrix GramMatrix::canonical_rank3(const Integer& k, int c) {
  if (c != 0 && c != 1) throw std::domain_error("canonical_rank3: c must be 0 or 1");
  const Integer twok = 2 * k;
  if (c == 0) return GramMatrix(3, {-2, 1, 0, 1, -2, 0, 0, 0, twok});
  return GramMatrix(3, {-2, 1, 0, 1, -2, 1, 0, 1, twok});
}

bool GramMatrix::is_even() const {
  for (int i = 0; i < rank_; ++i)
    if (at(i, i) % 2 != 0) return false;
  return true;
}

Integer pairing(const GramMatrix& G, const LatticeVector& u, const LatticeVector& v) {
  const auto r = static_cast<std::size_t>(G.rank());
  if (u.size() != r || v.size() != r)
    throw std::domain_error("pairing: vector length does not match rank");
  Integer acc = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      acc += u[i] * G.at(static_cast<int>(i), static_cast<int>(j)) * v[j];
  return acc;
}

namespace {

Integer det_minor(const GramMatrix& G, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return G.at(rows[0], cols[0]);
  Integer acc = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < n; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    acc += sign * G.at(rows[0], cols[j]) * det_minor(G, sub_rows, sub_cols);
    sign = -sign;
  }
  return acc;
}

}  // namespace

Integer det(const GramMatrix& G) {
  std::vector<int> idx;
  for (int i = 0; i < G.rank(); ++i) idx.push_back(i);
  return det_minor(G, idx, idx);
}

Mat3 Mat3::identity() {
  Mat3 m{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer acc = 0;
      for (int t = 0; t < 3; ++t) acc += at(i, t) * o.at(t, j);
      r.at(i, j) = acc;
    }
  return r;
}

Integer Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

GramMatrix apply_basis_change(const GramMatrix& G, const Mat3& T) {
  if (G.rank() != 3) throw std::domain_error("apply_basis_change: rank-3 only");
  std::vector<Integer> out(9, Integer(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer acc = 0;
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) acc += T.at(s, i) * G.at(s, t) * T.at(t, j);
      out[static_cast<std::size_t>(3 * i + j)] = acc;
    }
  return GramMatrix(3, std::move(out));
}

CanonicalForm canonicalize_rank3(const GramMatrix& G) {
  if (G.rank() != 3) throw std::domain_error("canonicalize_rank3: rank-3 only");
  if (G.at(0, 0) != -2 || G.at(0, 1) != 1 || G.at(1, 0) != 1 || G.at(1, 1) != -2)
    throw std::domain_error("canonicalize_rank3: top-left block must be (-2,1;1,-2)");
  if (!G.is_even()) throw std::domain_error("canonicalize_rank3: lattice must be even");

  // tau -> tau - a*lambda2 clears the (1,3) entry.
  const Integer a = G.at(0, 2);
  Mat3 shear1 = Mat3::identity();
  shear1.at(1, 2) = -a;
  GramMatrix cur = apply_basis_change(G, shear1);

  // Write the (2,3) entry as 3b + c with c in {-1, 0, 1};
  // tau -> tau + b*(lambda1 + 2*lambda2) reduces it to c.
  const Integer t = cur.at(1, 2);
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), 3);  // r in {0, 1, 2}
  int c = (r == 2) ? -1 : static_cast<int>(r.get_si());
  const Integer b = (t - c) / 3;
  Mat3 shear2 = Mat3::identity();
  shear2.at(0, 2) = b;
  shear2.at(1, 2) = 2 * b;
  cur = apply_basis_change(cur, shear2);
  Mat3 transform = shear1 * shear2;

  if (c == -1) {  // tau -> -tau
    Mat3 flip = Mat3::identity();
    flip.at(2, 2) = -1;
    cur = apply_basis_change(cur, flip);
    transform = transform * flip;
    c = 1;
  }

  if (cur.at(2, 2) % 2 != 0) throw internal_error("canonicalize_rank3: odd corner after moves");
  const Integer k = cur.at(2, 2) / 2;

  const Integer td = transform.det();
  if (td != 1 && td != -1) throw internal_error("canonicalize_rank3: transform not unimodular");
  if (cur != GramMatrix::canonical_rank3(k, c))
    throw internal_error("canonicalize_rank3: output shape mismatch");
  if (det(cur) != det(G)) throw internal_error("canonicalize_rank3: determinant changed");
  if (det(cur) != 6 * k + 2 * c) throw internal_error("canonicalize_rank3: determinant identity failed");

  return CanonicalForm{std::move(cur), k, c, std::move(transform)};
}

namespace {

long small_bound(const Integer& bound, const char* who) {
  if (bound < 0) throw std::domain_error(std::string(who) + ": bound must be >= 0");
  if (!bound.fits_slong_p() || bound.get_si() > 1000000)
    throw std::domain_error(std::string(who) + ": bound too large for a box scan");
  return bound.get_si();
}

// Counts 0, 1, -1, 2, -2, ..., B, -B so small witnesses are found first.
std::vector<Integer> zigzag(long B) {
  std::vector<Integer> out{0};
  for (long v = 1; v <= B; ++v) {
    out.emplace_back(v);
    out.emplace_back(-v);
  }
  return out;
}

template <typename Visit>
void scan_box(int rank, long B, Visit&& visit) {
  const std::vector<Integer> order = zigzag(B);
  LatticeVector v(static_cast<std::size_t>(rank), Integer(0));
  std::vector<std::size_t> idx(static_cast<std::size_t>(rank), 0);
  for (;;) {
    if (!visit(v)) return;
    int pos = rank - 1;
    while (pos >= 0) {
      auto& i = idx[static_cast<std::size_t>(pos)];
      if (++i < order.size()) {
        v[static_cast<std::size_t>(pos)] = order[i];
        break;
      }
      i = 0;
      v[static_cast<std::size_t>(pos)] = order[0];
      --pos;
    }
    if (pos < 0) return;
  }
}

bool is_zero(const LatticeVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

std::optional<std::pair<LatticeVector, LatticeVector>> find_hyperbolic_plane(
    const GramMatrix& G, const Integer& bound) {
  const long B = small_bound(bound, "find_hyperbolic_plane");
  std::vector<LatticeVector> isotropic;
  scan_box(G.rank(), B, [&](const LatticeVector& v) {
    if (!is_zero(v) && pairing(G, v, v) == 0) isotropic.push_back(v);
    return true;
  });
  for (const auto& e : isotropic)
    for (const auto& f : isotropic)
      if (pairing(G, e, f) == 1) return std::make_pair(e, f);
  return std::nullopt;
}

std::optional<LatticeVector> find_isotropic_paired(const GramMatrix& G,
                                                   const LatticeVector& v,
                                                   const Integer& target,
                                                   const Integer& bound) {
  const long B = small_bound(bound, "find_isotropic_paired");
  std::optional<LatticeVector> found;
  scan_box(G.rank(), B, [&](const LatticeVector& w) {
    if (pairing(G, v, w) == target && pairing(G, w, w) == 0) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace cfdisc
