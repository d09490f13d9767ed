#include "lyq/subspace.hpp"

#include <stdexcept>

namespace lyq {

Subspace Subspace::span(std::size_t ambient, Matrix vectors_as_rows) {
  if (vectors_as_rows.cols() != ambient)
    throw std::invalid_argument("Subspace::span: ambient mismatch");
  Subspace s(ambient);
  rref(vectors_as_rows);
  s.basis_ = std::move(vectors_as_rows);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(ambient, Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return span(ambient, Matrix::identity(ambient)); }

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates: length mismatch");
  // Reduce v against the echelon basis; coefficients come out directly.
  Vec r = v;
  Vec coeff(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    // pivot column of row i is its first nonzero entry
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(i, piv) == 0) ++piv;
    if (piv == ambient_) continue;
    if (r[piv] == 0) continue;
    coeff[i] = r[piv];  // basis rows have pivot 1
    Rational f = r[piv];
    for (std::size_t j = piv; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) r[j] -= f * basis_.at(i, j);
  }
  if (!is_zero(r)) return std::nullopt;
  return coeff;
}

SpanSolver::SpanSolver(std::size_t ambient, const std::vector<Vec>& gens) : ambient_(ambient) {
  const std::size_t d = gens.size();
  // eliminate on [gens | I], pivoting only in the first ambient columns
  Matrix aug(d, ambient + d);
  for (std::size_t i = 0; i < d; ++i) {
    if (gens[i].size() != ambient) throw std::invalid_argument("SpanSolver: length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) aug.at(i, j) = gens[i][j];
    aug.at(i, ambient + i) = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient && r < d; ++c) {
    std::size_t piv = d;
    for (std::size_t i = r; i < d; ++i)
      if (aug.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == d) continue;
    if (piv != r)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(piv, j), aug.at(r, j));
    Rational inv = 1 / aug.at(r, c);
    for (std::size_t j = 0; j < aug.cols(); ++j)
      if (aug.at(r, j) != 0) aug.at(r, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || aug.at(i, c) == 0) continue;
      Rational f = aug.at(i, c);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        if (aug.at(r, j) != 0) aug.at(i, j) -= f * aug.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != d) throw std::invalid_argument("SpanSolver: dependent generators");
  rows_ = Matrix(d, ambient);
  transform_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) rows_.at(i, j) = aug.at(i, j);
    for (std::size_t j = 0; j < d; ++j) transform_.at(i, j) = aug.at(i, ambient + j);
  }
  pivots_ = std::move(pivots);
}

std::optional<Vec> SpanSolver::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SpanSolver: length mismatch");
  Vec r = v;
  Vec alpha(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (r[pivots_[i]] == 0) continue;
    Rational f = r[pivots_[i]];
    alpha[i] = f;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_.at(i, j) != 0) r[j] -= f * rows_.at(i, j);
  }
  if (!is_zero(r)) return std::nullopt;
  // v = sum alpha_i rows_i = sum_k (alpha^T transform)_k gen_k
  return transform_.apply_transpose(alpha);
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  // Solve a*B1 + b*B2 = 0; intersection vectors are a*B1.
  const std::size_t d1 = s1.dim(), d2 = s2.dim(), n = s1.ambient_dim();
  Matrix sys(n, d1 + d2);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < n; ++i) sys.at(i, j) = s1.basis().at(j, i);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t i = 0; i < n; ++i) sys.at(i, d1 + j) = -s2.basis().at(j, i);
  Matrix ker = kernel_basis(sys);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(n, Rational(0));
    for (std::size_t j = 0; j < d1; ++j) axpy(v, ker.at(r, j), s1.basis_vector(j));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s1.dim(); ++i) vecs.push_back(s1.basis_vector(i));
  for (std::size_t i = 0; i < s2.dim(); ++i) vecs.push_back(s2.basis_vector(i));
  return Subspace::span(s1.ambient_dim(), vecs);
}

Subspace form_orthocomplement(const Matrix& b, const Subspace& s) {
  if (!b.is_square() || b.rows() != s.ambient_dim())
    throw std::invalid_argument("form_orthocomplement: shape mismatch");
  // b(v, w) = v^T b w = 0 for all w in s  <=>  (B b^T) v = 0 with B the basis
  // rows of s: row_i = (b w_i)^T = w_i^T b^T.
  Matrix sys = s.basis() * b.transpose();
  return Subspace::span(s.ambient_dim(), kernel_basis(sys));
}

}  // namespace lyq
