#pragma once

#include <optional>

#include "lyq/matrix.hpp"

namespace lyq {

/// Linear subspace of k^ambient in canonical form: the basis is the reduced
/// row echelon form of any spanning set, so equal subspaces compare equal
/// structurally.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes the span of the given rows.
  static Subspace span(std::size_t ambient, Matrix vectors_as_rows);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis, or nullopt if v is not in the
  /// subspace. Throws std::invalid_argument on length mismatch.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // rref rows
};

/// Coordinate solver against a fixed, ordered, linearly independent spanning
/// list (unlike Subspace, which canonicalizes its basis away).
class SpanSolver {
 public:
  SpanSolver() = default;
  /// Throws std::invalid_argument if the generators are dependent.
  SpanSolver(std::size_t ambient, const std::vector<Vec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  /// Coefficients of v over the original generators, or nullopt.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  std::size_t ambient_ = 0;
  Matrix rows_;       // echelon rows
  Matrix transform_;  // rows_ = transform_ * gens
  std::vector<std::size_t> pivots_;
};

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);

/// {v : b(v, s) = 0} for a bilinear form with Gram matrix b (v on the left).
Subspace form_orthocomplement(const Matrix& b, const Subspace& s);

}  // namespace lyq
