#pragma once

#include "lyq/structure.hpp"

namespace lyq {

/// Unital composition algebra with multiplicative norm. The stored form is
/// the polar one, n(x,y) = n(x+y) - n(x) - n(y); the quadratic norm is
/// n(x) = n(x,x)/2.
struct CompositionAlgebra {
  AlgebraPtr algebra;
  BilinearForm norm;  // polar form
  Matrix conjugation;
  Vec unit;

  Vec multiply(const Vec& x, const Vec& y) const { return algebra->multiply(x, y); }
  Vec conj(const Vec& x) const { return conjugation.apply(x); }
  Rational quadratic_norm(const Vec& x) const;
  /// t(x) with x + conj(x) = t(x) * 1.
  Rational trace(const Vec& x) const;
  /// t(x)/2, so the unit has normalized trace 1.
  Rational normalized_trace(const Vec& x) const;
};

/// The split composition algebras: k, k x k, 2x2 matrices, Zorn vector
/// matrices. Throws std::invalid_argument unless dim is 1, 2, 4 or 8.
CompositionAlgebra split_composition(std::size_t dim);

/// Jordan algebra: commutative bullet product with unit, generic trace and
/// degree.
struct JordanAlgebra {
  AlgebraPtr algebra;
  Vec unit;
  Vec generic_trace;  // linear functional, as coefficients
  std::size_t degree = 0;

  Vec multiply(const Vec& x, const Vec& y) const { return algebra->multiply(x, y); }
  Rational trace_of(const Vec& x) const { return dot(generic_trace, x); }
};

/// Hermitian n x n matrices over a split composition algebra under
/// x*y = (xy+yx)/2. Requires n >= 2, and n = 3 when dim(c) = 8.
JordanAlgebra hermitian_jordan(const CompositionAlgebra& c, std::size_t n);

/// k1 + k^n with (a,u)(b,v) = (ab + <u,v>, av + bu), degree 2. Requires n >= 2.
JordanAlgebra spin_factor(std::size_t n);

/// Kernel of the generic trace.
Subspace traceless(const JordanAlgebra& j);

/// (x,y,z) = (xy)z - x(yz) in the Jordan product.
Vec jordan_associator(const JordanAlgebra& j, const Vec& x, const Vec& y, const Vec& z);

/// t(xy) for t = generic_trace / degree (so t(1) = 1).
Rational normalized_trace(const JordanAlgebra& j, const Vec& x, const Vec& y);

}  // namespace lyq
