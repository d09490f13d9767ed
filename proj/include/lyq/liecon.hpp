#pragma once

#include <optional>

#include "lyq/structure.hpp"

namespace lyq {

enum class LinearFlavor { gl, sl, so, sp, custom };

/// Lie algebra presented by a faithful matrix realization on k^module_dim,
/// with commutator structure constants computed from the basis.
struct MatrixLieAlgebra {
  AlgebraPtr algebra;
  std::vector<Matrix> basis_mats;
  std::size_t module_dim = 0;
  LinearFlavor flavor = LinearFlavor::custom;
  std::optional<BilinearForm> defining_form;  // set for so/sp
  SpanSolver solver;                          // vectorized basis span

  Representation natural_rep() const;
  std::optional<Vec> coordinates(const Matrix& m) const;
  Matrix realize(const Vec& coords) const;
};

/// Builds from an ordered independent basis, verifying bracket closure.
MatrixLieAlgebra from_matrix_basis(std::vector<Matrix> basis, LinearFlavor flavor,
                                   std::optional<BilinearForm> form = std::nullopt);

MatrixLieAlgebra gl_of(std::size_t n);
MatrixLieAlgebra sl_of(std::size_t n);  // n >= 2
/// so(V, b) = {f : b(fx, y) + b(x, fy) = 0}; b symmetric nondegenerate.
MatrixLieAlgebra so_of(const BilinearForm& b);
/// sp(V, b); b skew nondegenerate, even dimension.
MatrixLieAlgebra sp_of(const BilinearForm& b);

/// sigma_{x,y} = b(x,.)y - b(y,.)x (b symmetric), lands in so(b).
Matrix sigma_op(const BilinearForm& b, const Vec& x, const Vec& y);
/// gamma_{x,y} = b(x,.)y + b(y,.)x (b skew), lands in sp(b).
Matrix gamma_op(const BilinearForm& b, const Vec& x, const Vec& y);

/// Reductive decomposition g = h + m with m = h-perp under the Killing form.
struct ReductivePair {
  MatrixLieAlgebra g;
  Subspace h, m;          // in g coordinates
  Matrix proj_h, proj_m;  // on g coordinates
  BilinearForm killing;
  bool symmetric = false;  // [m,m] inside h
};

/// Checks h is a subalgebra, forms m = h-perp, verifies h cap m = 0 and
/// [h,m] in m, builds projections. Throws std::invalid_argument on any
/// failed requirement.
ReductivePair make_reductive_pair(const MatrixLieAlgebra& g, const Subspace& h);

/// Coordinates of operators inside g, as a subspace of g. Throws if some
/// operator is not in g.
Subspace embed_operators(const MatrixLieAlgebra& g, const std::vector<Matrix>& ops);

/// Is the subspace closed under the bracket of g?
bool is_bracket_closed(const MatrixLieAlgebra& g, const Subspace& s);

/// The acting subalgebra of a reductive pair on the natural module: its own
/// structure constants plus the restricted action matrices.
Representation subalgebra_natural_rep(const MatrixLieAlgebra& g, const Subspace& h);

/// sl2 with Chevalley basis (e, h, f).
StructureAlgebra sl2_chevalley();

/// sl2 acting on degree-m binary forms (dimension m+1).
Representation sl2_symmetric_power(std::size_t m);

Representation tensor_rep(const Representation& r1, const Representation& r2);
Representation exterior_square_rep(const Representation& r);
Representation symmetric_square_rep(const Representation& r);

}  // namespace lyq
