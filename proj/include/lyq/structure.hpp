#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lyq/matrix.hpp"
#include "lyq/subspace.hpp"

namespace lyq {

enum class Symmetry { symmetric, skew, none };

struct BilinearForm {
  std::size_t dim = 0;
  Matrix gram;
  Symmetry symmetry = Symmetry::none;

  /// Wraps a square Gram matrix, classifying its symmetry.
  static BilinearForm of(Matrix gram);
  Rational eval(const Vec& x, const Vec& y) const;
  bool nondegenerate() const;
};

/// Finite-dimensional algebra over the rationals presented by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. Immutable after construction;
/// zero-dimensional algebras are rejected.
class StructureAlgebra {
 public:
  StructureAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<Rational> c);
  StructureAlgebra(std::size_t dim, std::vector<Rational> c);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<Rational>& constants() const { return c_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vec multiply_basis(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_mult_basis(std::size_t i) const;   // L_{e_i}; equals ad e_i for Lie algebras
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;

  /// Same structure constants (labels ignored).
  bool same_structure(const StructureAlgebra& o) const;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

struct LieCheckResult {
  bool ok = false;
  std::string reason;  // "xx != 0" or "jacobi" when !ok
  std::array<std::size_t, 3> counterexample{};
  explicit operator bool() const { return ok; }
};

/// xx = 0 and the Jacobi identity on all basis triples.
LieCheckResult is_lie(const StructureAlgebra& a);

/// Killing form k(x, y) = tr(ad x ad y). Throws std::domain_error on
/// non-Lie input.
BilinearForm killing_form(const StructureAlgebra& l);

struct Representation {
  AlgebraPtr algebra;
  std::size_t module_dim = 0;
  std::vector<Matrix> action;  // one matrix per algebra basis element

  Matrix act(const Vec& x) const;
  /// rho([x,y]) = [rho x, rho y] on all basis pairs.
  bool respects_brackets() const;
};

Representation adjoint_rep(const AlgebraPtr& l);

/// Restricts every action matrix to an invariant subspace, in the subspace
/// basis. Throws std::invalid_argument if the subspace is not invariant.
Representation restrict_rep(const Representation& r, const Subspace& s);

/// The Lie algebra of derivations {D : D(xy) = D(x)y + xD(y)}, computed as
/// the kernel of the Leibniz system, returned acting on a with its own
/// commutator structure constants.
Representation derivation_algebra(const StructureAlgebra& a);

/// Burnside criterion: the associative algebra spanned by all words in the
/// action matrices reaches the full dimension module_dim^2. Equivalent to
/// irreducibility over the algebraic closure.
bool absolutely_irreducible(const Representation& r);

/// Nondegenerate Killing form plus absolutely irreducible adjoint module.
bool is_simple_lie(const StructureAlgebra& l);

/// Dimension of the space of equivariant maps m -> n (kernel of the
/// intertwiner system). Throws std::invalid_argument if the acting algebras
/// differ.
std::size_t hom_dimension(const Representation& m, const Representation& n);

/// Basis of {B : rho(x)^T B + B rho(x) = 0}, split into symmetric and skew
/// parts (the solution space is transpose-stable).
std::vector<BilinearForm> invariant_forms(const Representation& r);

Subspace derived_subalgebra(const StructureAlgebra& l);
Subspace center(const StructureAlgebra& l);

// Structure-constant text format: "dim n" then one "i j k p/q" line per
// nonzero constant, 0-based, lexicographic, bit-exact.
void write_sca(std::ostream& os, const StructureAlgebra& a);
StructureAlgebra read_sca(std::istream& is);

}  // namespace lyq
