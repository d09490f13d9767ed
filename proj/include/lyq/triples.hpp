#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "lyq/liecon.hpp"
#include "lyq/structure.hpp"

namespace lyq {

enum class TripleKind { lts, anti_lts, orthogonal, symplectic, unclassified };

/// Module with a trilinear product e_i e_j e_k = sum_l p[i][j][k][l] e_l and
/// an optional associated bilinear form. For orthogonal/symplectic systems
/// the stored form is the xi-scaled one the axioms refer to.
struct TripleSystem {
  std::size_t dim = 0;
  std::vector<Rational> p;  // dense, dim^4
  std::optional<BilinearForm> form;
  TripleKind kind = TripleKind::unclassified;
  std::optional<Rational> xi;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return p[((i * dim + j) * dim + k) * dim + l];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return p[((i * dim + j) * dim + k) * dim + l];
  }
  Vec product_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec product(const Vec& x, const Vec& y, const Vec& z) const;
  /// The operator e_i e_j (.) as a matrix.
  Matrix left_op(std::size_t i, std::size_t j) const;
};

struct TripleCheckResult {
  bool pass = true;
  std::string identity;  // failed identity, empty on pass
  std::array<std::size_t, 5> tuple{};
  std::size_t tuple_arity = 0;
  Vec lhs, rhs;
  explicit operator bool() const { return pass; }
};

/// Verifies the identity set of the requested kind on all basis tuples;
/// returns the first (lexicographically least) failing tuple with both side
/// values. Throws std::invalid_argument when a needed form is missing or has
/// the wrong symmetry.
TripleCheckResult check_triple(const TripleSystem& t, TripleKind kind);

/// The Lie algebra spanned by the left products x y (.), with its commutator
/// structure constants, acting on the triple system. Throws
/// std::domain_error if the span is not bracket-closed.
Representation inner_derivation_rep(const TripleSystem& t);

/// Z2-graded Lie algebra Inder(V) + V of a certified Lie triple system.
struct GradedLie {
  StructureAlgebra algebra;
  std::size_t even_dim = 0;  // Inder part comes first
};
GradedLie standard_embedding_lts(const TripleSystem& t);

/// Triple system x y z = proj_h(sigma_{x,y}) z on the natural module of a
/// reductive pair inside so(V, b); classifies the Lie-triple versus
/// orthogonal dichotomy and recovers xi. Throws std::invalid_argument when V
/// is reducible under h (the symmetric-pair path applies instead), and
/// std::domain_error if neither identity set holds.
TripleSystem derive_triple_so(const ReductivePair& pair);

/// Same for sp(V, b): anti-Lie versus symplectic.
TripleSystem derive_triple_sp(const ReductivePair& pair);

enum class PairKind { jordan, anti_jordan, unclassified };

/// Pair of modules with trilinear products U+ x U- x U+ -> U+ and
/// U- x U+ x U- -> U-.
struct PairSystem {
  std::size_t dim_plus = 0, dim_minus = 0;
  std::vector<Rational> plus_p;   // [((i dm + j) dp + k) dp + l]
  std::vector<Rational> minus_p;  // [((j dp + i) dm + l) dm + m]
  PairKind kind = PairKind::unclassified;
  std::optional<Rational> xi;

  const Rational& cp(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return plus_p[((i * dim_minus + j) * dim_plus + k) * dim_plus + l];
  }
  Rational& cp(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return plus_p[((i * dim_minus + j) * dim_plus + k) * dim_plus + l];
  }
  const Rational& cm(std::size_t j, std::size_t i, std::size_t l, std::size_t m) const {
    return minus_p[((j * dim_plus + i) * dim_minus + l) * dim_minus + m];
  }
  Rational& cm(std::size_t j, std::size_t i, std::size_t l, std::size_t m) {
    return minus_p[((j * dim_plus + i) * dim_minus + l) * dim_minus + m];
  }
  Vec plus_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec minus_basis(std::size_t j, std::size_t i, std::size_t l) const;
  Matrix plus_op(std::size_t i, std::size_t j) const;   // {e_i f_j .} on U+
  Matrix minus_op(std::size_t j, std::size_t i) const;  // {f_j e_i .} on U-
  bool zero_products() const;
};

struct PairCheckResult {
  bool pass = true;
  bool degenerate = false;  // products identically zero
  std::string identity;
  std::array<std::size_t, 5> tuple{};
  std::size_t tuple_arity = 0;
  Vec lhs, rhs;
  explicit operator bool() const { return pass; }
};

/// Outer symmetry and the five-term identity for both signs sigma.
PairCheckResult check_pair(const PairSystem& p, PairKind kind);

/// Jordan or anti-Jordan pair on (V, V*) from a reductive pair inside
/// sl(V), via d_{x,phi} = proj_h of the traceless part of phi(-)x. Recovers
/// a nonzero xi or throws std::domain_error.
PairSystem derive_pair_sl(const ReductivePair& pair);

/// Span of (D_+(x,y), -eps D_-(y,x)) acting diagonally on U+ + U-.
/// Throws std::domain_error on closure failure, std::invalid_argument if
/// the pair is not certified.
Representation inner_derivation_pair(const PairSystem& p);

// Trilinear text format: "dim n", lines "i j k l p/q", optionally followed
// by "form symmetric|skew" and Gram lines "i j p/q".
void write_tri(std::ostream& os, const TripleSystem& t);
TripleSystem read_tri(std::istream& is);

}  // namespace lyq
