#include "lyq/liecon.hpp"

#include <stdexcept>

namespace lyq {

Representation MatrixLieAlgebra::natural_rep() const {
  Representation r;
  r.algebra = algebra;
  r.module_dim = module_dim;
  r.action = basis_mats;
  return r;
}

std::optional<Vec> MatrixLieAlgebra::coordinates(const Matrix& m) const {
  return solver.coordinates(m.vectorize());
}

Matrix MatrixLieAlgebra::realize(const Vec& coords) const {
  Matrix m = Matrix::zero(module_dim, module_dim);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) m = m + basis_mats[i] * coords[i];
  return m;
}

MatrixLieAlgebra from_matrix_basis(std::vector<Matrix> basis, LinearFlavor flavor,
                                   std::optional<BilinearForm> form) {
  if (basis.empty()) throw std::invalid_argument("from_matrix_basis: empty basis");
  const std::size_t n = basis[0].rows();
  const std::size_t d = basis.size();
  std::vector<Vec> gens;
  for (const auto& b : basis) {
    if (b.rows() != n || b.cols() != n) throw std::invalid_argument("from_matrix_basis: shapes");
    gens.push_back(b.vectorize());
  }
  MatrixLieAlgebra g;
  g.solver = SpanSolver(n * n, gens);
  std::vector<Rational> c(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto co = g.solver.coordinates(commutator(basis[i], basis[j]).vectorize());
      if (!co) throw std::invalid_argument("from_matrix_basis: bracket not closed");
      for (std::size_t k = 0; k < d; ++k) {
        c[(i * d + j) * d + k] = (*co)[k];
        c[(j * d + i) * d + k] = -(*co)[k];
      }
    }
  g.algebra = std::make_shared<StructureAlgebra>(d, std::move(c));
  g.basis_mats = std::move(basis);
  g.module_dim = n;
  g.flavor = flavor;
  g.defining_form = std::move(form);
  return g;
}

MatrixLieAlgebra gl_of(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gl_of: n >= 1");
  std::vector<Matrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix m(n, n);
      m.at(a, b) = 1;
      basis.push_back(std::move(m));
    }
  return from_matrix_basis(std::move(basis), LinearFlavor::gl);
}

MatrixLieAlgebra sl_of(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sl_of: n >= 2");
  std::vector<Matrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      Matrix m(n, n);
      m.at(a, b) = 1;
      basis.push_back(std::move(m));
    }
  for (std::size_t a = 0; a + 1 < n; ++a) {
    Matrix m(n, n);
    m.at(a, a) = 1;
    m.at(a + 1, a + 1) = -1;
    basis.push_back(std::move(m));
  }
  return from_matrix_basis(std::move(basis), LinearFlavor::sl);
}

namespace {

MatrixLieAlgebra form_algebra(const BilinearForm& b, bool symmetric_form, LinearFlavor flavor) {
  const std::size_t n = b.dim;
  if (!b.nondegenerate()) throw std::invalid_argument("so/sp: degenerate form");
  if (b.symmetry != (symmetric_form ? Symmetry::symmetric : Symmetry::skew))
    throw std::invalid_argument("so/sp: wrong form symmetry");
  if (!symmetric_form && n % 2 != 0) throw std::invalid_argument("sp: odd dimension");
  // f^T B + B f = 0, entrywise: sum_k f[k][a] B[k][c] + B[a][k] f[k][c] = 0
  Matrix sys(n * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c, ++row)
      for (std::size_t k = 0; k < n; ++k) {
        if (b.gram.at(k, c) != 0) sys.at(row, k * n + a) += b.gram.at(k, c);
        if (b.gram.at(a, k) != 0) sys.at(row, k * n + c) += b.gram.at(a, k);
      }
  Matrix ker = kernel_basis(sys);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < ker.rows(); ++i) basis.push_back(Matrix(n, n, ker.row(i)));
  return from_matrix_basis(std::move(basis), flavor, b);
}

}  // namespace

MatrixLieAlgebra so_of(const BilinearForm& b) { return form_algebra(b, true, LinearFlavor::so); }

MatrixLieAlgebra sp_of(const BilinearForm& b) { return form_algebra(b, false, LinearFlavor::sp); }

Matrix sigma_op(const BilinearForm& b, const Vec& x, const Vec& y) {
  if (b.symmetry != Symmetry::symmetric) throw std::invalid_argument("sigma_op: form not symmetric");
  Vec bx = b.gram.apply_transpose(x), by = b.gram.apply_transpose(y);
  return Matrix::outer(y, bx) - Matrix::outer(x, by);
}

Matrix gamma_op(const BilinearForm& b, const Vec& x, const Vec& y) {
  if (b.symmetry != Symmetry::skew) throw std::invalid_argument("gamma_op: form not skew");
  Vec bx = b.gram.apply_transpose(x), by = b.gram.apply_transpose(y);
  return Matrix::outer(y, bx) + Matrix::outer(x, by);
}

ReductivePair make_reductive_pair(const MatrixLieAlgebra& g, const Subspace& h) {
  const std::size_t d = g.algebra->dim();
  if (h.ambient_dim() != d) throw std::invalid_argument("make_reductive_pair: ambient mismatch");
  if (h.dim() == 0) throw std::invalid_argument("make_reductive_pair: h is zero");
  if (!is_bracket_closed(g, h)) throw std::invalid_argument("make_reductive_pair: h not a subalgebra");
  BilinearForm killing = killing_form(*g.algebra);
  if (!killing.nondegenerate())
    throw std::invalid_argument("make_reductive_pair: Killing form degenerate");
  Subspace m = form_orthocomplement(killing.gram, h);
  if (subspace_intersect(h, m).dim() != 0)
    throw std::invalid_argument("make_reductive_pair: h meets its orthogonal complement");
  // [h, m] inside m
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m.contains(g.algebra->multiply(h.basis_vector(i), m.basis_vector(j))))
        throw std::invalid_argument("make_reductive_pair: [h,m] not inside m");
  ReductivePair p;
  p.g = g;
  p.h = h;
  p.m = m;
  p.killing = std::move(killing);
  // projections from the change of basis [h-basis | m-basis]
  Matrix a(d, d);
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = h.basis().at(j, i);
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = 0; i < d; ++i) a.at(i, h.dim() + j) = m.basis().at(j, i);
  Matrix ainv = inverse(a);
  Matrix sel(d, d);
  for (std::size_t i = 0; i < h.dim(); ++i) sel.at(i, i) = 1;
  p.proj_h = a * sel * ainv;
  p.proj_m = Matrix::identity(d) - p.proj_h;
  // symmetric when [m,m] inside h
  p.symmetric = true;
  for (std::size_t i = 0; i < m.dim() && p.symmetric; ++i)
    for (std::size_t j = i + 1; j < m.dim() && p.symmetric; ++j)
      if (!h.contains(g.algebra->multiply(m.basis_vector(i), m.basis_vector(j))))
        p.symmetric = false;
  return p;
}

Subspace embed_operators(const MatrixLieAlgebra& g, const std::vector<Matrix>& ops) {
  std::vector<Vec> coords;
  for (const auto& op : ops) {
    auto c = g.coordinates(op);
    if (!c) throw std::invalid_argument("embed_operators: operator not in the algebra");
    coords.push_back(*c);
  }
  return Subspace::span(g.algebra->dim(), coords);
}

bool is_bracket_closed(const MatrixLieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.algebra->multiply(s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

Representation subalgebra_natural_rep(const MatrixLieAlgebra& g, const Subspace& h) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h.dim(); ++i) mats.push_back(g.realize(h.basis_vector(i)));
  std::vector<Rational> c(h.dim() * h.dim() * h.dim(), Rational(0));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      auto co = h.coordinates(g.algebra->multiply(h.basis_vector(i), h.basis_vector(j)));
      if (!co) throw std::invalid_argument("subalgebra_natural_rep: not a subalgebra");
      for (std::size_t k = 0; k < h.dim(); ++k) {
        c[(i * h.dim() + j) * h.dim() + k] = (*co)[k];
        c[(j * h.dim() + i) * h.dim() + k] = -(*co)[k];
      }
    }
  Representation r;
  r.algebra = std::make_shared<StructureAlgebra>(h.dim(), std::move(c));
  r.module_dim = g.module_dim;
  r.action = std::move(mats);
  return r;
}

StructureAlgebra sl2_chevalley() {
  std::vector<Rational> c(27, Rational(0));
  auto set = [&](int i, int j, int k, long v) {
    c[(i * 3 + j) * 3 + k] = v;
    c[(j * 3 + i) * 3 + k] = -v;
  };
  set(1, 0, 0, 2);   // [h,e] = 2e
  set(1, 2, 2, -2);  // [h,f] = -2f
  set(0, 2, 1, 1);   // [e,f] = h
  return StructureAlgebra(3, {"e", "h", "f"}, c);
}

Representation sl2_symmetric_power(std::size_t m) {
  const std::size_t n = m + 1;
  Matrix e(n, n), h(n, n), f(n, n);
  // basis x^{m-k} y^k; e = x d/dy, f = y d/dx, h = [e,f]
  for (std::size_t k = 0; k < n; ++k) {
    h.at(k, k) = Rational(static_cast<long>(m)) - 2 * Rational(static_cast<long>(k));
    if (k >= 1) e.at(k - 1, k) = static_cast<long>(k);
    if (k + 1 < n) f.at(k + 1, k) = static_cast<long>(m - k);
  }
  Representation r;
  r.algebra = std::make_shared<StructureAlgebra>(sl2_chevalley());
  r.module_dim = n;
  r.action = {std::move(e), std::move(h), std::move(f)};
  return r;
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
  if (!r1.algebra->same_structure(*r2.algebra))
    throw std::invalid_argument("tensor_rep: acting-algebra mismatch");
  const std::size_t d1 = r1.module_dim, d2 = r2.module_dim;
  Representation r;
  r.algebra = r1.algebra;
  r.module_dim = d1 * d2;
  Matrix i1 = Matrix::identity(d1), i2 = Matrix::identity(d2);
  for (std::size_t x = 0; x < r1.action.size(); ++x)
    r.action.push_back(r1.action[x].kron(i2) + i1.kron(r2.action[x]));
  return r;
}

Representation exterior_square_rep(const Representation& r0) {
  const std::size_t n = r0.module_dim;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  auto idx = [&](std::size_t i, std::size_t j) {
    // i < j assumed
    return (i * (2 * n - i - 1)) / 2 + (j - i - 1);
  };
  Representation r;
  r.algebra = r0.algebra;
  r.module_dim = pairs.size();
  for (const auto& rho : r0.action) {
    Matrix m(pairs.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      auto [i, j] = pairs[col];
      for (std::size_t a = 0; a < n; ++a) {
        if (rho.at(a, i) != 0 && a != j) {
          if (a < j)
            m.at(idx(a, j), col) += rho.at(a, i);
          else
            m.at(idx(j, a), col) -= rho.at(a, i);
        }
        if (rho.at(a, j) != 0 && a != i) {
          if (i < a)
            m.at(idx(i, a), col) += rho.at(a, j);
          else
            m.at(idx(a, i), col) -= rho.at(a, j);
        }
      }
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation symmetric_square_rep(const Representation& r0) {
  const std::size_t n = r0.module_dim;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.push_back({i, j});
  auto idx = [&](std::size_t i, std::size_t j) {
    // i <= j assumed
    return (i * (2 * n - i + 1)) / 2 + (j - i);
  };
  Representation r;
  r.algebra = r0.algebra;
  r.module_dim = pairs.size();
  for (const auto& rho : r0.action) {
    Matrix m(pairs.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      auto [i, j] = pairs[col];
      for (std::size_t a = 0; a < n; ++a) {
        if (rho.at(a, i) != 0) m.at(a <= j ? idx(a, j) : idx(j, a), col) += rho.at(a, i);
        if (rho.at(a, j) != 0) m.at(i <= a ? idx(i, a) : idx(a, i), col) += rho.at(a, j);
      }
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

}  // namespace lyq
