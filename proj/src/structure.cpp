#include "lyq/structure.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lyq/intops.hpp"
#include "lyq/modp.hpp"

namespace lyq {

BilinearForm BilinearForm::of(Matrix gram) {
  if (!gram.is_square()) throw std::invalid_argument("BilinearForm: not square");
  BilinearForm b;
  b.dim = gram.rows();
  bool sym = true, skew = true;
  for (std::size_t i = 0; i < b.dim && (sym || skew); ++i)
    for (std::size_t j = 0; j <= i && (sym || skew); ++j) {
      if (gram.at(i, j) != gram.at(j, i)) sym = false;
      if (gram.at(i, j) != -gram.at(j, i)) skew = false;
    }
  b.symmetry = sym ? Symmetry::symmetric : (skew ? Symmetry::skew : Symmetry::none);
  b.gram = std::move(gram);
  return b;
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const { return dot(x, gram.apply(y)); }

bool BilinearForm::nondegenerate() const { return rank(gram) == dim; }

StructureAlgebra::StructureAlgebra(std::size_t dim, std::vector<std::string> labels,
                                   std::vector<Rational> c)
    : dim_(dim), labels_(std::move(labels)), c_(std::move(c)) {
  // Zero-dimensional algebras may arise as outputs (e.g. an empty derivation
  // algebra) but are rejected as inputs by every operation below.
  if (c_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("StructureAlgebra: constants size mismatch");
  if (labels_.size() != dim_) throw std::invalid_argument("StructureAlgebra: label count");
}

StructureAlgebra::StructureAlgebra(std::size_t dim, std::vector<Rational> c)
    : StructureAlgebra(dim, [dim] {
        std::vector<std::string> ls;
        for (std::size_t i = 0; i < dim; ++i) ls.push_back("e" + std::to_string(i));
        return ls;
      }(), std::move(c)) {}

Vec StructureAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
  return Vec(c_.begin() + (i * dim_ + j) * dim_, c_.begin() + (i * dim_ + j + 1) * dim_);
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("multiply: dimension mismatch");
  Vec r(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      const Rational* row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k] != 0) r[k] += f * row[k];
    }
  }
  return r;
}

Matrix StructureAlgebra::left_mult_basis(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

Matrix StructureAlgebra::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) m.at(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

Matrix StructureAlgebra::right_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) m.at(k, i) += x[j] * c(i, j, k);
  }
  return m;
}

bool StructureAlgebra::same_structure(const StructureAlgebra& o) const {
  return dim_ == o.dim_ && c_ == o.c_;
}

namespace {

// Jacobi sweep in rescaled int64 arithmetic; falls back to rationals when
// the constants do not fit.
bool jacobi_int(const StructureAlgebra& a, const detail::ScaledInts& s,
                std::array<std::size_t, 3>& bad) {
  const std::size_t n = a.dim();
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> long long {
    return s.v[(i * n + j) * n + k];
  };
  std::vector<__int128> acc(n);
  auto addcyc = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (std::size_t m = 0; m < n; ++m) {
      long long cxy = C(x, y, m);
      if (cxy == 0) continue;
      for (std::size_t l = 0; l < n; ++l) acc[l] += static_cast<__int128>(cxy) * C(m, z, l);
    }
  };
  // Once xx=0 holds the Jacobiator is alternating, so i<j<=k suffices.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        addcyc(i, j, k);
        addcyc(j, k, i);
        addcyc(k, i, j);
        for (std::size_t l = 0; l < n; ++l)
          if (acc[l] != 0) {
            bad = {i, j, k};
            return false;
          }
      }
  return true;
}

bool jacobi_exact(const StructureAlgebra& a, std::array<std::size_t, 3>& bad) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vec s = a.multiply(a.multiply_basis(i, j), unit_vec(n, k));
        axpy(s, Rational(1), a.multiply(a.multiply_basis(j, k), unit_vec(n, i)));
        axpy(s, Rational(1), a.multiply(a.multiply_basis(k, i), unit_vec(n, j)));
        if (!is_zero(s)) {
          bad = {i, j, k};
          return false;
        }
      }
  return true;
}

}  // namespace

LieCheckResult is_lie(const StructureAlgebra& a) {
  LieCheckResult r;
  const std::size_t n = a.dim();
  if (n == 0) throw std::invalid_argument("is_lie: zero-dimensional input");
  // xx = 0 on the basis plus antisymmetry (the bilinear closure of xx = 0).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) + a.c(j, i, k) != 0) {
          r.ok = false;
          r.reason = "xx != 0";
          r.counterexample = {i, j, j};
          return r;
        }
  std::array<std::size_t, 3> bad{};
  bool jac;
  if (auto s = detail::scale_to_int64(a.constants()))
    jac = jacobi_int(a, *s, bad);
  else
    jac = jacobi_exact(a, bad);
  if (!jac) {
    r.ok = false;
    r.reason = "jacobi";
    r.counterexample = bad;
    return r;
  }
  r.ok = true;
  return r;
}

namespace {

Rational int128_to_rational(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : x;
  Integer z = 0;
  Integer base = Integer(1) << 64;
  z = Integer(static_cast<unsigned long>(u >> 64)) * base +
      Integer(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  if (neg) z = -z;
  return Rational(z);
}

}  // namespace

BilinearForm killing_form(const StructureAlgebra& l) {
  if (!is_lie(l)) throw std::domain_error("killing_form: non-Lie input");
  const std::size_t n = l.dim();
  Matrix gram(n, n);
  if (auto s = detail::scale_to_int64(l.constants())) {
    auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> long long {
      return s->v[(i * n + j) * n + k];
    };
    Rational den2 = Rational(static_cast<long>(s->den)) * Rational(static_cast<long>(s->den));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        __int128 acc = 0;
        // tr(ad e_i ad e_j) = sum_{a,b} c(i,b,a) c(j,a,b)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            long long x = C(i, b, a);
            if (x) acc += static_cast<__int128>(x) * C(j, a, b);
          }
        Rational v = int128_to_rational(acc) / den2;
        gram.at(i, j) = v;
        gram.at(j, i) = v;
      }
  } else {
    std::vector<Matrix> ad(n);
    for (std::size_t i = 0; i < n; ++i) ad[i] = l.left_mult_basis(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational t = (ad[i] * ad[j]).trace();
        gram.at(i, j) = t;
        gram.at(j, i) = t;
      }
  }
  return BilinearForm::of(std::move(gram));
}

Matrix Representation::act(const Vec& x) const {
  if (x.size() != algebra->dim()) throw std::invalid_argument("act: dimension mismatch");
  Matrix m(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + action[i] * x[i];
  return m;
}

bool Representation::respects_brackets() const {
  const std::size_t n = algebra->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = act(algebra->multiply_basis(i, j));
      if (lhs != commutator(action[i], action[j])) return false;
    }
  return true;
}

Representation adjoint_rep(const AlgebraPtr& l) {
  Representation r;
  r.algebra = l;
  r.module_dim = l->dim();
  for (std::size_t i = 0; i < l->dim(); ++i) r.action.push_back(l->left_mult_basis(i));
  return r;
}

Representation restrict_rep(const Representation& r, const Subspace& s) {
  if (s.ambient_dim() != r.module_dim)
    throw std::invalid_argument("restrict_rep: ambient mismatch");
  Representation out;
  out.algebra = r.algebra;
  out.module_dim = s.dim();
  for (const auto& a : r.action) {
    Matrix m(s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      auto co = s.coordinates(a.apply(s.basis_vector(j)));
      if (!co) throw std::invalid_argument("restrict_rep: subspace not invariant");
      for (std::size_t i = 0; i < s.dim(); ++i) m.at(i, j) = (*co)[i];
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

Representation derivation_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) throw std::invalid_argument("derivation_algebra: zero-dimensional input");
  // Unknown D with entries d[p][q] (row-major): for all i,j and components l
  //   sum_t c(i,j,t) d[l][t] - sum_p c(p,j,l) d[p][i] - sum_q c(i,q,l) d[q][j] = 0
  Matrix sys(n * n * n, n * n);
  auto idx = [n](std::size_t p, std::size_t q) { return p * n + q; };
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l, ++row) {
        for (std::size_t t = 0; t < n; ++t)
          if (a.c(i, j, t) != 0) sys.at(row, idx(l, t)) += a.c(i, j, t);
        for (std::size_t p = 0; p < n; ++p)
          if (a.c(p, j, l) != 0) sys.at(row, idx(p, i)) -= a.c(p, j, l);
        for (std::size_t q = 0; q < n; ++q)
          if (a.c(i, q, l) != 0) sys.at(row, idx(q, j)) -= a.c(i, q, l);
      }
  Matrix ker = kernel_basis(sys);
  const std::size_t d = ker.rows();
  std::vector<Matrix> ds;
  for (std::size_t r = 0; r < d; ++r) ds.push_back(Matrix(n, n, ker.row(r)));
  // commutator structure constants in the kernel basis
  Subspace span = Subspace::span(n * n, ker);
  std::vector<Rational> cc(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      auto co = span.coordinates(commutator(ds[i], ds[j]).vectorize());
      if (!co) throw std::logic_error("derivation_algebra: span not bracket closed");
      for (std::size_t k = 0; k < d; ++k) cc[(i * d + j) * d + k] = (*co)[k];
    }
  Representation rep;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("D" + std::to_string(i));
  rep.algebra = std::make_shared<StructureAlgebra>(d, labels, std::move(cc));
  rep.module_dim = n;
  rep.action = std::move(ds);
  return rep;
}

namespace {

// deterministic generic coefficients for the two-generator shortcut
struct Lcg {
  uint64_t s;
  uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
};

// Incremental exact echelon; rows normalized to pivot 1 and reduced against
// earlier pivots on insert.
struct ExactEchelon {
  std::size_t ncols;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  explicit ExactEchelon(std::size_t n) : ncols(n) {}
  bool insert(Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rational f = v[pivots[r]];
      for (std::size_t j = pivots[r]; j < ncols; ++j)
        if (rows[r][j] != 0) v[j] -= f * rows[r][j];
    }
    std::size_t piv = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == ncols) return false;
    Rational inv = 1 / v[piv];
    for (std::size_t j = piv; j < ncols; ++j)
      if (v[j] != 0) v[j] *= inv;
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, piv);
    return true;
  }
  std::size_t rank() const { return rows.size(); }
};

// Exact Burnside closure over Q. Seeds are the action matrices; the span is
// closed under right multiplication by all of them.
bool burnside_exact(const std::vector<Matrix>& gens, std::size_t n) {
  const std::size_t N = n * n;
  ExactEchelon ech(N);
  std::vector<Matrix> fresh;
  auto insert = [&](const Matrix& m) {
    if (ech.insert(m.vectorize())) fresh.push_back(m);
  };
  for (const auto& g : gens) insert(g);
  std::size_t head = 0;
  while (head < fresh.size() && ech.rank() < N) {
    Matrix m = fresh[head++];
    for (const auto& g : gens) insert(m * g);
  }
  return ech.rank() == N;
}

std::vector<uint32_t> mat_mul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  std::size_t n, uint32_t p) {
  std::vector<uint32_t> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += static_cast<uint64_t>(a[i * n + k]) * b[k * n + j];
      c[i * n + j] = static_cast<uint32_t>(acc % p);
    }
  return c;
}

// Mod-p Burnside certificate: a full-dimensional span mod p certifies the
// rational span is full. Returns false when inconclusive.
bool burnside_modp_full(const Representation& r, uint32_t p) {
  const std::size_t n = r.module_dim;
  const std::size_t N = n * n;
  std::vector<std::vector<uint32_t>> seeds;
  for (const auto& m : r.action) {
    std::vector<uint32_t> flat(N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        flat[i * n + j] = (m.at(i, j) == 0) ? 0u : modp::reduce_rational(m.at(i, j), p);
    seeds.push_back(std::move(flat));
  }
  // two generic elements of the acting algebra; they right-generate the whole
  // word span as long as they Lie-generate, and any shortfall is repaired by
  // falling back to the full generator set below
  const std::size_t galg = r.algebra->dim();
  Lcg lcg{0x5eed5eedULL};
  auto generic = [&]() {
    std::vector<uint32_t> g(N, 0);
    for (std::size_t i = 0; i < galg; ++i) {
      uint64_t coeff = 1 + lcg.next() % 19;
      for (std::size_t e = 0; e < N; ++e)
        g[e] = static_cast<uint32_t>((g[e] + coeff * seeds[i][e]) % p);
    }
    return g;
  };
  std::vector<std::vector<uint32_t>> mults = {generic(), generic()};
  modp::EchelonModP ech(N, p);
  std::vector<std::vector<uint32_t>> fresh;
  auto insert = [&](std::vector<uint32_t> v) {
    std::vector<uint32_t> copy = v;
    if (ech.insert(std::move(copy))) fresh.push_back(std::move(v));
  };
  for (const auto& s : seeds) insert(s);
  for (const auto& g : mults) insert(g);
  std::size_t head = 0;
  while (head < fresh.size() && ech.rank() < N) {
    auto m = fresh[head++];
    for (const auto& g : mults) insert(mat_mul_mod(m, g, n, p));
  }
  if (ech.rank() == N) return true;
  // fall back to right-multiplying by every generator
  mults = seeds;
  head = 0;
  while (head < fresh.size() && ech.rank() < N) {
    auto m = fresh[head++];
    for (const auto& g : mults) insert(mat_mul_mod(m, g, n, p));
  }
  return ech.rank() == N;
}

// Cyclic-closure scan: a proper nonzero invariant subspace generated by a
// basis vector certifies reducibility.
bool invariant_subspace_from_basis(const Representation& r) {
  const std::size_t n = r.module_dim;
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    Subspace span = Subspace::span(n, {unit_vec(n, v0)});
    std::vector<Vec> fresh = {unit_vec(n, v0)};
    std::size_t head = 0;
    while (head < fresh.size() && span.dim() < n) {
      Vec v = fresh[head++];
      for (const auto& g : r.action) {
        Vec w = g.apply(v);
        Subspace bigger = subspace_sum(span, Subspace::span(n, {w}));
        if (bigger.dim() > span.dim()) {
          span = std::move(bigger);
          fresh.push_back(std::move(w));
        }
      }
    }
    if (span.dim() < n) return true;
  }
  return false;
}

}  // namespace

bool absolutely_irreducible(const Representation& r) {
  const std::size_t n = r.module_dim;
  if (n == 0) throw std::invalid_argument("absolutely_irreducible: empty module");
  if (invariant_subspace_from_basis(r)) return false;
  if (n <= 12) {
    return burnside_exact(r.action, n);
  }
  if (burnside_modp_full(r, modp::kFirstPrime)) return true;
  // Mod-p shortfall is either genuine reducibility (over the closure) or an
  // unlucky prime; the exact closure settles it.
  return burnside_exact(r.action, n);
}

bool is_simple_lie(const StructureAlgebra& l) {
  auto lc = is_lie(l);
  if (!lc) throw std::domain_error("is_simple_lie: non-Lie input");
  if (l.dim() < 1) return false;
  if (!killing_form(l).nondegenerate()) return false;
  auto ptr = std::make_shared<StructureAlgebra>(l);
  return absolutely_irreducible(adjoint_rep(ptr));
}

std::size_t hom_dimension(const Representation& m, const Representation& n) {
  if (!m.algebra->same_structure(*n.algebra))
    throw std::invalid_argument("hom_dimension: acting-algebra mismatch");
  const std::size_t dm = m.module_dim, dn = n.module_dim, g = m.algebra->dim();
  // unknown F: dn x dm, F rho_m(x) = rho_n(x) F
  Matrix sys(g * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t x = 0; x < g; ++x) {
    const Matrix& rm = m.action[x];
    const Matrix& rn = n.action[x];
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b, ++row) {
        for (std::size_t cidx = 0; cidx < dn; ++cidx)
          if (rn.at(a, cidx) != 0) sys.at(row, cidx * dm + b) += rn.at(a, cidx);
        for (std::size_t cidx = 0; cidx < dm; ++cidx)
          if (rm.at(cidx, b) != 0) sys.at(row, a * dm + cidx) -= rm.at(cidx, b);
      }
  }
  return kernel_basis(sys).rows();
}

std::vector<BilinearForm> invariant_forms(const Representation& r) {
  const std::size_t n = r.module_dim, g = r.algebra->dim();
  Matrix sys(g * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t x = 0; x < g; ++x) {
    const Matrix& rho = r.action[x];
    // rho^T B + B rho = 0
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b, ++row) {
        for (std::size_t cidx = 0; cidx < n; ++cidx) {
          if (rho.at(cidx, a) != 0) sys.at(row, cidx * n + b) += rho.at(cidx, a);
          if (rho.at(cidx, b) != 0) sys.at(row, a * n + cidx) += rho.at(cidx, b);
        }
      }
  }
  Matrix ker = kernel_basis(sys);
  // split into symmetric and skew parts; the kernel is transpose-stable
  std::vector<Vec> sym, skew;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Matrix b(n, n, ker.row(i));
    Matrix bt = b.transpose();
    Matrix s = (b + bt) * rat(1, 2);
    Matrix k = (b - bt) * rat(1, 2);
    if (!s.is_zero()) sym.push_back(s.vectorize());
    if (!k.is_zero()) skew.push_back(k.vectorize());
  }
  std::vector<BilinearForm> out;
  auto push_basis = [&](const std::vector<Vec>& part) {
    Subspace sp = Subspace::span(n * n, part);
    for (std::size_t i = 0; i < sp.dim(); ++i)
      out.push_back(BilinearForm::of(Matrix(n, n, sp.basis_vector(i))));
  };
  push_basis(sym);
  push_basis(skew);
  return out;
}

Subspace derived_subalgebra(const StructureAlgebra& l) {
  if (!is_lie(l)) throw std::domain_error("derived_subalgebra: non-Lie input");
  std::vector<Vec> prods;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) prods.push_back(l.multiply_basis(i, j));
  return Subspace::span(l.dim(), prods);
}

Subspace center(const StructureAlgebra& l) {
  if (!is_lie(l)) throw std::domain_error("center: non-Lie input");
  const std::size_t n = l.dim();
  Matrix sys(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i) sys.at(a * n + b, i) = l.c(i, b, a);
  return Subspace::span(n, kernel_basis(sys));
}

void write_sca(std::ostream& os, const StructureAlgebra& a) {
  os << "dim " << a.dim() << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != 0)
          os << i << " " << j << " " << k << " " << to_string(a.c(i, j, k)) << "\n";
}

StructureAlgebra read_sca(std::istream& is) {
  std::string word;
  if (!(is >> word) || word != "dim") throw std::runtime_error("read_sca: missing dim header");
  long long n;
  if (!(is >> n) || n <= 0) throw std::runtime_error("read_sca: bad dimension");
  std::vector<Rational> c(n * n * n, Rational(0));
  long long i, j, k;
  std::string val;
  while (is >> i) {
    if (!(is >> j >> k >> val)) throw std::runtime_error("read_sca: truncated entry");
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
      throw std::runtime_error("read_sca: index out of range");
    c[(i * n + j) * n + k] = parse_rational(val);
  }
  if (!is.eof() && is.fail()) {
    is.clear();
    std::string rest;
    if (is >> rest) throw std::runtime_error("read_sca: malformed entry near '" + rest + "'");
  }
  return StructureAlgebra(static_cast<std::size_t>(n), std::move(c));
}

}  // namespace lyq
