#include "lyq/compjordan.hpp"

#include <stdexcept>

namespace lyq {

Rational CompositionAlgebra::quadratic_norm(const Vec& x) const {
  return norm.eval(x, x) / 2;
}

Rational CompositionAlgebra::trace(const Vec& x) const {
  Vec s = add(x, conj(x));
  // s must be a multiple of the unit
  std::size_t u0 = 0;
  while (u0 < unit.size() && unit[u0] == 0) ++u0;
  Rational t = s[u0] / unit[u0];
  if (sub(s, scale(t, unit)) != zero_vec(unit.size()))
    throw std::logic_error("composition trace: x + conj(x) not scalar");
  return t;
}

Rational CompositionAlgebra::normalized_trace(const Vec& x) const { return trace(x) / 2; }

namespace {

std::size_t zorn_index(char kind, std::size_t i) {
  // basis order: e1, e2, u1, u2, u3, v1, v2, v3
  switch (kind) {
    case 'a': return 0;
    case 'b': return 1;
    case 'u': return 2 + i;
    default: return 5 + i;
  }
}

struct ZornElt {
  Rational a, b;
  std::array<Rational, 3> u{}, v{};
};

ZornElt zorn_unpack(const Vec& x) {
  ZornElt z;
  z.a = x[0];
  z.b = x[1];
  for (int i = 0; i < 3; ++i) {
    z.u[i] = x[2 + i];
    z.v[i] = x[5 + i];
  }
  return z;
}

Vec zorn_pack(const ZornElt& z) {
  Vec x(8, Rational(0));
  x[0] = z.a;
  x[1] = z.b;
  for (int i = 0; i < 3; ++i) {
    x[2 + i] = z.u[i];
    x[5 + i] = z.v[i];
  }
  return x;
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Rational dot3(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

// Zorn vector matrices: (a, u; v, b)(a', u'; v', b') =
// (aa' + u.v', au' + b'u - v x v'; a'v + bv' + u x u', bb' + v.u')
Vec zorn_mul(const Vec& xv, const Vec& yv) {
  ZornElt x = zorn_unpack(xv), y = zorn_unpack(yv), r;
  r.a = x.a * y.a + dot3(x.u, y.v);
  r.b = x.b * y.b + dot3(x.v, y.u);
  auto vxv = cross(x.v, y.v);
  auto uxu = cross(x.u, y.u);
  for (int i = 0; i < 3; ++i) {
    r.u[i] = x.a * y.u[i] + y.b * x.u[i] - vxv[i];
    r.v[i] = y.a * x.v[i] + x.b * y.v[i] + uxu[i];
  }
  return zorn_pack(r);
}

}  // namespace

CompositionAlgebra split_composition(std::size_t dim) {
  CompositionAlgebra c;
  switch (dim) {
    case 1: {
      std::vector<Rational> sc(1, Rational(1));
      c.algebra = std::make_shared<StructureAlgebra>(1, std::vector<std::string>{"1"}, sc);
      c.unit = Vec{Rational(1)};
      c.conjugation = Matrix::identity(1);
      Matrix g(1, 1);
      g.at(0, 0) = 2;  // n(x) = x^2
      c.norm = BilinearForm::of(g);
      return c;
    }
    case 2: {
      std::vector<Rational> sc(8, Rational(0));
      auto set = [&](int i, int j, int k, long v) { sc[(i * 2 + j) * 2 + k] = v; };
      set(0, 0, 0, 1);
      set(1, 1, 1, 1);
      c.algebra = std::make_shared<StructureAlgebra>(2, std::vector<std::string>{"p", "q"}, sc);
      c.unit = Vec{Rational(1), Rational(1)};
      c.conjugation = Matrix{{0, 1}, {1, 0}};
      c.norm = BilinearForm::of(Matrix{{0, 1}, {1, 0}});  // n(a,b) = ab
      return c;
    }
    case 4: {
      // 2x2 matrix units E11, E12, E21, E22
      auto ij = [](std::size_t e) { return std::pair<int, int>{static_cast<int>(e) / 2, static_cast<int>(e) % 2}; };
      std::vector<Rational> sc(64, Rational(0));
      for (std::size_t e = 0; e < 4; ++e)
        for (std::size_t f = 0; f < 4; ++f) {
          auto [i, j] = ij(e);
          auto [k, l] = ij(f);
          if (j == k) sc[(e * 4 + f) * 4 + (i * 2 + l)] = 1;
        }
      c.algebra = std::make_shared<StructureAlgebra>(
          4, std::vector<std::string>{"E11", "E12", "E21", "E22"}, sc);
      c.unit = Vec{Rational(1), Rational(0), Rational(0), Rational(1)};
      c.conjugation = Matrix{{0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}};
      // n = det, polarized: N(E11,E22) = 1, N(E12,E21) = -1
      Matrix g(4, 4);
      g.at(0, 3) = 1;
      g.at(3, 0) = 1;
      g.at(1, 2) = -1;
      g.at(2, 1) = -1;
      c.norm = BilinearForm::of(std::move(g));
      return c;
    }
    case 8: {
      std::vector<Rational> sc(8 * 8 * 8, Rational(0));
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
          Vec prod = zorn_mul(unit_vec(8, i), unit_vec(8, j));
          for (std::size_t k = 0; k < 8; ++k) sc[(i * 8 + j) * 8 + k] = prod[k];
        }
      c.algebra = std::make_shared<StructureAlgebra>(
          8, std::vector<std::string>{"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"}, sc);
      c.unit = add(unit_vec(8, 0), unit_vec(8, 1));
      // conj(a, u; v, b) = (b, -u; -v, a)
      Matrix conj(8, 8);
      conj.at(0, 1) = 1;
      conj.at(1, 0) = 1;
      for (std::size_t i = 2; i < 8; ++i) conj.at(i, i) = -1;
      c.conjugation = std::move(conj);
      // n(x) = ab - u.v, polarized
      Matrix g(8, 8);
      g.at(0, 1) = 1;
      g.at(1, 0) = 1;
      for (std::size_t i = 0; i < 3; ++i) {
        g.at(zorn_index('u', i), zorn_index('v', i)) = -1;
        g.at(zorn_index('v', i), zorn_index('u', i)) = -1;
      }
      c.norm = BilinearForm::of(std::move(g));
      return c;
    }
    default:
      throw std::invalid_argument("split_composition: dim must be 1, 2, 4 or 8");
  }
}

namespace {

// Element of Mat_n(C) in coordinates: entry (i,j) is a C-vector.
struct CMat {
  std::size_t n, cd;
  std::vector<Vec> e;  // n*n entries
  CMat(std::size_t n_, std::size_t cd_) : n(n_), cd(cd_), e(n_ * n_, zero_vec(cd_)) {}
  Vec& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const Vec& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

void axpy_all(Vec& y, const Vec& x) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i];
}

CMat cmat_mul(const CompositionAlgebra& c, const CMat& x, const CMat& y) {
  CMat r(x.n, x.cd);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < x.n; ++k) {
        if (is_zero(x.at(i, k)) || is_zero(y.at(k, j))) continue;
        axpy_all(r.at(i, j), c.multiply(x.at(i, k), y.at(k, j)));
      }
  return r;
}

}  // namespace

JordanAlgebra hermitian_jordan(const CompositionAlgebra& c, std::size_t n) {
  const std::size_t cd = c.unit.size();
  if (n < 2) throw std::invalid_argument("hermitian_jordan: n >= 2 required");
  if (cd == 8 && n != 3)
    throw std::invalid_argument("hermitian_jordan: octonion entries require n = 3");
  // basis: diagonal idempotents, then for i<j one element per C-basis vector
  struct BasisElt {
    std::size_t i, j, a;  // a = cd means diagonal
  };
  std::vector<BasisElt> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back({i, i, cd});
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t a = 0; a < cd; ++a) {
        basis.push_back({i, j, a});
        labels.push_back("H" + std::to_string(i + 1) + std::to_string(j + 1) + "[" +
                         c.algebra->basis_labels()[a] + "]");
      }
  const std::size_t dim = basis.size();
  auto realize = [&](std::size_t b) {
    CMat m(n, cd);
    if (basis[b].a == cd) {
      m.at(basis[b].i, basis[b].i) = c.unit;
    } else {
      Vec v = unit_vec(cd, basis[b].a);
      m.at(basis[b].i, basis[b].j) = v;
      m.at(basis[b].j, basis[b].i) = c.conj(v);
    }
    return m;
  };
  auto coords = [&](const CMat& m) {
    Vec out(dim, Rational(0));
    std::size_t b = 0;
    // diagonal entries must be scalar multiples of the C-unit
    std::size_t u0 = 0;
    while (u0 < cd && c.unit[u0] == 0) ++u0;
    for (std::size_t i = 0; i < n; ++i, ++b) {
      Rational t = m.at(i, i)[u0] / c.unit[u0];
      if (sub(m.at(i, i), scale(t, c.unit)) != zero_vec(cd))
        throw std::logic_error("hermitian_jordan: diagonal entry not scalar");
      out[b] = t;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t a = 0; a < cd; ++a, ++b) out[b] = m.at(i, j)[a];
    return out;
  };
  std::vector<CMat> mats;
  for (std::size_t b = 0; b < dim; ++b) mats.push_back(realize(b));
  std::vector<Rational> sc(dim * dim * dim, Rational(0));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = x; y < dim; ++y) {
      CMat xy = cmat_mul(c, mats[x], mats[y]);
      CMat yx = cmat_mul(c, mats[y], mats[x]);
      CMat s(n, cd);
      for (std::size_t e = 0; e < n * n; ++e)
        s.e[e] = scale(rat(1, 2), add(xy.e[e], yx.e[e]));
      Vec co = coords(s);
      for (std::size_t k = 0; k < dim; ++k) {
        sc[(x * dim + y) * dim + k] = co[k];
        sc[(y * dim + x) * dim + k] = co[k];
      }
    }
  JordanAlgebra j;
  j.algebra = std::make_shared<StructureAlgebra>(dim, labels, std::move(sc));
  j.unit = zero_vec(dim);
  for (std::size_t i = 0; i < n; ++i) j.unit[i] = 1;
  j.generic_trace = zero_vec(dim);
  for (std::size_t i = 0; i < n; ++i) j.generic_trace[i] = 1;
  j.degree = n;
  return j;
}

JordanAlgebra spin_factor(std::size_t n) {
  if (n < 2) throw std::invalid_argument("spin_factor: n >= 2 required");
  const std::size_t dim = n + 1;
  std::vector<Rational> sc(dim * dim * dim, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    sc[(i * dim + j) * dim + k] = v;
  };
  set(0, 0, 0, Rational(1));
  for (std::size_t i = 1; i < dim; ++i) {
    set(0, i, i, Rational(1));
    set(i, 0, i, Rational(1));
    set(i, i, 0, Rational(1));  // b(e_i, e_i) = 1
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  JordanAlgebra j;
  j.algebra = std::make_shared<StructureAlgebra>(dim, labels, std::move(sc));
  j.unit = unit_vec(dim, 0);
  j.generic_trace = zero_vec(dim);
  j.generic_trace[0] = 2;
  j.degree = 2;
  return j;
}

Subspace traceless(const JordanAlgebra& j) {
  Matrix row(1, j.generic_trace.size());
  row.set_row(0, j.generic_trace);
  return Subspace::span(j.generic_trace.size(), kernel_basis(row));
}

Vec jordan_associator(const JordanAlgebra& j, const Vec& x, const Vec& y, const Vec& z) {
  return sub(j.multiply(j.multiply(x, y), z), j.multiply(x, j.multiply(y, z)));
}

Rational normalized_trace(const JordanAlgebra& j, const Vec& x, const Vec& y) {
  return j.trace_of(j.multiply(x, y)) / Rational(static_cast<long>(j.degree));
}

}  // namespace lyq
