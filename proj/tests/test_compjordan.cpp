#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "lyq/compjordan.hpp"

using namespace lyq;
using namespace lyq::testing;

namespace {

Vec assoc(const StructureAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return sub(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z)));
}

void check_composition_axioms(const CompositionAlgebra& c) {
  const std::size_t n = c.unit.size();
  auto qn = [&](const Vec& x) { return c.quadratic_norm(x); };
  // unit
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(c.multiply(c.unit, unit_vec(n, i)) == unit_vec(n, i));
    CHECK(c.multiply(unit_vec(n, i), c.unit) == unit_vec(n, i));
  }
  // multiplicativity n(xy) = n(x) n(y), polarized over basis pairs/triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(qn(c.multiply(unit_vec(n, i), unit_vec(n, j))) == qn(unit_vec(n, i)) * qn(unit_vec(n, j)));
      for (std::size_t k = 0; k < n; ++k) {
        // n(e_i e_j, e_i e_k) = n(e_i) N(e_j, e_k)
        Rational lhs = c.norm.eval(c.multiply(unit_vec(n, i), unit_vec(n, j)),
                                   c.multiply(unit_vec(n, i), unit_vec(n, k)));
        CHECK(lhs == qn(unit_vec(n, i)) * c.norm.eval(unit_vec(n, j), unit_vec(n, k)));
        Rational lhs2 = c.norm.eval(c.multiply(unit_vec(n, j), unit_vec(n, i)),
                                    c.multiply(unit_vec(n, k), unit_vec(n, i)));
        CHECK(lhs2 == qn(unit_vec(n, i)) * c.norm.eval(unit_vec(n, j), unit_vec(n, k)));
      }
    }
  // trace and conjugation: x + conj x = t(x) 1, x conj(x) = n(x) 1
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = unit_vec(n, i);
    CHECK(add(x, c.conj(x)) == scale(c.trace(x), c.unit));
    CHECK(c.multiply(x, c.conj(x)) == scale(qn(x), c.unit));
    for (std::size_t j = 0; j < n; ++j) {
      Vec y = add(unit_vec(n, i), unit_vec(n, j));
      CHECK(c.multiply(y, c.conj(y)) == scale(qn(y), c.unit));
      // conjugation is an anti-automorphism
      CHECK(c.conj(c.multiply(unit_vec(n, i), unit_vec(n, j))) ==
            c.multiply(c.conj(unit_vec(n, j)), c.conj(unit_vec(n, i))));
    }
  }
  CHECK(c.norm.nondegenerate());
}

void check_jordan_axioms(const JordanAlgebra& j, bool full_linearized) {
  const std::size_t n = j.unit.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(j.multiply(j.unit, unit_vec(n, i)) == unit_vec(n, i));
    for (std::size_t k = i; k < n; ++k)
      CHECK(j.multiply(unit_vec(n, i), unit_vec(n, k)) ==
            j.multiply(unit_vec(n, k), unit_vec(n, i)));
  }
  // Jordan identity on basis pairs: (x^2 (x y)) = (x (x^2 y))
  for (std::size_t x = 0; x < n; ++x) {
    Vec ex = unit_vec(n, x);
    Vec x2 = j.multiply(ex, ex);
    for (std::size_t y = 0; y < n; ++y) {
      Vec ey = unit_vec(n, y);
      CHECK(j.multiply(x2, j.multiply(ex, ey)) == j.multiply(ex, j.multiply(x2, ey)));
    }
  }
  if (full_linearized) {
    // full linearization of (x^2, y, x) = 0: complete in characteristic 0
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u; v < n; ++v)
        for (std::size_t w = v; w < n; ++w)
          for (std::size_t y = 0; y < n; ++y) {
            Vec uv = j.multiply(unit_vec(n, u), unit_vec(n, v));
            Vec vw = j.multiply(unit_vec(n, v), unit_vec(n, w));
            Vec wu = j.multiply(unit_vec(n, w), unit_vec(n, u));
            Vec s = assoc(*j.algebra, uv, unit_vec(n, y), unit_vec(n, w));
            axpy(s, Rational(1), assoc(*j.algebra, vw, unit_vec(n, y), unit_vec(n, u)));
            axpy(s, Rational(1), assoc(*j.algebra, wu, unit_vec(n, y), unit_vec(n, v)));
            CHECK(is_zero(s));
          }
  }
}

}  // namespace

TEST_CASE("split composition algebras") {
  auto k1 = split_composition(1);
  CHECK(k1.conjugation == Matrix::identity(1));
  CHECK(k1.quadratic_norm(V({3})) == rat(9));
  check_composition_axioms(k1);

  auto k2 = split_composition(2);
  check_composition_axioms(k2);

  auto m2 = split_composition(4);
  check_composition_axioms(m2);
  // norm is the determinant, trace the matrix trace
  Vec x = V({2, 3, 5, 7});  // [[2,3],[5,7]]
  CHECK(m2.quadratic_norm(x) == rat(-1));
  CHECK(m2.trace(x) == rat(9));

  auto oct = split_composition(8);
  check_composition_axioms(oct);
  CHECK_THROWS_AS(split_composition(3), std::invalid_argument);
}

TEST_CASE("octonions are alternative but not associative") {
  auto c = split_composition(8);
  const auto& a = *c.algebra;
  bool found_nonassoc = false;
  std::array<std::size_t, 3> witness{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      // (x,x,y) = 0 and (y,x,x) = 0 on basis pairs
      CHECK(is_zero(assoc(a, unit_vec(8, i), unit_vec(8, i), unit_vec(8, j))));
      CHECK(is_zero(assoc(a, unit_vec(8, j), unit_vec(8, i), unit_vec(8, i))));
      // and for sums, covering the polarized identity
      Vec s = add(unit_vec(8, i), unit_vec(8, j));
      for (std::size_t k = 0; k < 8 && !found_nonassoc; ++k) {
        CHECK(is_zero(assoc(a, s, s, unit_vec(8, k))));
        if (!is_zero(assoc(a, unit_vec(8, i), unit_vec(8, j), unit_vec(8, k)))) {
          found_nonassoc = true;
          witness = {i, j, k};
        }
      }
    }
  CHECK(found_nonassoc);
  CHECK(!is_zero(assoc(a, unit_vec(8, witness[0]), unit_vec(8, witness[1]), unit_vec(8, witness[2]))));
}

TEST_CASE("hermitian jordan algebras") {
  auto k1 = split_composition(1);
  auto h2k = hermitian_jordan(k1, 2);
  CHECK(h2k.unit.size() == 3);
  CHECK(h2k.degree == 2);
  check_jordan_axioms(h2k, true);

  auto h3k = hermitian_jordan(k1, 3);
  CHECK(h3k.unit.size() == 6);
  check_jordan_axioms(h3k, true);

  auto h3kk = hermitian_jordan(split_composition(2), 3);
  CHECK(h3kk.unit.size() == 9);
  check_jordan_axioms(h3kk, true);

  auto oct = split_composition(8);
  auto albert = hermitian_jordan(oct, 3);
  CHECK(albert.unit.size() == 27);  // 3 diagonal + 3 x 8 off-diagonal
  check_jordan_axioms(albert, false);
  CHECK_THROWS_AS(hermitian_jordan(oct, 2), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_jordan(oct, 4), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_jordan(k1, 1), std::invalid_argument);
}

TEST_CASE("albert algebra linearized jordan identity on sampled quadruples") {
  auto albert = hermitian_jordan(split_composition(8), 3);
  const std::size_t n = 27;
  uint64_t state = 12345;
  auto rnd = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 5) - 2;
  };
  for (int t = 0; t < 12; ++t) {
    Vec u(n), v(n), w(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rnd();
      v[i] = rnd();
      w[i] = rnd();
      y[i] = rnd();
    }
    Vec uv = albert.multiply(u, v), vw = albert.multiply(v, w), wu = albert.multiply(w, u);
    Vec s = assoc(*albert.algebra, uv, y, w);
    axpy(s, Rational(1), assoc(*albert.algebra, vw, y, u));
    axpy(s, Rational(1), assoc(*albert.algebra, wu, y, v));
    CHECK(is_zero(s));
  }
}

TEST_CASE("spin factor") {
  auto j = spin_factor(2);
  // (0, e1) * (0, e1) = (1, 0)
  CHECK(j.multiply(V({0, 1, 0}), V({0, 1, 0})) == V({1, 0, 0}));
  check_jordan_axioms(j, true);
  CHECK(j.degree == 2);
  // traceless part is k^n
  Subspace t = traceless(j);
  CHECK(t.dim() == 2);
  CHECK(t.contains(V({0, 1, 0})));
  CHECK(t.contains(V({0, 0, 1})));
  CHECK_THROWS_AS(spin_factor(1), std::invalid_argument);
}

TEST_CASE("traceless dimensions") {
  auto k1 = split_composition(1);
  CHECK(traceless(hermitian_jordan(k1, 3)).dim() == 5);
  CHECK(traceless(hermitian_jordan(split_composition(8), 3)).dim() == 26);
  // degree-1 Jordan algebra k: traceless is zero
  JordanAlgebra scalars;
  scalars.algebra = std::make_shared<StructureAlgebra>(1, std::vector<Rational>{Rational(1)});
  scalars.unit = V({1});
  scalars.generic_trace = V({1});
  scalars.degree = 1;
  CHECK(traceless(scalars).dim() == 0);
}

TEST_CASE("jordan associator") {
  auto h3k = hermitian_jordan(split_composition(1), 3);
  const std::size_t n = 6;
  // unit associates with everything
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(is_zero(jordan_associator(h3k, h3k.unit, unit_vec(n, i), unit_vec(n, j))));

  // concrete nonzero associator on off-diagonal units, checked against a
  // direct 3x3 symmetric-matrix expansion
  // basis: E11 E22 E33 H12 H13 H23
  auto sym = [&](const Vec& v) {
    Matrix m(3, 3);
    m.at(0, 0) = v[0];
    m.at(1, 1) = v[1];
    m.at(2, 2) = v[2];
    m.at(0, 1) = m.at(1, 0) = v[3];
    m.at(0, 2) = m.at(2, 0) = v[4];
    m.at(1, 2) = m.at(2, 1) = v[5];
    return m;
  };
  auto unsym = [&](const Matrix& m) {
    return Vec{m.at(0, 0), m.at(1, 1), m.at(2, 2), m.at(0, 1), m.at(0, 2), m.at(1, 2)};
  };
  auto bullet = [&](const Matrix& x, const Matrix& y) { return (x * y + y * x) * rat(1, 2); };
  Vec h12 = unit_vec(n, 3), h13 = unit_vec(n, 4), h23 = unit_vec(n, 5);
  Vec got = jordan_associator(h3k, h12, h13, h23);
  Matrix expect =
      bullet(bullet(sym(h12), sym(h13)), sym(h23)) - bullet(sym(h12), bullet(sym(h13), sym(h23)));
  CHECK(got == unsym(expect));
  CHECK(!is_zero(got));
}

TEST_CASE("normalized trace") {
  auto h3k = hermitian_jordan(split_composition(1), 3);
  CHECK(normalized_trace(h3k, h3k.unit, h3k.unit) == rat(1));
  CHECK(normalized_trace(h3k, unit_vec(6, 0), unit_vec(6, 0)) == rat(1, 3));  // t(E11 E11)
  auto oct = split_composition(8);
  // normalized composition trace of trace-zero octonions is zero
  Vec x = sub(unit_vec(8, 0), unit_vec(8, 1));  // e1 - e2 is traceless
  CHECK(oct.normalized_trace(x) == rat(0));
  CHECK(oct.normalized_trace(oct.unit) == rat(1));
}

TEST_CASE("traceless part is closed under the associator") {
  std::vector<JordanAlgebra> algebras;
  algebras.push_back(hermitian_jordan(split_composition(1), 3));
  algebras.push_back(spin_factor(3));
  for (const auto& j : algebras) {
    Subspace t = traceless(j);
    for (std::size_t a = 0; a < t.dim(); ++a)
      for (std::size_t b = 0; b < t.dim(); ++b)
        for (std::size_t c = 0; c < t.dim(); ++c) {
          Vec s = jordan_associator(j, t.basis_vector(a), t.basis_vector(b), t.basis_vector(c));
          CHECK(t.contains(s));
        }
  }
}
