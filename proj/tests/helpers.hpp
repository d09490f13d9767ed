#pragma once

#include <vector>

#include "lyq/matrix.hpp"
#include "lyq/structure.hpp"

namespace lyq::testing {

inline Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// sl2 with Chevalley basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
inline StructureAlgebra sl2() {
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

/// Natural 2-dimensional sl2 module in the (e, h, f) basis.
inline Representation sl2_natural(const AlgebraPtr& a) {
  Representation r;
  r.algebra = a;
  r.module_dim = 2;
  r.action = {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, -1}}, Matrix{{0, 0}, {1, 0}}};
  return r;
}

/// Commutator algebra x*y - y*x of an associative (or any) algebra.
inline StructureAlgebra commutator_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.c(i, j, k) - a.c(j, i, k);
  return StructureAlgebra(n, a.basis_labels(), c);
}

/// Direct sum of Lie algebras (block structure constants).
inline StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        c[((a.dim() + i) * n + (a.dim() + j)) * n + (a.dim() + k)] = b.c(i, j, k);
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back("a." + l);
  for (const auto& l : b.basis_labels()) labels.push_back("b." + l);
  return StructureAlgebra(n, labels, c);
}

/// Direct sum of two representations of the same algebra.
inline Representation rep_sum(const Representation& r1, const Representation& r2) {
  Representation r;
  r.algebra = r1.algebra;
  r.module_dim = r1.module_dim + r2.module_dim;
  for (std::size_t i = 0; i < r1.action.size(); ++i) {
    Matrix m(r.module_dim, r.module_dim);
    for (std::size_t a = 0; a < r1.module_dim; ++a)
      for (std::size_t b = 0; b < r1.module_dim; ++b) m.at(a, b) = r1.action[i].at(a, b);
    for (std::size_t a = 0; a < r2.module_dim; ++a)
      for (std::size_t b = 0; b < r2.module_dim; ++b)
        m.at(r1.module_dim + a, r1.module_dim + b) = r2.action[i].at(a, b);
    r.action.push_back(std::move(m));
  }
  return r;
}

}  // namespace lyq::testing
