#pragma once

#include <cstdint>
#include <vector>

#include "lyq/matrix.hpp"

namespace lyq::modp {

/// Deterministic stream of 31-bit primes (descending from 2^31-1) for
/// modular elimination; products of two residues fit in uint64.
class PrimeSource {
 public:
  uint32_t next();

 private:
  uint32_t last_ = 0;
};

/// Default prime used by single-prime certificates.
inline constexpr uint32_t kFirstPrime = 2147483647u;

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p);
inline uint32_t inv_mod(uint32_t a, uint32_t p) { return pow_mod(a, p - 2, p); }

/// Row-echelon accumulator over F_p. Rows are kept normalized (pivot 1) and
/// back-substituted lazily on insert only against earlier pivots.
class EchelonModP {
 public:
  EchelonModP(std::size_t ncols, uint32_t p) : ncols_(ncols), p_(p) {}

  /// Reduces v against the current rows; if a new pivot survives, stores it
  /// and returns true. v is consumed.
  bool insert(std::vector<uint32_t> v);

  /// Reduces v against current rows without inserting; returns the residue.
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  uint32_t prime() const { return p_; }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ncols_;
  uint32_t p_;
  std::vector<std::vector<uint32_t>> rows_;   // sorted by pivot column
  std::vector<std::size_t> pivots_;           // pivot column per row
};

/// Reduces a rational matrix mod p after clearing denominators row by row
/// (row scaling does not change the row space or the kernel). Throws
/// std::domain_error if p divides a denominator.
std::vector<std::vector<uint32_t>> reduce_matrix(const Matrix& m, uint32_t p);

uint32_t reduce_rational(const Rational& x, uint32_t p);

/// Exact kernel basis of a rational matrix computed by modular elimination,
/// CRT lifting and rational reconstruction, then certified: every returned
/// vector is verified exactly against m, and the count is certified by a
/// mod-p rank bound. Rows of the result are a basis (not necessarily rref).
Matrix kernel_multimodular(const Matrix& m);

}  // namespace lyq::modp
