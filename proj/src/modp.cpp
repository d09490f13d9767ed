#include "lyq/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lyq::modp {

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t PrimeSource::next() {
  if (last_ == 0) {
    last_ = kFirstPrime;
    return last_;
  }
  Integer z = last_ - 1;
  while (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) z -= 1;
  last_ = static_cast<uint32_t>(z.get_ui());
  return last_;
}

bool EchelonModP::insert(std::vector<uint32_t> v) {
  const uint32_t p = p_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    const std::size_t start = pivots_[r];
    const uint64_t f = p - c;  // v += f*row  ==  v -= c*row
    for (std::size_t j = start; j < ncols_; ++j) {
      if (row[j] == 0) continue;
      v[j] = static_cast<uint32_t>((v[j] + f * row[j]) % p);
    }
  }
  std::size_t piv = ncols_;
  for (std::size_t j = 0; j < ncols_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv == ncols_) return false;
  uint32_t inv = inv_mod(v[piv], p);
  for (std::size_t j = piv; j < ncols_; ++j)
    if (v[j]) v[j] = mul_mod(v[j], inv, p);
  // keep rows ordered by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

std::vector<uint32_t> EchelonModP::reduce(std::vector<uint32_t> v) const {
  const uint32_t p = p_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    const uint64_t f = p - c;
    for (std::size_t j = pivots_[r]; j < ncols_; ++j) {
      if (row[j] == 0) continue;
      v[j] = static_cast<uint32_t>((v[j] + f * row[j]) % p);
    }
  }
  return v;
}

uint32_t reduce_rational(const Rational& x, uint32_t p) {
  uint32_t num = static_cast<uint32_t>(mpz_fdiv_ui(x.get_num().get_mpz_t(), p));
  uint32_t den = static_cast<uint32_t>(mpz_fdiv_ui(x.get_den().get_mpz_t(), p));
  if (den == 0) throw std::domain_error("reduce_rational: prime divides denominator");
  return mul_mod(num, inv_mod(den, p), p);
}

std::vector<std::vector<uint32_t>> reduce_matrix(const Matrix& m, uint32_t p) {
  std::vector<std::vector<uint32_t>> out(m.rows(), std::vector<uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m.at(i, j);
      out[i][j] = (x == 0) ? 0u : reduce_rational(x, p);
    }
  return out;
}

namespace {

struct ModKernel {
  std::size_t rank;
  std::vector<std::size_t> pivots;     // pivot columns of the row space
  std::vector<std::size_t> free_cols;  // complement
  // kernel basis: one vector per free column, entries only at pivot columns
  // (the free-column block is the identity).
  std::vector<std::vector<uint32_t>> pivot_entries;  // [free][rank]
};

ModKernel kernel_mod_p(const Matrix& m, uint32_t p) {
  EchelonModP e(m.cols(), p);
  auto rows = reduce_matrix(m, p);
  for (auto& r : rows) e.insert(std::move(r));
  ModKernel k;
  k.rank = e.rank();
  k.pivots = e.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : k.pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) k.free_cols.push_back(j);
  // Back-substitute to full reduced form so each kernel vector reads off
  // directly: x[pivot_i] = -R[i][free_col].
  std::vector<std::vector<uint32_t>> rr = e.rows();
  for (std::size_t i = k.rank; i-- > 0;) {
    for (std::size_t r = 0; r < i; ++r) {
      uint32_t c = rr[r][k.pivots[i]];
      if (c == 0) continue;
      const uint64_t f = p - c;
      for (std::size_t j = k.pivots[i]; j < m.cols(); ++j)
        if (rr[i][j]) rr[r][j] = static_cast<uint32_t>((rr[r][j] + f * rr[i][j]) % p);
    }
  }
  for (auto j : k.free_cols) {
    std::vector<uint32_t> pe(k.rank);
    for (std::size_t i = 0; i < k.rank; ++i) pe[i] = rr[i][j] ? p - rr[i][j] : 0;
    k.pivot_entries.push_back(std::move(pe));
  }
  return k;
}

// Wang rational reconstruction: x = n/d mod M with |n|, d <= sqrt(M/2).
bool rat_reconstruct(const Integer& x, const Integer& M, Rational& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(M / 2).get_mpz_t());
  Integer r0 = M, r1 = x % M;
  if (r1 < 0) r1 += M;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  Integer d = t1 < 0 ? Integer(-t1) : t1;
  Integer n = t1 < 0 ? Integer(-r1) : r1;
  if (d > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1 && !(n == 0 && d == 1)) {
    n /= g;
    d /= g;
  }
  out = Rational(n) / Rational(d);
  return true;
}

}  // namespace

Matrix kernel_multimodular(const Matrix& m) {
  const std::size_t n = m.cols();
  constexpr int kMaxPrimes = 600;
  PrimeSource primes;
  uint32_t p0 = primes.next();
  ModKernel best = kernel_mod_p(m, p0);
  // Accumulated CRT residues of the pivot-column entries per free column.
  std::vector<std::vector<Integer>> acc(best.free_cols.size(),
                                        std::vector<Integer>(best.rank, 0));
  Integer modulus = 1;
  auto fold = [&](const ModKernel& k, uint32_t p) {
    Integer pz = static_cast<unsigned long>(p);
    Integer minv;
    if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw std::domain_error("kernel_multimodular: CRT failure");
    for (std::size_t f = 0; f < k.free_cols.size(); ++f)
      for (std::size_t i = 0; i < k.rank; ++i) {
        Integer diff = ((Integer(k.pivot_entries[f][i]) - acc[f][i]) % pz + pz) % pz;
        acc[f][i] += modulus * ((diff * minv) % pz);
      }
    modulus *= pz;
  };
  fold(best, p0);
  int folded = 1;
  for (int pi = 1; pi <= kMaxPrimes; ++pi) {
    // Reconstruction attempts on a doubling schedule.
    if ((folded & (folded - 1)) == 0) {
      bool ok = true;
      std::vector<Vec> basis;
      for (std::size_t f = 0; f < best.free_cols.size() && ok; ++f) {
        Vec v(n, Rational(0));
        v[best.free_cols[f]] = 1;
        for (std::size_t i = 0; i < best.rank && ok; ++i) {
          Rational x;
          if (!rat_reconstruct(acc[f][i], modulus, x))
            ok = false;
          else
            v[best.pivots[i]] = x;
        }
        if (ok) basis.push_back(std::move(v));
      }
      if (ok) {
        // cheap holdout check before the exact one
        try {
          uint32_t q = primes.next();
          auto mq = reduce_matrix(m, q);
          for (std::size_t f = 0; f < basis.size() && ok; ++f) {
            std::vector<uint32_t> vq(n);
            for (std::size_t j = 0; j < n; ++j)
              vq[j] = (basis[f][j] == 0) ? 0u : reduce_rational(basis[f][j], q);
            for (std::size_t i = 0; i < mq.size() && ok; ++i) {
              uint64_t s = 0;
              for (std::size_t j = 0; j < n; ++j) {
                s += static_cast<uint64_t>(mq[i][j]) * vq[j] % q;
                if (s >= (1ULL << 63)) s %= q;
              }
              if (s % q != 0) ok = false;
            }
          }
        } catch (const std::domain_error&) {
          // holdout prime hit a denominator; the exact check below decides
        }
      }
      if (ok) {
        // exact verification m * v = 0
        for (const auto& v : basis)
          if (!is_zero(m.apply(v))) {
            ok = false;
            break;
          }
      }
      if (ok) return Matrix::from_rows(basis, n);
    }
    uint32_t p = primes.next();
    ModKernel k = kernel_mod_p(m, p);
    if (k.rank > best.rank) {
      // Previous primes were unlucky: restart the lift at the higher rank.
      best = std::move(k);
      acc.assign(best.free_cols.size(), std::vector<Integer>(best.rank, 0));
      modulus = 1;
      fold(best, p);
      folded = 1;
    } else if (k.rank == best.rank && k.pivots == best.pivots) {
      fold(k, p);
      ++folded;
    }
    // ranks below best are unlucky primes; skip them
  }
  throw std::domain_error("kernel_multimodular: reconstruction failed");
}

}  // namespace lyq::modp
