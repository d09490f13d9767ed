#include "lyq/weights.hpp"

#include <algorithm>
#include <set>

namespace lyq {

namespace {

Matrix cartan_matrix(char type, std::size_t n) {
  auto chain = [](Matrix& c, std::size_t i, std::size_t j) {
    c.at(i, j) = -1;
    c.at(j, i) = -1;
  };
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c.at(i, i) = 2;
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) chain(c, i, i + 1);
      return c;
    case 'B':
      if (n < 2) break;
      for (std::size_t i = 0; i + 1 < n; ++i) chain(c, i, i + 1);
      c.at(n - 1, n - 2) = -2;  // alpha_{n-1} long against the short coroot
      return c;
    case 'C':
      if (n < 2) break;
      for (std::size_t i = 0; i + 1 < n; ++i) chain(c, i, i + 1);
      c.at(n - 2, n - 1) = -2;
      return c;
    case 'D':
      if (n < 3) break;
      for (std::size_t i = 0; i + 2 < n; ++i) chain(c, i, i + 1);
      chain(c, n - 3, n - 1);
      return c;
    case 'E': {
      if (n < 6 || n > 8) break;
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
      chain(c, 0, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) chain(c, i, i + 1);
      chain(c, 1, 3);
      return c;
    }
    case 'F': {
      if (n != 4) break;
      chain(c, 0, 1);
      chain(c, 1, 2);
      chain(c, 2, 3);
      c.at(2, 1) = -2;  // alpha_2 long against the short coroot alpha_3
      return c;
    }
    case 'G': {
      if (n != 2) break;
      c.at(0, 1) = -3;  // alpha_2 long against the short coroot alpha_1
      c.at(1, 0) = -1;
      return c;
    }
    default: break;
  }
  throw std::invalid_argument("root_system: invalid (type, rank)");
}

}  // namespace

RootSystem::RootSystem(char type, std::size_t rank) : type_(type), rank_(rank) {
  cartan_ = cartan_matrix(type, rank);
  inv_cartan_ = inverse(cartan_);
  // symmetrizers from d_j / d_i = C[i][j] / C[j][i] on diagram edges
  std::vector<Rational> dr(rank, Rational(0));
  dr[0] = 1;
  std::vector<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < rank; ++j) {
      if (i == j || cartan_.at(i, j) == 0 || dr[j] != 0) continue;
      dr[j] = dr[i] * cartan_.at(i, j) / cartan_.at(j, i);
      queue.push_back(j);
    }
  }
  Rational mn = dr[0];
  for (const auto& x : dr) mn = std::min(mn, x, [](const Rational& a, const Rational& b) { return a < b; });
  d_.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    Rational v = dr[i] / mn;
    if (!is_integer(v)) throw std::logic_error("root_system: non-integral symmetrizer");
    d_[i] = to_int64(v);
  }
  // positive roots by closure over root strings
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> level;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long long> a(rank, 0);
    a[i] = 1;
    roots.insert(a);
    level.push_back(a);
    positive_.push_back(a);
  }
  while (!level.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < rank; ++i) {
        // p = largest k with beta - k alpha_i a root; beta + alpha_i is a
        // root iff p - <beta, alpha_i^vee> >= 1
        long long m = 0;
        for (std::size_t j = 0; j < rank; ++j) m += to_int64(cartan_.at(i, j)) * beta[j];
        long long p = 0;
        std::vector<long long> down = beta;
        while (true) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(), [](long long x) { return x <= 0; });
          if (!neg && roots.count(down) == 0) break;
          if (neg) {
            // only simple roots have a single positive entry; going negative
            // means we left the positive cone
            bool simple_neg = std::count_if(down.begin(), down.end(),
                                            [](long long x) { return x != 0; }) == 0;
            if (!simple_neg) break;
          }
          if (roots.count(down) == 0) break;
          ++p;
        }
        if (p - m >= 1) {
          std::vector<long long> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) {
            next.push_back(up);
            positive_.push_back(up);
          }
        }
      }
    level = std::move(next);
  }
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const std::vector<long long>& a, const std::vector<long long>& b) {
                     long long ha = 0, hb = 0;
                     for (auto x : a) ha += x;
                     for (auto x : b) hb += x;
                     if (ha != hb) return ha < hb;
                     return a < b;
                   });
}

RootSystem root_system(char type, std::size_t rank) { return RootSystem(type, rank); }

Weight RootSystem::to_fundamental(const std::vector<long long>& c) const {
  Weight m(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m[i] += to_int64(cartan_.at(i, j)) * c[j];
  return m;
}

Rational RootSystem::pair_fund_root(const Weight& x, const std::vector<long long>& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (y[i] != 0 && x[i] != 0)
      s += Rational(static_cast<long>(x[i])) * static_cast<long>(y[i]) * static_cast<long>(d_[i]);
  return s;
}

Vec RootSystem::to_root_coords(const Weight& x) const {
  Vec xf(rank_);
  for (std::size_t i = 0; i < rank_; ++i) xf[i] = static_cast<long>(x[i]);
  // m = C c  =>  c = C^{-1} m
  return inv_cartan_.apply(xf);
}

Rational RootSystem::norm_fund(const Weight& x) const {
  // (x, x) = sum_i c_i(x) d_i m_i(x)
  Vec c = to_root_coords(x);
  Rational s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    s += c[i] * Rational(static_cast<long>(x[i])) * static_cast<long>(d_[i]);
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](long long m) { return m >= 0; });
}

Weight RootSystem::reflect(const Weight& w, std::size_t i) const {
  // s_i(w) = w - <w, alpha_i^vee> alpha_i; alpha_i has fundamental
  // coordinates given by column i of the Cartan matrix
  Weight r = w;
  long long m = w[i];
  for (std::size_t j = 0; j < rank_; ++j) r[j] -= m * to_int64(cartan_.at(j, i));
  return r;
}

Weight RootSystem::dominant_conjugate(Weight w) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank_; ++i)
      if (w[i] < 0) {
        w = reflect(w, i);
        moved = true;
      }
  }
  return w;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  Weight diff(rank_);
  for (std::size_t i = 0; i < rank_; ++i) diff[i] = lambda[i] - mu[i];
  Vec c = to_root_coords(diff);
  for (const auto& x : c)
    if (x < 0 || !is_integer(x)) return false;
  return true;
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank() || !rs.is_dominant(lambda))
    throw std::invalid_argument("weyl_dim: weight not dominant");
  Weight lr(lambda);
  for (auto& x : lr) x += 1;  // lambda + rho
  Rational prod = 1;
  for (const auto& alpha : rs.positive_roots())
    prod *= rs.pair_fund_root(lr, alpha) / rs.pair_fund_root(rs.rho(), alpha);
  if (!is_integer(prod)) throw std::logic_error("weyl_dim: non-integral result");
  return prod.get_num();
}

long long WeightChar::total() const {
  long long t = 0;
  for (const auto& [w, m] : mult) t += m;
  return t;
}

namespace {

// All weights of V(lambda): BFS downward by simple-root subtraction, using
// the saturation criterion (dominant conjugate below lambda).
std::set<Weight> weight_diagram(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
  std::set<Weight> seen;
  std::vector<Weight> queue{lambda};
  seen.insert(lambda);
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight child = w;
      for (std::size_t j = 0; j < rs.rank(); ++j) child[j] -= to_int64(rs.cartan().at(j, i));
      if (seen.count(child)) continue;
      if (!rs.dominance_leq(rs.dominant_conjugate(child), lambda)) continue;
      if (seen.size() >= cap) throw CapExceeded("freudenthal_char: weight cap exceeded");
      seen.insert(child);
      queue.push_back(child);
    }
  }
  return seen;
}

}  // namespace

WeightChar freudenthal_char(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
  if (lambda.size() != rs.rank() || !rs.is_dominant(lambda))
    throw std::invalid_argument("freudenthal_char: weight not dominant");
  std::set<Weight> diagram = weight_diagram(rs, lambda, cap);
  // dominant weights, ordered by decreasing height of lambda - mu
  std::vector<Weight> dominant;
  for (const auto& w : diagram)
    if (rs.is_dominant(w)) dominant.push_back(w);
  auto height = [&](const Weight& w) {
    Vec c = rs.to_root_coords(w);
    Rational h = 0;
    for (const auto& x : c) h += x;
    return h;
  };
  std::stable_sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  std::map<Weight, long long> dmult;
  Weight lr(lambda);
  for (auto& x : lr) x += 1;
  Rational norm_lr = rs.norm_fund(lr);
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      dmult[mu] = 1;
      continue;
    }
    Weight mr(mu);
    for (auto& x : mr) x += 1;
    Rational pref = norm_lr - rs.norm_fund(mr);
    if (pref == 0) {
      dmult[mu] = 0;
      continue;
    }
    Rational sum = 0;
    for (const auto& alpha : rs.positive_roots()) {
      Weight af = rs.to_fundamental(alpha);
      Weight nu = mu;
      for (long long k = 1;; ++k) {
        for (std::size_t j = 0; j < rs.rank(); ++j) nu[j] += af[j];
        if (!diagram.count(nu)) break;
        auto it = dmult.find(rs.dominant_conjugate(nu));
        long long m = it == dmult.end() ? 0 : it->second;
        if (m != 0) sum += Rational(static_cast<long>(m)) * rs.pair_fund_root(nu, alpha);
      }
    }
    Rational v = 2 * sum / pref;
    if (!is_integer(v) || v < 0) throw std::logic_error("freudenthal_char: bad multiplicity");
    dmult[mu] = to_int64(v);
  }
  WeightChar ch;
  ch.type = rs.type();
  ch.rank = rs.rank();
  for (const auto& w : diagram) ch.mult[w] = dmult[rs.dominant_conjugate(w)];
  return ch;
}

namespace {

std::vector<Weight> maximal_dominant(const RootSystem& rs, const WeightChar& ch) {
  std::vector<Weight> doms;
  for (const auto& [w, m] : ch.mult)
    if (m != 0 && rs.is_dominant(w)) doms.push_back(w);
  std::vector<Weight> maxi;
  for (const auto& w : doms) {
    bool below = false;
    for (const auto& v : doms)
      if (v != w && rs.dominance_leq(w, v)) {
        below = true;
        break;
      }
    if (!below) maxi.push_back(w);
  }
  return maxi;
}

}  // namespace

std::vector<Weight> decompose(const RootSystem& rs, WeightChar ch, std::size_t cap) {
  if (!ch.compatible(rs)) throw std::invalid_argument("decompose: root system mismatch");
  std::vector<Weight> parts;
  while (true) {
    for (auto it = ch.mult.begin(); it != ch.mult.end();) {
      if (it->second == 0)
        it = ch.mult.erase(it);
      else
        ++it;
    }
    if (ch.mult.empty()) break;
    auto maxi = maximal_dominant(rs, ch);
    if (maxi.empty()) throw std::domain_error("decompose: no dominant weight left");
    Weight mu = *std::max_element(maxi.begin(), maxi.end());
    long long mult = ch.mult.at(mu);
    if (mult < 0) throw std::domain_error("decompose: negative multiplicity");
    WeightChar part = freudenthal_char(rs, mu, cap);
    for (const auto& [w, m] : part.mult) {
      long long& entry = ch.mult[w];
      entry -= mult * m;
      if (entry < 0) throw std::domain_error("decompose: peeling went negative");
    }
    for (long long i = 0; i < mult; ++i) parts.push_back(mu);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

WeightChar tensor_char(const RootSystem& rs, const WeightChar& a, const WeightChar& b,
                       std::size_t cap) {
  if (!a.compatible(rs) || !b.compatible(rs))
    throw std::invalid_argument("tensor_char: root system mismatch");
  WeightChar out;
  out.type = rs.type();
  out.rank = rs.rank();
  for (const auto& [w1, m1] : a.mult)
    for (const auto& [w2, m2] : b.mult) {
      Weight s(w1);
      for (std::size_t i = 0; i < rs.rank(); ++i) s[i] += w2[i];
      out.mult[s] += m1 * m2;
      if (out.mult.size() > cap) throw CapExceeded("tensor_char: weight cap exceeded");
    }
  return out;
}

namespace {

WeightChar square_char(const RootSystem& rs, const WeightChar& a, bool symmetric,
                       std::size_t cap) {
  WeightChar sq = tensor_char(rs, a, a, cap);
  // (f(q)^2 +/- f(q^2)) / 2
  for (auto& [w, m] : sq.mult) {
    Weight half(w);
    bool even = true;
    for (auto& x : half) {
      if (x % 2 != 0) {
        even = false;
        break;
      }
      x /= 2;
    }
    long long diag = 0;
    if (even) {
      auto it = a.mult.find(half);
      if (it != a.mult.end()) diag = it->second;
    }
    long long v = symmetric ? m + diag : m - diag;
    if (v % 2 != 0) throw std::logic_error("square_char: odd count");
    m = v / 2;
  }
  return sq;
}

}  // namespace

WeightChar lambda2_char(const RootSystem& rs, const WeightChar& a, std::size_t cap) {
  return square_char(rs, a, false, cap);
}

WeightChar sym2_char(const RootSystem& rs, const WeightChar& a, std::size_t cap) {
  return square_char(rs, a, true, cap);
}

std::vector<Weight> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                     std::size_t cap) {
  return decompose(rs, tensor_char(rs, freudenthal_char(rs, lambda, cap),
                                   freudenthal_char(rs, mu, cap), cap), cap);
}

std::vector<Weight> lambda2_decompose(const RootSystem& rs, const Weight& lambda,
                                      std::size_t cap) {
  return decompose(rs, lambda2_char(rs, freudenthal_char(rs, lambda, cap), cap), cap);
}

std::vector<Weight> sym2_decompose(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
  return decompose(rs, sym2_char(rs, freudenthal_char(rs, lambda, cap), cap), cap);
}

}  // namespace lyq
