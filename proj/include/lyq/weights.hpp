#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lyq/matrix.hpp"

namespace lyq {

/// Thrown when a character would exceed the configured weight cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weights in fundamental-weight integer coordinates.
using Weight = std::vector<long long>;

/// Root system data in Bourbaki numbering. Simple-root coordinates are used
/// for roots, fundamental coordinates for weights; cartan(i, j) is the
/// pairing of alpha_j against the coroot of alpha_i.
class RootSystem {
 public:
  RootSystem(char type, std::size_t rank);

  char type() const { return type_; }
  std::size_t rank() const { return rank_; }
  const Matrix& cartan() const { return cartan_; }
  const Matrix& inverse_cartan() const { return inv_cartan_; }
  /// Positive roots in simple-root coordinates, by increasing height.
  const std::vector<std::vector<long long>>& positive_roots() const { return positive_; }
  /// Root-length symmetrizers d_i = (alpha_i, alpha_i)/2, normalized to
  /// minimum 1.
  const std::vector<long long>& symmetrizers() const { return d_; }
  Weight rho() const { return Weight(rank_, 1); }

  /// Fundamental coordinates of a vector given in simple-root coordinates.
  Weight to_fundamental(const std::vector<long long>& root_coords) const;
  /// (x, y) for x in fundamental coordinates and y in simple-root
  /// coordinates, with the Weyl-invariant form normalized by d.
  Rational pair_fund_root(const Weight& x, const std::vector<long long>& y) const;
  /// (x, x) for x in fundamental coordinates.
  Rational norm_fund(const Weight& x) const;
  /// Simple-root coordinates of x (fundamental coords); entries are rational
  /// in general.
  Vec to_root_coords(const Weight& x) const;

  bool is_dominant(const Weight& w) const;
  /// The dominant Weyl conjugate, by simple reflections.
  Weight dominant_conjugate(Weight w) const;
  /// Simple reflection s_i in fundamental coordinates.
  Weight reflect(const Weight& w, std::size_t i) const;
  /// True if lambda - mu is a nonnegative integer combination of simple
  /// roots (both in fundamental coordinates).
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;

 private:
  char type_;
  std::size_t rank_;
  Matrix cartan_, inv_cartan_;
  std::vector<long long> d_;
  std::vector<std::vector<long long>> positive_;
};

RootSystem root_system(char type, std::size_t rank);

/// Weyl dimension formula; exact. Throws std::invalid_argument unless
/// lambda is dominant.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Multiplicity function of a (virtual) character: full weight diagram.
struct WeightChar {
  char type = 0;
  std::size_t rank = 0;
  std::map<Weight, long long> mult;

  long long total() const;
  bool compatible(const RootSystem& rs) const { return type == rs.type() && rank == rs.rank(); }
};

inline constexpr std::size_t kDefaultWeightCap = 4000;

/// Full multiplicity function of the irreducible module V(lambda) by the
/// Freudenthal recursion. Throws CapExceeded past the cap.
WeightChar freudenthal_char(const RootSystem& rs, const Weight& lambda,
                            std::size_t cap = kDefaultWeightCap);

/// Greedy peeling of a genuine character into dominant highest weights
/// (sorted, with repeats). Throws std::domain_error if peeling goes
/// negative.
std::vector<Weight> decompose(const RootSystem& rs, WeightChar ch,
                              std::size_t cap = kDefaultWeightCap);

WeightChar tensor_char(const RootSystem& rs, const WeightChar& a, const WeightChar& b,
                       std::size_t cap = kDefaultWeightCap);
WeightChar lambda2_char(const RootSystem& rs, const WeightChar& a,
                        std::size_t cap = kDefaultWeightCap);
WeightChar sym2_char(const RootSystem& rs, const WeightChar& a,
                     std::size_t cap = kDefaultWeightCap);

std::vector<Weight> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                     const Weight& mu, std::size_t cap = kDefaultWeightCap);
std::vector<Weight> lambda2_decompose(const RootSystem& rs, const Weight& lambda,
                                      std::size_t cap = kDefaultWeightCap);
std::vector<Weight> sym2_decompose(const RootSystem& rs, const Weight& lambda,
                                   std::size_t cap = kDefaultWeightCap);

}  // namespace lyq
