#pragma once

#include <cstddef>
#include <vector>

#include "catmaj/rational.hpp"

namespace catmaj {

// Hard ceiling on joint outcome counts; d^n growth must fail loudly.
inline constexpr std::size_t kDefaultOutcomeCap = 10'000'000;

// Probability vector over a finite alphabet, exact weights.
// Invariants: weights nonnegative, sum exactly 1.
class Dist {
 public:
  explicit Dist(std::vector<Rational> weights);

  static Dist uniform(std::size_t d);
  static Dist point_mass(std::size_t d, std::size_t at);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<Rational>& weights() const { return weights_; }

  // Number of strictly positive weights.
  std::size_t rank() const;

  bool operator==(const Dist& other) const = default;

 private:
  std::vector<Rational> weights_;
};

// Distribution over a product alphabet. Multi-index layout is row-major
// with subsystem 1 most significant; this fixes the file format bit-exactly.
class JointDist {
 public:
  JointDist(std::vector<std::size_t> shape, std::vector<Rational> weights);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t subsystems() const { return shape_.size(); }
  std::size_t outcome_count() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<Rational>& weights() const { return weights_; }

  std::size_t rank() const;

  // Flat index <-> multi-index conversions.
  std::size_t flat_index(const std::vector<std::size_t>& multi) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  // Views the joint distribution as a plain distribution over flat outcomes.
  Dist flatten() const;

  bool operator==(const JointDist& other) const = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Rational> weights_;
};

// Floating-point mirror, used only where exactness is not claimed
// (entropy reporting). Nonnegative up to 2^-50, sums to 1 within 2^-40.
class FloatDist {
 public:
  explicit FloatDist(std::vector<double> weights);
  explicit FloatDist(const Dist& d);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// n-fold product distribution, shape (d,...,d). Throws resource_limit_error
// if d^n would exceed outcome_cap.
JointDist tensor_power(const Dist& p, unsigned n,
                       std::size_t outcome_cap = kDefaultOutcomeCap);

// Product of two distributions (p on the left / most significant).
JointDist tensor(const Dist& p, const Dist& q);
JointDist tensor(const JointDist& p, const JointDist& q);

// Sums out every subsystem not in `keep`; kept subsystems stay in
// ascending index order. Indices are 0-based.
JointDist marginal(const JointDist& j, const std::vector<std::size_t>& keep);

// Single-subsystem marginal as a Dist.
Dist marginal_dist(const JointDist& j, std::size_t subsystem);

// Relabels subsystems: slot i of the result is slot perm[i] of the input.
// Permuted slots must have equal alphabet sizes.
JointDist permute_subsystems(const JointDist& j,
                             const std::vector<std::size_t>& perm);

// True iff the weight multisets agree after zero-padding to common length.
bool is_permutation_equivalent(const Dist& p, const Dist& q);

// Half the L1 distance. Sizes must match.
Rational trace_distance(const Dist& p, const Dist& q);
Rational trace_distance(const JointDist& p, const JointDist& q);
Rational trace_distance(const std::vector<Rational>& p,
                        const std::vector<Rational>& q);

}  // namespace catmaj
