#include "catmaj/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "catmaj/errors.hpp"

namespace catmaj {

namespace {

void check_weights(const std::vector<Rational>& w) {
  if (w.empty()) throw std::invalid_argument("distribution needs >= 1 outcome");
  Rational total(0);
  for (const auto& x : w) {
    if (x < 0) throw std::invalid_argument("negative probability weight");
    total += x;
  }
  if (total != 1) {
    throw std::invalid_argument("weights sum to " + to_string(total) +
                                ", expected 1");
  }
}

}  // namespace

Dist::Dist(std::vector<Rational> weights) : weights_(std::move(weights)) {
  check_weights(weights_);
}

Dist Dist::uniform(std::size_t d) {
  if (d == 0) throw std::invalid_argument("uniform over empty alphabet");
  return Dist(std::vector<Rational>(d, make_rational(1, static_cast<long>(d))));
}

Dist Dist::point_mass(std::size_t d, std::size_t at) {
  if (at >= d) throw std::invalid_argument("point mass outside alphabet");
  std::vector<Rational> w(d, Rational(0));
  w[at] = 1;
  return Dist(std::move(w));
}

std::size_t Dist::rank() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(),
                    [](const Rational& x) { return x > 0; }));
}

JointDist::JointDist(std::vector<std::size_t> shape,
                     std::vector<Rational> weights)
    : shape_(std::move(shape)), weights_(std::move(weights)) {
  if (shape_.empty()) throw std::invalid_argument("joint needs >= 1 subsystem");
  std::size_t expect = 1;
  for (std::size_t s : shape_) {
    if (s == 0) throw std::invalid_argument("zero-size subsystem");
    if (expect > weights_.size()) break;  // avoids overflow; mismatch below
    expect *= s;
  }
  if (expect != weights_.size()) {
    throw std::invalid_argument("shape product does not match weight count");
  }
  check_weights(weights_);
}

std::size_t JointDist::rank() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(),
                    [](const Rational& x) { return x > 0; }));
}

std::size_t JointDist::flat_index(const std::vector<std::size_t>& multi) const {
  if (multi.size() != shape_.size()) {
    throw std::invalid_argument("multi-index arity mismatch");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (multi[i] >= shape_[i]) throw std::invalid_argument("index out of range");
    idx = idx * shape_[i] + multi[i];
  }
  return idx;
}

std::vector<std::size_t> JointDist::multi_index(std::size_t flat) const {
  if (flat >= weights_.size()) throw std::invalid_argument("flat index range");
  std::vector<std::size_t> multi(shape_.size());
  for (std::size_t i = shape_.size(); i-- > 0;) {
    multi[i] = flat % shape_[i];
    flat /= shape_[i];
  }
  return multi;
}

Dist JointDist::flatten() const { return Dist(weights_); }

FloatDist::FloatDist(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("empty float dist");
  const double neg_tol = std::ldexp(1.0, -50);
  const double sum_tol = std::ldexp(1.0, -40);
  double total = 0.0;
  for (double x : weights_) {
    if (x < -neg_tol) throw std::invalid_argument("negative float weight");
    total += x;
  }
  if (std::fabs(total - 1.0) > sum_tol) {
    throw std::invalid_argument("float weights do not sum to 1");
  }
}

FloatDist::FloatDist(const Dist& d) {
  weights_.reserve(d.size());
  for (const auto& w : d.weights()) weights_.push_back(to_double(w));
}

JointDist tensor_power(const Dist& p, unsigned n, std::size_t outcome_cap) {
  if (n < 1) throw std::invalid_argument("tensor_power needs n >= 1");
  const std::size_t d = p.size();
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (count > outcome_cap / d) {
      throw resource_limit_error("tensor_power outcome count exceeds cap");
    }
    count *= d;
  }
  std::vector<Rational> w;
  w.reserve(count);
  w.push_back(Rational(1));
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> next;
    next.reserve(w.size() * d);
    for (const auto& acc : w) {
      for (std::size_t a = 0; a < d; ++a) next.push_back(acc * p[a]);
    }
    w = std::move(next);
  }
  return JointDist(std::vector<std::size_t>(n, d), std::move(w));
}

JointDist tensor(const Dist& p, const Dist& q) {
  std::vector<Rational> w;
  w.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) w.push_back(p[i] * q[j]);
  }
  return JointDist({p.size(), q.size()}, std::move(w));
}

JointDist tensor(const JointDist& p, const JointDist& q) {
  std::vector<std::size_t> shape = p.shape();
  shape.insert(shape.end(), q.shape().begin(), q.shape().end());
  std::vector<Rational> w;
  w.reserve(p.outcome_count() * q.outcome_count());
  for (std::size_t i = 0; i < p.outcome_count(); ++i) {
    for (std::size_t j = 0; j < q.outcome_count(); ++j) w.push_back(p[i] * q[j]);
  }
  return JointDist(std::move(shape), std::move(w));
}

JointDist marginal(const JointDist& j, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginal keeps no subsystem");
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate subsystem index");
  }
  for (std::size_t k : sorted) {
    if (k >= j.subsystems()) throw std::invalid_argument("subsystem index range");
  }
  std::vector<std::size_t> out_shape;
  out_shape.reserve(sorted.size());
  for (std::size_t k : sorted) out_shape.push_back(j.shape()[k]);
  std::size_t out_count = 1;
  for (std::size_t s : out_shape) out_count *= s;
  std::vector<Rational> out(out_count, Rational(0));
  for (std::size_t flat = 0; flat < j.outcome_count(); ++flat) {
    const auto multi = j.multi_index(flat);
    std::size_t idx = 0;
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      idx = idx * out_shape[t] + multi[sorted[t]];
    }
    out[idx] += j[flat];
  }
  return JointDist(std::move(out_shape), std::move(out));
}

Dist marginal_dist(const JointDist& j, std::size_t subsystem) {
  return marginal(j, {subsystem}).flatten();
}

JointDist permute_subsystems(const JointDist& j,
                             const std::vector<std::size_t>& perm) {
  if (perm.size() != j.subsystems()) {
    throw std::invalid_argument("permutation arity mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) {
      throw std::invalid_argument("not a permutation of subsystem slots");
    }
    seen[p] = true;
  }
  std::vector<std::size_t> out_shape(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out_shape[i] = j.shape()[perm[i]];
  }
  // Slot i of the output reads slot perm[i] of the input; sizes of
  // relabeled slots must agree or marginals would change alphabet.
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (out_shape[i] != j.shape()[i]) {
      throw std::invalid_argument("permuted slots have mismatched alphabets");
    }
  }
  std::vector<Rational> out(j.outcome_count(), Rational(0));
  std::vector<std::size_t> dst_multi(perm.size());
  std::vector<std::size_t> src_multi(perm.size());
  for (std::size_t flat = 0; flat < j.outcome_count(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = perm.size(); i-- > 0;) {
      dst_multi[i] = rest % out_shape[i];
      rest /= out_shape[i];
    }
    for (std::size_t i = 0; i < perm.size(); ++i) {
      src_multi[perm[i]] = dst_multi[i];
    }
    out[flat] = j[j.flat_index(src_multi)];
  }
  return JointDist(std::move(out_shape), std::move(out));
}

bool is_permutation_equivalent(const Dist& p, const Dist& q) {
  std::vector<Rational> a = p.weights();
  std::vector<Rational> b = q.weights();
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Rational trace_distance(const std::vector<Rational>& p,
                        const std::vector<Rational>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("trace_distance size mismatch");
  }
  Rational total(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += abs(p[i] - q[i]);
  }
  return total / 2;
}

Rational trace_distance(const Dist& p, const Dist& q) {
  return trace_distance(p.weights(), q.weights());
}

Rational trace_distance(const JointDist& p, const JointDist& q) {
  return trace_distance(p.weights(), q.weights());
}

}  // namespace catmaj
