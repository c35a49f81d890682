#include "catmaj/majorization.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "catmaj/errors.hpp"

namespace catmaj {

namespace {

std::pair<std::vector<Rational>, std::vector<Rational>> padded_pair(
    const std::vector<Rational>& p, const std::vector<Rational>& q) {
  std::vector<Rational> a = p;
  std::vector<Rational> b = q;
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
  return {std::move(a), std::move(b)};
}

}  // namespace

std::vector<std::size_t> sort_permutation_desc(const std::vector<Rational>& v) {
  std::vector<std::size_t> perm(v.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    const int c = cmp(v[i], v[j]);
    if (c != 0) return c > 0;
    return i < j;
  });
  return perm;
}

bool majorizes(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  auto [a, b] = padded_pair(p, q);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  Rational sa(0), sb(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (i + 1 < a.size() && sa < sb) return false;
  }
  return sa == sb;
}

bool majorizes(const Dist& p, const Dist& q) {
  return majorizes(p.weights(), q.weights());
}

bool majorizes(const JointDist& p, const JointDist& q) {
  return majorizes(p.weights(), q.weights());
}

MajorizationWitness build_witness(const std::vector<Rational>& p,
                                  const std::vector<Rational>& q) {
  if (!majorizes(p, q)) {
    throw precondition_error("build_witness: source does not majorize target");
  }
  auto [src, tgt] = padded_pair(p, q);
  MajorizationWitness w;
  w.source = src;
  w.target = tgt;

  const auto src_perm = sort_permutation_desc(src);
  const auto tgt_perm = sort_permutation_desc(tgt);
  const std::size_t n = src.size();
  std::vector<Rational> x(n), y(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = src[src_perm[r]];
    y[r] = tgt[tgt_perm[r]];
  }
  w.final_permutation = tgt_perm;

  // Muirhead step: j = largest index with x_j > y_j, k = first index
  // past j with x_k < y_k; move delta between them. Each step matches at
  // least one more coordinate and keeps x descending and majorizing y.
  for (;;) {
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (x[i] > y[i]) {
        j = i;
        break;
      }
    }
    if (j == n) break;  // x == y
    std::size_t k = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (x[i] < y[i]) {
        k = i;
        break;
      }
    }
    if (k == n) throw std::logic_error("witness construction lost mass");
    const Rational delta = std::min(x[j] - y[j], y[k] - x[k]);
    const Rational t = delta / (x[j] - x[k]);
    w.steps.push_back({j, k, t});
    const Rational moved = delta;
    x[j] -= moved;
    x[k] += moved;
    if (w.steps.size() > n) {
      throw std::logic_error("witness chain exceeded N steps");
    }
  }
  return w;
}

std::vector<Rational> apply_doubly_stochastic_mix(
    const std::vector<TTransformStep>& steps, std::vector<Rational> v) {
  for (const auto& s : steps) {
    if (s.a >= v.size() || s.b >= v.size() || s.a == s.b) {
      throw std::invalid_argument("T-transform index out of range");
    }
    if (s.t < 0 || s.t > 1) {
      throw std::invalid_argument("T-transform weight outside [0,1]");
    }
    const Rational va = v[s.a];
    const Rational vb = v[s.b];
    v[s.a] = (1 - s.t) * va + s.t * vb;
    v[s.b] = s.t * va + (1 - s.t) * vb;
  }
  return v;
}

bool verify_witness(const MajorizationWitness& w) {
  if (w.source.size() != w.target.size()) return false;
  const std::size_t n = w.source.size();
  if (w.final_permutation.size() != n) return false;
  if (w.steps.size() > (n == 0 ? 0 : n - 1)) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : w.final_permutation) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  std::vector<Rational> sorted_src = w.source;
  std::sort(sorted_src.begin(), sorted_src.end(), std::greater<>());
  std::vector<Rational> out;
  try {
    out = apply_doubly_stochastic_mix(w.steps, std::move(sorted_src));
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (w.target[w.final_permutation[r]] != out[r]) return false;
  }
  return true;
}

namespace {

template <typename Float>
Float rational_to_float(const Rational& w) {
  if constexpr (std::is_same_v<Float, double>) {
    return to_double(w);
  } else {
    return Float(w.get_num().get_str()) / Float(w.get_den().get_str());
  }
}

template <typename Float>
int entropy_sign_at_precision(const std::vector<Rational>& p,
                              const std::vector<Rational>& q) {
  // Computes sign of sum_i p_i log2 p_i - q_i log2 q_i (== H(q) - H(p)).
  using std::fabs;
  using std::log;
  const Float log2e = log(Float(2));
  Float acc(0);
  Float magnitude(0);
  auto add_terms = [&](const std::vector<Rational>& v, int sign) {
    for (const auto& w : v) {
      if (w == 0) continue;
      Float x = rational_to_float<Float>(w);
      Float term = x * log(x) / log2e;
      acc += sign * term;
      magnitude += fabs(term);
    }
  };
  add_terms(p, +1);
  add_terms(q, -1);
  const Float tol =
      magnitude * std::numeric_limits<Float>::epsilon() * 1024 +
      std::numeric_limits<Float>::min();
  if (acc > tol) return +1;
  if (acc < -tol) return -1;
  return 0;  // undecided at this precision
}

}  // namespace

int entropy_difference_sign(const std::vector<Rational>& p,
                            const std::vector<Rational>& q) {
  auto [a, b] = padded_pair(p, q);
  {
    auto sa = a;
    auto sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa == sb) return 0;  // equal multisets: difference is exactly zero
  }
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_bin_float_50;
  using f250 = boost::multiprecision::number<
      boost::multiprecision::cpp_bin_float<250>>;
  if (int s = entropy_sign_at_precision<double>(a, b)) return s;
  if (int s = entropy_sign_at_precision<cpp_bin_float_50>(a, b)) return s;
  if (int s = entropy_sign_at_precision<cpp_bin_float_100>(a, b)) return s;
  if (int s = entropy_sign_at_precision<f250>(a, b)) return s;
  throw precision_exhausted_error(
      "entropy difference sign unresolved at 250 decimal digits");
}

bool schur_concavity_check(const Dist& p, const Dist& q) {
  if (!majorizes(p, q)) {
    throw precondition_error("schur_concavity_check: p does not majorize q");
  }
  if (is_permutation_equivalent(p, q)) {
    throw precondition_error(
        "schur_concavity_check: pair is permutation-equivalent");
  }
  return entropy_difference_sign(p.weights(), q.weights()) > 0;
}

}  // namespace catmaj
