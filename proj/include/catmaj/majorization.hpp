#pragma once

#include <cstddef>
#include <vector>

#include "catmaj/dist.hpp"
#include "catmaj/rational.hpp"

namespace catmaj {

// One T-transform: mixes coordinates (a, b) with the doubly stochastic
// block [[1-t, t], [t, 1-t]]. Indices live in the sorted-source frame.
struct TTransformStep {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational t;

  bool operator==(const TTransformStep&) const = default;
};

// Constructive certificate for target <= source (majorization order):
// applying `steps` to the descending-sorted source yields the
// descending-sorted target exactly; `final_permutation` then scatters
// rank r of the sorted frame to original target position
// final_permutation[r]. At most N-1 steps for N outcomes.
struct MajorizationWitness {
  std::vector<Rational> source;
  std::vector<Rational> target;
  std::vector<TTransformStep> steps;
  std::vector<std::size_t> final_permutation;
};

// True iff every prefix sum of descending-sorted p dominates that of q.
// Vectors of unequal length are zero-padded to the common length; totals
// must agree.
bool majorizes(const std::vector<Rational>& p, const std::vector<Rational>& q);
bool majorizes(const Dist& p, const Dist& q);
bool majorizes(const JointDist& p, const JointDist& q);

// Muirhead chain construction; requires majorizes(p, q).
MajorizationWitness build_witness(const std::vector<Rational>& p,
                                  const std::vector<Rational>& q);

// Applies each step of the chain to v (positional, any vector of the
// witness' length).
std::vector<Rational> apply_doubly_stochastic_mix(
    const std::vector<TTransformStep>& steps, std::vector<Rational> v);

// Exact replay: chain on sorted source reproduces sorted target, and the
// final permutation reassembles the stored target.
bool verify_witness(const MajorizationWitness& w);

// Sorts descending with ties broken by original index; returns the
// permutation perm with sorted[r] = v[perm[r]].
std::vector<std::size_t> sort_permutation_desc(const std::vector<Rational>& v);

// Checks H(p) < H(q) strictly for a majorizing, non-equivalent pair.
// Escalates float precision until the sign is certain.
bool schur_concavity_check(const Dist& p, const Dist& q);

// Sign of H(q) - H(p): -1, 0 (only for permutation-equivalent multisets),
// +1. Throws precision_exhausted_error if irresolvable.
int entropy_difference_sign(const std::vector<Rational>& p,
                            const std::vector<Rational>& q);

}  // namespace catmaj
