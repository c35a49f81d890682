#pragma once

#include <cstddef>
#include <vector>

#include "catmaj/dist.hpp"
#include "catmaj/rational.hpp"

namespace catmaj {

// Default ceiling on the number of type classes enumerated at once.
inline constexpr std::size_t kDefaultClassCap = 2'000'000;

// One empirical composition of n symbols over a d-letter alphabet.
// Every sequence in the class shares the product probability `weight`;
// the class holds `multiplicity` sequences of total mass `mass`.
struct TypeClass {
  std::vector<unsigned> counts;
  BigInt multiplicity;
  Rational weight;
  Rational mass;
};

BigInt binomial(unsigned long n, unsigned long k);

// n! / prod(counts!) with sum(counts) == n.
BigInt multinomial(unsigned n, const std::vector<unsigned>& counts);

// Number of compositions of n into d nonnegative parts: C(n+d-1, d-1).
BigInt count_type_classes(std::size_t d, unsigned n);

// All compositions, lexicographic in counts, with exact weights/masses for
// the product distribution p^(x)n. Throws resource_limit_error when the
// class count exceeds the cap.
std::vector<TypeClass> enumerate_type_classes(
    const Dist& p, unsigned n, std::size_t class_cap = kDefaultClassCap);

// A run of equal-probability outcomes in a descending-sorted spectrum.
struct ValueBlock {
  Rational value;
  BigInt count;
  Rational mass;  // value * count
};

// Strictly-positive blocks, sorted by value descending, equal values merged.
std::vector<ValueBlock> sorted_positive_blocks(
    const std::vector<TypeClass>& classes);
std::vector<ValueBlock> sorted_positive_blocks(
    const std::vector<Rational>& weights);

// Sum of the k largest coordinates described by `blocks` (k up to the
// total count). Piecewise-linear interpolation inside a block is exact
// because all members share one value.
Rational top_k_sum(const std::vector<ValueBlock>& blocks, const BigInt& k);

}  // namespace catmaj
