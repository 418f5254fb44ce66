#pragma once

#include "entlab/dist.hpp"

#include <cstddef>
#include <iosfwd>

namespace entlab {

/// An entropy value in bits (log base 2).
struct Bits {
  double value = 0.0;

  friend bool operator==(const Bits& a, const Bits& b) { return a.value == b.value; }
  friend bool operator<(const Bits& a, const Bits& b) { return a.value < b.value; }
  friend bool operator>(const Bits& a, const Bits& b) { return a.value > b.value; }
  friend Bits operator+(const Bits& a, const Bits& b) { return {a.value + b.value}; }
  friend Bits operator-(const Bits& a, const Bits& b) { return {a.value - b.value}; }
};

std::ostream& operator<<(std::ostream& os, const Bits& b);

/// H(d) = -sum_k d[k] log2 d[k], with 0 log 0 = 0 handled as an explicit
/// skip of zero weights. Terms are accumulated in a canonical sorted order
/// with compensated summation, so the result is invariant under any
/// permutation of the weights and under zero padding, bit for bit.
Bits shannon_entropy(const Dist& d);

/// Entropy of the two-outcome distribution (p, 1 - p).
Bits binary_entropy(const Prob& p);

/// H(x, y) = -sum_{i,j} p(i,j) log2 p(i,j), accumulated row-major.
Bits joint_entropy(const JointDist& joint);

/// The expectation over x of the entropy of y given x:
/// -sum_{i,j} p(i,j) log2 p(j | x = i). Rows of zero mass contribute
/// nothing. Satisfies the chain rule H(x,y) = H(x) + this.
Bits conditional_entropy_avg(const JointDist& joint);

/// Entropy of the single conditional distribution p(. | x = i).
/// Unlike the averaged quantity this can exceed the y-marginal entropy.
/// Throws ZeroMarginalError when row i has no mass.
Bits pointwise_conditional_entropy(const JointDist& joint, std::size_t i);

/// Entropy of mix_update(joint, q): the uncertainty of y under an assumed
/// evidence distribution q over x.
Bits updated_entropy(const JointDist& joint, const Dist& q);

}  // namespace entlab
