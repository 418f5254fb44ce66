#include "entlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace entlab {

namespace {

// Neumaier-compensated accumulator; keeps identity checks stable at the
// 1e-12 level regardless of term count.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double total() const { return sum + comp; }
};

// -p log2 p for one weight. Zero weights are skipped by the callers
// (0 log 0 = 0 by definition); the p == 0.0 guard covers rationals small
// enough to underflow the double conversion.
double neg_term(double p) {
  if (p == 0.0) return 0.0;
  return -(p * std::log2(p));
}

double clamp_nonnegative(double h) {
  return h <= 0.0 ? 0.0 : h;  // folds -0.0 and compensation dust to 0
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Bits& b) { return os << b.value << " bits"; }

Bits shannon_entropy(const Dist& d) {
  // Canonical summation order: nonzero weights sorted ascending. This makes
  // the result bit-for-bit invariant under permutation and zero padding.
  std::vector<double> weights;
  weights.reserve(d.size());
  for (const Prob& p : d.probs()) {
    if (p.is_zero()) continue;
    weights.push_back(to_double(p.value()));
  }
  std::sort(weights.begin(), weights.end());
  CompensatedSum acc;
  for (double w : weights) acc.add(neg_term(w));
  return {clamp_nonnegative(acc.total())};
}

Bits binary_entropy(const Prob& p) {
  return shannon_entropy(Dist({p.value(), Rational(1) - p.value()}));
}

Bits joint_entropy(const JointDist& joint) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const Prob& p = joint.cell(i, j);
      if (p.is_zero()) continue;
      acc.add(neg_term(to_double(p.value())));
    }
  }
  return {clamp_nonnegative(acc.total())};
}

Bits conditional_entropy_avg(const JointDist& joint) {
  // -sum_{i,j} p(i,j) log2 p(j | x=i), row-major. Rows of zero mass have
  // all-zero cells and drop out.
  CompensatedSum acc;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    const Rational& mass = joint.row_mass(i);
    if (mass == 0) continue;
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const Prob& p = joint.cell(i, j);
      if (p.is_zero()) continue;
      const Rational conditional = p.value() / mass;  // exact
      double cond = to_double(conditional);
      if (cond == 0.0) continue;
      acc.add(-(to_double(p.value()) * std::log2(cond)));
    }
  }
  return {clamp_nonnegative(acc.total())};
}

Bits pointwise_conditional_entropy(const JointDist& joint, std::size_t i) {
  return shannon_entropy(conditional_slice(joint, i));
}

Bits updated_entropy(const JointDist& joint, const Dist& q) {
  return shannon_entropy(mix_update(joint, q));
}

}  // namespace entlab
