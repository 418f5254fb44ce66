#pragma once

#include "entlab/dist.hpp"
#include "entlab/entropy.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace entlab {

/// Comparison band for floating-point entropy verdicts, in bits. Exact
/// rational identities are asserted exactly and never use this.
inline constexpr double kVerdictTolBits = 1e-9;

/// Outcome of one inequality check lhs <= rhs.
struct Verdict {
  std::string claim;  // stable identifier, e.g. "chain_rule"
  Bits lhs;
  Bits rhs;
  bool holds = false;    // lhs <= rhs + kVerdictTolBits
  Bits slack;            // rhs - lhs, signed
  bool equality = false; // |slack| < kVerdictTolBits
};

std::ostream& operator<<(std::ostream& os, const Verdict& v);

Verdict make_verdict(std::string claim, Bits lhs, Bits rhs);

/// H(x, y) = H(x) + H_x(y). Holds with equality for every joint.
Verdict check_chain_rule(const JointDist& joint);

/// H(x, y) <= H(x) + H(y). Equality exactly when x and y are independent.
Verdict check_subadditivity(const JointDist& joint);

/// Averaged conditional entropy H_x(y) <= H(y). Holds for every joint,
/// even when some single conditional slice has larger entropy than H(y).
Verdict check_conditioning_reduces_avg(const JointDist& joint);

/// True iff every cell equals the product of its marginals, as an exact
/// rational identity.
bool is_independent(const JointDist& joint);

enum class EntropyChange { Increased, Decreased, Unchanged };

std::string to_string(EntropyChange change);

/// Binary-entropy comparison of a belief revision from `prior` to
/// `posterior`, classified at kVerdictTolBits.
struct EntropyChangeReport {
  EntropyChange change = EntropyChange::Unchanged;
  Bits prior_entropy;
  Bits posterior_entropy;
};

EntropyChangeReport entropy_change_verdict(const Prob& prior, const Prob& posterior);

/// One joint found by the exhaustive search whose conditional slice at
/// `row` is strictly more uncertain than the y-marginal.
struct SearchHit {
  JointDist joint;
  std::size_t row = 0;
  Bits pointwise;
  Bits marginal_entropy;
  Bits excess;  // pointwise - marginal_entropy, > kVerdictTolBits
};

/// What the enumeration established: every grid point was also run through
/// check_conditioning_reduces_avg, and the violation count stays zero.
struct SearchCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Rational step;
  std::uint64_t joints_checked = 0;
  std::uint64_t averaged_inequality_violations = 0;
  std::uint64_t hit_count = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchCertificate certificate;
};

/// Enumerates every m x n grid whose cells are multiples of `step` summing
/// to 1 and collects all (joint, row) pairs where the pointwise conditional
/// entropy exceeds the y-marginal entropy by more than kVerdictTolBits.
/// Hits come out ordered lexicographically by row-major cell values, then
/// by row index; two runs with equal parameters give identical output.
/// Throws StepInvalidError (1/step not an integer) or TooLargeError
/// (m*n > 6, or the composition count is out of desk scale).
SearchResult search_pointwise_increase(std::size_t m, std::size_t n, const Rational& step);

/// Seeded quasi-Dirichlet sample: normalized exponential draws quantized
/// onto a fixed power-of-two denominator, so the result is an exact Dist.
Dist sample_dist(std::mt19937_64& rng, std::size_t k);

/// Same quantized sampling over an m x n grid.
JointDist sample_joint(std::mt19937_64& rng, std::size_t m, std::size_t n);

}  // namespace entlab
