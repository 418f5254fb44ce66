#include "entlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <utility>

namespace entlab {

namespace {

constexpr std::size_t kMaxSearchCells = 6;
constexpr std::uint64_t kMaxSearchJoints = 20'000'000;

// Denominator for quantized simplex samples. Large enough that the grid
// artifacts sit far below every tolerance in use.
constexpr std::uint64_t kSampleDenom = std::uint64_t{1} << 20;

BigInt composition_count(std::uint64_t total, std::size_t parts) {
  // C(total + parts - 1, parts - 1)
  BigInt result = 1;
  for (std::size_t r = 1; r < parts; ++r) {
    result = result * BigInt(total + r) / BigInt(r);
  }
  return result;
}

std::vector<Rational> quantized_simplex(std::mt19937_64& rng, std::size_t k) {
  // Normalized exponential draws give a symmetric Dirichlet sample; the
  // draws are then quantized onto kSampleDenom units with largest-remainder
  // rounding so the weights are exact rationals summing to exactly 1.
  std::vector<double> draws(k);
  double total = 0.0;
  for (double& x : draws) {
    const std::uint64_t bits = rng();
    const double u = static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    x = -std::log(u);
    total += x;
  }

  std::vector<std::uint64_t> units(k, 0);
  std::vector<std::pair<double, std::size_t>> remainders(k);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double share = draws[i] / total * static_cast<double>(kSampleDenom);
    units[i] = static_cast<std::uint64_t>(share);
    remainders[i] = {share - static_cast<double>(units[i]), i};
    assigned += units[i];
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::uint64_t r = assigned; r < kSampleDenom; ++r) {
    ++units[remainders[(r - assigned) % k].second];
  }

  std::vector<Rational> weights;
  weights.reserve(k);
  for (std::uint64_t u : units) weights.push_back(make_rational(BigInt(u), BigInt(kSampleDenom)));
  return weights;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  return os << v.claim << ": " << v.lhs.value << (v.holds ? " <= " : " > ") << v.rhs.value
            << " (slack " << v.slack.value << ")";
}

Verdict make_verdict(std::string claim, Bits lhs, Bits rhs) {
  Verdict v;
  v.claim = std::move(claim);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = rhs - lhs;
  v.holds = lhs.value <= rhs.value + kVerdictTolBits;
  v.equality = std::abs(v.slack.value) < kVerdictTolBits;
  return v;
}

Verdict check_chain_rule(const JointDist& joint) {
  const Bits lhs = joint_entropy(joint);
  const Bits rhs = shannon_entropy(marginal(joint, Axis::X)) + conditional_entropy_avg(joint);
  return make_verdict("chain_rule", lhs, rhs);
}

Verdict check_subadditivity(const JointDist& joint) {
  const Bits lhs = joint_entropy(joint);
  const Bits rhs =
      shannon_entropy(marginal(joint, Axis::X)) + shannon_entropy(marginal(joint, Axis::Y));
  return make_verdict("subadditivity", lhs, rhs);
}

Verdict check_conditioning_reduces_avg(const JointDist& joint) {
  const Bits lhs = conditional_entropy_avg(joint);
  const Bits rhs = shannon_entropy(marginal(joint, Axis::Y));
  return make_verdict("conditioning_reduces_avg", lhs, rhs);
}

bool is_independent(const JointDist& joint) {
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      if (joint.cell(i, j).value() != joint.row_mass(i) * joint.col_mass(j)) return false;
    }
  }
  return true;
}

std::string to_string(EntropyChange change) {
  switch (change) {
    case EntropyChange::Increased: return "increased";
    case EntropyChange::Decreased: return "decreased";
    case EntropyChange::Unchanged: return "unchanged";
  }
  return "unchanged";
}

EntropyChangeReport entropy_change_verdict(const Prob& prior, const Prob& posterior) {
  EntropyChangeReport report;
  report.prior_entropy = binary_entropy(prior);
  report.posterior_entropy = binary_entropy(posterior);
  const double delta = report.posterior_entropy.value - report.prior_entropy.value;
  if (std::abs(delta) < kVerdictTolBits) {
    report.change = EntropyChange::Unchanged;
  } else {
    report.change = delta > 0 ? EntropyChange::Increased : EntropyChange::Decreased;
  }
  return report;
}

SearchResult search_pointwise_increase(std::size_t m, std::size_t n, const Rational& step) {
  if (m == 0 || n == 0) throw EmptyGridError("search grid needs at least one row and column");
  if (step <= 0) throw StepInvalidError("step must be positive, got " + to_fraction_string(step));
  const Rational inverse = Rational(1) / step;
  if (denominator(inverse) != 1) {
    throw StepInvalidError("1/step must be an integer, got step " + to_fraction_string(step));
  }
  const std::size_t cells = m * n;
  if (cells > kMaxSearchCells) {
    throw TooLargeError("grid has " + std::to_string(cells) + " cells; the exhaustive search is capped at " +
                        std::to_string(kMaxSearchCells));
  }
  const BigInt units_big = numerator(inverse);
  if (units_big > kMaxSearchJoints ||
      composition_count(units_big.convert_to<std::uint64_t>(), cells) > kMaxSearchJoints) {
    throw TooLargeError("enumeration of step " + to_fraction_string(step) + " over " +
                        std::to_string(cells) + " cells exceeds " +
                        std::to_string(kMaxSearchJoints) + " joints");
  }
  const std::uint64_t units = units_big.convert_to<std::uint64_t>();

  SearchResult result;
  result.certificate.rows = m;
  result.certificate.cols = n;
  result.certificate.step = step;

  std::vector<std::uint64_t> parts(cells, 0);
  const auto visit = [&]() {
    std::vector<std::vector<Rational>> grid(m, std::vector<Rational>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        grid[i][j] = make_rational(BigInt(parts[i * n + j]), BigInt(units));
      }
    }
    const JointDist joint = validate_joint(grid);
    ++result.certificate.joints_checked;

    if (!check_conditioning_reduces_avg(joint).holds) {
      ++result.certificate.averaged_inequality_violations;
    }

    const Bits h_y = shannon_entropy(marginal(joint, Axis::Y));
    for (std::size_t i = 0; i < m; ++i) {
      if (joint.row_mass(i) == 0) continue;
      const Bits pointwise = pointwise_conditional_entropy(joint, i);
      const Bits excess = pointwise - h_y;
      if (excess.value > kVerdictTolBits) {
        result.hits.push_back({joint, i, pointwise, h_y, excess});
      }
    }
  };

  // Lexicographically ascending enumeration of the row-major cell tuple;
  // the hit ordering contract rides on this.
  std::function<void(std::size_t, std::uint64_t)> enumerate = [&](std::size_t idx,
                                                                  std::uint64_t remaining) {
    if (idx + 1 == cells) {
      parts[idx] = remaining;
      visit();
      return;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
      parts[idx] = v;
      enumerate(idx + 1, remaining - v);
    }
  };
  enumerate(0, units);

  result.certificate.hit_count = result.hits.size();
  return result;
}

Dist sample_dist(std::mt19937_64& rng, std::size_t k) { return Dist(quantized_simplex(rng, k)); }

JointDist sample_joint(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<Rational> flat = quantized_simplex(rng, m * n);
  std::vector<std::vector<Rational>> grid(m);
  for (std::size_t i = 0; i < m; ++i) {
    grid[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return validate_joint(grid);
}

}  // namespace entlab
