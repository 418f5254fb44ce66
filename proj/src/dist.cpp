#include "entlab/dist.hpp"

#include <ostream>
#include <utility>

namespace entlab {

namespace {

// Shared validation for anything that must be a probability vector:
// nonnegative entries summing to exactly 1. Returns canonical Probs.
std::vector<Prob> check_mass(std::vector<Rational> weights, const char* what) {
  if (weights.empty()) throw EmptyGridError(std::string(what) + " has no entries");
  Rational sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) {
      throw NegativeEntryError(std::string(what) + " has negative entry " + to_fraction_string(w));
    }
    sum += w;
  }
  if (sum != 1) {
    Rational excess = sum - 1;
    throw MassMismatchError(std::string(what) + " sums to " + to_fraction_string(sum) +
                                ", off by " + to_fraction_string(excess),
                            to_fraction_string(excess));
  }
  std::vector<Prob> probs;
  probs.reserve(weights.size());
  for (Rational& w : weights) probs.emplace_back(std::move(w));
  return probs;
}

}  // namespace

Prob::Prob(Rational value) : value_(std::move(value)) {
  if (value_ < 0) throw NegativeEntryError("probability " + to_fraction_string(value_) + " is negative");
  if (value_ > 1) throw ProbOutOfRangeError("probability " + to_fraction_string(value_) + " exceeds 1");
}

std::ostream& operator<<(std::ostream& os, const Prob& p) {
  return os << to_fraction_string(p.value());
}

Dist::Dist(std::vector<Rational> weights)
    : weights_(check_mass(std::move(weights), "distribution")) {}

Dist Dist::point_mass(std::size_t size, std::size_t index) {
  std::vector<Rational> w(size, Rational(0));
  w.at(index) = 1;
  return Dist(std::move(w));
}

Dist Dist::uniform(std::size_t size) {
  std::vector<Rational> w(size, make_rational(1, BigInt(size)));
  return Dist(std::move(w));
}

std::vector<Rational> Dist::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(weights_.size());
  for (const Prob& p : weights_) out.push_back(p.value());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Dist& d) {
  os << "(";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) os << ", ";
    os << d[k];
  }
  return os << ")";
}

JointDist::JointDist(std::size_t rows, std::size_t cols, std::vector<Prob> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  row_mass_.assign(rows_, Rational(0));
  col_mass_.assign(cols_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = cell(i, j).value();
      row_mass_[i] += v;
      col_mass_[j] += v;
    }
  }
}

std::vector<std::vector<Rational>> JointDist::to_grid() const {
  std::vector<std::vector<Rational>> grid(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    grid[i].reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) grid[i].push_back(cell(i, j).value());
  }
  return grid;
}

std::ostream& operator<<(std::ostream& os, const JointDist& j) {
  os << "[";
  for (std::size_t i = 0; i < j.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t k = 0; k < j.cols(); ++k) {
      if (k) os << ", ";
      os << j.cell(i, k);
    }
  }
  return os << "]";
}

JointDist validate_joint(const std::vector<std::vector<Rational>>& grid) {
  if (grid.empty()) throw EmptyGridError("joint grid has no rows");
  const std::size_t cols = grid.front().size();
  if (cols == 0) throw EmptyGridError("joint grid has no columns");
  std::vector<Rational> flat;
  flat.reserve(grid.size() * cols);
  for (const auto& row : grid) {
    if (row.size() != cols) {
      throw LengthMismatchError("joint grid is ragged: expected " + std::to_string(cols) +
                                " columns, found a row with " + std::to_string(row.size()));
    }
    for (const Rational& v : row) flat.push_back(v);
  }
  std::vector<Prob> cells = check_mass(std::move(flat), "joint grid");
  return JointDist(grid.size(), cols, std::move(cells));
}

Dist marginal(const JointDist& joint, Axis axis) {
  std::vector<Rational> sums;
  if (axis == Axis::X) {
    sums.reserve(joint.rows());
    for (std::size_t i = 0; i < joint.rows(); ++i) sums.push_back(joint.row_mass(i));
  } else {
    sums.reserve(joint.cols());
    for (std::size_t j = 0; j < joint.cols(); ++j) sums.push_back(joint.col_mass(j));
  }
  return Dist(std::move(sums));
}

Dist conditional_slice(const JointDist& joint, std::size_t i) {
  const Rational& mass = joint.row_mass(i);
  if (mass == 0) {
    throw ZeroMarginalError("row " + std::to_string(i) +
                            " has zero mass; the conditional distribution is undefined");
  }
  std::vector<Rational> w;
  w.reserve(joint.cols());
  for (std::size_t j = 0; j < joint.cols(); ++j) w.push_back(joint.cell(i, j).value() / mass);
  return Dist(std::move(w));
}

Dist mix_update(const JointDist& joint, const Dist& q) {
  if (q.size() != joint.rows()) {
    throw LengthMismatchError("weight vector has " + std::to_string(q.size()) +
                              " entries but the joint has " + std::to_string(joint.rows()) +
                              " rows");
  }
  std::vector<Rational> out(joint.cols(), Rational(0));
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    if (q[i].is_zero()) continue;
    const Rational& mass = joint.row_mass(i);
    if (mass == 0) {
      throw ZeroMarginalError("weight vector puts mass " + to_fraction_string(q[i].value()) +
                              " on row " + std::to_string(i) + ", which has zero mass");
    }
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      out[j] += q[i].value() * (joint.cell(i, j).value() / mass);
    }
  }
  return Dist(std::move(out));
}

}  // namespace entlab
