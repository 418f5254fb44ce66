#pragma once

#include "entlab/errors.hpp"
#include "entlab/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace entlab {

/// A single probability: an exact rational confined to [0, 1].
class Prob {
 public:
  Prob() = default;  // zero
  explicit Prob(Rational value);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Prob& a, const Prob& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Prob& a, const Prob& b) { return !(a == b); }
  friend bool operator<(const Prob& a, const Prob& b) { return a.value_ < b.value_; }

 private:
  Rational value_{};
};

std::ostream& operator<<(std::ostream& os, const Prob& p);

/// A finite discrete distribution: k >= 1 probabilities summing to
/// exactly 1, checked in rational arithmetic with no tolerance.
class Dist {
 public:
  explicit Dist(std::vector<Rational> weights);

  /// All mass on one outcome.
  static Dist point_mass(std::size_t size, std::size_t index);

  /// 1/size on each of `size` outcomes.
  static Dist uniform(std::size_t size);

  std::size_t size() const noexcept { return weights_.size(); }
  const Prob& operator[](std::size_t k) const { return weights_[k]; }
  const std::vector<Prob>& probs() const noexcept { return weights_; }
  std::vector<Rational> to_rationals() const;

  friend bool operator==(const Dist& a, const Dist& b) { return a.weights_ == b.weights_; }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }

 private:
  std::vector<Prob> weights_;
};

std::ostream& operator<<(std::ostream& os, const Dist& d);

enum class Axis { X, Y };

/// An m x n joint distribution over pairs (i, j). Row index i ranges over
/// x values, column index j over y values; cells sum to exactly 1.
/// Construct through validate_joint().
class JointDist {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Prob& cell(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  /// Exact total mass of row i (the x = i marginal probability).
  const Rational& row_mass(std::size_t i) const { return row_mass_[i]; }
  const Rational& col_mass(std::size_t j) const { return col_mass_[j]; }

  /// Cells as plain rationals, row-major grid. Feeding this back through
  /// validate_joint reproduces an equal JointDist.
  std::vector<std::vector<Rational>> to_grid() const;

  friend bool operator==(const JointDist& a, const JointDist& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const JointDist& a, const JointDist& b) { return !(a == b); }

 private:
  friend JointDist validate_joint(const std::vector<std::vector<Rational>>& grid);
  JointDist(std::size_t rows, std::size_t cols, std::vector<Prob> cells);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Prob> cells_;  // row-major
  std::vector<Rational> row_mass_;
  std::vector<Rational> col_mass_;
};

std::ostream& operator<<(std::ostream& os, const JointDist& j);

/// Checks a rectangular grid of rationals and canonicalizes it into a
/// JointDist. Throws EmptyGridError, LengthMismatchError (ragged rows),
/// NegativeEntryError, or MassMismatchError (sum != 1, exact excess
/// reported).
JointDist validate_joint(const std::vector<std::vector<Rational>>& grid);

/// Row sums (Axis::X, length m) or column sums (Axis::Y, length n).
Dist marginal(const JointDist& joint, Axis axis);

/// The conditional distribution of y given x = i: cell(i, j) / row_mass(i).
/// Throws ZeroMarginalError when row i has no mass.
Dist conditional_slice(const JointDist& joint, std::size_t i);

/// Mixes the conditional rows by an assumed distribution q over x:
/// result[j] = sum_i q[i] * p(j | x = i). q need not equal the joint's
/// x-marginal; with q equal to it, this returns the y-marginal exactly.
/// Throws LengthMismatchError or ZeroMarginalError (q puts weight on a
/// massless row).
Dist mix_update(const JointDist& joint, const Dist& q);

}  // namespace entlab
