#pragma once

#include "entlab/dist.hpp"
#include "entlab/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Shared test helpers: a high-precision entropy oracle that is independent
// of the library's double-precision path, frozen reference values computed
// with that oracle ahead of the implementation, and seeded generators for
// exact random distributions.
namespace support {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigFloat to_bigfloat(const entlab::Rational& r) {
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

inline double oracle_entropy_bits(const std::vector<entlab::Rational>& weights) {
  BigFloat h = 0;
  for (const entlab::Rational& w : weights) {
    if (w == 0) continue;
    const BigFloat p = to_bigfloat(w);
    h -= p * log(p);
  }
  h /= log(BigFloat(2));
  return h.convert_to<double>();
}

inline double oracle_entropy_bits(const entlab::Dist& d) {
  return oracle_entropy_bits(d.to_rationals());
}

inline double oracle_joint_entropy_bits(const entlab::JointDist& j) {
  std::vector<entlab::Rational> flat;
  for (const auto& row : j.to_grid()) {
    for (const auto& cell : row) flat.push_back(cell);
  }
  return oracle_entropy_bits(flat);
}

// 50-digit oracle evaluations, frozen before the implementation existed.
namespace frozen {
inline constexpr double kH_3_7 = 0.881290899230693;        // H(3/10, 7/10)
inline constexpr double kH_4_6 = 0.970950594454669;        // H(2/5, 3/5)
inline constexpr double kH_2_8 = 0.721928094887362;        // H(1/5, 4/5)
inline constexpr double kJointTable1 = 1.846439344671015;  // H over (1/5, 3/10, 1/10, 2/5)
inline constexpr double kCondAvgTable1 = 0.846439344671015;
inline constexpr double kH2_1_100 = 0.080793135895911;     // H(1/100, 99/100)
inline constexpr double kH2_1_20 = 0.286396957115956;      // H(1/20, 19/20)
inline constexpr double kH2_9_10 = 0.468995593589281;      // H(9/10, 1/10)
inline constexpr double kH2_995 = 0.045414692333794;       // H(199/200, 1/200)
inline constexpr double kSubaddSlackTable1 = 0.034851554559677;
inline constexpr double kPointwiseExcessTable1 = 0.089659695223976;
inline constexpr double kH_36_37 = 0.179256066928322;      // H(36/37, 1/37)
}  // namespace frozen

inline entlab::JointDist table1() {
  using entlab::make_rational;
  return entlab::validate_joint({{make_rational(2, 10), make_rational(3, 10)},
                                 {make_rational(1, 10), make_rational(4, 10)}});
}

// Uniformly random integer composition of `denom` into `parts`, as exact
// rationals summing to 1.
inline std::vector<entlab::Rational> random_composition(std::mt19937_64& rng, std::size_t parts,
                                                        std::uint64_t denom) {
  std::uniform_int_distribution<std::uint64_t> pick(0, denom);
  std::vector<std::uint64_t> cuts(parts - 1);
  for (auto& c : cuts) c = pick(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<entlab::Rational> out;
  out.reserve(parts);
  std::uint64_t prev = 0;
  for (std::uint64_t c : cuts) {
    out.push_back(entlab::make_rational(entlab::BigInt(c - prev), entlab::BigInt(denom)));
    prev = c;
  }
  out.push_back(entlab::make_rational(entlab::BigInt(denom - prev), entlab::BigInt(denom)));
  return out;
}

inline entlab::Dist random_dist(std::mt19937_64& rng, std::size_t k, std::uint64_t denom = 1000) {
  return entlab::Dist(random_composition(rng, k, denom));
}

inline entlab::JointDist random_joint(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                      std::uint64_t denom = 1000) {
  const std::vector<entlab::Rational> flat = random_composition(rng, m * n, denom);
  std::vector<std::vector<entlab::Rational>> grid(m);
  for (std::size_t i = 0; i < m; ++i) {
    grid[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return entlab::validate_joint(grid);
}

// Product joint p(i) q(j): independent by construction.
inline entlab::JointDist product_joint(const entlab::Dist& p, const entlab::Dist& q) {
  std::vector<std::vector<entlab::Rational>> grid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    grid[i].reserve(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) grid[i].push_back(p[i].value() * q[j].value());
  }
  return entlab::validate_joint(grid);
}

}  // namespace support
