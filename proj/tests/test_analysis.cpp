#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entlab/analysis.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace entlab;
namespace frozen = support::frozen;

namespace {

JointDist diagonal_half() {
  return validate_joint({{make_rational(1, 2), Rational(0)}, {Rational(0), make_rational(1, 2)}});
}

}  // namespace

TEST_CASE("make_verdict classification bands") {
  const Verdict strict = make_verdict("t", Bits{1.0}, Bits{2.0});
  CHECK(strict.holds);
  CHECK(!strict.equality);
  CHECK(strict.slack.value == 1.0);

  CHECK(!make_verdict("t", Bits{2.0 + 2e-9}, Bits{2.0}).holds);
  const Verdict near = make_verdict("t", Bits{2.0 + 5e-10}, Bits{2.0});
  CHECK(near.holds);
  CHECK(near.equality);
}

TEST_CASE("chain rule verdict is an equality on reference grids") {
  const Verdict v = check_chain_rule(support::table1());
  CHECK(v.holds);
  CHECK(v.equality);
  CHECK(std::abs(v.lhs.value - frozen::kJointTable1) < 1e-9);
  CHECK(std::abs(v.rhs.value - frozen::kJointTable1) < 1e-9);

  const JointDist uniform4 = validate_joint({{make_rational(1, 4), make_rational(1, 4)},
                                             {make_rational(1, 4), make_rational(1, 4)}});
  CHECK(check_chain_rule(uniform4).equality);
  CHECK(std::abs(check_chain_rule(uniform4).lhs.value - 2.0) < 1e-12);

  CHECK(check_chain_rule(diagonal_half()).equality);
  CHECK(std::abs(check_chain_rule(diagonal_half()).lhs.value - 1.0) < 1e-12);
}

TEST_CASE("subadditivity verdict") {
  const Verdict v = check_subadditivity(support::table1());
  CHECK(v.holds);
  CHECK(!v.equality);
  CHECK(std::abs(v.slack.value - frozen::kSubaddSlackTable1) < 1e-9);

  const JointDist product = support::product_joint(
      Dist({make_rational(3, 10), make_rational(7, 10)}),
      Dist({make_rational(2, 5), make_rational(3, 5)}));
  CHECK(check_subadditivity(product).equality);

  const Verdict diag = check_subadditivity(diagonal_half());
  CHECK(diag.holds);
  CHECK(std::abs(diag.lhs.value - 1.0) < 1e-12);
  CHECK(std::abs(diag.rhs.value - 2.0) < 1e-12);
}

TEST_CASE("averaged conditioning verdict") {
  const Verdict v = check_conditioning_reduces_avg(support::table1());
  CHECK(v.holds);
  CHECK(std::abs(v.lhs.value - frozen::kCondAvgTable1) < 1e-9);
  CHECK(std::abs(v.rhs.value - frozen::kH_3_7) < 1e-9);
  // same slack as subadditivity, by the chain rule
  CHECK(std::abs(v.slack.value - frozen::kSubaddSlackTable1) < 1e-9);

  const JointDist product = support::product_joint(Dist::uniform(3), Dist::uniform(2));
  CHECK(check_conditioning_reduces_avg(product).equality);

  const Verdict diag = check_conditioning_reduces_avg(diagonal_half());
  CHECK(diag.holds);
  CHECK(diag.lhs.value == 0.0);
  CHECK(std::abs(diag.rhs.value - 1.0) < 1e-12);
}

TEST_CASE("is_independent is an exact rational test") {
  CHECK(!is_independent(support::table1()));
  CHECK(is_independent(validate_joint({{Rational(1)}})));
  CHECK(is_independent(support::product_joint(
      Dist({make_rational(1, 3), make_rational(2, 3)}),
      Dist({make_rational(1, 7), make_rational(2, 7), make_rational(4, 7)}))));
}

TEST_CASE("subadditivity equality matches exact independence on fixtures") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Dist p = support::random_dist(rng, 1 + rng() % 4);
    const Dist q = support::random_dist(rng, 1 + rng() % 4);
    const JointDist product = support::product_joint(p, q);
    CHECK(is_independent(product));
    CHECK(check_subadditivity(product).equality);
  }
  CHECK(!check_subadditivity(support::table1()).equality);
  CHECK(!is_independent(support::table1()));
}

TEST_CASE("entropy_change_verdict on the belief-revision fixtures") {
  const Prob prior(make_rational(1, 100));

  const EntropyChangeReport up = entropy_change_verdict(prior, Prob(make_rational(3, 10)));
  CHECK(up.change == EntropyChange::Increased);
  CHECK(std::abs(up.prior_entropy.value - frozen::kH2_1_100) < 1e-12);
  CHECK(std::abs(up.posterior_entropy.value - frozen::kH_3_7) < 1e-12);

  const EntropyChangeReport same = entropy_change_verdict(prior, Prob(make_rational(99, 100)));
  CHECK(same.change == EntropyChange::Unchanged);

  const EntropyChangeReport down = entropy_change_verdict(prior, Prob(make_rational(995, 1000)));
  CHECK(down.change == EntropyChange::Decreased);
  CHECK(std::abs(down.posterior_entropy.value - frozen::kH2_995) < 1e-12);

  CHECK(to_string(EntropyChange::Increased) == "increased");
}

TEST_CASE("entropy_change_verdict reflexivity and symmetry") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational p = make_rational(BigInt(rng() % 1001), BigInt(1000));
    CHECK(entropy_change_verdict(Prob(p), Prob(p)).change == EntropyChange::Unchanged);
    CHECK(entropy_change_verdict(Prob(p), Prob(Rational(1) - p)).change ==
          EntropyChange::Unchanged);
  }
}

TEST_CASE("search enumerates the full 2x2 grid at step 1/10") {
  const SearchResult result = search_pointwise_increase(2, 2, make_rational(1, 10));
  CHECK(result.certificate.joints_checked == 286);  // compositions of 10 into 4 parts
  CHECK(result.certificate.averaged_inequality_violations == 0);
  CHECK(result.certificate.hit_count == result.hits.size());
  CHECK(!result.hits.empty());

  // the reference grid is one of the hits, at row 0
  bool found_table1 = false;
  for (const SearchHit& hit : result.hits) {
    if (hit.joint == support::table1() && hit.row == 0) {
      found_table1 = true;
      CHECK(std::abs(hit.pointwise.value - frozen::kH_4_6) < 1e-9);
      CHECK(std::abs(hit.marginal_entropy.value - frozen::kH_3_7) < 1e-9);
      CHECK(std::abs(hit.excess.value - frozen::kPointwiseExcessTable1) < 1e-9);
    }
  }
  CHECK(found_table1);
}

TEST_CASE("search hits verify against recomputation and keep canonical order") {
  const SearchResult result = search_pointwise_increase(2, 2, make_rational(1, 10));
  for (const SearchHit& hit : result.hits) {
    CHECK(hit.excess.value > kVerdictTolBits);
    CHECK(hit.joint.row_mass(hit.row) != 0);
    const double pointwise = shannon_entropy(conditional_slice(hit.joint, hit.row)).value;
    const double marginal_h = shannon_entropy(marginal(hit.joint, Axis::Y)).value;
    CHECK(std::abs(pointwise - marginal_h - hit.excess.value) < 1e-12);
  }
  for (std::size_t k = 1; k < result.hits.size(); ++k) {
    const auto key = [](const SearchHit& h) {
      std::vector<Rational> cells;
      for (const auto& row : h.joint.to_grid()) {
        for (const auto& c : row) cells.push_back(c);
      }
      return std::make_pair(cells, h.row);
    };
    CHECK(key(result.hits[k - 1]) < key(result.hits[k]));
  }
}

TEST_CASE("search is deterministic across runs") {
  const SearchResult a = search_pointwise_increase(2, 2, make_rational(1, 10));
  const SearchResult b = search_pointwise_increase(2, 2, make_rational(1, 10));
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t k = 0; k < a.hits.size(); ++k) {
    CHECK(a.hits[k].joint == b.hits[k].joint);
    CHECK(a.hits[k].row == b.hits[k].row);
    CHECK(a.hits[k].excess.value == b.hits[k].excess.value);
  }
}

TEST_CASE("search with a single row never finds a hit") {
  const SearchResult result = search_pointwise_increase(1, 3, make_rational(1, 10));
  CHECK(result.hits.empty());
  CHECK(result.certificate.joints_checked == 66);  // compositions of 10 into 3 parts
  CHECK(result.certificate.averaged_inequality_violations == 0);
}

TEST_CASE("search parameter validation") {
  CHECK_THROWS_AS(search_pointwise_increase(2, 2, make_rational(3, 10)), StepInvalidError);
  CHECK_THROWS_AS(search_pointwise_increase(2, 2, Rational(0)), StepInvalidError);
  CHECK_THROWS_AS(search_pointwise_increase(2, 2, make_rational(-1, 10)), StepInvalidError);
  CHECK_THROWS_AS(search_pointwise_increase(3, 3, make_rational(1, 10)), TooLargeError);
  CHECK_THROWS_AS(search_pointwise_increase(2, 3, make_rational(1, 1000)), TooLargeError);
  // step 2/20 reduces to 1/10: fine
  CHECK(search_pointwise_increase(2, 2, make_rational(2, 20)).certificate.joints_checked == 286);
}

TEST_CASE("inequalities hold across a seeded random sweep") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % 5);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    const JointDist j = sample_joint(rng, m, n);
    CHECK(check_chain_rule(j).equality);
    CHECK(check_subadditivity(j).holds);
    CHECK(check_conditioning_reduces_avg(j).holds);
  }
}

TEST_CASE("sample_joint and sample_dist are seeded and exact") {
  std::mt19937_64 a(99), b(99);
  CHECK(sample_joint(a, 3, 2) == sample_joint(b, 3, 2));
  CHECK(sample_dist(a, 4) == sample_dist(b, 4));

  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    const Dist d = sample_dist(rng, 1 + rng() % 6);
    Rational sum = 0;
    for (const Prob& p : d.probs()) sum += p.value();
    CHECK(sum == 1);
  }
}
