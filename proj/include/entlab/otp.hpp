#pragma once

#include "entlab/dist.hpp"
#include "entlab/entropy.hpp"

#include <cstddef>
#include <vector>

namespace entlab::otp {

/// One-time-pad model over the alphabet Z_s: ciphertext c = (m + k) mod s.
/// For s = 2 this is XOR. For each fixed c the map m -> k is a bijection.
struct CipherModel {
  Dist plaintext_prior;
  Dist key_dist;

  std::size_t alphabet_size() const { return plaintext_prior.size(); }
};

/// Throws LengthMismatchError (priors of different length) or
/// AlphabetTooSmallError (alphabet smaller than 2).
CipherModel build_model(Dist plaintext_prior, Dist key_dist);

/// Induced distribution of the observed ciphertext:
/// p(c) = sum_m p(m) p(k = (c - m) mod s), exact.
Dist ciphertext_dist(const CipherModel& model);

/// Joint distribution over (ciphertext, plaintext): rows are ciphertext
/// values, columns plaintext values. Feeding it to the analysis module
/// gives the averaged conditional entropy of the plaintext given the
/// ciphertext.
JointDist induced_joint(const CipherModel& model);

struct PosteriorReport {
  std::size_t ciphertext = 0;
  Dist posterior;
  Bits prior_entropy;
  Bits posterior_entropy;
  Bits delta;  // posterior_entropy - prior_entropy
};

/// Exact Bayes: p(m | c) proportional to p(m) p(k = (c - m) mod s).
/// Throws ImpossibleCiphertextError when c has zero probability.
PosteriorReport posterior_plaintext(const CipherModel& model, std::size_t c);

struct SecrecyReport {
  bool perfect = false;
  /// One report per ciphertext of positive probability.
  std::vector<PosteriorReport> per_ciphertext;
};

/// Perfect secrecy: the plaintext posterior equals the prior, as an exact
/// rational identity, for every observable ciphertext. True for any prior
/// when the key is uniform.
SecrecyReport perfect_secrecy_check(const CipherModel& model);

/// Componentwise mixture (1 - lambda) p + lambda q. Every output component
/// lies between the corresponding components of p and q. Throws
/// LengthMismatchError or ProbOutOfRangeError (lambda outside [0, 1]).
Dist blend_beliefs(const Dist& p, const Dist& q, const Rational& lambda);

}  // namespace entlab::otp
