#include "entlab/otp.hpp"

#include <utility>

namespace entlab::otp {

namespace {

// Key symbol that maps plaintext m onto ciphertext c: k = (c - m) mod s.
std::size_t key_for(std::size_t c, std::size_t msg, std::size_t s) {
  return (c + s - msg % s) % s;
}

}  // namespace

CipherModel build_model(Dist plaintext_prior, Dist key_dist) {
  if (plaintext_prior.size() != key_dist.size()) {
    throw LengthMismatchError("plaintext prior has " + std::to_string(plaintext_prior.size()) +
                              " symbols but the key distribution has " +
                              std::to_string(key_dist.size()));
  }
  if (plaintext_prior.size() < 2) {
    throw AlphabetTooSmallError("one-time-pad alphabet needs at least 2 symbols");
  }
  return {std::move(plaintext_prior), std::move(key_dist)};
}

Dist ciphertext_dist(const CipherModel& model) {
  const std::size_t s = model.alphabet_size();
  std::vector<Rational> out(s, Rational(0));
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t msg = 0; msg < s; ++msg) {
      out[c] += model.plaintext_prior[msg].value() * model.key_dist[key_for(c, msg, s)].value();
    }
  }
  return Dist(std::move(out));
}

JointDist induced_joint(const CipherModel& model) {
  const std::size_t s = model.alphabet_size();
  std::vector<std::vector<Rational>> grid(s, std::vector<Rational>(s));
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t msg = 0; msg < s; ++msg) {
      grid[c][msg] = model.plaintext_prior[msg].value() * model.key_dist[key_for(c, msg, s)].value();
    }
  }
  return validate_joint(grid);
}

PosteriorReport posterior_plaintext(const CipherModel& model, std::size_t c) {
  const std::size_t s = model.alphabet_size();
  if (c >= s) {
    throw ImpossibleCiphertextError("ciphertext " + std::to_string(c) +
                                    " is outside the alphabet of size " + std::to_string(s));
  }
  std::vector<Rational> likelihoods(s);
  Rational evidence = 0;
  for (std::size_t msg = 0; msg < s; ++msg) {
    likelihoods[msg] = model.plaintext_prior[msg].value() * model.key_dist[key_for(c, msg, s)].value();
    evidence += likelihoods[msg];
  }
  if (evidence == 0) {
    throw ImpossibleCiphertextError("ciphertext " + std::to_string(c) +
                                    " has zero probability under this model");
  }
  for (Rational& l : likelihoods) l /= evidence;

  Dist posterior(std::move(likelihoods));
  const Bits prior_entropy = shannon_entropy(model.plaintext_prior);
  const Bits posterior_entropy = shannon_entropy(posterior);
  return {c, std::move(posterior), prior_entropy, posterior_entropy,
          posterior_entropy - prior_entropy};
}

SecrecyReport perfect_secrecy_check(const CipherModel& model) {
  const Dist cipher = ciphertext_dist(model);
  SecrecyReport report;
  report.perfect = true;
  for (std::size_t c = 0; c < cipher.size(); ++c) {
    if (cipher[c].is_zero()) continue;
    PosteriorReport posterior = posterior_plaintext(model, c);
    if (posterior.posterior != model.plaintext_prior) report.perfect = false;
    report.per_ciphertext.push_back(std::move(posterior));
  }
  return report;
}

Dist blend_beliefs(const Dist& p, const Dist& q, const Rational& lambda) {
  if (p.size() != q.size()) {
    throw LengthMismatchError("cannot blend distributions of size " + std::to_string(p.size()) +
                              " and " + std::to_string(q.size()));
  }
  if (lambda < 0 || lambda > 1) {
    throw ProbOutOfRangeError("blend weight " + to_fraction_string(lambda) +
                              " is outside [0, 1]");
  }
  std::vector<Rational> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.push_back((Rational(1) - lambda) * p[k].value() + lambda * q[k].value());
  }
  return Dist(std::move(out));
}

}  // namespace entlab::otp
