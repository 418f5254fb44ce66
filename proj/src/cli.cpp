#include "entlab/cli.hpp"

#include "entlab/analysis.hpp"
#include "entlab/errors.hpp"
#include "entlab/io.hpp"
#include "entlab/otp.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace entlab::cli {

namespace {

// ---------------------------------------------------------------------------
// Fixtures for the `reproduce` command, kept inline so the command needs no
// input files.
// ---------------------------------------------------------------------------

JointDist table1_joint() {
  return validate_joint({{make_rational(2, 10), make_rational(3, 10)},
                         {make_rational(1, 10), make_rational(4, 10)}});
}

const Rational kExample1Prior = make_rational(1, 100);
const std::vector<Rational> kExample1Posteriors = {
    make_rational(3, 10), make_rational(99, 100), make_rational(995, 1000)};

otp::CipherModel example2_model() {
  return otp::build_model(Dist({make_rational(9, 10), make_rational(1, 10)}),
                          Dist({make_rational(1, 2), make_rational(1, 2)}));
}

// ---------------------------------------------------------------------------
// JSON fragments
// ---------------------------------------------------------------------------

json verdict_to_json(const Verdict& v) {
  return json{{"claim", v.claim},       {"lhs_bits", v.lhs.value},
              {"rhs_bits", v.rhs.value}, {"holds", v.holds},
              {"slack_bits", v.slack.value}, {"equality", v.equality}};
}

json verdicts_to_json(const JointDist& joint) {
  return json{{"chain_rule", verdict_to_json(check_chain_rule(joint))},
              {"subadditivity", verdict_to_json(check_subadditivity(joint))},
              {"conditioning_reduces_avg", verdict_to_json(check_conditioning_reduces_avg(joint))}};
}

json posterior_to_json(const otp::PosteriorReport& r) {
  return json{{"ciphertext", r.ciphertext},
              {"posterior", io::dist_to_json(r.posterior)},
              {"prior_entropy_bits", r.prior_entropy.value},
              {"posterior_entropy_bits", r.posterior_entropy.value},
              {"delta_bits", r.delta.value}};
}

json envelope(const RunConfig& config, const char* command) {
  return json{{"schema_version", "1"},
              {"command", command},
              {"log_base", "bits"},
              {"seed", config.seed}};
}

// ---------------------------------------------------------------------------
// Command reports
// ---------------------------------------------------------------------------

json entropy_report(const RunConfig& config) {
  const Dist d = io::load_dist(config.input);
  json report = envelope(config, "entropy");
  report["input"] = config.input;
  report["weights"] = io::dist_to_json(d);
  report["outcomes"] = d.size();
  report["entropy_bits"] = shannon_entropy(d).value;
  report["max_entropy_bits"] = std::log2(static_cast<double>(d.size()));
  return report;
}

json sweep_section(std::uint64_t seed, std::uint64_t samples) {
  std::mt19937_64 rng(seed);
  std::uint64_t chain = 0, subadd = 0, conditioning = 0;
  double max_chain_slack = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % 5);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    const JointDist joint = sample_joint(rng, m, n);
    const Verdict cr = check_chain_rule(joint);
    if (!cr.equality) ++chain;
    max_chain_slack = std::max(max_chain_slack, std::abs(cr.slack.value));
    if (!check_subadditivity(joint).holds) ++subadd;
    if (!check_conditioning_reduces_avg(joint).holds) ++conditioning;
  }
  return json{{"samples", samples},
              {"chain_rule_violations", chain},
              {"subadditivity_violations", subadd},
              {"conditioning_violations", conditioning},
              {"max_chain_rule_abs_slack_bits", max_chain_slack}};
}

json check_report(const RunConfig& config) {
  const JointDist joint = io::load_joint(config.input);
  json report = envelope(config, "check");
  report["input"] = config.input;
  report["joint"] = io::joint_to_json(joint);
  report["marginal_x"] = io::dist_to_json(marginal(joint, Axis::X));
  report["marginal_y"] = io::dist_to_json(marginal(joint, Axis::Y));
  const Bits h_y = shannon_entropy(marginal(joint, Axis::Y));
  report["entropies"] =
      json{{"joint_bits", joint_entropy(joint).value},
           {"marginal_x_bits", shannon_entropy(marginal(joint, Axis::X)).value},
           {"marginal_y_bits", h_y.value},
           {"conditional_avg_bits", conditional_entropy_avg(joint).value}};
  report["independent"] = is_independent(joint);
  report["verdicts"] = verdicts_to_json(joint);

  json pointwise = json::array();
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    json row{{"row", i}, {"mass", to_fraction_string(joint.row_mass(i))}};
    if (joint.row_mass(i) != 0) {
      const Bits h = pointwise_conditional_entropy(joint, i);
      row["entropy_bits"] = h.value;
      row["exceeds_marginal_y"] = h.value > h_y.value + kVerdictTolBits;
    }
    pointwise.push_back(std::move(row));
  }
  report["pointwise"] = std::move(pointwise);
  if (config.sweep > 0) report["sweep"] = sweep_section(config.seed, config.sweep);
  return report;
}

json search_report(const RunConfig& config) {
  const Rational step = parse_rational(config.step);
  const SearchResult result = search_pointwise_increase(config.rows, config.cols, step);
  json report = envelope(config, "search");
  report["params"] = json{{"rows", config.rows}, {"cols", config.cols},
                          {"step", to_fraction_string(step)}};
  report["certificate"] =
      json{{"joints_checked", result.certificate.joints_checked},
           {"averaged_inequality_violations", result.certificate.averaged_inequality_violations},
           {"hit_count", result.certificate.hit_count},
           {"tolerance_bits", kVerdictTolBits}};
  json hits = json::array();
  for (const SearchHit& hit : result.hits) {
    hits.push_back(json{{"joint", io::joint_to_json(hit.joint)},
                        {"row", hit.row},
                        {"pointwise_bits", hit.pointwise.value},
                        {"marginal_entropy_bits", hit.marginal_entropy.value},
                        {"excess_bits", hit.excess.value}});
  }
  report["hits"] = std::move(hits);
  return report;
}

json otp_report(const RunConfig& config) {
  const otp::CipherModel model = io::load_model(config.model_path);
  json report = envelope(config, "otp");
  report["model"] = io::model_to_json(model);
  report["ciphertext_dist"] = io::dist_to_json(ciphertext_dist(model));

  const otp::SecrecyReport secrecy = otp::perfect_secrecy_check(model);
  report["perfect_secrecy"] = secrecy.perfect;
  report["posterior"] = posterior_to_json(otp::posterior_plaintext(model, config.ciphertext));
  json per_cipher = json::array();
  for (const auto& r : secrecy.per_ciphertext) per_cipher.push_back(posterior_to_json(r));
  report["per_ciphertext"] = std::move(per_cipher);

  // H(plaintext | ciphertext) vs H(plaintext), via the induced joint.
  report["conditioning"] =
      verdict_to_json(check_conditioning_reduces_avg(otp::induced_joint(model)));

  if (config.blend_lambda) {
    const Rational lambda = parse_rational(*config.blend_lambda);
    const Dist uniform = Dist::uniform(model.alphabet_size());
    const Dist blended = otp::blend_beliefs(model.plaintext_prior, uniform, lambda);
    const Bits prior_h = shannon_entropy(model.plaintext_prior);
    const Bits blend_h = shannon_entropy(blended);
    report["blend"] = json{{"lambda", to_fraction_string(lambda)},
                           {"toward", io::dist_to_json(uniform)},
                           {"dist", io::dist_to_json(blended)},
                           {"entropy_bits", blend_h.value},
                           {"prior_entropy_bits", prior_h.value},
                           {"delta_bits", blend_h.value - prior_h.value}};
  }
  return report;
}

json table1_section() {
  const JointDist joint = table1_joint();
  const Dist marg_x = marginal(joint, Axis::X);
  const Dist marg_y = marginal(joint, Axis::Y);
  const Bits h_y = shannon_entropy(marg_y);

  json section;
  section["joint"] = io::joint_to_json(joint);
  section["marginal_x"] = io::dist_to_json(marg_x);
  section["marginal_y"] = io::dist_to_json(marg_y);

  json conditionals = json::array();
  json pointwise_bits = json::array();
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    conditionals.push_back(io::dist_to_json(conditional_slice(joint, i)));
    pointwise_bits.push_back(pointwise_conditional_entropy(joint, i).value);
  }
  section["conditional_rows"] = std::move(conditionals);

  section["entropies"] = json{{"joint_bits", joint_entropy(joint).value},
                              {"marginal_x_bits", shannon_entropy(marg_x).value},
                              {"marginal_y_bits", h_y.value},
                              {"conditional_avg_bits", conditional_entropy_avg(joint).value},
                              {"pointwise_bits", std::move(pointwise_bits)}};

  // The assumed-evidence update: all weight on x = 0, then the true marginal.
  json updates = json::array();
  for (const Dist& q : {Dist::point_mass(2, 0), marg_x}) {
    const Dist updated = mix_update(joint, q);
    updates.push_back(json{{"assumed_x", io::dist_to_json(q)},
                           {"dist", io::dist_to_json(updated)},
                           {"entropy_bits", shannon_entropy(updated).value}});
  }
  section["updated"] = std::move(updates);

  section["pointwise_excess_row0_bits"] =
      pointwise_conditional_entropy(joint, 0).value - h_y.value;
  section["independent"] = is_independent(joint);
  section["verdicts"] = verdicts_to_json(joint);
  return section;
}

json example1_section() {
  json section;
  section["prior"] = to_fraction_string(kExample1Prior);
  section["prior_entropy_bits"] = binary_entropy(Prob(kExample1Prior)).value;
  json cases = json::array();
  for (const Rational& post : kExample1Posteriors) {
    const EntropyChangeReport r = entropy_change_verdict(Prob(kExample1Prior), Prob(post));
    cases.push_back(json{{"posterior", to_fraction_string(post)},
                         {"posterior_entropy_bits", r.posterior_entropy.value},
                         {"change", to_string(r.change)}});
  }
  section["cases"] = std::move(cases);
  return section;
}

json example2_section() {
  const otp::CipherModel model = example2_model();
  json section;
  section["model"] = io::model_to_json(model);
  section["ciphertext_dist"] = io::dist_to_json(ciphertext_dist(model));

  const otp::SecrecyReport secrecy = otp::perfect_secrecy_check(model);
  json posteriors = json::array();
  for (const auto& r : secrecy.per_ciphertext) posteriors.push_back(posterior_to_json(r));
  section["posteriors"] = std::move(posteriors);
  section["perfect_secrecy"] = secrecy.perfect;

  // The counting argument "fixed ciphertext makes all plaintexts equally
  // likely", recorded next to what exact Bayes actually returns.
  const Dist uniform = Dist::uniform(model.alphabet_size());
  section["equal_likelihood_claim"] =
      json{{"posterior", io::dist_to_json(uniform)},
           {"matches_exact_bayes", otp::posterior_plaintext(model, 0).posterior == uniform}};

  section["conditioning"] =
      verdict_to_json(check_conditioning_reduces_avg(otp::induced_joint(model)));

  // Mixture of prior and claimed uniform posterior across a lambda grid.
  const Bits prior_h = shannon_entropy(model.plaintext_prior);
  bool all_exceed = true;
  double min_h = std::numeric_limits<double>::infinity();
  double max_h = -std::numeric_limits<double>::infinity();
  json rows = json::array();
  for (int k = 1; k <= 100; ++k) {
    const Rational lambda = make_rational(k, 100);
    const Dist blended = otp::blend_beliefs(model.plaintext_prior, uniform, lambda);
    const double h = shannon_entropy(blended).value;
    all_exceed = all_exceed && h > prior_h.value;
    min_h = std::min(min_h, h);
    max_h = std::max(max_h, h);
    if (k % 10 == 0) {
      rows.push_back(json{{"lambda", to_fraction_string(lambda)},
                          {"dist", io::dist_to_json(blended)},
                          {"entropy_bits", h}});
    }
  }
  section["blend"] = json{{"toward", io::dist_to_json(uniform)},
                          {"grid_step", "1/100"},
                          {"prior_entropy_bits", prior_h.value},
                          {"all_exceed_prior_entropy", all_exceed},
                          {"min_entropy_bits", min_h},
                          {"max_entropy_bits", max_h},
                          {"rows", std::move(rows)}};
  return section;
}

json reproduce_report(const RunConfig& config) {
  const std::string& target = config.target;
  if (target != "all" && target != "table1" && target != "example1" && target != "example2") {
    throw ParseError("unknown reproduce target '" + target +
                     "' (expected table1, example1, example2 or all)");
  }
  json report = envelope(config, "reproduce");
  report["target"] = target;
  if (target == "all" || target == "table1") report["table1"] = table1_section();
  if (target == "all" || target == "example1") report["example1"] = example1_section();
  if (target == "all" || target == "example2") report["example2"] = example2_section();
  return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

bool is_fraction_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == s.size()) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == slash) continue;
    if (!std::isdigit(static_cast<unsigned char>(s[k])) && !(k == 0 && s[k] == '-')) return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[64];
  if (v != 0.0 && std::abs(v) < 1e-4) {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
  }
  return buf;
}

std::string table_scalar(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (is_fraction_string(s)) return s + " (" + to_decimal_string(parse_rational(s)) + ")";
    return s;
  }
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

bool is_scalar_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

void render_table_node(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << table_scalar(v) << "\n";
    return;
  }
  if (is_scalar_array(v)) {
    os << pad << key << ": [";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) os << ", ";
      os << table_scalar(v[k]);
    }
    os << "]\n";
    return;
  }
  os << pad << key << ":\n";
  if (v.is_object()) {
    for (const auto& [child_key, child] : v.items()) {
      render_table_node(os, child_key, child, indent + 2);
    }
    return;
  }
  // array of rows or of records
  for (std::size_t k = 0; k < v.size(); ++k) {
    const json& element = v[k];
    if (is_scalar_array(element)) {
      os << pad << "  ";
      for (std::size_t j = 0; j < element.size(); ++j) {
        if (j) os << "  ";
        os << table_scalar(element[j]);
      }
      os << "\n";
    } else {
      render_table_node(os, "[" + std::to_string(k) + "]", element, indent + 2);
    }
  }
}

std::string render_table(const json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) render_table_node(os, key, value, 0);
  return os.str();
}

std::string csv_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

void render_csv_node(std::ostream& os, const std::string& path, const json& v) {
  if (is_scalar(v)) {
    os << path << "," << csv_scalar(v) << "\n";
    return;
  }
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      render_csv_node(os, path.empty() ? key : path + "." + key, child);
    }
    return;
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    render_csv_node(os, path + "[" + std::to_string(k) + "]", v[k]);
  }
}

std::string render_csv(const json& report) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : report.items()) render_csv_node(os, key, value);
  return os.str();
}

std::string error_line(const Error& e) {
  return json{{"error", e.code()}, {"message", e.what()}}.dump();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ParseError("unknown output format '" + name + "' (expected table, json or csv)");
}

json build_report(const RunConfig& config) {
  switch (config.command) {
    case Command::Entropy: return entropy_report(config);
    case Command::Check: return check_report(config);
    case Command::Search: return search_report(config);
    case Command::Otp: return otp_report(config);
    case Command::Reproduce: return reproduce_report(config);
  }
  throw ParseError("unknown command");
}

json reproduce_paper() {
  RunConfig config;
  config.command = Command::Reproduce;
  config.target = "all";
  return reproduce_report(config);
}

std::string render(const json& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report.dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Table: return render_table(report);
  }
  return report.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const json report = build_report(config);
    const std::string rendered = render(report, config.format);
    if (config.out_path) {
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw IoError("cannot open '" + *config.out_path + "' for writing");
      file << rendered;
      if (!file) throw IoError("error while writing '" + *config.out_path + "'");
    } else {
      out << rendered;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << error_line(e) << "\n";
    return 1;
  } catch (const Error& e) {  // ParseError, IoError
    err << error_line(e) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace entlab::cli
