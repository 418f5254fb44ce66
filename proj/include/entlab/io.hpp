#pragma once

#include "entlab/dist.hpp"
#include "entlab/otp.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <istream>
#include <string>

namespace entlab::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Readers. CSV cells and JSON strings accept decimal ("0.3") or fraction
// ("3/10") syntax; both convert exactly. JSON also accepts integers, and
// floating-point numbers via their shortest round-trip decimal form.
// Lines starting with '#' and blank lines are ignored in CSV.
// ---------------------------------------------------------------------------

/// Joint from CSV text: m lines of n comma-separated cells.
JointDist read_joint_csv(std::istream& in);

/// Joint from a JSON document {"rows": m, "cols": n, "cells": [[...], ...]}.
/// rows/cols are optional on input and checked against the cell grid when
/// present.
JointDist read_joint_json(const json& doc);

/// Dist from CSV text: cells separated by commas and/or newlines.
Dist read_dist_csv(std::istream& in);

/// Dist from {"weights": [...]} or a bare JSON array.
Dist read_dist_json(const json& doc);

/// Cipher model from {"prior": [...], "key": [...]}.
otp::CipherModel read_model_json(const json& doc);

// ---------------------------------------------------------------------------
// Writers. Cells are emitted as canonical fraction strings, so every value
// re-ingests to an exactly equal one.
// ---------------------------------------------------------------------------

std::string write_joint_csv(const JointDist& joint);
json joint_to_json(const JointDist& joint);
json dist_to_json(const Dist& d);
json model_to_json(const otp::CipherModel& model);

// ---------------------------------------------------------------------------
// File-level loaders. The format is sniffed from the content: documents
// opening with '{' or '[' parse as JSON, anything else as CSV. Throw
// IoError (unreadable file) or ParseError (malformed content).
// ---------------------------------------------------------------------------

JointDist load_joint(const std::filesystem::path& path);
Dist load_dist(const std::filesystem::path& path);
otp::CipherModel load_model(const std::filesystem::path& path);

/// Parses a JSON document out of raw text, mapping json exceptions onto
/// ParseError.
json parse_json_text(const std::string& text, const std::string& what);

}  // namespace entlab::io
