#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "nefcone/hn_type.hpp"
#include "nefcone/rational.hpp"

namespace nefcone::cli {

using Json = nlohmann::ordered_json;

struct BundleSpec {
  HNType type;
  FieldContext field;
  Json echo;  // the spec as supplied
};

/// Parses {"pieces": [[rank, degree], ...]} or {"splitting": [a_1, ...]} with an
/// optional "field": {"char": p, "frobenius_steps": delta}.
///
/// Malformed JSON or schema violations throw Error(ParseError) with line and
/// column; hn_core rejections throw Error(ValidationError) carrying the cause.
BundleSpec parse_bundle_spec(std::string_view text);

/// Rationals and integers in reports: integers that fit in 64 bits become
/// JSON numbers; everything else is a "p/q" or decimal string.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Rational rational_from_json(const Json& j);

struct Report {
  std::string command;
  Json input;
  Json results;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class RenderMode { Text, Json };

std::string render_report(const Report& rep, RenderMode mode);

/// Inverse of render_report(rep, RenderMode::Json).
Report parse_report(std::string_view json_text);

/// Exit codes returned by run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs one CLI invocation (argv without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nefcone::cli
