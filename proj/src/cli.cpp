#include "nefcone/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "nefcone/cone.hpp"
#include "nefcone/positivity.hpp"
#include "nefcone/theta.hpp"

namespace nefcone::cli {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::ParseError, "ParseError at " + where + ": " + what);
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(where, e.what());
    }
  }
  schema_error(where, "expected an integer, got " + j.dump());
}

int small_int_from_json(const Json& j, const std::string& where) {
  const Integer z = integer_from_json(j, where);
  if (!z.fits_sint_p()) schema_error(where, "integer " + z.get_str() + " out of range");
  return static_cast<int>(z.get_si());
}

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::ParseError, "ParseError in " + what + " at line " + std::to_string(line) +
                                      ", column " + std::to_string(column) + ": " + e.what());
  }
}

FieldContext field_from_json(const Json& field) {
  if (!field.is_object()) schema_error("field", "expected an object");
  for (const auto& [key, value] : field.items()) {
    if (key != "char" && key != "frobenius_steps") schema_error("field", "unknown key '" + key + "'");
  }
  if (!field.contains("char")) schema_error("field", "missing 'char'");
  const int characteristic = small_int_from_json(field["char"], "field.char");
  if (characteristic == 0) {
    if (field.contains("frobenius_steps")) {
      schema_error("field", "'frobenius_steps' is only meaningful in positive characteristic");
    }
    return FieldContext::char_zero();
  }
  const int delta =
      field.contains("frobenius_steps") ? small_int_from_json(field["frobenius_steps"], "field.frobenius_steps") : 0;
  return FieldContext::char_p(characteristic, delta);
}

}  // namespace

BundleSpec parse_bundle_spec(std::string_view text) {
  Json spec = parse_json(text, "bundle spec");
  if (!spec.is_object()) schema_error("bundle spec", "expected a JSON object");
  for (const auto& [key, value] : spec.items()) {
    if (key != "pieces" && key != "splitting" && key != "field") {
      schema_error("bundle spec", "unknown key '" + key + "'");
    }
  }
  const bool has_pieces = spec.contains("pieces");
  const bool has_splitting = spec.contains("splitting");
  if (has_pieces == has_splitting) {
    schema_error("bundle spec", "exactly one of 'pieces' or 'splitting' is required");
  }

  try {
    FieldContext field = spec.contains("field") ? field_from_json(spec["field"]) : FieldContext::char_zero();
    if (has_pieces) {
      const Json& list = spec["pieces"];
      if (!list.is_array()) schema_error("pieces", "expected an array of [rank, degree] pairs");
      std::vector<HNPiece> pieces;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "pieces[" + std::to_string(i) + "]";
        if (!list[i].is_array() || list[i].size() != 2) schema_error(where, "expected [rank, degree]");
        pieces.push_back({small_int_from_json(list[i][0], where + "[0]"),
                          integer_from_json(list[i][1], where + "[1]")});
      }
      return {HNType::make(std::move(pieces)), field, spec};
    }
    const Json& list = spec["splitting"];
    if (!list.is_array()) schema_error("splitting", "expected an array of integers");
    SplittingType st;
    for (std::size_t i = 0; i < list.size(); ++i) {
      st.summand_degrees.push_back(integer_from_json(list[i], "splitting[" + std::to_string(i) + "]"));
    }
    return {hn_from_splitting_type(st), field, spec};
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ValidationError,
                "ValidationError " + std::string(to_string(e.code())) + ": " + e.what(), e.code());
  }
}

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, "rational"));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error("rational", e.what());
    }
  }
  schema_error("rational", "expected an integer or a \"p/q\" string, got " + j.dump());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string text_value(const Json& v);

std::string join_text(const Json& array, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) out += sep;
    out += text_value(array[i]);
  }
  return out;
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    const bool nested = !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_array(); });
    if (nested) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += "(" + join_text(v[i], ",") + ")";
      }
      return out;
    }
    return "[" + join_text(v, ", ") + "]";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, value] : v.items()) {
      if (!out.empty()) out += "  ";
      out += key + "=" + (value.is_array() ? "(" + join_text(value, ",") + ")" : text_value(value));
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string render_report(const Report& rep, RenderMode mode) {
  if (mode == RenderMode::Json) {
    Json doc;
    doc["command"] = rep.command;
    doc["input"] = rep.input;
    doc["results"] = rep.results;
    return doc.dump() + "\n";
  }

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", rep.command);
  for (const auto& [key, value] : rep.input.items()) {
    rows.emplace_back(key, value.is_object() ? value.dump() : text_value(value));
  }
  for (const auto& [key, value] : rep.results.items()) {
    const bool object_list = value.is_array() && !value.empty() && value.front().is_object();
    if (!object_list) {
      rows.emplace_back(key, text_value(value));
      continue;
    }
    rows.emplace_back(key, std::to_string(value.size()) + " entries");
    for (const auto& entry : value) rows.emplace_back("", text_value(entry));
  }

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

Report parse_report(std::string_view json_text) {
  const Json doc = parse_json(json_text, "report");
  if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_string() ||
      !doc.contains("input") || !doc.contains("results")) {
    schema_error("report", "expected {\"command\", \"input\", \"results\"}");
  }
  return {doc["command"].get<std::string>(), doc["input"], doc["results"]};
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Options {
  std::string bundle;
  int r = 0;
  std::vector<int> flag;
  std::string cls;
  bool json = false;
};

std::string load_argument(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  const std::string path = value.substr(1);
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "ParseError: cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json ints_to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json rationals_to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

NSClassGr gr_class_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  if (j.is_object() && j.contains("x") && j.contains("y") && j.size() == 2) {
    return {rational_from_json(j["x"]), rational_from_json(j["y"])};
  }
  schema_error("class", "expected [x, y] or {\"x\": .., \"y\": ..}");
}

NSClassFlag flag_class_from_json(const Json& j) {
  NSClassFlag c;
  if (j.is_array() && j.size() >= 2) {
    for (std::size_t i = 0; i + 1 < j.size(); ++i) c.x.push_back(rational_from_json(j[i]));
    c.y = rational_from_json(j.back());
    return c;
  }
  if (j.is_object() && j.contains("x") && j["x"].is_array() && j.contains("y") && j.size() == 2) {
    for (const auto& xi : j["x"]) c.x.push_back(rational_from_json(xi));
    c.y = rational_from_json(j["y"]);
    return c;
  }
  schema_error("class", "expected [x_1, ..., x_nu, y] or {\"x\": [..], \"y\": ..}");
}

Json theta_results(const ThetaBreakdown& b) {
  Json out;
  out["theta"] = to_json(b.theta);
  out["t"] = b.t;
  out["s"] = b.s;
  out["mu_t"] = to_json(b.mu_t);
  out["r"] = b.r;
  out["tail_rank"] = b.tail_rank;
  out["tail_degree"] = to_json(b.tail_degree);
  return out;
}

Json gr_cone_results(const ConeDescriptionGr& cone) {
  Json out;
  out["theta"] = to_json(cone.theta_used);
  out["p_delta"] = to_json(cone.p_delta);
  Json rays = Json::array();
  for (const auto& ray : cone.rays()) rays.push_back(Json::array({to_json(ray.u), to_json(ray.v)}));
  out["rays"] = std::move(rays);
  return out;
}

Json flag_cone_results(const FlagCone& cone) {
  Json out;
  out["thetas"] = rationals_to_json(cone.thetas);
  out["p_delta"] = to_json(cone.p_delta);
  Json rays = Json::array();
  for (const auto& ray : cone.rays) rays.push_back(ints_to_json(ray));
  out["rays"] = std::move(rays);
  return out;
}

struct OracleTally {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
};

void oracle_compare(const HNType& h, int r, OracleTally& tally, Json* details) {
  const Rational closed_form = theta(h, r).theta;
  const Rational brute_force = theta_oracle(h, r);
  ++tally.checks;
  if (closed_form != brute_force) ++tally.mismatches;
  if (details) {
    Json entry;
    entry["r"] = r;
    entry["theta"] = to_json(closed_form);
    entry["oracle"] = to_json(brute_force);
    details->push_back(std::move(entry));
  }
}

constexpr int kCorpusMaxRank = 6;
constexpr int kCorpusMaxAbsDegree = 4;

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact positivity and nef cones of Grassmann and flag bundles over a curve", "nefcone"};
  app.require_subcommand(1);
  Options opt;

  enum Need : unsigned { kBundle = 1, kR = 2, kFlag = 4, kClass = 8, kOptionalBundle = 16, kOptionalR = 32 };
  auto configure = [&](CLI::App* sub, unsigned need) {
    if (need & (kBundle | kOptionalBundle)) {
      auto* o = sub->add_option("--bundle", opt.bundle, "bundle spec as JSON or @file");
      if (need & kBundle) o->required();
    }
    if (need & (kR | kOptionalR)) {
      auto* o = sub->add_option("--r", opt.r, "quotient rank r");
      if (need & kR) o->required();
    }
    if (need & kFlag) sub->add_option("--flag", opt.flag, "quotient dimensions r1,r2,...")->delimiter(',')->required();
    if (need & kClass) sub->add_option("--class", opt.cls, "class coordinates as JSON or @file")->required();
    sub->add_flag("--json", opt.json, "emit a JSON report");
    return sub;
  };

  auto* theta_cmd = configure(app.add_subcommand("theta", "theta_{E,r} with its breakdown"), kBundle | kR);
  auto* classify_cmd = configure(app.add_subcommand("classify", "positivity of O(1) on Gr_r(E)"), kBundle | kR);
  auto* cone_cmd = app.add_subcommand("cone", "nef cone generators");
  cone_cmd->require_subcommand(1);
  auto* cone_gr = configure(cone_cmd->add_subcommand("gr", "nef cone of Gr_r(E)"), kBundle | kR);
  auto* cone_flag = configure(cone_cmd->add_subcommand("flag", "nef cone of Fl(E)"), kBundle | kFlag);
  auto* member_cmd = app.add_subcommand("member", "nef/ample membership of a class");
  member_cmd->require_subcommand(1);
  auto* member_gr = configure(member_cmd->add_subcommand("gr", "class [x, y] on Gr_r(E)"), kBundle | kR | kClass);
  auto* member_flag =
      configure(member_cmd->add_subcommand("flag", "class [x_1..x_nu, y] on Fl(E)"), kBundle | kFlag | kClass);
  auto* va_cmd = configure(app.add_subcommand("vabundles", "graded pieces V_a of wedge^r E"), kBundle | kR);
  auto* oracle_cmd = configure(app.add_subcommand("oracle-check", "compare theta with the brute-force oracle"),
                               kOptionalBundle | kOptionalR);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  Report rep;
  int exit_code = kExitOk;
  try {
    auto bundle_input = [&] {
      BundleSpec spec = parse_bundle_spec(load_argument(opt.bundle));
      rep.input["bundle"] = spec.echo;
      return spec;
    };

    if (theta_cmd->parsed()) {
      rep.command = "theta";
      const BundleSpec spec = bundle_input();
      rep.input["r"] = opt.r;
      rep.results = theta_results(theta(spec.type, opt.r, spec.field));
    } else if (classify_cmd->parsed()) {
      rep.command = "classify";
      const BundleSpec spec = bundle_input();
      rep.input["r"] = opt.r;
      const auto b = theta(spec.type, opt.r, spec.field);
      rep.results["theta"] = to_json(b.theta);
      rep.results["classification"] = std::string(to_string(classify_tautological(spec.type, opt.r, spec.field)));
    } else if (cone_gr->parsed()) {
      rep.command = "cone gr";
      const BundleSpec spec = bundle_input();
      rep.input["r"] = opt.r;
      rep.results = gr_cone_results(grassmann_nef_cone(spec.type, opt.r, spec.field));
    } else if (cone_flag->parsed()) {
      rep.command = "cone flag";
      const BundleSpec spec = bundle_input();
      rep.input["flag"] = opt.flag;
      rep.results = flag_cone_results(flag_nef_cone(spec.type, FlagType::make(opt.flag), spec.field));
    } else if (member_gr->parsed()) {
      rep.command = "member gr";
      const BundleSpec spec = bundle_input();
      rep.input["r"] = opt.r;
      const Json cls = parse_json(load_argument(opt.cls), "class");
      rep.input["class"] = cls;
      const NSClassGr c = gr_class_from_json(cls);
      const auto cone = grassmann_nef_cone(spec.type, opt.r, spec.field);
      rep.results["theta"] = to_json(cone.theta_used);
      rep.results["nef"] = is_nef_gr(c, cone);
      rep.results["ample"] = is_ample_gr(c, cone);
    } else if (member_flag->parsed()) {
      rep.command = "member flag";
      const BundleSpec spec = bundle_input();
      rep.input["flag"] = opt.flag;
      const Json cls = parse_json(load_argument(opt.cls), "class");
      rep.input["class"] = cls;
      const NSClassFlag c = flag_class_from_json(cls);
      const auto cone = flag_nef_cone(spec.type, FlagType::make(opt.flag), spec.field);
      rep.results["thetas"] = rationals_to_json(cone.thetas);
      rep.results["nef"] = is_nef_flag(c, cone);
      rep.results["ample"] = is_ample_flag(c, cone);
    } else if (va_cmd->parsed()) {
      rep.command = "vabundles";
      const BundleSpec spec = bundle_input();
      rep.input["r"] = opt.r;
      Json list = Json::array();
      for (const auto& va : enumerate_va(spec.type, opt.r)) {
        Json entry;
        entry["a"] = va.composition;
        entry["rank"] = to_json(va.rank);
        entry["degree"] = to_json(va.degree);
        entry["slope_sum"] = to_json(va.slope_sum);
        list.push_back(std::move(entry));
      }
      rep.results["theta"] = to_json(theta(spec.type, opt.r, spec.field).theta);
      rep.results["bundles"] = std::move(list);
    } else if (oracle_cmd->parsed()) {
      rep.command = "oracle-check";
      OracleTally tally;
      if (!opt.bundle.empty()) {
        const BundleSpec spec = bundle_input();
        Json details = Json::array();
        if (oracle_cmd->count("--r") > 0) {
          rep.input["r"] = opt.r;
          oracle_compare(spec.type, opt.r, tally, &details);
        } else {
          for (int r = 1; r < spec.type.rank(); ++r) oracle_compare(spec.type, r, tally, &details);
        }
        rep.results["checks"] = tally.checks;
        rep.results["mismatches"] = tally.mismatches;
        rep.results["agree"] = tally.mismatches == 0;
        rep.results["details"] = std::move(details);
      } else {
        rep.input["corpus"] = {{"max_rank", kCorpusMaxRank}, {"max_abs_degree", kCorpusMaxAbsDegree}};
        const auto corpus = enumerate_hn_types(kCorpusMaxRank, kCorpusMaxAbsDegree);
        for (const auto& h : corpus) {
          for (int r = 1; r < h.rank(); ++r) oracle_compare(h, r, tally, nullptr);
        }
        rep.results["types"] = corpus.size();
        rep.results["checks"] = tally.checks;
        rep.results["mismatches"] = tally.mismatches;
        rep.results["agree"] = tally.mismatches == 0;
      }
      if (tally.mismatches != 0) {
        err << "oracle-check: " << tally.mismatches << " of " << tally.checks << " checks disagree\n";
        exit_code = kExitInternal;
      }
    }
  } catch (const Error& e) {
    const bool tagged = e.code() == Errc::ParseError || e.code() == Errc::ValidationError;
    err << "error: " << (tagged ? "" : std::string(to_string(e.code())) + ": ") << e.what() << "\n";
    return e.code() == Errc::InternalInvariant ? kExitInternal : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  out << render_report(rep, opt.json ? RenderMode::Json : RenderMode::Text);
  return exit_code;
}

}  // namespace nefcone::cli
