#include "realspin_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "realspin/error.hpp"
#include "realspin/json_io.hpp"
#include "realspin/oracle.hpp"
#include "realspin/signs.hpp"
#include "realspin/spin.hpp"

namespace realspin::cli {

namespace {

const json& require(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("problem is missing '") + key + "'");
  }
  return spec[key];
}

json form_entry(const RealCurve& curve, const QuadraticForm& q) {
  json j = json_io::to_json(q);
  j["arf"] = arf(curve, q) ? 1 : 0;
  j["w1"] = json_io::to_json(spin_w1(curve, q));
  return j;
}

RealW1 w1_field(const RealCurve& curve, const json& spec) {
  const json& w = require(spec, "w1");
  // Accept both {"w1": [..]} and {"w1": {"w1": [..]}}.
  return json_io::w1_from_json(curve, w.is_object() ? require(w, "w1") : w);
}

}  // namespace

json cmd_detsign(const json& spec) {
  const RealCurve curve = json_io::curve_from_json(require(spec, "curve"));
  const RealBundle bundle = json_io::bundle_from_json(curve, require(spec, "bundle"));
  const FullAutClass f = json_io::full_aut_from_json(curve, bundle, require(spec, "automorphism"));
  return json_io::to_json(det_orientation_report(curve, bundle, f));
}

json cmd_spin(const json& spec, const std::string& subcommand) {
  const RealCurve curve = json_io::curve_from_json(require(spec, "curve"));
  if (subcommand == "enumerate") {
    std::vector<RealW1> classes;
    if (spec.contains("w1")) {
      classes.push_back(w1_field(curve, spec));
    } else {
      classes = admissible_w1(curve);
    }
    json forms = json::array();
    for (const auto& w : classes) {
      for (const auto& q : enumerate_real_spin(curve, w)) forms.push_back(form_entry(curve, q));
    }
    return json{{"count", forms.size()}, {"forms", std::move(forms)}};
  }
  if (subcommand == "act") {
    const QuadraticForm q = json_io::form_from_json(curve, require(spec, "form"));
    const AutClass f = json_io::aut_from_json(curve, require(spec, "automorphism"));
    const QuadraticForm moved = act(curve, f, q);
    return json{{"form", json_io::to_json(moved)}, {"arf_delta", arf_delta(curve, f, spin_w1(curve, q)) ? 1 : 0}};
  }
  if (subcommand == "bordism") {
    const QuadraticForm q = json_io::form_from_json(curve, require(spec, "form"));
    return json_io::to_json(bordism_class(curve, q));
  }
  throw Error(ErrorCode::InvalidInput, "unknown spin subcommand '" + subcommand + "'");
}

json cmd_picard(const json& spec) {
  const RealCurve curve = json_io::curve_from_json(require(spec, "curve"));
  const json& d = require(spec, "degree");
  if (!d.is_number_integer()) throw Error(ErrorCode::InvalidInput, "'degree' must be an integer");
  const RealW1 w = w1_field(curve, spec);
  std::optional<int> basepoint;
  if (spec.contains("basepoint") && !spec["basepoint"].is_null()) {
    if (!spec["basepoint"].is_number_integer()) throw Error(ErrorCode::InvalidInput, "'basepoint' must be an integer");
    const long long p = spec["basepoint"].get<long long>();
    if (p < 0 || p >= curve.components()) throw Error(ErrorCode::IndexOutOfRange, "basepoint component out of range");
    basepoint = static_cast<int>(p);
  }
  const PicardResult r = picard_w1(curve, d.get<long long>(), w, basepoint);
  json out = json_io::to_json(r);
  if (spec.contains("monodromy")) {
    out["value"] = r.evaluate(curve, json_io::aut_from_json(curve, spec["monodromy"])) ? 1 : 0;
  }
  return out;
}

json cmd_loop(const json& spec) {
  const RealCurve curve = json_io::curve_from_json(require(spec, "curve"));
  const RealBundle bundle = json_io::bundle_from_json(curve, require(spec, "bundle"));
  const SLClass clutching = json_io::sl_from_json(bundle, require(spec, "clutching"));
  return json{{"orientable", loop_orientability(bundle, clutching)}, {"eps_pin", eps_pin(bundle, clutching).value()}};
}

VerifyOutcome cmd_verify(const json& spec, std::uint64_t seed, int max_genus) {
  oracle::VerificationReport report;
  if (spec.is_object() && spec.contains("curve")) {
    const json& c = spec["curve"];
    Topology t;
    t.genus = static_cast<int>(c.value("genus", -1));
    t.components = static_cast<int>(c.value("real_components", 0));
    t.separating = c.value("separating", false);
    report = oracle::verify_topology(t, seed);
  } else {
    if (max_genus < 0 || max_genus > oracle::kDefaultGenusBound) {
      throw Error(ErrorCode::BoundExceeded,
                  "--max-genus must lie in 0.." + std::to_string(oracle::kDefaultGenusBound));
    }
    report = oracle::verify_all(max_genus, seed);
  }
  VerifyOutcome outcome{json_io::to_json(report), kSuccess};
  if (!report.all_passed()) {
    outcome.exit_code = kVerificationFailed;
  } else if (!report.skipped.empty()) {
    outcome.exit_code = kInvalidInput;
  }
  return outcome;
}

json error_document(const std::string& code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientation signs of automorphisms on determinant bundles over real curves", "realspin"};
  app.require_subcommand(1);
  std::string input;
  std::uint64_t seed = 0;
  int max_genus = 4;
  app.add_option("--input", input, "problem JSON file ('-' for stdin; default stdin)");
  app.add_option("--seed", seed, "seed for randomized checks");

  auto* detsign = app.add_subcommand("detsign", "sign of an automorphism on the determinant orientations");
  auto* spin = app.add_subcommand("spin", "real Spin structures");
  spin->require_subcommand(1);
  auto* enumerate = spin->add_subcommand("enumerate", "list real Spin structures");
  auto* act_cmd = spin->add_subcommand("act", "translate a real Spin structure by an automorphism");
  auto* bordism = spin->add_subcommand("bordism", "bordism class (w1, Arf)");
  auto* picard = app.add_subcommand("picard", "w1 of the determinant bundle over a real Picard component");
  auto* loop = app.add_subcommand("loop", "orientability of a loop of operators");
  auto* verify = app.add_subcommand("verify", "run the brute-force consistency suite");
  verify->add_option("--max-genus", max_genus, "largest genus checked when no curve is given");
  for (auto* sub : {detsign, spin, enumerate, act_cmd, bordism, picard, loop, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << error_document("UsageError", e.what()).dump() << '\n';
    return kInvalidInput;
  }

  auto read_spec = [&](bool optional) -> json {
    std::string text;
    if (input.empty() && optional) return json::object();
    if (input.empty() || input == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(input);
      if (!file) throw Error(ErrorCode::InvalidInput, "cannot open input file '" + input + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
  };

  try {
    json result;
    int code = kSuccess;
    if (*verify) {
      json spec = read_spec(true);
      if (spec.contains("seed") && spec["seed"].is_number_unsigned() && seed == 0) seed = spec["seed"].get<std::uint64_t>();
      VerifyOutcome v = cmd_verify(spec, seed, max_genus);
      result = std::move(v.report);
      code = v.exit_code;
    } else {
      const json spec = read_spec(false);
      if (*detsign) {
        result = cmd_detsign(spec);
      } else if (*enumerate) {
        result = cmd_spin(spec, "enumerate");
      } else if (*act_cmd) {
        result = cmd_spin(spec, "act");
      } else if (*bordism) {
        result = cmd_spin(spec, "bordism");
      } else if (*picard) {
        result = cmd_picard(spec);
      } else {
        result = cmd_loop(spec);
      }
    }
    out << result.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    err << error_document(std::string(to_string(e.code())), e.what()).dump() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << error_document("InvalidInput", e.what()).dump() << '\n';
    return kInvalidInput;
  }
}

}  // namespace realspin::cli
