#include "realspin/json_io.hpp"

#include "realspin/error.hpp"

namespace realspin::json_io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) invalid(std::string("expected an object containing '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing field '") + key + "'");
  return *it;
}

long long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) invalid(std::string("'") + what + "' must be an integer");
  return j.get<long long>();
}

bool as_bit(const json& j, const char* what) {
  if (j.is_boolean()) return j.get<bool>();
  const long long v = as_integer(j, what);
  if (v != 0 && v != 1) invalid(std::string("'") + what + "' must be 0 or 1");
  return v == 1;
}

std::vector<long long> as_integers(const json& j, const char* what) {
  if (!j.is_array()) invalid(std::string("'") + what + "' must be an array");
  std::vector<long long> out;
  for (const auto& e : j) out.push_back(as_integer(e, what));
  return out;
}

F2Vector as_bits(const json& j, const char* what) {
  if (!j.is_array()) invalid(std::string("'") + what + "' must be an array of bits");
  F2Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.set(i, as_bit(j[i], what));
  return v;
}

json bits(const F2Vector& v) { return json(v.to_bits()); }

}  // namespace

json to_json(const Topology& t) {
  return json{{"genus", t.genus}, {"real_components", t.components}, {"separating", t.separating}};
}

RealCurve curve_from_json(const json& j) {
  const long long g = as_integer(field(j, "genus"), "genus");
  const long long k = as_integer(field(j, "real_components"), "real_components");
  const json& sep = field(j, "separating");
  if (!sep.is_boolean()) invalid("'separating' must be a boolean");
  if (g < 0 || g > 64 || k < 0 || k > 65) {
    throw Error(ErrorCode::InvalidTopology, "genus or component count out of supported range");
  }
  return RealCurve::make(static_cast<int>(g), static_cast<int>(k), sep.get<bool>());
}

json to_json(const RealCurve& curve, const AutClass& f) {
  const auto nf = static_cast<std::size_t>(curve.separating() ? curve.components() + curve.m() - 1 : curve.genus());
  const auto& e = f.exponents();
  json j{{"sign", f.sign() ? 1 : 0},
         {"f_exponents", std::vector<long long>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nf))}};
  if (curve.separating()) {
    j["g_exponents"] = std::vector<long long>(e.begin() + static_cast<std::ptrdiff_t>(nf), e.end());
  }
  return j;
}

AutClass aut_from_json(const RealCurve& curve, const json& j) {
  if (!j.is_object()) invalid("automorphism must be an object");
  const auto g = static_cast<std::size_t>(curve.genus());
  const auto nf = static_cast<std::size_t>(curve.separating() ? curve.components() + curve.m() - 1 : curve.genus());

  const bool sign = j.contains("sign") ? as_bit(j["sign"], "sign") : false;
  std::vector<long long> exps;
  if (j.contains("f_exponents")) {
    exps = as_integers(j["f_exponents"], "f_exponents");
  } else {
    exps.assign(nf, 0);
  }
  if (exps.size() != nf) {
    throw Error(ErrorCode::DimensionMismatch,
                "f_exponents needs " + std::to_string(nf) + " entries (f_1..), got " + std::to_string(exps.size()));
  }
  std::vector<long long> gexps;
  if (j.contains("g_exponents")) gexps = as_integers(j["g_exponents"], "g_exponents");
  if (!curve.separating() && !gexps.empty()) {
    throw Error(ErrorCode::UnknownGenerator, "g_exponents given for a non-separating curve");
  }
  if (curve.separating() && j.contains("g_exponents") && gexps.size() != g - nf) {
    throw Error(ErrorCode::DimensionMismatch, "g_exponents needs " + std::to_string(g - nf) + " entries");
  }
  gexps.resize(g - nf, 0);
  exps.insert(exps.end(), gexps.begin(), gexps.end());

  AutClass f(curve.topology(), sign, std::move(exps));
  if (j.contains("f0")) {
    const long long n0 = as_integer(j["f0"], "f0");
    f = compose(f, power(generator(curve, "f0"), n0));
  }
  return f;
}

json to_json(const RealCurve& curve, const FullAutClass& f) {
  json j = to_json(curve, f.det_part);
  if (f.sl_part) j["sl"] = to_json(*f.sl_part);
  return j;
}

FullAutClass full_aut_from_json(const RealCurve& curve, const RealBundle& bundle, const json& j) {
  FullAutClass f{aut_from_json(curve, j), std::nullopt};
  if (bundle.rank() >= 2) {
    f.sl_part = j.contains("sl") ? sl_from_json(bundle, j["sl"]) : SLClass::trivial(bundle);
  } else if (j.contains("sl")) {
    throw Error(ErrorCode::RankMismatch, "'sl' given for a rank-1 bundle");
  }
  return f;
}

json to_json(const QuadraticForm& q) { return json{{"q_a", bits(q.q_a())}, {"q_b", bits(q.q_b())}}; }

QuadraticForm form_from_json(const RealCurve& curve, const json& j) {
  F2Vector qa = as_bits(field(j, "q_a"), "q_a");
  F2Vector qb = as_bits(field(j, "q_b"), "q_b");
  const auto g = static_cast<std::size_t>(curve.genus());
  if (qa.size() != g || qb.size() != g) {
    throw Error(ErrorCode::DimensionMismatch, "q_a and q_b need g = " + std::to_string(g) + " entries");
  }
  return QuadraticForm(qa, qb);
}

json to_json(const RealW1& w) { return bits(w.bits()); }

RealW1 w1_from_json(const RealCurve& curve, const json& j) {
  RealW1 w(as_bits(j, "w1"));
  curve.check_w1(w);
  return w;
}

json to_json(const RealBundle& bundle) {
  return json{{"rank", bundle.rank()}, {"degree", bundle.degree()}, {"w1", to_json(bundle.w1())}};
}

RealBundle bundle_from_json(const RealCurve& curve, const json& j) {
  const long long rank = as_integer(field(j, "rank"), "rank");
  if (rank < 1 || rank > 1'000'000) throw Error(ErrorCode::InvalidBundle, "rank must be >= 1");
  const long long degree = as_integer(field(j, "degree"), "degree");
  return RealBundle::make(curve, static_cast<int>(rank), degree, w1_from_json(curve, field(j, "w1")));
}

json to_json(const SLClass& sl) { return json(sl.entries()); }

SLClass sl_from_json(const RealBundle& bundle, const json& j) {
  return SLClass::canonical(bundle, as_integers(j, "sl"));
}

json to_json(const BordismClass& b) { return json{{"w1", to_json(b.w1)}, {"arf", b.arf ? 1 : 0}}; }

json to_json(const DetSignReport& r) {
  json j{{"sign", r.sign.value()},
         {"s_top", r.s_top ? 1 : 0},
         {"s_N", r.s_n ? 1 : 0},
         {"eps_pin", r.eps_pin.value()}};
  j["arf_delta"] = r.arf_delta ? json(*r.arf_delta ? 1 : 0) : json(nullptr);
  return j;
}

json to_json(const PicardResult& r) {
  return json{{"applies", r.applies == PicardCase::Picp ? "picp" : "pic"},
              {"w_used", to_json(r.w_used)},
              {"functional_on_Fminus", bits(r.functional_on_f_minus)}};
}

json to_json(const oracle::VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"name", c.name}, {"topology", c.topology}, {"passed", c.passed}};
    if (c.counterexample) e["counterexample"] = json::parse(*c.counterexample);
    checks.push_back(std::move(e));
  }
  json skipped = json::array();
  for (const auto& s : report.skipped) skipped.push_back(json{{"topology", s.topology}, {"reason", s.reason}});
  return json{{"seed", report.seed},
              {"passed", report.all_passed()},
              {"checks", std::move(checks)},
              {"skipped", std::move(skipped)}};
}

}  // namespace realspin::json_io
