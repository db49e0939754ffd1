#include "realspin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "realspin/autgroup.hpp"
#include "realspin/error.hpp"
#include "realspin/json_io.hpp"
#include "realspin/signs.hpp"

namespace realspin::oracle {

namespace {

using nlohmann::json;

void check_bound(int genus, int bound) {
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be nonnegative");
  if (genus > bound || genus > 30) {
    throw Error(ErrorCode::BoundExceeded,
                "genus " + std::to_string(genus) + " exceeds the enumeration bound " + std::to_string(bound));
  }
}

std::uint64_t code_of(const F2Vector& x) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.get(i)) c |= std::uint64_t{1} << i;
  }
  return c;
}

std::size_t partner(std::size_t i, std::size_t g) { return i < g ? i + g : i - g; }

// Arf invariant from the value count: q has 2^(2g-1) + 2^(g-1) zeros iff
// arf(q) = 0 and 2^(2g-1) - 2^(g-1) zeros iff arf(q) = 1.
std::optional<bool> arf_by_count(int genus, const std::vector<bool>& table) {
  const auto zeros = static_cast<std::uint64_t>(std::count(table.begin(), table.end(), false));
  if (genus == 0) return zeros == 1 ? std::optional<bool>(false) : std::nullopt;
  const std::uint64_t half = std::uint64_t{1} << (2 * genus - 1);
  const std::uint64_t shift = std::uint64_t{1} << (genus - 1);
  if (zeros == half + shift) return false;
  if (zeros == half - shift) return true;
  return std::nullopt;
}

class Recorder {
 public:
  Recorder(VerificationReport& report, std::string name, const RealCurve& curve)
      : report_(report), check_{std::move(name), curve.topology().to_string(), true, std::nullopt}, curve_(curve) {}
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;
  ~Recorder() { report_.checks.push_back(std::move(check_)); }

  // Records the first failure only; `problem` must be a CLI-replayable spec.
  void expect(bool ok, const std::function<json()>& problem) {
    if (ok || !check_.passed) return;
    check_.passed = false;
    json j = problem();
    j["check"] = check_.name;
    if (!j.contains("curve")) j["curve"] = json_io::to_json(curve_.topology());
    check_.counterexample = j.dump();
  }

 private:
  VerificationReport& report_;
  Check check_;
  const RealCurve& curve_;
};

json curve_json(const RealCurve& curve) { return json_io::to_json(curve.topology()); }

json aut_json(const RealCurve& curve, const AutClass& f) { return json_io::to_json(curve, f); }

AutClass random_aut(const RealCurve& curve, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<long long> exp(-3, 3);
  std::vector<long long> e(static_cast<std::size_t>(curve.genus()));
  for (auto& x : e) x = exp(rng);
  return AutClass(curve.topology(), bit(rng) == 1, std::move(e));
}

RealW1 random_w1(const RealCurve& curve, bool parity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  F2Vector w(static_cast<std::size_t>(curve.components()));
  for (std::size_t i = 1; i < w.size(); ++i) w.set(i, bit(rng) == 1);
  w.set(0, w.parity() != parity);
  return RealW1(std::move(w));
}

RealBundle random_bundle(const RealCurve& curve, int rank, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> deg(-max_degree, max_degree);
  const long long d = deg(rng);
  return RealBundle::make(curve, rank, d, random_w1(curve, (d % 2) != 0, rng));
}

SLClass random_sl(const RealBundle& bundle, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> entry(-3, 3);
  std::vector<long long> e(bundle.w1().size());
  for (auto& x : e) x = entry(rng);
  return SLClass::canonical(bundle, std::move(e));
}

FullAutClass random_full(const RealCurve& curve, const RealBundle& bundle, std::mt19937_64& rng) {
  FullAutClass f{random_aut(curve, rng), std::nullopt};
  if (bundle.rank() >= 2) f.sl_part = random_sl(bundle, rng);
  return f;
}

json detsign_problem(const RealCurve& curve, const RealBundle& bundle, const FullAutClass& f) {
  return json{{"command", "detsign"},
              {"curve", curve_json(curve)},
              {"bundle", json_io::to_json(bundle)},
              {"automorphism", json_io::to_json(curve, f)}};
}

std::vector<RealBundle> rank_one_bundles(const RealCurve& curve, int max_degree) {
  std::vector<RealBundle> out;
  const auto k = static_cast<std::size_t>(curve.components());
  for (long long d = -max_degree; d <= max_degree; ++d) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      F2Vector w(k);
      for (std::size_t i = 0; i < k; ++i) w.set(i, ((mask >> i) & 1U) != 0);
      if (w.parity() != ((d % 2) != 0)) continue;
      out.push_back(RealBundle::make(curve, 1, d, RealW1(std::move(w))));
    }
  }
  return out;
}

// Automorphisms exercised by the per-w checks: every named generator, -1, and
// a few random classes.
std::vector<AutClass> probe_automorphisms(const RealCurve& curve, std::mt19937_64& rng, int random_count) {
  std::vector<AutClass> out;
  for (const auto& name : generator_names(curve)) out.push_back(generator(curve, name));
  out.push_back(AutClass::minus_one(curve));
  for (int i = 0; i < random_count; ++i) out.push_back(random_aut(curve, rng));
  return out;
}

void check_curve_data(const RealCurve& curve, VerificationReport& report) {
  const auto n = curve.dimension();
  const auto g = static_cast<std::size_t>(curve.genus());
  {
    Recorder r(report, "c_star_involution", curve);
    const IntMatrix& c = curve.c_star_integer();
    r.expect(c * c == IntMatrix::identity(n), [&] { return json{{"command", "verify"}}; });
  }
  {
    Recorder r(report, "c_star_symplectic_mod2", curve);
    const F2Matrix& c = curve.c_star_mod2();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool before = curve.pairing(F2Vector::unit(n, i), F2Vector::unit(n, j));
        const bool after = curve.pairing(c.column(i), c.column(j));
        r.expect(before == after, [&] { return json{{"command", "verify"}, {"i", i}, {"j", j}}; });
      }
    }
  }
  {
    Recorder r(report, "fix_dimension", curve);
    const F2Matrix shifted = curve.c_star_mod2() + F2Matrix::identity(n);
    const std::size_t fix = n - gf2_rank(shifted);
    const auto expected = static_cast<std::size_t>(curve.genus() + curve.components() - 1);
    r.expect(fix == expected, [&] { return json{{"command", "verify"}, {"fix_dimension", fix}}; });
  }
  {
    Recorder r(report, "real_component_classes_fixed", curve);
    for (int i = 0; i < curve.components(); ++i) {
      const F2Vector rc = curve.real_component_class(i);
      r.expect(curve.c_star_mod2() * rc == rc, [&] { return json{{"command", "verify"}, {"component", i}}; });
    }
  }
  {
    Recorder r(report, "f_plus_lagrangian", curve);
    const auto& fp = curve.f_plus_basis();
    const auto& fm = curve.f_minus_basis();
    r.expect(fp.size() == g && fm.size() == g, [&] { return json{{"command", "verify"}}; });
    r.expect(gf2_rank(F2Matrix(fp, n)) == g, [&] { return json{{"command", "verify"}}; });
    for (std::size_t i = 0; i < fp.size(); ++i) {
      r.expect(curve.c_star_mod2() * fp[i] == fp[i], [&] { return json{{"command", "verify"}, {"f_plus", i}}; });
      for (std::size_t j = 0; j < fp.size(); ++j) {
        r.expect(!curve.pairing(fp[i], fp[j]) && !fm[i](fp[j]),
                 [&] { return json{{"command", "verify"}, {"i", i}, {"j", j}}; });
      }
    }
  }
  {
    Recorder r(report, "poincare_duality_roundtrip", curve);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < total; ++code) {
      const F2Vector x = class_from_code(n, code);
      r.expect(curve.pd_inverse(curve.poincare_dual(x)) == x,
               [&] { return json{{"command", "verify"}, {"class", x.to_bits()}}; });
    }
  }
}

void check_autgroup(const RealCurve& curve, std::mt19937_64& rng, const SuiteOptions& options,
                    VerificationReport& report) {
  const auto k = static_cast<std::size_t>(curve.components());
  Recorder hom(report, "ind2_and_signs_homomorphism", curve);
  Recorder image(report, "ind2_image_in_f_minus", curve);
  Recorder epsf(report, "component_signs_vs_ind2", curve);
  for (int t = 0; t < options.random_pairs; ++t) {
    const AutClass x = random_aut(curve, rng);
    const AutClass y = random_aut(curve, rng);
    const AutClass xy = compose(x, y);
    auto problem = [&] {
      return json{{"command", "verify"}, {"x", aut_json(curve, x)}, {"y", aut_json(curve, y)}};
    };
    hom.expect(ind2(curve, xy) == ind2(curve, x) + ind2(curve, y), problem);
    hom.expect(component_signs(curve, xy) == component_signs(curve, x) + component_signs(curve, y), problem);
    hom.expect(is_identity(compose(x, invert(x))), problem);
    const Covector ix = ind2(curve, x);
    for (const auto& fp : curve.f_plus_basis()) image.expect(!ix(fp), problem);
    const F2Vector cs = component_signs(curve, x);
    for (std::size_t i = 1; i < k; ++i) {
      epsf.expect((cs.get(i) != cs.get(0)) == ix(curve.b(static_cast<int>(i))), problem);
    }
  }
  const AutClass minus = AutClass::minus_one(curve);
  image.expect(ind2(curve, minus).is_zero(), [&] { return json{{"command", "verify"}}; });
  epsf.expect(component_signs(curve, minus) == F2Vector::ones(k), [&] { return json{{"command", "verify"}}; });
}

struct FormRecord {
  QuadraticForm q;
  RealW1 w;
  bool arf = false;
};

void check_spin(const RealCurve& curve, std::mt19937_64& rng, const SuiteOptions& options,
                VerificationReport& report) {
  const int genus = curve.genus();
  const auto g = static_cast<std::size_t>(genus);
  const auto n = curve.dimension();
  const auto k = static_cast<std::size_t>(curve.components());
  const std::uint64_t total = std::uint64_t{1} << n;

  // Involution as a permutation of codes, built by linearity.
  std::vector<std::uint64_t> cperm(total, 0);
  std::vector<std::uint64_t> column_code(n);
  for (std::size_t j = 0; j < n; ++j) column_code[j] = code_of(curve.c_star_mod2().column(j));
  for (std::uint64_t x = 1; x < total; ++x) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(x));
    cperm[x] = cperm[x & (x - 1)] ^ column_code[low];
  }
  std::vector<std::uint64_t> rc_code(k);
  for (std::size_t i = 0; i < k; ++i) rc_code[i] = code_of(curve.real_component_class(static_cast<int>(i)));

  const std::vector<AutClass> probes = probe_automorphisms(curve, rng, 6);
  std::vector<std::uint64_t> probe_pd(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) probe_pd[p] = code_of(curve.pd_inverse(ind2(curve, probes[p])));

  std::vector<FormRecord> real_forms;
  std::map<QuadraticForm, bool> arf_of;
  // (w, probe) -> values of q(pd(ind2 f)) observed over the orbit.
  std::map<std::pair<RealW1, std::size_t>, std::set<bool>> observed;

  {
    Recorder eval(report, "quad_eval_matches_table", curve);
    Recorder realness(report, "realness_matches_brute_force", curve);
    Recorder arf_count(report, "arf_matches_value_count", curve);
    Recorder tr(report, "invariant_class_values", curve);
    std::uint64_t arf_zero = 0;
    const std::uint64_t stride = std::max<std::uint64_t>(1, total / 16);
    for (const QuadraticForm& q : enumerate_all_quadratic_forms(genus, options.bound)) {
      const std::vector<bool> table = quadratic_table(genus, q, options.bound);
      auto problem = [&] {
        return json{{"command", "spin"}, {"subcommand", "bordism"}, {"form", json_io::to_json(q)}};
      };
      for (std::uint64_t x = 0; x < total; x += stride) {
        eval.expect(quad_eval(curve, q, class_from_code(n, x)) == table[x], problem);
      }
      const std::optional<bool> counted = arf_by_count(genus, table);
      arf_count.expect(counted.has_value() && *counted == arf(curve, q), problem);
      if (!arf(curve, q)) ++arf_zero;

      bool real = true;
      for (std::uint64_t x = 0; x < total && real; ++x) real = table[x] == table[cperm[x]];
      realness.expect(real == is_real_spin(curve, q), problem);
      if (!real) continue;

      F2Vector wbits(k);
      for (std::size_t i = 0; i < k; ++i) wbits.set(i, !table[rc_code[i]]);
      FormRecord rec{q, RealW1(std::move(wbits)), counted.value_or(false)};

      if (curve.separating()) {
        const int m = curve.m();
        for (int i = curve.components(); i <= curve.components() + m - 1; ++i) {
          tr.expect(!table[code_of(curve.a(i) + curve.a(i + m))] && !table[code_of(curve.b(i) + curve.b(i + m))],
                    problem);
        }
      } else {
        for (int i = curve.components(); i <= genus; ++i) tr.expect(table[code_of(curve.a(i))], problem);
      }
      for (std::size_t p = 0; p < probes.size(); ++p) observed[{rec.w, p}].insert(table[probe_pd[p]]);
      arf_of[q] = rec.arf;
      real_forms.push_back(std::move(rec));
    }
    // Classical count of even forms: 2^(g-1) (2^g + 1).
    const std::uint64_t expected_even = genus == 0 ? 1 : (std::uint64_t{1} << (genus - 1)) * ((std::uint64_t{1} << genus) + 1);
    arf_count.expect(arf_zero == expected_even, [&] { return json{{"command", "verify"}, {"even_forms", arf_zero}}; });
  }

  const std::vector<RealW1> admissible = admissible_w1(curve);
  std::map<RealW1, std::vector<QuadraticForm>> groups;
  for (const auto& rec : real_forms) groups[rec.w].push_back(rec.q);

  {
    Recorder part(report, "real_spin_partition", curve);
    auto problem_w = [&](const RealW1& w) {
      return json{{"command", "spin"}, {"subcommand", "enumerate"}, {"w1", json_io::to_json(w)}};
    };
    part.expect(admissible.size() == (std::size_t{1} << (k - 1)), [&] { return json{{"command", "verify"}}; });
    part.expect(real_forms.size() == (std::size_t{1} << (g + k - 1)),
                [&] { return json{{"command", "verify"}, {"real_forms", real_forms.size()}}; });
    for (const auto& [w, forms] : groups) {
      part.expect(std::find(admissible.begin(), admissible.end(), w) != admissible.end(), [&] { return problem_w(w); });
    }
    for (const auto& w : admissible) {
      const std::vector<QuadraticForm> listed = enumerate_real_spin(curve, w);
      const std::vector<QuadraticForm>& brute = groups[w];
      part.expect(listed.size() == (std::size_t{1} << g) && listed == brute, [&] { return problem_w(w); });
      part.expect(!brute.empty() && find_real_spin(curve, w) == brute.front(), [&] { return problem_w(w); });
      for (const auto& q : brute) part.expect(spin_w1(curve, q) == w, [&] { return problem_w(w); });
    }
    if (k >= 1) {
      F2Vector bad = admissible.front().bits();
      bad.flip(0);
      bool threw = false;
      try {
        (void)find_real_spin(curve, RealW1(bad));
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::BadW1Parity;
      }
      part.expect(threw, [&] { return problem_w(RealW1(bad)); });
    }
  }

  {
    Recorder orbit(report, "f_minus_simply_transitive", curve);
    for (const auto& w : admissible) {
      const QuadraticForm base = find_real_spin(curve, w);
      std::set<QuadraticForm> seen;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        std::vector<long long> e(g);
        for (std::size_t j = 0; j < g; ++j) e[j] = static_cast<long long>((mask >> j) & 1U);
        seen.insert(act(curve, AutClass(curve.topology(), false, std::move(e)), base));
      }
      const std::vector<QuadraticForm>& brute = groups[w];
      orbit.expect(seen.size() == (std::size_t{1} << g) && std::equal(seen.begin(), seen.end(), brute.begin(), brute.end()),
                   [&] {
                     return json{{"command", "spin"}, {"subcommand", "enumerate"}, {"w1", json_io::to_json(w)}};
                   });
    }
  }

  {
    Recorder indep(report, "arf_delta_independent_of_representative", curve);
    for (const auto& [key, values] : observed) {
      const auto& [w, p] = key;
      indep.expect(values.size() == 1 && *values.begin() == arf_delta(curve, probes[p], w), [&] {
        return json{{"command", "verify"}, {"w1", json_io::to_json(w)}, {"automorphism", aut_json(curve, probes[p])}};
      });
    }
  }

  {
    Recorder actarf(report, "arf_shift_under_action", curve);
    std::map<std::pair<RealW1, std::size_t>, bool> delta;
    for (const auto& w : admissible) {
      for (std::size_t p = 0; p < probes.size(); ++p) delta[{w, p}] = arf_delta(curve, probes[p], w);
    }
    for (const auto& rec : real_forms) {
      for (std::size_t p = 0; p < probes.size(); ++p) {
        const AutClass& f = probes[p];
        const QuadraticForm moved = act(curve, f, rec.q);
        auto it = arf_of.find(moved);
        actarf.expect(it != arf_of.end() && (it->second != rec.arf) == delta[{rec.w, p}], [&] {
          return json{{"command", "spin"},
                      {"subcommand", "act"},
                      {"form", json_io::to_json(rec.q)},
                      {"automorphism", aut_json(curve, f)}};
        });
        actarf.expect(spin_w1(curve, moved) == rec.w, [&] {
          return json{{"command", "spin"},
                      {"subcommand", "act"},
                      {"form", json_io::to_json(rec.q)},
                      {"automorphism", aut_json(curve, f)}};
        });
      }
    }
  }

  {
    Recorder hom(report, "arf_delta_homomorphism", curve);
    for (int t = 0; t < options.random_pairs; ++t) {
      const AutClass x = random_aut(curve, rng);
      const AutClass y = random_aut(curve, rng);
      const RealW1& w = admissible[static_cast<std::size_t>(t) % admissible.size()];
      hom.expect(arf_delta(curve, compose(x, y), w) == (arf_delta(curve, x, w) != arf_delta(curve, y, w)), [&] {
        return json{{"command", "verify"},
                    {"w1", json_io::to_json(w)},
                    {"x", aut_json(curve, x)},
                    {"y", aut_json(curve, y)}};
      });
    }
  }
}

void check_arf_invariance(const RealCurve& curve, std::uint64_t seed, std::mt19937_64& rng,
                          const SuiteOptions& options, VerificationReport& report) {
  const int genus = curve.genus();
  const auto n = curve.dimension();
  Recorder sym(report, "random_symplectic_is_symplectic", curve);
  Recorder inv(report, "arf_basis_invariance", curve);
  std::vector<QuadraticForm> forms;
  if (genus <= 3) {
    for (const QuadraticForm& q : enumerate_all_quadratic_forms(genus, options.bound)) forms.push_back(q);
  } else {
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 16; ++i) {
      F2Vector v(n);
      for (std::size_t j = 0; j < n; ++j) v.set(j, bit(rng) == 1);
      forms.emplace_back(std::move(v));
    }
  }
  std::uint64_t counter = 0;
  for (const auto& q : forms) {
    for (int t = 0; t < options.symplectic_trials; ++t) {
      const std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + (++counter);
      const F2Matrix basis = random_symplectic(genus, s);
      sym.expect(is_symplectic(genus, basis), [&] { return json{{"command", "verify"}, {"symplectic_seed", s}}; });
      inv.expect(arf_in_basis(curve, q, basis) == arf(curve, q), [&] {
        return json{{"command", "spin"},
                    {"subcommand", "bordism"},
                    {"form", json_io::to_json(q)},
                    {"symplectic_seed", s}};
      });
    }
  }
}

void check_signs(const RealCurve& curve, std::mt19937_64& rng, const SuiteOptions& options,
                 VerificationReport& report) {
  const int genus = curve.genus();
  const int k = curve.components();
  const std::vector<RealW1> admissible = admissible_w1(curve);
  const std::vector<AutClass> probes = probe_automorphisms(curve, rng, options.random_pairs / 10);

  {
    Recorder affine(report, "s_top_independent_of_w", curve);
    for (const auto& f : probes) {
      const bool expected = s_top(curve, f);
      for (const auto& w : admissible) {
        affine.expect((beta0(curve, f, w) != arf_delta(curve, f, w)) == expected, [&] {
          return json{{"command", "verify"}, {"w1", json_io::to_json(w)}, {"automorphism", aut_json(curve, f)}};
        });
      }
    }
  }
  {
    Recorder table(report, "s_top_generator_table", curve);
    for (const auto& name : generator_names(curve)) {
      const int index = std::stoi(name.substr(1));
      const bool expected = !curve.separating() && name[0] == 'f' && index >= k;
      const AutClass f = generator(curve, name);
      table.expect(s_top(curve, f) == expected, [&] {
        return json{{"command", "detsign"},
                    {"bundle", json_io::to_json(RealBundle::make(curve, 1, genus + 1, canonical_w(curve)))},
                    {"automorphism", aut_json(curve, f)},
                    {"generator", name}};
      });
    }
  }
  {
    Recorder minus(report, "s_top_minus_one", curve);
    const bool expected = curve.separating() ? false : ((genus - k + 1) % 2 != 0);
    minus.expect(s_top(curve, AutClass::minus_one(curve)) == expected, [&] {
      return json{{"command", "verify"}, {"automorphism", aut_json(curve, AutClass::minus_one(curve))}};
    });
    if (curve.separating()) {
      Recorder vanish(report, "s_top_vanishes_separating", curve);
      for (const auto& f : probes) {
        vanish.expect(!s_top(curve, f), [&] { return json{{"command", "verify"}, {"automorphism", aut_json(curve, f)}}; });
      }
    }
  }
  {
    Recorder hom(report, "det_sign_homomorphism", curve);
    for (int t = 0; t < options.random_pairs; ++t) {
      const int rank = 1 + t % 3;
      const RealBundle bundle = random_bundle(curve, rank, options.max_degree, rng);
      const FullAutClass x = random_full(curve, bundle, rng);
      const FullAutClass y = random_full(curve, bundle, rng);
      const Sign sxy = det_orientation_sign(curve, bundle, compose(bundle, x, y));
      const Sign sx = det_orientation_sign(curve, bundle, x);
      const Sign sy = det_orientation_sign(curve, bundle, y);
      hom.expect(sxy == sx * sy, [&] {
        json j = detsign_problem(curve, bundle, x);
        j["other"] = json_io::to_json(curve, y);
        return j;
      });
    }
  }
  {
    Recorder rr(report, "minus_one_riemann_roch", curve);
    const int d = options.max_degree;
    for (const auto& bundle : rank_one_bundles(curve, d)) {
      const FullAutClass f{AutClass::minus_one(curve), std::nullopt};
      const bool odd = ((bundle.degree() + 1 - genus) % 2) != 0;
      const Sign expected = Sign::from_bit(odd);
      rr.expect(det_orientation_sign(curve, bundle, f) == expected && minus_id_sign(curve, bundle) == expected,
                [&] { return detsign_problem(curve, bundle, f); });
    }
    // Higher rank: the index of a rank-r operator is deg + r(1 - g).
    for (int rank = 2; rank <= 3; ++rank) {
      for (int t = 0; t < 8; ++t) {
        const RealBundle bundle = random_bundle(curve, rank, d, rng);
        const FullAutClass f{rank % 2 == 0 ? AutClass::identity(curve) : AutClass::minus_one(curve),
                             SLClass::minus_identity(bundle)};
        const bool odd = ((bundle.degree() + static_cast<long long>(rank) * (1 - genus)) % 2) != 0;
        rr.expect(det_orientation_sign(curve, bundle, f) == Sign::from_bit(odd),
                  [&] { return detsign_problem(curve, bundle, f); });
      }
    }
  }
  {
    Recorder degg(report, "arf_route_matches_s_n_route", curve);
    for (const auto& bundle : rank_one_bundles(curve, options.max_degree)) {
      if (((bundle.degree() - genus - 1) % 2) != 0) continue;
      for (const auto& f : probes) {
        const FullAutClass full{f, std::nullopt};
        const DetSignReport r = det_orientation_report(curve, bundle, full);
        const bool a = arf_delta(curve, f, bundle.w1());
        degg.expect(r.sign == Sign::from_bit(a) && r.arf_delta == a && r.s_n == a,
                    [&] { return detsign_problem(curve, bundle, full); });
      }
    }
  }
  {
    Recorder positive(report, "positive_spin_preserving_is_orientation_preserving", curve);
    Recorder sep(report, "separating_sign_counts_orientable_components", curve);
    const std::vector<RealBundle> bundles = rank_one_bundles(curve, 2);
    std::uniform_int_distribution<long long> exp(-3, 3);
    for (int t = 0; t < options.random_pairs / 10 + 1; ++t) {
      std::vector<long long> e(static_cast<std::size_t>(genus));
      for (std::size_t j = 0; j < e.size(); ++j) {
        e[j] = exp(rng);
        if (j + 1 < static_cast<std::size_t>(k)) e[j] *= 2;
      }
      const AutClass f(curve.topology(), false, std::move(e));
      const bool preserves = std::any_of(admissible.begin(), admissible.end(),
                                         [&](const RealW1& w) { return !arf_delta(curve, f, w); });
      if (preserves) {
        for (const auto& bundle : bundles) {
          const FullAutClass full{f, std::nullopt};
          positive.expect(det_orientation_sign(curve, bundle, full) == Sign::plus(),
                          [&] { return detsign_problem(curve, bundle, full); });
        }
      }
    }
    if (curve.separating()) {
      for (const auto& f : probes) {
        const F2Vector cs = component_signs(curve, f);
        for (const auto& bundle : bundles) {
          std::size_t count = 0;
          for (std::size_t i = 0; i < cs.size(); ++i) count += (!bundle.w1()[i] && cs.get(i)) ? 1 : 0;
          const FullAutClass full{f, std::nullopt};
          sep.expect(det_orientation_sign(curve, bundle, full) == Sign::from_bit(count % 2 == 1),
                     [&] { return detsign_problem(curve, bundle, full); });
        }
      }
    }
  }
  {
    Recorder pin(report, "pin_swap_parity", curve);
    for (int t = 0; t < options.random_pairs; ++t) {
      const int rank = 2 + t % 2;
      const RealBundle bundle = random_bundle(curve, rank, options.max_degree, rng);
      const SLClass sl = random_sl(bundle, rng);
      const std::size_t swapped = sl.res().popcount();
      const FullAutClass f{AutClass::identity(curve), sl};
      pin.expect(det_orientation_sign(curve, bundle, f) == Sign::from_bit(swapped % 2 == 1) &&
                     loop_orientability(bundle, sl) == (swapped % 2 == 0),
                 [&] { return detsign_problem(curve, bundle, f); });
      for (std::size_t i = 0; i < sl.size(); ++i) {
        std::vector<long long> e = sl.entries();
        e[i] += 1;
        const SLClass more = SLClass::canonical(bundle, std::move(e));
        pin.expect(loop_orientability(bundle, more) != loop_orientability(bundle, sl), [&] {
          return json{{"command", "loop"},
                      {"curve", curve_json(curve)},
                      {"bundle", json_io::to_json(bundle)},
                      {"clutching", json_io::to_json(more)}};
        });
      }
    }
  }
  {
    Recorder pic(report, "picard_functional", curve);
    for (long long d = 0; d <= 1; ++d) {
      for (const auto& bundle : rank_one_bundles(curve, 1)) {
        if (bundle.degree() != d) continue;
        const bool needs_basepoint = ((d - genus) % 2) == 0;
        const PicardResult r = picard_w1(curve, d, bundle.w1(), needs_basepoint ? std::optional<int>(0) : std::nullopt);
        auto problem = [&] {
          return json{{"command", "picard"},
                      {"curve", curve_json(curve)},
                      {"degree", d},
                      {"w1", json_io::to_json(bundle.w1())},
                      {"basepoint", needs_basepoint ? json(0) : json(nullptr)}};
        };
        pic.expect(r.w_used.total() == ((genus + 1) % 2 != 0), problem);
        for (const auto& f : probes) {
          pic.expect(r.evaluate(curve, f) == arf_delta(curve, f, r.w_used), problem);
        }
      }
    }
  }
}

}  // namespace

QuadraticForm QuadraticFormRange::iterator::operator*() const {
  F2Vector v(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) v.set(i, ((code_ >> (dimension_ - 1 - i)) & 1U) != 0);
  return QuadraticForm(std::move(v));
}

QuadraticFormRange::QuadraticFormRange(int genus, int bound) {
  check_bound(genus, bound);
  dimension_ = static_cast<std::size_t>(2 * genus);
}

QuadraticFormRange enumerate_all_quadratic_forms(int genus, int bound) { return QuadraticFormRange(genus, bound); }

std::vector<bool> quadratic_table(int genus, const QuadraticForm& q, int bound) {
  check_bound(genus, bound);
  const auto g = static_cast<std::size_t>(genus);
  const std::size_t n = 2 * g;
  if (q.dimension() != n) throw Error(ErrorCode::DimensionMismatch, "form dimension does not match genus");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> table(total, false);
  for (std::uint64_t x = 1; x < total; ++x) {
    const auto e = static_cast<std::size_t>(__builtin_ctzll(x));
    const std::uint64_t rest = x & (x - 1);
    const bool cross = ((rest >> partner(e, g)) & 1U) != 0;
    table[x] = (table[rest] != q.basis_values().get(e)) != cross;
  }
  return table;
}

F2Vector class_from_code(std::size_t dimension, std::uint64_t code) {
  F2Vector v(dimension);
  for (std::size_t i = 0; i < dimension; ++i) v.set(i, ((code >> i) & 1U) != 0);
  return v;
}

bool is_real_brute_force(const RealCurve& curve, const QuadraticForm& q) {
  const std::vector<bool> table = quadratic_table(curve.genus(), q, curve.genus());
  const auto n = curve.dimension();
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    if (table[x] != table[code_of(curve.c_star_mod2() * class_from_code(n, x))]) return false;
  }
  return true;
}

F2Matrix random_symplectic(int genus, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(2 * genus);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<F2Vector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(F2Vector::unit(n, j));
  const int steps = n == 0 ? 0 : 4 * static_cast<int>(n) + 4;
  for (int s = 0; s < steps; ++s) {
    F2Vector v(n);
    for (std::size_t j = 0; j < n; ++j) v.set(j, bit(rng) == 1);
    for (auto& c : columns) {
      if (symplectic_pairing(genus, c, v)) c += v;
    }
  }
  return F2Matrix::from_columns(columns, n);
}

bool is_symplectic(int genus, const F2Matrix& m) {
  const auto n = static_cast<std::size_t>(2 * genus);
  if (m.rows() != n || m.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const F2Vector ci = m.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_pairing(genus, ci, m.column(j)) !=
          symplectic_pairing(genus, F2Vector::unit(n, i), F2Vector::unit(n, j))) {
        return false;
      }
    }
  }
  return true;
}

bool arf_in_basis(const RealCurve& curve, const QuadraticForm& q, const F2Matrix& basis) {
  const auto g = static_cast<std::size_t>(curve.genus());
  if (basis.rows() != 2 * g || basis.cols() != 2 * g) {
    throw Error(ErrorCode::DimensionMismatch, "basis matrix must be 2g x 2g");
  }
  bool acc = false;
  for (std::size_t i = 0; i < g; ++i) {
    acc ^= quad_eval(curve, q, basis.column(i)) && quad_eval(curve, q, basis.column(i + g));
  }
  return acc;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& s : other.skipped) skipped.push_back(std::move(s));
}

VerificationReport verify_curve_suite(const RealCurve& curve, std::uint64_t seed, const SuiteOptions& options) {
  VerificationReport report;
  report.seed = seed;
  if (curve.genus() > options.bound) {
    report.skipped.push_back({curve.topology().to_string(), "genus exceeds the enumeration bound " +
                                                                std::to_string(options.bound)});
    return report;
  }
  std::seed_seq seq{seed, static_cast<std::uint64_t>(curve.genus()), static_cast<std::uint64_t>(curve.components()),
                    static_cast<std::uint64_t>(curve.separating() ? 1 : 0)};
  std::mt19937_64 rng(seq);
  check_curve_data(curve, report);
  check_autgroup(curve, rng, options, report);
  check_spin(curve, rng, options, report);
  check_arf_invariance(curve, seed, rng, options, report);
  check_signs(curve, rng, options, report);
  return report;
}

VerificationReport verify_topology(const Topology& topology, std::uint64_t seed, const SuiteOptions& options) {
  try {
    return verify_curve_suite(RealCurve::make(topology), seed, options);
  } catch (const Error& e) {
    VerificationReport report;
    report.seed = seed;
    report.skipped.push_back({topology.to_string(), e.what()});
    return report;
  }
}

VerificationReport verify_all(int max_genus, std::uint64_t seed, const SuiteOptions& options) {
  VerificationReport report;
  report.seed = seed;
  for (const auto& t : valid_topologies(max_genus)) report.merge(verify_topology(t, seed, options));
  return report;
}

}  // namespace realspin::oracle
