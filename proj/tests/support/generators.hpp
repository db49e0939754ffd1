#pragma once

// Hand-rolled random generators for property tests. Every generator draws
// from one seeded engine so a failing case is reproduced by its seed.

#include <cstdint>
#include <random>
#include <vector>

#include "realspin/autgroup.hpp"
#include "realspin/curve.hpp"
#include "realspin/f2_linear.hpp"
#include "realspin/signs.hpp"
#include "realspin/spin.hpp"

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  bool bit() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  realspin::F2Vector vector(std::size_t n) {
    realspin::F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, bit());
    return v;
  }

  realspin::F2Matrix matrix(std::size_t rows, std::size_t cols) {
    std::vector<realspin::F2Vector> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(vector(cols));
    return realspin::F2Matrix(std::move(r), cols);
  }

  realspin::Topology topology(int max_genus) {
    const auto all = realspin::valid_topologies(max_genus);
    return all[static_cast<std::size_t>(integer(0, static_cast<long long>(all.size()) - 1))];
  }

  realspin::AutClass aut(const realspin::RealCurve& curve, long long spread = 4) {
    std::vector<long long> e(static_cast<std::size_t>(curve.genus()));
    for (auto& x : e) x = integer(-spread, spread);
    return realspin::AutClass(curve.topology(), bit(), std::move(e));
  }

  realspin::RealW1 w1(const realspin::RealCurve& curve, bool parity) {
    realspin::F2Vector w = vector(static_cast<std::size_t>(curve.components()));
    if (w.parity() != parity) w.flip(0);
    return realspin::RealW1(std::move(w));
  }

  realspin::RealW1 admissible(const realspin::RealCurve& curve) { return w1(curve, curve.genus() % 2 == 0); }

  realspin::QuadraticForm form(const realspin::RealCurve& curve) {
    return realspin::QuadraticForm(vector(curve.dimension()));
  }

  realspin::QuadraticForm real_form(const realspin::RealCurve& curve) {
    auto forms = realspin::enumerate_real_spin(curve, admissible(curve));
    return forms[static_cast<std::size_t>(integer(0, static_cast<long long>(forms.size()) - 1))];
  }

  realspin::RealBundle bundle(const realspin::RealCurve& curve, int rank, long long max_degree = 6) {
    const long long d = integer(-max_degree, max_degree);
    return realspin::RealBundle::make(curve, rank, d, w1(curve, (d % 2) != 0));
  }

  realspin::SLClass sl(const realspin::RealBundle& bundle) {
    std::vector<long long> e(bundle.w1().size());
    for (auto& x : e) x = integer(-4, 4);
    return realspin::SLClass::canonical(bundle, std::move(e));
  }

  realspin::FullAutClass full(const realspin::RealCurve& curve, const realspin::RealBundle& bundle) {
    realspin::FullAutClass f{aut(curve), std::nullopt};
    if (bundle.rank() >= 2) f.sl_part = sl(bundle);
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
