#include "realspin/spin.hpp"

#include <cassert>

#include "realspin/error.hpp"

namespace realspin {

namespace {

void check_form(const RealCurve& curve, const QuadraticForm& q) {
  if (q.dimension() != curve.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "quadratic form has " + std::to_string(q.dimension()) +
                                                  " basis values, curve needs " +
                                                  std::to_string(curve.dimension()));
  }
}

void require_real(const RealCurve& curve, const QuadraticForm& q) {
  if (!is_real_spin(curve, q)) {
    throw Error(ErrorCode::NotRealSpin,
                "form " + q.basis_values().to_string() + " is not invariant under the real structure");
  }
}

void require_admissible(const RealCurve& curve, const RealW1& w) {
  curve.check_w1(w);
  const bool expected = (curve.genus() + 1) % 2 != 0;
  if (w.total() != expected) {
    throw Error(ErrorCode::BadW1Parity, "w1 = " + w.bits().to_string() + " must sum to g + 1 mod 2");
  }
}

// The polarization cross term sum_{i<j} x_i x_j (e_i . e_j); only the pairs
// (a_l, b_l) contribute.
bool cross_term(int genus, const F2Vector& x) {
  const auto g = static_cast<std::size_t>(genus);
  bool acc = false;
  for (std::size_t l = 0; l < g; ++l) acc ^= x.get(l) && x.get(g + l);
  return acc;
}

}  // namespace

QuadraticForm::QuadraticForm(const F2Vector& q_a, const F2Vector& q_b) : values_(q_a.size() + q_b.size()) {
  if (q_a.size() != q_b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "q_a and q_b must have the same length");
  }
  for (std::size_t i = 0; i < q_a.size(); ++i) {
    values_.set(i, q_a.get(i));
    values_.set(q_a.size() + i, q_b.get(i));
  }
}

F2Vector QuadraticForm::q_a() const {
  const std::size_t g = values_.size() / 2;
  F2Vector out(g);
  for (std::size_t i = 0; i < g; ++i) out.set(i, values_.get(i));
  return out;
}

F2Vector QuadraticForm::q_b() const {
  const std::size_t g = values_.size() / 2;
  F2Vector out(g);
  for (std::size_t i = 0; i < g; ++i) out.set(i, values_.get(g + i));
  return out;
}

bool quad_eval(const RealCurve& curve, const QuadraticForm& q, const F2Vector& x) {
  check_form(curve, q);
  if (x.size() != curve.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "homology class has wrong length");
  }
  return q.basis_values().dot(x) != cross_term(curve.genus(), x);
}

bool is_real_spin(const RealCurve& curve, const QuadraticForm& q) {
  check_form(curve, q);
  // q o c_* - q is linear, so checking the basis suffices.
  const auto& c = curve.c_star_mod2();
  for (std::size_t j = 0; j < curve.dimension(); ++j) {
    if (quad_eval(curve, q, c.column(j)) != q.basis_values().get(j)) return false;
  }
  return true;
}

bool arf(const RealCurve& curve, const QuadraticForm& q) {
  check_form(curve, q);
  const auto g = static_cast<std::size_t>(curve.genus());
  bool acc = false;
  for (std::size_t i = 0; i < g; ++i) acc ^= q.basis_values().get(i) && q.basis_values().get(g + i);
  return acc;
}

RealW1 spin_w1(const RealCurve& curve, const QuadraticForm& q) {
  require_real(curve, q);
  const auto k = static_cast<std::size_t>(curve.components());
  F2Vector w(k);
  for (std::size_t i = 0; i < k; ++i) {
    w.set(i, !quad_eval(curve, q, curve.real_component_class(static_cast<int>(i))));
  }
  return RealW1(std::move(w));
}

QuadraticForm act(const RealCurve& curve, const AutClass& f, const QuadraticForm& q) {
  require_real(curve, q);
  // (f.q)(e_j) = q(e_j) + ind2(f)(e_j), and ind2(f)(e_j) is coefficient j.
  return QuadraticForm(q.basis_values() + ind2(curve, f).coefficients());
}

namespace {

// Linear system over the 2g basis values: realness on each basis vector plus
// q([R Sigma]_i) = 1 + w[i] on each component.
AffineSolution solve_real_spin(const RealCurve& curve, const RealW1& w) {
  require_admissible(curve, w);
  const std::size_t n = curve.dimension();
  const int g = curve.genus();
  const auto& c = curve.c_star_mod2();

  F2Matrix a(std::vector<F2Vector>{}, n);
  std::vector<int> rhs;
  for (std::size_t j = 0; j < n; ++j) {
    F2Vector image = c.column(j);
    F2Vector row = image;
    row.flip(j);
    a.append_row(std::move(row));
    rhs.push_back(cross_term(g, image) ? 1 : 0);
  }
  for (int i = 0; i < curve.components(); ++i) {
    F2Vector rc = curve.real_component_class(i);
    const bool target = !w[static_cast<std::size_t>(i)];
    rhs.push_back((target != cross_term(g, rc)) ? 1 : 0);
    a.append_row(std::move(rc));
  }
  auto sol = gf2_solve_affine(a, F2Vector::from_bits(rhs));
  if (!sol) {
    // Unreachable for admissible w on a valid curve.
    throw Error(ErrorCode::BadW1Parity, "no real Spin structure with w1 = " + w.bits().to_string());
  }
  assert(sol->kernel_basis.size() == static_cast<std::size_t>(g));
  return *sol;
}

}  // namespace

QuadraticForm find_real_spin(const RealCurve& curve, const RealW1& w) {
  return QuadraticForm(solve_real_spin(curve, w).lex_min());
}

std::vector<QuadraticForm> enumerate_real_spin(const RealCurve& curve, const RealW1& w) {
  std::vector<QuadraticForm> out;
  for (auto& v : solve_real_spin(curve, w).enumerate()) out.emplace_back(std::move(v));
  return out;
}

std::vector<RealW1> admissible_w1(const RealCurve& curve) {
  const auto k = static_cast<std::size_t>(curve.components());
  const bool parity = (curve.genus() + 1) % 2 != 0;
  std::vector<RealW1> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    F2Vector w(k);
    for (std::size_t i = 0; i < k; ++i) w.set(i, ((code >> (k - 1 - i)) & 1U) != 0);
    if (w.parity() == parity) out.emplace_back(std::move(w));
  }
  return out;
}

bool arf_delta(const RealCurve& curve, const AutClass& f, const RealW1& w) {
  const AffineSolution sol = solve_real_spin(curve, w);
  const QuadraticForm q(sol.lex_min());
  const F2Vector dual = curve.pd_inverse(ind2(curve, f));
  const bool value = quad_eval(curve, q, dual);
#ifndef NDEBUG
  // Moving q inside its orbit does not change the value.
  for (const auto& kappa : sol.kernel_basis) {
    assert(quad_eval(curve, QuadraticForm(q.basis_values() + kappa), dual) == value);
  }
#endif
  return value;
}

BordismClass bordism_class(const RealCurve& curve, const QuadraticForm& q) {
  return BordismClass{spin_w1(curve, q), arf(curve, q)};
}

}  // namespace realspin
