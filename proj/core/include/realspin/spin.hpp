#pragma once

#include <vector>

#include "realspin/autgroup.hpp"
#include "realspin/curve.hpp"

namespace realspin {

/// Quadratic refinement q of the mod-2 intersection form, recorded by its
/// values on the basis a_1..a_g, b_1..b_g. Values on other classes follow from
/// q(x + y) = q(x) + q(y) + x.y.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(F2Vector basis_values) : values_(std::move(basis_values)) {}
  QuadraticForm(const F2Vector& q_a, const F2Vector& q_b);

  const F2Vector& basis_values() const noexcept { return values_; }
  F2Vector q_a() const;
  F2Vector q_b() const;
  std::size_t dimension() const noexcept { return values_.size(); }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
  friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  F2Vector values_;
};

/// Real Spin bordism class: first Stiefel-Whitney class and Arf invariant.
struct BordismClass {
  RealW1 w1;
  bool arf = false;

  friend bool operator==(const BordismClass&, const BordismClass&) = default;
};

bool quad_eval(const RealCurve& curve, const QuadraticForm& q, const F2Vector& x);

/// q is real iff it is invariant under the involution.
bool is_real_spin(const RealCurve& curve, const QuadraticForm& q);

bool arf(const RealCurve& curve, const QuadraticForm& q);

/// w[i] = 1 + q([R Sigma]_i). Throws Error{NotRealSpin}.
RealW1 spin_w1(const RealCurve& curve, const QuadraticForm& q);

/// Translation action: (f.q)(x) = q(x) + ind2(f)(x). Throws Error{NotRealSpin}.
QuadraticForm act(const RealCurve& curve, const AutClass& f, const QuadraticForm& q);

/// Lexicographically smallest real Spin structure with first Stiefel-Whitney
/// class w, found by solving the linear system rather than enumerating.
/// Throws Error{BadW1Parity} unless sum(w) = g + 1 mod 2.
QuadraticForm find_real_spin(const RealCurve& curve, const RealW1& w);

/// All 2^g real Spin structures with class w, in lexicographic order.
std::vector<QuadraticForm> enumerate_real_spin(const RealCurve& curve, const RealW1& w);

/// All 2^(k-1) classes w with sum(w) = g + 1 mod 2, in lexicographic order.
std::vector<RealW1> admissible_w1(const RealCurve& curve);

/// The Arf shift A^w(f) = q((ind2 f)^pd) for any q of class w.
bool arf_delta(const RealCurve& curve, const AutClass& f, const RealW1& w);

BordismClass bordism_class(const RealCurve& curve, const QuadraticForm& q);

}  // namespace realspin
