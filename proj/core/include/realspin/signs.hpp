#pragma once

#include <optional>
#include <vector>

#include "realspin/autgroup.hpp"
#include "realspin/curve.hpp"
#include "realspin/spin.hpp"

namespace realspin {

/// +1 or -1, multiplicative. Bit 0 maps to +1.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign from_bit(bool negative) { return Sign(negative ? -1 : 1); }
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_negative() const noexcept { return value_ < 0; }

  friend constexpr Sign operator*(Sign lhs, Sign rhs) { return Sign(lhs.value_ * rhs.value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_ = 1;
};

/// Complex vector bundle with real structure, up to isomorphism over the
/// identity: rank, degree and w1 of the real part, with sum(w1) = degree mod 2.
class RealBundle {
 public:
  /// Throws Error{InvalidBundle} or Error{DimensionMismatch}.
  static RealBundle make(const RealCurve& curve, int rank, long long degree, RealW1 w1);

  const Topology& topology() const noexcept { return topology_; }
  int rank() const noexcept { return rank_; }
  long long degree() const noexcept { return degree_; }
  const RealW1& w1() const noexcept { return w1_; }

  /// The line bundle det(N): same degree and w1, rank 1.
  RealBundle determinant() const;

  friend bool operator==(const RealBundle&, const RealBundle&) = default;

 private:
  RealBundle(Topology t, int rank, long long degree, RealW1 w1)
      : topology_(t), rank_(rank), degree_(degree), w1_(std::move(w1)) {}

  Topology topology_;
  int rank_ = 1;
  long long degree_ = 0;
  RealW1 w1_;
};

/// Class in pi_0(SL(RN)): one entry per real component. On a rank-2 bundle an
/// orientable component carries an integer (pi_1 SL_2(R) = Z); every other
/// entry only matters mod 2 and is stored as 0 or 1.
class SLClass {
 public:
  SLClass() = default;
  explicit SLClass(std::vector<long long> entries) : entries_(std::move(entries)) {}

  /// Reduces the entries that are only meaningful mod 2.
  /// Throws Error{RankMismatch} for rank 1 and Error{DimensionMismatch}.
  static SLClass canonical(const RealBundle& bundle, std::vector<long long> entries);
  static SLClass trivial(const RealBundle& bundle);
  /// The class of -id on a bundle of rank >= 2.
  static SLClass minus_identity(const RealBundle& bundle);

  const std::vector<long long>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// res: entries reduced mod 2.
  F2Vector res() const;

  friend bool operator==(const SLClass&, const SLClass&) = default;

 private:
  std::vector<long long> entries_;
};

SLClass compose(const RealBundle& bundle, const SLClass& x, const SLClass& y);

/// Class of an automorphism of a bundle of any rank, split as
/// (det f + id) o t with t of determinant 1. sl_part is empty for rank 1.
struct FullAutClass {
  AutClass det_part;
  std::optional<SLClass> sl_part;
};

FullAutClass compose(const RealBundle& bundle, const FullAutClass& x, const FullAutClass& y);

bool beta0(const RealCurve& curve, const AutClass& f, const RealW1& w);

/// The admissible class used to evaluate s_top: w[i] = 1 for i >= 1 and
/// w[0] = g + k mod 2.
RealW1 canonical_w(const RealCurve& curve);

bool s_top(const RealCurve& curve, const AutClass& f);

/// Throws Error{RankMismatch} unless bundle.rank() == 1.
bool s_n(const RealCurve& curve, const RealBundle& bundle, const AutClass& f);

/// Signature of the permutation of Pin structures. Throws Error{RankMismatch}
/// for rank 1.
Sign eps_pin(const RealBundle& bundle, const SLClass& sl);

struct DetSignReport {
  Sign sign;
  bool s_top = false;
  bool s_n = false;
  Sign eps_pin;
  /// A^{w1}(det f), defined only when deg = g + 1 mod 2.
  std::optional<bool> arf_delta;
};

DetSignReport det_orientation_report(const RealCurve& curve, const RealBundle& bundle, const FullAutClass& f);

/// Sign of the action of f on the orientations of the determinant bundle.
Sign det_orientation_sign(const RealCurve& curve, const RealBundle& bundle, const FullAutClass& f);

/// (-1)^(deg + 1 - g), from Riemann-Roch. Rank 1 only.
Sign minus_id_sign(const RealCurve& curve, const RealBundle& bundle);

/// Whether a loop of real Cauchy-Riemann operators with determinant-1
/// clutching data is orientable. Rank >= 2 only.
bool loop_orientability(const RealBundle& bundle, const SLClass& clutching);

enum class PicardCase { Picp, Pic };

struct PicardResult {
  PicardCase applies = PicardCase::Picp;
  RealW1 w_used;
  /// Values of w1 of the determinant bundle on the f_minus_basis() loops.
  F2Vector functional_on_f_minus;

  /// Evaluates the functional on the monodromy class of an automorphism.
  bool evaluate(const RealCurve& curve, const AutClass& monodromy) const;
};

/// First Stiefel-Whitney class of the determinant bundle over the real Picard
/// component of degree d and class w. When d = g mod 2 a real basepoint
/// component is required and w is flipped there.
/// Throws Error{BadParity} and Error{MissingBasepoint}.
PicardResult picard_w1(const RealCurve& curve, long long degree, const RealW1& w,
                       std::optional<int> basepoint = std::nullopt);

}  // namespace realspin
