#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "realspin/curve.hpp"

namespace realspin {

/// Homotopy class of a real function (Sigma_g, c) -> (C*, conj), i.e. of a real
/// automorphism of a line bundle over the identity.
///
/// Stored in canonical coordinates (-1)^sign * prod generator^exponent, where
/// the generators are f_1..f_g on a non-separating curve and
/// f_1..f_{k+m-1}, g_k..g_{k+m-1} on a separating one. f_0 is not a coordinate:
/// it is eliminated through the relation -1 = f_0 f_1 ... (product over the
/// oval generators, or over all f_i when non-separating).
class AutClass {
 public:
  AutClass() = default;
  AutClass(const Topology& topology, bool sign, std::vector<long long> exponents);

  static AutClass identity(const RealCurve& curve);
  static AutClass minus_one(const RealCurve& curve);

  const Topology& topology() const noexcept { return topology_; }
  bool sign() const noexcept { return sign_; }
  const std::vector<long long>& exponents() const noexcept { return exponents_; }
  long long exponent(std::size_t i) const { return exponents_.at(i); }

  bool is_identity() const noexcept;

  friend bool operator==(const AutClass&, const AutClass&) = default;

 private:
  Topology topology_;
  bool sign_ = false;
  std::vector<long long> exponents_;
};

/// Name of the generator attached to exponent slot `slot` ("f1", "g3", ...).
std::string generator_label(const RealCurve& curve, std::size_t slot);

/// Every generator name valid for the curve, f0 first; "minus_one" excluded.
std::vector<std::string> generator_names(const RealCurve& curve);

/// Accepts "f<i>", "g<i>" and "minus_one"; throws Error{UnknownGenerator}.
AutClass generator(const RealCurve& curve, std::string_view name);

AutClass compose(const AutClass& x, const AutClass& y);
AutClass invert(const AutClass& x);
AutClass power(const AutClass& x, long long n);

/// Mod-2 index morphism; the image lies in F^-.
Covector ind2(const RealCurve& curve, const AutClass& f);

/// Bit i is set iff the class is negative on real component i.
F2Vector component_signs(const RealCurve& curve, const AutClass& f);

inline bool is_identity(const AutClass& f) { return f.is_identity(); }

}  // namespace realspin
