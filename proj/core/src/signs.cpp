#include "realspin/signs.hpp"

#include "realspin/error.hpp"

namespace realspin {

namespace {

bool odd(long long v) { return v % 2 != 0; }

void check_same_curve(const RealCurve& curve, const RealBundle& bundle) {
  if (curve.topology() != bundle.topology()) {
    throw Error(ErrorCode::CurveMismatch, "bundle lives over " + bundle.topology().to_string() + ", not " +
                                              curve.topology().to_string());
  }
}

void require_rank_one(const RealBundle& bundle, const char* what) {
  if (bundle.rank() != 1) {
    throw Error(ErrorCode::RankMismatch,
                std::string(what) + " needs a rank-1 bundle, got rank " + std::to_string(bundle.rank()));
  }
}

void require_higher_rank(const RealBundle& bundle, const char* what) {
  if (bundle.rank() < 2) {
    throw Error(ErrorCode::RankMismatch, std::string(what) + " needs a bundle of rank >= 2");
  }
}

void check_sl_size(const RealBundle& bundle, std::size_t size) {
  if (size != bundle.w1().size()) {
    throw Error(ErrorCode::DimensionMismatch, "SL class needs one entry per real component (" +
                                                  std::to_string(bundle.w1().size()) + "), got " +
                                                  std::to_string(size));
  }
}

}  // namespace

RealBundle RealBundle::make(const RealCurve& curve, int rank, long long degree, RealW1 w1) {
  if (rank < 1) throw Error(ErrorCode::InvalidBundle, "rank must be >= 1");
  curve.check_w1(w1);
  if (w1.total() != odd(degree)) {
    throw Error(ErrorCode::InvalidBundle, "sum of w1 = " + w1.bits().to_string() +
                                              " must equal the degree " + std::to_string(degree) + " mod 2");
  }
  return RealBundle(curve.topology(), rank, degree, std::move(w1));
}

RealBundle RealBundle::determinant() const { return RealBundle(topology_, 1, degree_, w1_); }

// ---------------------------------------------------------------------------

SLClass SLClass::canonical(const RealBundle& bundle, std::vector<long long> entries) {
  require_higher_rank(bundle, "an SL class");
  check_sl_size(bundle, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool integral = bundle.rank() == 2 && !bundle.w1()[i];
    if (!integral) entries[i] = odd(entries[i]) ? 1 : 0;
  }
  return SLClass(std::move(entries));
}

SLClass SLClass::trivial(const RealBundle& bundle) {
  return canonical(bundle, std::vector<long long>(bundle.w1().size(), 0));
}

SLClass SLClass::minus_identity(const RealBundle& bundle) {
  require_higher_rank(bundle, "-id in SL");
  // Even rank: -id has determinant 1 and res(-id) = w1. On an orientable
  // rank-2 component -id is the constant loop, homotopic to the identity.
  // Odd rank: -id is not in SL; its class is (det = -1) + id, so the SL part
  // is trivial.
  std::vector<long long> entries(bundle.w1().size(), 0);
  if (bundle.rank() % 2 == 0) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = bundle.w1()[i] ? 1 : 0;
  }
  return canonical(bundle, std::move(entries));
}

F2Vector SLClass::res() const {
  F2Vector r(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) r.set(i, odd(entries_[i]));
  return r;
}

SLClass compose(const RealBundle& bundle, const SLClass& x, const SLClass& y) {
  check_sl_size(bundle, x.size());
  check_sl_size(bundle, y.size());
  std::vector<long long> sum = x.entries();
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y.entries()[i];
  return SLClass::canonical(bundle, std::move(sum));
}

FullAutClass compose(const RealBundle& bundle, const FullAutClass& x, const FullAutClass& y) {
  FullAutClass out{compose(x.det_part, y.det_part), std::nullopt};
  if (x.sl_part.has_value() != y.sl_part.has_value()) {
    throw Error(ErrorCode::RankMismatch, "cannot compose classes with and without an SL part");
  }
  if (x.sl_part) out.sl_part = compose(bundle, *x.sl_part, *y.sl_part);
  return out;
}

// ---------------------------------------------------------------------------

bool beta0(const RealCurve& curve, const AutClass& f, const RealW1& w) {
  curve.check_w1(w);
  const F2Vector signs = component_signs(curve, f);
  bool acc = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i]) acc ^= signs.get(i);
  }
  return acc;
}

RealW1 canonical_w(const RealCurve& curve) {
  F2Vector w = F2Vector::ones(static_cast<std::size_t>(curve.components()));
  w.set(0, (curve.genus() + curve.components()) % 2 != 0);
  return RealW1(std::move(w));
}

bool s_top(const RealCurve& curve, const AutClass& f) {
  const RealW1 w = canonical_w(curve);
  return beta0(curve, f, w) != arf_delta(curve, f, w);
}

bool s_n(const RealCurve& curve, const RealBundle& bundle, const AutClass& f) {
  check_same_curve(curve, bundle);
  require_rank_one(bundle, "s_N");
  return s_top(curve, f) != beta0(curve, f, bundle.w1());
}

Sign eps_pin(const RealBundle& bundle, const SLClass& sl) {
  require_higher_rank(bundle, "eps_pin");
  check_sl_size(bundle, sl.size());
  // Each component whose two Pin structures are swapped is one transposition.
  return Sign::from_bit(sl.res().parity());
}

DetSignReport det_orientation_report(const RealCurve& curve, const RealBundle& bundle, const FullAutClass& f) {
  check_same_curve(curve, bundle);
  if (bundle.rank() == 1 && f.sl_part) {
    throw Error(ErrorCode::RankMismatch, "a rank-1 bundle has no SL part");
  }
  if (bundle.rank() >= 2 && !f.sl_part) {
    throw Error(ErrorCode::RankMismatch, "a bundle of rank >= 2 needs an SL part");
  }
  const RealBundle line = bundle.determinant();
  DetSignReport r;
  r.s_top = s_top(curve, f.det_part);
  r.s_n = s_n(curve, line, f.det_part);
  r.eps_pin = f.sl_part ? eps_pin(bundle, *f.sl_part) : Sign::plus();
  r.sign = r.eps_pin * Sign::from_bit(r.s_n);
  if (odd(bundle.degree()) == odd(curve.genus() + 1)) {
    r.arf_delta = arf_delta(curve, f.det_part, bundle.w1());
  }
  return r;
}

Sign det_orientation_sign(const RealCurve& curve, const RealBundle& bundle, const FullAutClass& f) {
  return det_orientation_report(curve, bundle, f).sign;
}

Sign minus_id_sign(const RealCurve& curve, const RealBundle& bundle) {
  check_same_curve(curve, bundle);
  require_rank_one(bundle, "minus_id_sign");
  return Sign::from_bit(odd(bundle.degree() + 1 - curve.genus()));
}

bool loop_orientability(const RealBundle& bundle, const SLClass& clutching) {
  require_higher_rank(bundle, "loop_orientability");
  return eps_pin(bundle, clutching) == Sign::plus();
}

// ---------------------------------------------------------------------------

bool PicardResult::evaluate(const RealCurve& curve, const AutClass& monodromy) const {
  if (monodromy.topology() != curve.topology()) {
    throw Error(ErrorCode::CurveMismatch, "monodromy class belongs to another curve");
  }
  bool acc = false;
  for (std::size_t s = 0; s < functional_on_f_minus.size(); ++s) {
    if (odd(monodromy.exponent(s))) acc ^= functional_on_f_minus.get(s);
  }
  return acc;
}

PicardResult picard_w1(const RealCurve& curve, long long degree, const RealW1& w, std::optional<int> basepoint) {
  curve.check_w1(w);
  if (w.total() != odd(degree)) {
    throw Error(ErrorCode::BadParity, "w1 = " + w.bits().to_string() + " does not sum to the degree " +
                                          std::to_string(degree) + " mod 2");
  }
  PicardResult result;
  result.w_used = w;
  if (odd(degree) == odd(curve.genus() - 1)) {
    result.applies = PicardCase::Picp;
  } else {
    if (!basepoint) {
      throw Error(ErrorCode::MissingBasepoint, "degree = g mod 2 needs a basepoint component");
    }
    if (*basepoint < 0 || *basepoint >= curve.components()) {
      throw Error(ErrorCode::IndexOutOfRange, "basepoint component " + std::to_string(*basepoint) +
                                                  " out of range");
    }
    result.applies = PicardCase::Pic;
    F2Vector flipped = w.bits();
    flipped.flip(static_cast<std::size_t>(*basepoint));
    result.w_used = RealW1(std::move(flipped));
  }
  // A^w factors through ind2, so its value on the j-th F^- generator is its
  // value on the generator class occupying exponent slot j.
  const auto g = static_cast<std::size_t>(curve.genus());
  result.functional_on_f_minus = F2Vector(g);
  for (std::size_t s = 0; s < g; ++s) {
    std::vector<long long> exps(g, 0);
    exps[s] = 1;
    result.functional_on_f_minus.set(s, arf_delta(curve, AutClass(curve.topology(), false, exps), result.w_used));
  }
  return result;
}

}  // namespace realspin
