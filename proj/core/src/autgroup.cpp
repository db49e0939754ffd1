#include "realspin/autgroup.hpp"

#include <charconv>

#include "realspin/error.hpp"

namespace realspin {

namespace {

void check_owner(const RealCurve& curve, const AutClass& f) {
  if (f.topology() != curve.topology()) {
    throw Error(ErrorCode::CurveMismatch, "automorphism class belongs to " + f.topology().to_string() +
                                              ", not " + curve.topology().to_string());
  }
}

// Number of f-type exponent slots; the rest are g-type.
int f_slots(const RealCurve& curve) {
  return curve.separating() ? curve.components() + curve.m() - 1 : curve.genus();
}

}  // namespace

AutClass::AutClass(const Topology& topology, bool sign, std::vector<long long> exponents)
    : topology_(topology), sign_(sign), exponents_(std::move(exponents)) {
  if (exponents_.size() != static_cast<std::size_t>(topology_.genus)) {
    throw Error(ErrorCode::DimensionMismatch,
                "automorphism needs exactly g = " + std::to_string(topology_.genus) + " exponents, got " +
                    std::to_string(exponents_.size()));
  }
}

AutClass AutClass::identity(const RealCurve& curve) {
  return AutClass(curve.topology(), false, std::vector<long long>(static_cast<std::size_t>(curve.genus()), 0));
}

AutClass AutClass::minus_one(const RealCurve& curve) {
  return AutClass(curve.topology(), true, std::vector<long long>(static_cast<std::size_t>(curve.genus()), 0));
}

bool AutClass::is_identity() const noexcept {
  if (sign_) return false;
  for (auto e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

std::string generator_label(const RealCurve& curve, std::size_t slot) {
  const int s = static_cast<int>(slot);
  if (s < 0 || s >= curve.genus()) {
    throw Error(ErrorCode::IndexOutOfRange, "exponent slot " + std::to_string(slot) + " out of range");
  }
  const int nf = f_slots(curve);
  if (s < nf) return "f" + std::to_string(s + 1);
  return "g" + std::to_string(curve.components() + (s - nf));
}

std::vector<std::string> generator_names(const RealCurve& curve) {
  std::vector<std::string> names{"f0"};
  for (std::size_t s = 0; s < static_cast<std::size_t>(curve.genus()); ++s) {
    names.push_back(generator_label(curve, s));
  }
  return names;
}

AutClass generator(const RealCurve& curve, std::string_view name) {
  auto unknown = [&]() -> Error {
    return Error(ErrorCode::UnknownGenerator,
                 "unknown generator '" + std::string(name) + "' for " + curve.topology().to_string());
  };
  if (name == "minus_one") return AutClass::minus_one(curve);
  if (name.size() < 2 || (name[0] != 'f' && name[0] != 'g')) throw unknown();

  int index = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last) throw unknown();

  const int k = curve.components();
  const int nf = f_slots(curve);
  std::vector<long long> exps(static_cast<std::size_t>(curve.genus()), 0);

  if (name[0] == 'f') {
    if (index == 0) {
      // -1 = f_0 f_1 ... f_last, solved for f_0.
      const int last_oval = curve.separating() ? k - 1 : curve.genus();
      for (int i = 1; i <= last_oval; ++i) exps[static_cast<std::size_t>(i - 1)] = -1;
      return AutClass(curve.topology(), true, std::move(exps));
    }
    if (index < 1 || index > nf) throw unknown();
    exps[static_cast<std::size_t>(index - 1)] = 1;
    return AutClass(curve.topology(), false, std::move(exps));
  }
  if (!curve.separating() || index < k || index > k + curve.m() - 1) throw unknown();
  exps[static_cast<std::size_t>(nf + index - k)] = 1;
  return AutClass(curve.topology(), false, std::move(exps));
}

AutClass compose(const AutClass& x, const AutClass& y) {
  if (x.topology() != y.topology()) {
    throw Error(ErrorCode::CurveMismatch, "cannot compose classes over " + x.topology().to_string() +
                                              " and " + y.topology().to_string());
  }
  std::vector<long long> exps = x.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += y.exponent(i);
  return AutClass(x.topology(), x.sign() != y.sign(), std::move(exps));
}

AutClass invert(const AutClass& x) {
  std::vector<long long> exps = x.exponents();
  for (auto& e : exps) e = -e;
  return AutClass(x.topology(), x.sign(), std::move(exps));
}

AutClass power(const AutClass& x, long long n) {
  std::vector<long long> exps = x.exponents();
  for (auto& e : exps) e *= n;
  return AutClass(x.topology(), x.sign() && (n % 2 != 0), std::move(exps));
}

Covector ind2(const RealCurve& curve, const AutClass& f) {
  check_owner(curve, f);
  // The exponent slots are ordered like f_minus_basis(): ind(f_i) = a_i^pd,
  // ind(f_i) = (a_i + a_{i+m})^pd and ind(g_i) = (b_i - b_{i+m})^pd.
  Covector phi(F2Vector(curve.dimension()));
  const auto& basis = curve.f_minus_basis();
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (f.exponent(s) % 2 != 0) phi += basis[s];
  }
  return phi;
}

F2Vector component_signs(const RealCurve& curve, const AutClass& f) {
  check_owner(curve, f);
  const auto k = static_cast<std::size_t>(curve.components());
  F2Vector signs(k);
  signs.set(0, f.sign());
  // f_i (1 <= i <= k-1) is negative exactly on oval i; every other generator
  // is positive on the whole real part.
  for (std::size_t i = 1; i < k; ++i) signs.set(i, f.sign() != (f.exponent(i - 1) % 2 != 0));
  return signs;
}

}  // namespace realspin
