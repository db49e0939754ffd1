#include "realspin/curve.hpp"

#include "realspin/error.hpp"

namespace realspin {

std::string Topology::to_string() const {
  return "(g=" + std::to_string(genus) + ", k=" + std::to_string(components) + ", " +
         (separating ? "separating" : "non-separating") + ")";
}

std::vector<Topology> valid_topologies(int max_genus) {
  std::vector<Topology> out;
  for (int g = 0; g <= max_genus; ++g) {
    for (int k = 1; k <= g + 1; ++k) {
      for (bool sep : {false, true}) {
        try {
          (void)RealCurve::make(g, k, sep);
          out.push_back({g, k, sep});
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::DimensionMismatch, "integer matrix size mismatch");
  }
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const long long v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += v * other(k, j);
    }
  return out;
}

F2Matrix IntMatrix::reduce_mod2() const {
  F2Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, ((*this)(i, j) % 2) != 0);
  return m;
}

// ---------------------------------------------------------------------------

RealCurve RealCurve::make(int genus, int components, bool separating) {
  auto reject = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidTopology,
                Topology{genus, components, separating}.to_string() + ": " + why);
  };
  if (genus < 0) reject("genus must be >= 0");
  if (components < 1) reject("real part must be nonempty (k >= 1)");
  if (components > genus + 1) reject("Harnack bound k <= g + 1 violated");
  if (genus == 0 && !(components == 1 && separating)) {
    reject("genus 0 requires k = 1 and a separating curve");
  }
  if (separating && (components % 2) != ((genus + 1) % 2)) {
    reject("separating curve requires k = g + 1 mod 2");
  }
  if (!separating && components == genus + 1) {
    reject("a curve with k = g + 1 components is always separating");
  }
  return RealCurve(Topology{genus, components, separating});
}

std::size_t RealCurve::a_index(int i) const {
  if (i < 1 || i > genus()) {
    throw Error(ErrorCode::IndexOutOfRange, "a_" + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i - 1);
}

std::size_t RealCurve::b_index(int i) const {
  if (i < 1 || i > genus()) {
    throw Error(ErrorCode::IndexOutOfRange, "b_" + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(genus() + i - 1);
}

RealCurve::RealCurve(Topology t) : topology_(t) {
  const int g = t.genus;
  const int k = t.components;
  m_ = t.separating ? (g + 1 - k) / 2 : 0;
  const std::size_t n = dimension();

  c_star_ = IntMatrix(n);
  // Ovals a_1..a_{k-1} and their duals are common to both cases.
  for (int i = 1; i <= k - 1; ++i) {
    c_star_(a_index(i), a_index(i)) = 1;
    c_star_(b_index(i), b_index(i)) = -1;
  }
  if (!t.separating) {
    for (int i = k; i <= g; ++i) {
      c_star_(a_index(i), a_index(i)) = 1;
      c_star_(a_index(i), b_index(i)) = 1;
      c_star_(b_index(i), b_index(i)) = -1;
    }
  } else {
    for (int i = k; i <= k + m_ - 1; ++i) {
      const int j = i + m_;
      c_star_(a_index(j), a_index(i)) = 1;
      c_star_(a_index(i), a_index(j)) = 1;
      c_star_(b_index(j), b_index(i)) = -1;
      c_star_(b_index(i), b_index(j)) = -1;
    }
  }
  c_star_mod2_ = c_star_.reduce_mod2();

  for (int i = 1; i <= k - 1; ++i) f_plus_.push_back(a(i));
  if (!t.separating) {
    for (int i = k; i <= g; ++i) f_plus_.push_back(a(i));
  } else {
    for (int i = k; i <= k + m_ - 1; ++i) f_plus_.push_back(a(i) + a(i + m_));
    for (int i = k; i <= k + m_ - 1; ++i) f_plus_.push_back(b(i) + b(i + m_));
  }
  for (const auto& x : f_plus_) f_minus_.push_back(poincare_dual(x));
}

F2Vector RealCurve::real_component_class(int i) const {
  if (i < 0 || i >= components()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "real component " + std::to_string(i) + " out of range for " + topology_.to_string());
  }
  if (i >= 1) return a(i);
  F2Vector sum(dimension());
  const int last = separating() ? components() - 1 : genus();
  for (int j = 1; j <= last; ++j) sum.set(a_index(j), true);
  return sum;
}

Covector RealCurve::poincare_dual(const F2Vector& x) const {
  if (x.size() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "homology class has wrong length");
  }
  // dual(x)(e) = x . e; mod 2 this swaps the a and b halves.
  const auto g = static_cast<std::size_t>(genus());
  F2Vector phi(dimension());
  for (std::size_t i = 0; i < g; ++i) {
    phi.set(i, x.get(g + i));
    phi.set(g + i, x.get(i));
  }
  return Covector(std::move(phi));
}

F2Vector RealCurve::pd_inverse(const Covector& phi) const {
  const F2Vector& c = phi.coefficients();
  if (c.size() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "covector has wrong length");
  }
  const auto g = static_cast<std::size_t>(genus());
  F2Vector x(dimension());
  for (std::size_t i = 0; i < g; ++i) {
    x.set(i, c.get(g + i));
    x.set(g + i, c.get(i));
  }
  return x;
}

void RealCurve::check_w1(const RealW1& w) const {
  if (w.size() != static_cast<std::size_t>(components())) {
    throw Error(ErrorCode::DimensionMismatch,
                "w1 has " + std::to_string(w.size()) + " entries, curve has " +
                    std::to_string(components()) + " real components");
  }
}

}  // namespace realspin
