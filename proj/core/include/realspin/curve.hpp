#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "realspin/f2_linear.hpp"

namespace realspin {

/// Topological type (g, k, separating) of a real curve with nonempty real part.
struct Topology {
  int genus = 0;
  int components = 1;
  bool separating = true;

  std::string to_string() const;
  friend auto operator<=>(const Topology&, const Topology&) = default;
};

/// All topological types accepted by RealCurve::make with genus <= max_genus,
/// ordered by (genus, components, separating).
std::vector<Topology> valid_topologies(int max_genus);

/// Square integer matrix; column j is the image of basis vector j.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  long long& operator()(std::size_t i, std::size_t j) { return data_.at(i * n_ + j); }
  long long operator()(std::size_t i, std::size_t j) const { return data_.at(i * n_ + j); }

  IntMatrix operator*(const IntMatrix& other) const;
  F2Matrix reduce_mod2() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<long long> data_;
};

/// A mod-2 cohomology class on Sigma_g, acting on homology by the dot product
/// with its coefficient vector in the basis a_1..a_g, b_1..b_g.
class Covector {
 public:
  Covector() = default;
  explicit Covector(F2Vector coefficients) : coeffs_(std::move(coefficients)) {}

  const F2Vector& coefficients() const noexcept { return coeffs_; }
  bool operator()(const F2Vector& x) const { return coeffs_.dot(x); }
  bool is_zero() const noexcept { return coeffs_.is_zero(); }

  Covector& operator+=(const Covector& other) {
    coeffs_ += other.coeffs_;
    return *this;
  }
  friend Covector operator+(Covector lhs, const Covector& rhs) { return lhs += rhs; }
  friend bool operator==(const Covector&, const Covector&) = default;

 private:
  F2Vector coeffs_;
};

/// A class w in H^1(R Sigma; Z/2): one bit per real component.
class RealW1 {
 public:
  RealW1() = default;
  explicit RealW1(F2Vector bits) : bits_(std::move(bits)) {}
  RealW1(std::initializer_list<int> bits) : bits_(bits) {}

  const F2Vector& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_.get(i); }
  /// w evaluated on the fundamental class of the whole real part.
  bool total() const noexcept { return bits_.parity(); }

  friend bool operator==(const RealW1&, const RealW1&) = default;
  friend auto operator<=>(const RealW1&, const RealW1&) = default;

 private:
  F2Vector bits_;
};

/// A real curve of genus g with k real components, together with its real
/// symplectic basis data.
///
/// Homology coordinates: index i < g is a_{i+1}, index g + i is b_{i+1}.
/// Component 0 carries the basepoint; component i >= 1 is the oval a_i.
/// For a separating curve m = (g + 1 - k) / 2 and, for k <= i <= k + m - 1,
/// the involution swaps a_i with a_{i+m} and b_i with -b_{i+m}. For a
/// non-separating curve the classes a_k..a_g are globally invariant with
/// c_*(b_i) = a_i - b_i.
///
/// Instances are immutable; all derived data is computed at construction.
class RealCurve {
 public:
  /// Throws Error{InvalidTopology} naming the violated condition.
  static RealCurve make(int genus, int components, bool separating);
  static RealCurve make(const Topology& t) { return make(t.genus, t.components, t.separating); }

  const Topology& topology() const noexcept { return topology_; }
  int genus() const noexcept { return topology_.genus; }
  int components() const noexcept { return topology_.components; }
  bool separating() const noexcept { return topology_.separating; }
  /// Genus of one half of Sigma minus its real part; 0 when non-separating.
  int m() const noexcept { return m_; }
  /// 2g.
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(2 * topology_.genus); }

  std::size_t a_index(int i) const;  // 1-based a_i
  std::size_t b_index(int i) const;  // 1-based b_i
  F2Vector a(int i) const { return F2Vector::unit(dimension(), a_index(i)); }
  F2Vector b(int i) const { return F2Vector::unit(dimension(), b_index(i)); }

  const IntMatrix& c_star_integer() const noexcept { return c_star_; }
  const F2Matrix& c_star_mod2() const noexcept { return c_star_mod2_; }

  /// Mod-2 homology class of real component i.
  F2Vector real_component_class(int i) const;

  /// Basis of F_+ (mod-2 reduction of the +1 eigenlattice), g vectors.
  const std::vector<F2Vector>& f_plus_basis() const noexcept { return f_plus_; }
  /// Poincare duals of f_plus_basis(); a basis of F^-.
  const std::vector<Covector>& f_minus_basis() const noexcept { return f_minus_; }

  Covector poincare_dual(const F2Vector& x) const;
  F2Vector pd_inverse(const Covector& phi) const;

  bool pairing(const F2Vector& x, const F2Vector& y) const {
    return symplectic_pairing(topology_.genus, x, y);
  }

  void check_w1(const RealW1& w) const;

  friend bool operator==(const RealCurve& lhs, const RealCurve& rhs) noexcept {
    return lhs.topology_ == rhs.topology_;
  }

 private:
  explicit RealCurve(Topology t);

  Topology topology_;
  int m_ = 0;
  IntMatrix c_star_;
  F2Matrix c_star_mod2_;
  std::vector<F2Vector> f_plus_;
  std::vector<Covector> f_minus_;
};

}  // namespace realspin
