#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace realspin {

/// Fixed-length vector over the two-element field, packed 64 bits per word.
///
/// The length is set at construction; every binary operation checks that both
/// operands share it and throws Error{DimensionMismatch} otherwise. Ordering is
/// lexicographic with index 0 most significant.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size);
  F2Vector(std::initializer_list<int> bits);

  static F2Vector from_bits(const std::vector<int>& bits);
  static F2Vector unit(std::size_t size, std::size_t index);
  static F2Vector ones(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);
  bool operator[](std::size_t i) const { return get(i); }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  /// Sum of the entries mod 2.
  bool parity() const noexcept { return (popcount() & 1U) != 0; }
  /// Standard dot product mod 2.
  bool dot(const F2Vector& other) const;
  /// Index of the first set bit, or size() when the vector is zero.
  std::size_t leading_index() const noexcept;

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector lhs, const F2Vector& rhs) {
    lhs += rhs;
    return lhs;
  }

  std::vector<int> to_bits() const;
  std::string to_string() const;

  friend bool operator==(const F2Vector& lhs, const F2Vector& rhs) noexcept;
  friend std::strong_ordering operator<=>(const F2Vector& lhs, const F2Vector& rhs) noexcept;

 private:
  void check_same_size(const F2Vector& other) const;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Rectangular matrix over the two-element field stored as rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  explicit F2Matrix(std::vector<F2Vector> rows);
  /// Builds a matrix with `cols` columns; `rows` may be empty.
  F2Matrix(std::vector<F2Vector> rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix zero(std::size_t rows, std::size_t cols) { return F2Matrix(rows, cols); }
  static F2Matrix from_columns(const std::vector<F2Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const F2Vector& row(std::size_t i) const { return rows_.at(i); }
  F2Vector column(std::size_t j) const;
  bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
  void set(std::size_t i, std::size_t j, bool value) { rows_.at(i).set(j, value); }
  void append_row(F2Vector row);

  F2Vector operator*(const F2Vector& x) const;
  F2Matrix operator*(const F2Matrix& other) const;
  F2Matrix operator+(const F2Matrix& other) const;
  F2Matrix transposed() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::vector<F2Vector> rows_;
  std::size_t cols_ = 0;
};

struct AffineSolution {
  F2Vector particular;
  std::vector<F2Vector> kernel_basis;

  /// Lexicographically smallest element of particular + span(kernel_basis).
  F2Vector lex_min() const;
  /// All 2^dim solutions in lexicographic order. Intended for small kernels.
  std::vector<F2Vector> enumerate() const;
};

/// Solves A x = b. Returns std::nullopt when b is outside the column space.
///
/// Elimination uses leftmost pivots, the particular solution has every free
/// variable set to zero, and the kernel basis holds one vector per free column
/// (in column order), so results are reproducible across runs.
std::optional<AffineSolution> gf2_solve_affine(const F2Matrix& a, const F2Vector& b);

std::size_t gf2_rank(const F2Matrix& a);

/// Intersection pairing on H_1(Sigma_g; Z/2) in the basis a_1..a_g, b_1..b_g.
bool symplectic_pairing(int genus, const F2Vector& x, const F2Vector& y);

}  // namespace realspin
