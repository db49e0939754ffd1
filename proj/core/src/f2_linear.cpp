#include "realspin/f2_linear.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "realspin/error.hpp"

namespace realspin {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::uint64_t mask_of(std::size_t i) { return std::uint64_t{1} << (i % kWordBits); }

[[noreturn]] void throw_mismatch(std::size_t lhs, std::size_t rhs) {
  throw Error(ErrorCode::DimensionMismatch,
              "F2 length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs));
}

}  // namespace

F2Vector::F2Vector(std::size_t size) : words_(word_count(size), 0), size_(size) {}

F2Vector::F2Vector(std::initializer_list<int> bits) : F2Vector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, (b & 1) != 0);
}

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw Error(ErrorCode::InvalidInput, "bit entries must be 0 or 1");
    }
    v.set(i, bits[i] == 1);
  }
  return v;
}

F2Vector F2Vector::unit(std::size_t size, std::size_t index) {
  F2Vector v(size);
  v.set(index, true);
  return v;
}

F2Vector F2Vector::ones(std::size_t size) {
  F2Vector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i, true);
  return v;
}

bool F2Vector::get(std::size_t i) const {
  if (i >= size_) {
    throw Error(ErrorCode::IndexOutOfRange, "F2Vector index " + std::to_string(i) + " out of range");
  }
  return (words_[i / kWordBits] & mask_of(i)) != 0;
}

void F2Vector::set(std::size_t i, bool value) {
  if (i >= size_) {
    throw Error(ErrorCode::IndexOutOfRange, "F2Vector index " + std::to_string(i) + " out of range");
  }
  if (value) {
    words_[i / kWordBits] |= mask_of(i);
  } else {
    words_[i / kWordBits] &= ~mask_of(i);
  }
}

void F2Vector::flip(std::size_t i) { set(i, !get(i)); }

bool F2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool F2Vector::dot(const F2Vector& other) const {
  check_same_size(other);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t F2Vector::leading_index() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::vector<int> F2Vector::to_bits() const {
  std::vector<int> bits(size_);
  for (std::size_t i = 0; i < size_; ++i) bits[i] = get(i) ? 1 : 0;
  return bits;
}

std::string F2Vector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

bool operator==(const F2Vector& lhs, const F2Vector& rhs) noexcept {
  return lhs.size_ == rhs.size_ && lhs.words_ == rhs.words_;
}

std::strong_ordering operator<=>(const F2Vector& lhs, const F2Vector& rhs) noexcept {
  const std::size_t n = std::min(lhs.size_, rhs.size_);
  for (std::size_t i = 0; i < n; ++i) {
    const bool a = lhs.get(i);
    const bool b = rhs.get(i);
    if (a != b) return a ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return lhs.size_ <=> rhs.size_;
}

void F2Vector::check_same_size(const F2Vector& other) const {
  if (size_ != other.size_) throw_mismatch(size_, other.size_);
}

// ---------------------------------------------------------------------------

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, F2Vector(cols)), cols_(cols) {}

F2Matrix::F2Matrix(std::vector<F2Vector> rows)
    : F2Matrix(std::move(rows), 0) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw_mismatch(cols_, r.size());
  }
}

F2Matrix::F2Matrix(std::vector<F2Vector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (cols_ != 0 && r.size() != cols_) throw_mismatch(cols_, r.size());
  }
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<F2Vector>& columns, std::size_t rows) {
  F2Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw_mismatch(rows, columns[j].size());
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j].get(i));
  }
  return m;
}

F2Vector F2Matrix::column(std::size_t j) const {
  F2Vector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.set(i, rows_[i].get(j));
  return c;
}

void F2Matrix::append_row(F2Vector row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw_mismatch(cols_, row.size());
  rows_.push_back(std::move(row));
}

F2Vector F2Matrix::operator*(const F2Vector& x) const {
  if (x.size() != cols_) throw_mismatch(cols_, x.size());
  F2Vector y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y.set(i, rows_[i].dot(x));
  return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (other.rows() != cols_) throw_mismatch(cols_, other.rows());
  F2Matrix out(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    F2Vector acc(other.cols());
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i].get(k)) acc += other.rows_[k];
    }
    out.rows_[i] = std::move(acc);
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& other) const {
  if (rows() != other.rows()) throw_mismatch(rows(), other.rows());
  if (cols_ != other.cols_) throw_mismatch(cols_, other.cols_);
  F2Matrix out = *this;
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] += other.rows_[i];
  return out;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[i].get(j)) t.set(j, i, true);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

struct Echelon {
  std::vector<F2Vector> rows;       // rows[0..pivots.size()) are the pivot rows
  std::vector<std::size_t> pivots;  // pivot column of each pivot row
};

// Reduced row echelon form with leftmost pivot selection; rows are scanned in order.
Echelon reduce(std::vector<F2Vector> rows, std::size_t cols) {
  Echelon e;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] += rows[next];
    }
    e.pivots.push_back(c);
    ++next;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

F2Vector AffineSolution::lex_min() const {
  // In reduced echelon form each kernel vector owns a pivot column that is
  // zero in all the others, so clearing pivots greedily gives the minimum.
  F2Vector x = particular;
  const Echelon e = reduce(kernel_basis, particular.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (x.get(e.pivots[r])) x += e.rows[r];
  }
  return x;
}

std::vector<F2Vector> AffineSolution::enumerate() const {
  const std::size_t dim = kernel_basis.size();
  std::vector<F2Vector> out;
  out.reserve(std::size_t{1} << dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    F2Vector x = particular;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((mask >> i) & 1U) x += kernel_basis[i];
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AffineSolution> gf2_solve_affine(const F2Matrix& a, const F2Vector& b) {
  if (a.rows() != b.size()) throw_mismatch(a.rows(), b.size());
  const std::size_t n = a.cols();

  std::vector<F2Vector> augmented;
  augmented.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    F2Vector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r.set(j, a.get(i, j));
    r.set(n, b.get(i));
    augmented.push_back(std::move(r));
  }
  // Only coefficient columns may pivot; a leftover row with a nonzero
  // right-hand side is an inconsistency.
  Echelon e = reduce(std::move(augmented), n);
  for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r) {
    if (e.rows[r].get(n)) return std::nullopt;
  }

  AffineSolution sol{F2Vector(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    is_pivot[e.pivots[r]] = true;
    sol.particular.set(e.pivots[r], e.rows[r].get(n));
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    F2Vector k(n);
    k.set(free, true);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.rows[r].get(free)) k.set(e.pivots[r], true);
    }
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

std::size_t gf2_rank(const F2Matrix& a) {
  std::vector<F2Vector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return reduce(std::move(rows), a.cols()).pivots.size();
}

bool symplectic_pairing(int genus, const F2Vector& x, const F2Vector& y) {
  const auto dim = static_cast<std::size_t>(2 * genus);
  if (genus < 0 || x.size() != dim) throw_mismatch(dim, x.size());
  if (y.size() != dim) throw_mismatch(dim, y.size());
  const auto g = static_cast<std::size_t>(genus);
  bool acc = false;
  for (std::size_t i = 0; i < g; ++i) {
    acc ^= (x.get(i) && y.get(g + i)) != (x.get(g + i) && y.get(i));
  }
  return acc;
}

}  // namespace realspin
