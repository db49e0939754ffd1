#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "realspin/curve.hpp"
#include "realspin/f2_linear.hpp"
#include "realspin/spin.hpp"

namespace realspin::oracle {

inline constexpr int kDefaultGenusBound = 6;

/// Every quadratic form on H_1(Sigma_g; Z/2), each exactly once, in
/// lexicographic order of basis values.
class QuadraticFormRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = QuadraticForm;
    using difference_type = std::ptrdiff_t;
    using pointer = const QuadraticForm*;
    using reference = QuadraticForm;

    iterator() = default;
    iterator(std::size_t dimension, std::uint64_t code) : dimension_(dimension), code_(code) {}

    QuadraticForm operator*() const;
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++code_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    std::size_t dimension_ = 0;
    std::uint64_t code_ = 0;
  };

  QuadraticFormRange(int genus, int bound = kDefaultGenusBound);

  iterator begin() const { return iterator(dimension_, 0); }
  iterator end() const { return iterator(dimension_, std::uint64_t{1} << dimension_); }
  std::uint64_t size() const { return std::uint64_t{1} << dimension_; }

 private:
  std::size_t dimension_ = 0;
};

/// Throws Error{BoundExceeded} when genus > bound.
QuadraticFormRange enumerate_all_quadratic_forms(int genus, int bound = kDefaultGenusBound);

/// Values of q on all 2^(2g) classes, indexed by the integer whose bit i is
/// coordinate i. Built incrementally from q(x + e) = q(x) + q(e) + x.e, which
/// is a different route from the closed form used by quad_eval.
std::vector<bool> quadratic_table(int genus, const QuadraticForm& q, int bound = kDefaultGenusBound);

/// Class with integer code `code` (bit i is coordinate i).
F2Vector class_from_code(std::size_t dimension, std::uint64_t code);

/// Realness tested on every class, not just the basis.
bool is_real_brute_force(const RealCurve& curve, const QuadraticForm& q);

/// Product of random symplectic transvections x -> x + (x.v) v; column j is
/// the image of basis vector j.
F2Matrix random_symplectic(int genus, std::uint64_t seed);

bool is_symplectic(int genus, const F2Matrix& m);

/// Arf invariant of q computed in the symplectic basis given by the columns of
/// `basis` (first g columns a'_i, last g columns b'_i).
bool arf_in_basis(const RealCurve& curve, const QuadraticForm& q, const F2Matrix& basis);

struct Check {
  std::string name;
  std::string topology;
  bool passed = true;
  /// Present iff passed is false: a replayable JSON problem description.
  std::optional<std::string> counterexample;
};

struct Skipped {
  std::string topology;
  std::string reason;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<Skipped> skipped;
  std::uint64_t seed = 0;

  bool all_passed() const;
  void merge(VerificationReport other);
};

struct SuiteOptions {
  int bound = kDefaultGenusBound;
  /// Random basis changes per form in the Arf invariance check.
  int symplectic_trials = 100;
  /// Random pairs for homomorphism checks.
  int random_pairs = 200;
  /// Degrees checked are -max_degree..max_degree.
  int max_degree = 6;
};

/// Runs every consistency check on one curve. Deterministic in (curve, seed).
VerificationReport verify_curve_suite(const RealCurve& curve, std::uint64_t seed, const SuiteOptions& options = {});

/// Validates the topology first; an invalid one is reported as skipped.
VerificationReport verify_topology(const Topology& topology, std::uint64_t seed, const SuiteOptions& options = {});

/// verify_curve_suite over valid_topologies(max_genus).
VerificationReport verify_all(int max_genus, std::uint64_t seed, const SuiteOptions& options = {});

}  // namespace realspin::oracle
