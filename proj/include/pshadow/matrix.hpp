#pragma once

// Dense exact-integer matrix types shared by every pshadow module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace pshadow {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Int = std::int64_t;
using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;

/// Largest side length accepted by size-limited operations unless raised
/// through the SHADOW_MAX_N environment variable.
inline constexpr int kDefaultMaxSize = 8;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limit honoring SHADOW_MAX_N (clamped to [1, 10]).
int max_supported_size();

/// Throws UnsupportedSize unless 1 <= n <= max_supported_size().
void require_supported_size(int n, const char* what);

/// A square integer matrix A with A^T = -A.
///
/// Construction validates skewness; the value is immutable afterwards.
class SkewIntMatrix {
 public:
  SkewIntMatrix() = default;
  explicit SkewIntMatrix(IntMatrix entries);

  static SkewIntMatrix zero(int n) { return SkewIntMatrix(IntMatrix::Zero(n, n)); }
  static SkewIntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int size() const { return static_cast<int>(m_.rows()); }
  Int operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  /// True when every entry lies in [-bound, bound].
  bool in_range(Int bound) const;
  bool is_zero() const { return m_.isZero(); }

  /// Row-major entry sequence.
  std::vector<Int> entries() const;

  friend bool operator==(const SkewIntMatrix& a, const SkewIntMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }
  /// Lexicographic order on row-major entries (sizes compared first).
  friend bool operator<(const SkewIntMatrix& a, const SkewIntMatrix& b);

 private:
  IntMatrix m_;
};

/// A bijection on {0, ..., n-1}; mapping()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& mapping() const { return map_; }

  Permutation inverse() const;
  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Exact fraction with positive denominator, always in lowest terms.
template <typename I>
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(I value) : num_(value) {}  // NOLINT(implicit)
  Fraction(I num, I den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidArgument("fraction with zero denominator");
    normalize();
  }

  I numerator() const { return num_; }
  I denominator() const { return den_; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw InvalidArgument("fraction division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Fraction operator-() const { return {-num_, den_}; }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const I g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  I num_ = 0;
  I den_ = 1;
};

using Rational = Fraction<Int>;

}  // namespace pshadow
