#pragma once

// Fixed-size representatives of first, second, third and fourth order
// tensors in three dimensions. All indices are zero based; storage is
// row-major with the first index slowest.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace t3 {

enum class ErrorKind {
  InvalidInput,
  NotOrthogonal,
  NotSymmetric,
  NotRightSymmetric,
  NotPartiallySymmetric,
  SingularTensor,
  NoConvergence,
  UnsupportedClass,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {
template <std::size_t N>
void require_finite(const std::array<double, N>& a, const char* type) {
  for (double v : a) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidInput, std::string(type) + ": non-finite entry");
    }
  }
}
}  // namespace detail

/// Dense array of N doubles with value semantics. Construction from raw
/// storage rejects NaN and Inf.
template <std::size_t N, class Derived>
class DenseBase {
 public:
  static constexpr std::size_t size = N;

  constexpr DenseBase() noexcept : a_{} {}

  std::span<const double, N> data() const noexcept { return a_; }
  const std::array<double, N>& array() const noexcept { return a_; }
  double operator[](std::size_t n) const noexcept { return a_[n]; }

  double norm() const noexcept {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : a_) m = std::fmax(m, std::fabs(v));
    return m;
  }

  friend Derived operator+(const Derived& x, const Derived& y) {
    std::array<double, N> r;
    for (std::size_t n = 0; n < N; ++n) r[n] = x.a_[n] + y.a_[n];
    return Derived(r);
  }
  friend Derived operator-(const Derived& x, const Derived& y) {
    std::array<double, N> r;
    for (std::size_t n = 0; n < N; ++n) r[n] = x.a_[n] - y.a_[n];
    return Derived(r);
  }
  friend Derived operator-(const Derived& x) {
    std::array<double, N> r;
    for (std::size_t n = 0; n < N; ++n) r[n] = -x.a_[n];
    return Derived(r);
  }
  friend Derived operator*(double s, const Derived& x) {
    std::array<double, N> r;
    for (std::size_t n = 0; n < N; ++n) r[n] = s * x.a_[n];
    return Derived(r);
  }
  friend Derived operator*(const Derived& x, double s) { return s * x; }
  friend Derived operator/(const Derived& x, double s) { return (1.0 / s) * x; }

  friend bool operator==(const DenseBase& x, const DenseBase& y) noexcept { return x.a_ == y.a_; }

  /// Frobenius inner product over the flat storage.
  friend double dot(const Derived& x, const Derived& y) noexcept {
    double s = 0.0;
    for (std::size_t n = 0; n < N; ++n) s += x.a_[n] * y.a_[n];
    return s;
  }

 protected:
  explicit DenseBase(const std::array<double, N>& a, const char* type) : a_(a) {
    detail::require_finite(a_, type);
  }

  std::array<double, N> a_;
};

class Vec3 : public DenseBase<3, Vec3> {
 public:
  Vec3() = default;
  explicit Vec3(const std::array<double, 3>& a) : DenseBase(a, "Vec3") {}
  Vec3(double x, double y, double z) : Vec3(std::array<double, 3>{x, y, z}) {}

  double operator()(std::size_t i) const noexcept { return a_[i]; }

  static Vec3 unit(std::size_t i) {
    std::array<double, 3> a{};
    a[i] = 1.0;
    return Vec3(a);
  }

  Vec3 normalized() const { return *this / norm(); }
};

class Mat3 : public DenseBase<9, Mat3> {
 public:
  Mat3() = default;
  explicit Mat3(const std::array<double, 9>& a) : DenseBase(a, "Mat3") {}

  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[3 * i + j]; }

  static Mat3 identity() { return Mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }
  static Mat3 diag(double a, double b, double c) { return Mat3({a, 0, 0, 0, b, 0, 0, 0, c}); }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  Mat3 transposed() const;
  double trace() const noexcept { return a_[0] + a_[4] + a_[8]; }
  double det() const noexcept;
  Vec3 row(std::size_t i) const { return Vec3(a_[3 * i], a_[3 * i + 1], a_[3 * i + 2]); }
  Vec3 column(std::size_t j) const { return Vec3(a_[j], a_[3 + j], a_[6 + j]); }

  /// |u_ij - u_ji| <= tol * max(1, |U|) for all i, j.
  bool is_symmetric(double tol) const noexcept;
  /// |U U^T - I| <= tol (Frobenius).
  bool is_orthogonal(double tol) const;
};

Mat3 operator*(const Mat3& u, const Mat3& v);
Vec3 operator*(const Mat3& u, const Vec3& x);
Vec3 operator*(const Vec3& x, const Mat3& u);

/// x ⊗ y
Mat3 outer(const Vec3& x, const Vec3& y);
Vec3 cross(const Vec3& x, const Vec3& y);

/// Third order hypermatrix a_ijk at flat offset 9i + 3j + k. Read as a 3x9
/// matrix the row is i and the column r = 3j + k, which is the unfolding
/// used throughout the spectral code.
class Hyper3 : public DenseBase<27, Hyper3> {
 public:
  Hyper3() = default;
  explicit Hyper3(const std::array<double, 27>& a) : DenseBase(a, "Hyper3") {}

  double operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return a_[9 * i + 3 * j + k];
  }

  template <class F>
  static Hyper3 generate(F&& f) {
    std::array<double, 27> a;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) a[9 * i + 3 * j + k] = f(i, j, k);
    return Hyper3(a);
  }
};

/// Fourth order hypermatrix t_ijkl at flat offset 27i + 9j + 3k + l.
class Quad3 : public DenseBase<81, Quad3> {
 public:
  Quad3() = default;
  explicit Quad3(const std::array<double, 81>& a) : DenseBase(a, "Quad3") {}

  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const noexcept {
    return a_[27 * i + 9 * j + 3 * k + l];
  }
};

}  // namespace t3
