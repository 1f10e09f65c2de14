#include "tensor3/types.hpp"

namespace t3 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotRightSymmetric: return "NotRightSymmetric";
    case ErrorKind::NotPartiallySymmetric: return "NotPartiallySymmetric";
    case ErrorKind::SingularTensor: return "SingularTensor";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedClass: return "UnsupportedClass";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return Mat3({c0[0], c1[0], c2[0], c0[1], c1[1], c2[1], c0[2], c1[2], c2[2]});
}

Mat3 Mat3::transposed() const {
  const auto& a = a_;
  return Mat3({a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]});
}

double Mat3::det() const noexcept {
  const auto& a = a_;
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

bool Mat3::is_symmetric(double tol) const noexcept {
  const double bound = tol * std::fmax(1.0, norm());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::fabs(a_[3 * i + j] - a_[3 * j + i]) > bound) return false;
  return true;
}

bool Mat3::is_orthogonal(double tol) const {
  return ((*this) * transposed() - identity()).norm() <= tol;
}

Mat3 operator*(const Mat3& u, const Mat3& v) {
  std::array<double, 9> r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) r[3 * i + j] += u(i, k) * v(k, j);
  return Mat3(r);
}

Vec3 operator*(const Mat3& u, const Vec3& x) {
  std::array<double, 3> r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += u(i, j) * x[j];
  return Vec3(r);
}

Vec3 operator*(const Vec3& x, const Mat3& u) {
  std::array<double, 3> r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[j] += x[i] * u(i, j);
  return Vec3(r);
}

Mat3 outer(const Vec3& x, const Vec3& y) {
  std::array<double, 9> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[3 * i + j] = x[i] * y[j];
  return Mat3(r);
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return Vec3(x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]);
}

}  // namespace t3
