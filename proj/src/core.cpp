#include "tensor3/core.hpp"

#include <random>

#include "tensor3/simd.hpp"

namespace t3 {

namespace {

constexpr std::size_t index(Slot s) { return static_cast<std::size_t>(s); }

// Separate streams for the different seeded generators so equal seeds do
// not give correlated samples.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

void require_rotation(const Mat3& p) {
  if (!p.is_orthogonal(kRotationTolerance)) {
    throw Error(ErrorKind::NotOrthogonal,
                "|P P^T - I| = " + std::to_string((p * p.transposed() - Mat3::identity()).norm()));
  }
}

}  // namespace

Mat3 contract_one(const Hyper3& a, const Vec3& v, Slot slot) {
  const auto& k = simd::active();
  const double* pa = a.data().data();
  const double* pv = v.data().data();
  std::array<double, 9> r;
  switch (slot) {
    case Slot::First:
      k.weighted_rows(pa, pv, 3, 9, r.data());
      break;
    case Slot::Second:
      for (std::size_t i = 0; i < 3; ++i) k.weighted_rows(pa + 9 * i, pv, 3, 3, r.data() + 3 * i);
      break;
    case Slot::Third:
      k.row_dots(pa, pv, 9, 3, r.data());
      break;
  }
  return Mat3(r);
}

Vec3 contract_mat(const Hyper3& a, const Mat3& v, Side side) {
  const auto& k = simd::active();
  std::array<double, 3> r;
  if (side == Side::Right) {
    k.row_dots(a.data().data(), v.data().data(), 3, 9, r.data());
  } else {
    k.weighted_rows(a.data().data(), v.data().data(), 9, 3, r.data());
  }
  return Vec3(r);
}

Vec3 contract_two(const Hyper3& a, const Vec3& u, const Vec3& v, Slot su, Slot sv) {
  if (su == sv) throw Error(ErrorKind::InvalidInput, "contract_two needs two distinct slots");
  const Mat3 m = contract_one(a, v, sv);
  // m keeps the two remaining indices of a in their original order.
  const std::size_t lower = (index(sv) == 0) ? 1 : 0;
  return index(su) == lower ? u * m : m * u;
}

double contract_full(const Hyper3& a, const Vec3& x, const Vec3& y, const Vec3& z) {
  const Mat3 xa = contract_one(a, x, Slot::First);
  const Mat3 yz = outer(y, z);
  return simd::active().dot(xa.data().data(), yz.data().data(), 9);
}

double inner(const Hyper3& a, const Hyper3& b) {
  return simd::active().dot(a.data().data(), b.data().data(), 27);
}

Mat3 prod2(const Hyper3& a, const Hyper3& b) {
  const auto& k = simd::active();
  std::array<double, 9> r;
  // b read as a 9x3 matrix with rows (j,k).
  for (std::size_t i = 0; i < 3; ++i) {
    k.weighted_rows(b.data().data(), a.data().data() + 9 * i, 9, 3, r.data() + 3 * i);
  }
  return Mat3(r);
}

Quad3 prod4(const Hyper3& a, const Hyper3& b) {
  const auto& k = simd::active();
  std::array<double, 81> r;
  // a read as a 9x3 matrix, b as 3x9.
  for (std::size_t ij = 0; ij < 9; ++ij) {
    k.weighted_rows(b.data().data(), a.data().data() + 3 * ij, 3, 9, r.data() + 9 * ij);
  }
  return Quad3(r);
}

Hyper3 outer(const Vec3& x, const Vec3& y, const Vec3& z) {
  return Hyper3::generate([&](auto i, auto j, auto k) { return x[i] * y[j] * z[k]; });
}

Hyper3 outer(const Mat3& u, const Vec3& z) {
  return Hyper3::generate([&](auto i, auto j, auto k) { return u(i, j) * z[k]; });
}

Hyper3 outer(const Vec3& x, const Mat3& v) {
  return Hyper3::generate([&](auto i, auto j, auto k) { return x[i] * v(j, k); });
}

Hyper3 transpose(const Hyper3& a) {
  return Hyper3::generate([&](auto i, auto j, auto k) { return a(k, i, j); });
}

Hyper3 rotate(const Hyper3& a, const Mat3& p) {
  require_rotation(p);
  // One mode product per index.
  std::array<double, 27> s = a.array();
  std::array<double, 27> t;
  for (std::size_t mode = 0; mode < 3; ++mode) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          double acc = 0.0;
          for (std::size_t q = 0; q < 3; ++q) {
            const std::size_t src = mode == 0   ? 9 * q + 3 * j + k
                                    : mode == 1 ? 9 * i + 3 * q + k
                                                : 9 * i + 3 * j + q;
            const std::size_t row = mode == 0 ? i : mode == 1 ? j : k;
            acc += p(row, q) * s[src];
          }
          t[9 * i + 3 * j + k] = acc;
        }
    s = t;
  }
  return Hyper3(s);
}

Mat3 rotate(const Mat3& u, const Mat3& p) {
  require_rotation(p);
  return p * u * p.transposed();
}

Vec3 rotate(const Vec3& x, const Mat3& p) {
  require_rotation(p);
  return p * x;
}

Mat3 random_rotation(std::uint64_t seed) {
  auto rng = make_rng(seed, 0x726f74);
  std::normal_distribution<double> normal;
  std::array<Vec3, 3> c;
  for (auto& v : c) v = Vec3(normal(rng), normal(rng), normal(rng));
  // Gram-Schmidt, twice for the second and third columns.
  Vec3 q0 = c[0].normalized();
  Vec3 q1 = c[1] - dot(q0, c[1]) * q0;
  q1 = q1 - dot(q0, q1) * q0;
  q1 = q1.normalized();
  Vec3 q2 = c[2] - dot(q0, c[2]) * q0 - dot(q1, c[2]) * q1;
  q2 = q2 - dot(q0, q2) * q0 - dot(q1, q2) * q1;
  q2 = q2.normalized();
  Mat3 p = Mat3::from_columns(q0, q1, q2);
  if (p.det() < 0.0) p = Mat3::from_columns(q0, q1, -q2);
  return p;
}

Hyper3 random_tensor(std::uint64_t seed) {
  auto rng = make_rng(seed, 0x74656e);
  std::normal_distribution<double> normal;
  std::array<double, 27> a;
  for (double& v : a) v = normal(rng);
  return Hyper3(a);
}

Vec3 random_unit(std::uint64_t seed) {
  auto rng = make_rng(seed, 0x756e69);
  std::normal_distribution<double> normal;
  for (;;) {
    Vec3 v(normal(rng), normal(rng), normal(rng));
    if (const double n = v.norm(); n > 1e-8) return v / n;
  }
}

Hyper3 levi_civita() {
  return Hyper3::generate([](std::size_t i, std::size_t j, std::size_t k) {
    // (i - j)(j - k)(k - i) / 2 is the permutation sign on {0,1,2}.
    const int s = (static_cast<int>(i) - static_cast<int>(j)) *
                  (static_cast<int>(j) - static_cast<int>(k)) *
                  (static_cast<int>(k) - static_cast<int>(i));
    return static_cast<double>(s / 2);
  });
}

}  // namespace t3
