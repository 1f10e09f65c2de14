#include "tensor3/symmetry.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "tensor3/core.hpp"

namespace t3 {

namespace {

using Perm = std::array<std::size_t, 3>;

// max |a_ijk - sign * a_{p(ijk)}| where p reorders (i, j, k) per `perm`.
double deviation(const Hyper3& a, Perm perm, double sign) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const std::array<std::size_t, 3> idx{i, j, k};
        const double other = a(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
        m = std::max(m, std::fabs(a(i, j, k) - sign * other));
      }
  return m;
}

Hyper3 average(const Hyper3& a, std::initializer_list<Perm> perms) {
  const double w = 1.0 / static_cast<double>(perms.size());
  return Hyper3::generate([&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<std::size_t, 3> idx{i, j, k};
    double s = 0.0;
    for (const Perm& p : perms) s += a(idx[p[0]], idx[p[1]], idx[p[2]]);
    return w * s;
  });
}

Hyper3 antisymmetrize(const Hyper3& a, Perm perm) {
  return Hyper3::generate([&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<std::size_t, 3> idx{i, j, k};
    return 0.5 * (a(i, j, k) - a(idx[perm[0]], idx[perm[1]], idx[perm[2]]));
  });
}

constexpr Perm kSwapJK{0, 2, 1};
constexpr Perm kSwapIJ{1, 0, 2};
constexpr Perm kSwapIK{2, 1, 0};
constexpr Perm kIdentity{0, 1, 2};
constexpr Perm kCycle{2, 0, 1};   // a_kij, the transpose
constexpr Perm kCycle2{1, 2, 0};  // a_jki, transpose twice

struct ClassName {
  SymmetryClass cls;
  std::string_view name;
};

constexpr std::array<ClassName, 15> kClassNames{{
    {SymmetryClass::RightSymmetric, "right_symmetric"},
    {SymmetryClass::LeftSymmetric, "left_symmetric"},
    {SymmetryClass::CentrallySymmetric, "centrally_symmetric"},
    {SymmetryClass::PartiallySymmetric, "partially_symmetric"},
    {SymmetryClass::Symmetric, "symmetric"},
    {SymmetryClass::CyclicallySymmetric, "cyclically_symmetric"},
    {SymmetryClass::RightAnti, "right_anti"},
    {SymmetryClass::LeftAnti, "left_anti"},
    {SymmetryClass::CentrallyAnti, "centrally_anti"},
    {SymmetryClass::TotallyAnti, "totally_anti"},
    {SymmetryClass::Traceless, "traceless"},
    {SymmetryClass::SelectivelyRight, "selectively_right"},
    {SymmetryClass::SelectivelyLeft, "selectively_left"},
    {SymmetryClass::PrimarilySymmetric, "primarily_symmetric"},
    {SymmetryClass::PrimarilyCyclicallySymmetric, "primarily_cyclically_symmetric"},
}};

}  // namespace

SymmetryReport classify(const Hyper3& a, double tol) {
  const double bound = tol * std::max(1.0, a.norm());
  auto holds = [&](Perm p, double sign) { return deviation(a, p, sign) <= bound; };

  SymmetryReport r;
  r.tol = tol;
  r.right_symmetric = holds(kSwapJK, 1.0);
  r.left_symmetric = holds(kSwapIJ, 1.0);
  r.centrally_symmetric = holds(kSwapIK, 1.0);
  r.cyclically_symmetric = holds(kCycle, 1.0);
  r.partially_symmetric = r.right_symmetric || r.left_symmetric || r.centrally_symmetric;
  r.symmetric = r.right_symmetric && r.left_symmetric && r.centrally_symmetric &&
                r.cyclically_symmetric;

  r.right_anti = holds(kSwapJK, -1.0);
  r.left_anti = holds(kSwapIJ, -1.0);
  r.centrally_anti = holds(kSwapIK, -1.0);
  r.totally_anti = r.right_anti && r.left_anti && r.centrally_anti;

  double trace_dev = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    trace_dev = std::max(trace_dev, std::fabs(a(i, 0, 0) + a(i, 1, 1) + a(i, 2, 2)));
  }
  r.traceless = trace_dev <= bound;

  double sel_right = 0.0;
  double sel_left = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        if (j != k) sel_right = std::max(sel_right, std::fabs(a(i, j, k) - a(i, k, j)));
        if (i != j) sel_left = std::max(sel_left, std::fabs(a(i, j, k) - a(j, i, k)));
      }
  r.selectively_right = sel_right <= bound;
  r.selectively_left = sel_left <= bound;
  return r;
}

SelectiveSymmetry selective_symmetry_via_levi_civita(const Hyper3& a, double tol) {
  const Hyper3 e = levi_civita();
  const double bound = tol * std::max(1.0, a.norm());
  return {prod2(a, e).norm() <= bound, prod2(e, a).norm() <= bound};
}

std::string_view to_string(SymmetryClass c) {
  for (const auto& n : kClassNames)
    if (n.cls == c) return n.name;
  return "unknown";
}

SymmetryClass parse_symmetry_class(std::string_view tag) {
  std::string norm(tag);
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (const auto& n : kClassNames)
    if (n.name == norm) return n.cls;
  throw Error(ErrorKind::UnsupportedClass, "unknown symmetry class '" + std::string(tag) + "'");
}

bool has_class(const SymmetryReport& r, SymmetryClass c) {
  switch (c) {
    case SymmetryClass::RightSymmetric: return r.right_symmetric;
    case SymmetryClass::LeftSymmetric: return r.left_symmetric;
    case SymmetryClass::CentrallySymmetric: return r.centrally_symmetric;
    case SymmetryClass::PartiallySymmetric: return r.partially_symmetric;
    case SymmetryClass::Symmetric: return r.symmetric;
    case SymmetryClass::CyclicallySymmetric: return r.cyclically_symmetric;
    case SymmetryClass::RightAnti: return r.right_anti;
    case SymmetryClass::LeftAnti: return r.left_anti;
    case SymmetryClass::CentrallyAnti: return r.centrally_anti;
    case SymmetryClass::TotallyAnti: return r.totally_anti;
    case SymmetryClass::Traceless: return r.traceless;
    case SymmetryClass::SelectivelyRight: return r.selectively_right;
    case SymmetryClass::SelectivelyLeft: return r.selectively_left;
    case SymmetryClass::PrimarilySymmetric: return r.symmetric;
    case SymmetryClass::PrimarilyCyclicallySymmetric: return r.cyclically_symmetric;
  }
  return false;
}

Hyper3 symmetrize_right(const Hyper3& a) { return average(a, {kIdentity, kSwapJK}); }
Hyper3 symmetrize_left(const Hyper3& a) { return average(a, {kIdentity, kSwapIJ}); }
Hyper3 symmetrize_central(const Hyper3& a) { return average(a, {kIdentity, kSwapIK}); }
Hyper3 symmetrize_cyclic(const Hyper3& a) { return average(a, {kIdentity, kCycle, kCycle2}); }
Hyper3 symmetrize_full(const Hyper3& a) {
  return average(a, {kIdentity, kSwapJK, kSwapIJ, kSwapIK, kCycle, kCycle2});
}

Hyper3 primarily_symmetric(const Mat3& q, const Vec3& lambda) {
  Hyper3 a;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3 x = q.column(i);
    a = a + lambda[i] * outer(x, x, x);
  }
  return a;
}

Hyper3 primarily_cyclic(const Mat3& q, const Vec3& lambda) {
  const Vec3 x1 = q.column(0), x2 = q.column(1), x3 = q.column(2);
  return lambda[0] * outer(x1, x2, x3) + lambda[1] * outer(x2, x3, x1) +
         lambda[2] * outer(x3, x1, x2);
}

Hyper3 make_fixture(SymmetryClass c, std::uint64_t seed) {
  const Hyper3 g = random_tensor(seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal;
  switch (c) {
    case SymmetryClass::RightSymmetric:
    case SymmetryClass::PartiallySymmetric:
    case SymmetryClass::SelectivelyRight:
      return symmetrize_right(g);
    case SymmetryClass::LeftSymmetric:
    case SymmetryClass::SelectivelyLeft:
      return symmetrize_left(g);
    case SymmetryClass::CentrallySymmetric: return symmetrize_central(g);
    case SymmetryClass::Symmetric: return symmetrize_full(g);
    case SymmetryClass::CyclicallySymmetric: return symmetrize_cyclic(g);
    case SymmetryClass::RightAnti: return antisymmetrize(g, kSwapJK);
    case SymmetryClass::LeftAnti: return antisymmetrize(g, kSwapIJ);
    case SymmetryClass::CentrallyAnti: return antisymmetrize(g, kSwapIK);
    case SymmetryClass::TotallyAnti: {
      // Every totally anti-symmetric tensor is a multiple of E.
      const double s = normal(rng);
      return (s >= 0.0 ? 0.5 + s : s - 0.5) * levi_civita();
    }
    case SymmetryClass::Traceless:
      return Hyper3::generate([&](std::size_t i, std::size_t j, std::size_t k) {
        const double t = g(i, 0, 0) + g(i, 1, 1) + g(i, 2, 2);
        return g(i, j, k) - (j == k ? t / 3.0 : 0.0);
      });
    case SymmetryClass::PrimarilySymmetric:
      return primarily_symmetric(random_rotation(seed),
                                 Vec3(normal(rng), normal(rng), normal(rng)));
    case SymmetryClass::PrimarilyCyclicallySymmetric: {
      const double l = normal(rng);
      const double w = l >= 0.0 ? 0.5 + l : l - 0.5;
      return primarily_cyclic(random_rotation(seed), Vec3(w, w, w));
    }
  }
  throw Error(ErrorKind::UnsupportedClass, "unsupported symmetry class");
}

}  // namespace t3
