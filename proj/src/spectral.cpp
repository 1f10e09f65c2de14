#include "tensor3/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensor3/symmetry.hpp"

namespace t3 {

namespace {

constexpr int kMaxJacobiSweeps = 50;
constexpr double kJacobiTolerance = 1e-14;
constexpr double kRowOrthogonality = 1e-15;
constexpr double kZeroSigma = 1e-12;      // relative to sigma_1
constexpr double kCompletionFloor = 1e-6;  // minimum residual of an accepted candidate

using Mat = std::array<std::array<double, 3>, 3>;

Mat3 unit_matrix(std::size_t n) {
  std::array<double, 9> a{};
  a[n] = 1.0;
  return Mat3(a);
}

// Orthonormal extension of `known` by `count` elements, taken in order from
// `candidates` after projecting out everything accepted so far.
std::vector<Mat3> complete_orthonormal(const std::vector<Mat3>& known,
                                       const std::vector<Mat3>& candidates, std::size_t count) {
  std::vector<Mat3> all = known;
  std::vector<Mat3> added;
  for (const Mat3& c : candidates) {
    if (added.size() == count) break;
    Mat3 r = c;
    for (int pass = 0; pass < 2; ++pass)
      for (const Mat3& q : all) r = r - dot(q, r) * q;
    const double n = r.norm();
    if (n > kCompletionFloor) {
      all.push_back(r / n);
      added.push_back(r / n);
    }
  }
  return added;
}

std::vector<Mat3> canonical_basis() {
  std::vector<Mat3> b;
  for (std::size_t n = 0; n < 9; ++n) b.push_back(unit_matrix(n));
  return b;
}

std::vector<Mat3> symmetric_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return {Mat3({1, 0, 0, 0, 0, 0, 0, 0, 0}), Mat3({0, 0, 0, 0, 1, 0, 0, 0, 0}),
          Mat3({0, 0, 0, 0, 0, 0, 0, 0, 1}), Mat3({0, h, 0, h, 0, 0, 0, 0, 0}),
          Mat3({0, 0, h, 0, 0, 0, h, 0, 0}), Mat3({0, 0, 0, 0, 0, h, 0, h, 0})};
}

Vec3 canonical_sign(const Vec3& v) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(v[i]) > std::fabs(v[m])) m = i;
  return v[m] < 0.0 ? -v : v;
}

}  // namespace

SymEig3 sym_eig3(const Mat3& u) {
  if (!u.is_symmetric(1e-8)) throw Error(ErrorKind::NotSymmetric, "sym_eig3 needs a symmetric matrix");
  Mat a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a[i][j] = 0.5 * (u(i, j) + u(j, i));
  Mat v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  const double scale = u.norm();
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    const double off = std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
    if (off <= kJacobiTolerance * scale) break;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J with J the rotation in the (p, q) plane.
        for (std::size_t k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return a[l][l] > a[r][r]; });
  SymEig3 out;
  for (std::size_t n = 0; n < 3; ++n) {
    const std::size_t c = order[n];
    out.values[n] = a[c][c];
    out.vectors[n] = canonical_sign(Vec3(v[0][c], v[1][c], v[2][c]));
  }
  return out;
}

Mat3 kernel(const Hyper3& a) { return prod2(a, transpose(a)); }

KernelTriple kernel_triple(const Hyper3& a) {
  const Hyper3 at = transpose(a);
  return {kernel(a), kernel(at), kernel(transpose(at))};
}

Unfolded unfold(const Hyper3& a) {
  Unfolded m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < 9; ++r) m[i][r] = a[9 * i + r];
  return m;
}

Hyper3 fold(const Unfolded& m) {
  std::array<double, 27> a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < 9; ++r) a[9 * i + r] = m[i][r];
  return Hyper3(a);
}

LEigenSystem l_eigen(const Hyper3& a) {
  // One-sided Jacobi on the rows of the unfolding: rotate row pairs until
  // they are mutually orthogonal, accumulating the rotations in q. Then
  // A = sum_i q_i ⊗ r_i with orthogonal rows r_i, and small singular values
  // keep their absolute accuracy instead of going through A A^T.
  Unfolded r = unfold(a);
  Mat q{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto dot9 = [&](std::size_t l, std::size_t m) {
    double t = 0.0;
    for (std::size_t c = 0; c < 9; ++c) t += r[l][c] * r[m][c];
    return t;
  };
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t m = p + 1; m < 3; ++m) {
        const double alpha = dot9(p, p), beta = dot9(m, m), gamma = dot9(p, m);
        if (gamma == 0.0 || std::fabs(gamma) <= kRowOrthogonality * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < 9; ++k) {
          const double rp = r[p][k], rm = r[m][k];
          r[p][k] = c * rp - s * rm;
          r[m][k] = s * rp + c * rm;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double qp = q[p][k], qm = q[m][k];
          q[p][k] = c * qp - s * qm;
          q[m][k] = s * qp + c * qm;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, 3> norms{};
  for (std::size_t i = 0; i < 3; ++i) norms[i] = std::sqrt(dot9(i, i));
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t m) { return norms[l] > norms[m]; });

  LEigenSystem s;
  std::array<Mat3, 3> rows;
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t i = order[j];
    s.sigma[j] = norms[i];
    const Vec3 x(q[i][0], q[i][1], q[i][2]);
    s.x[j] = canonical_sign(x);
    const double sign = s.x[j] == x ? 1.0 : -1.0;
    std::array<double, 9> row;
    for (std::size_t c = 0; c < 9; ++c) row[c] = sign * r[i][c];
    rows[j] = Mat3(row);
  }
  const double threshold = kZeroSigma * s.sigma[0];
  std::vector<Mat3> known;
  std::size_t positive = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (s.sigma[j] > threshold && s.sigma[j] > 0.0) {
      s.v[j] = rows[j] / s.sigma[j];
      known.push_back(s.v[j]);
      ++positive;
    }
  }
  const auto extra = complete_orthonormal(known, canonical_basis(), 3 - positive);
  for (std::size_t j = positive; j < 3; ++j) s.v[j] = extra[j - positive];
  return s;
}

Hyper3 reconstruct(const LEigenSystem& s) {
  Hyper3 a;
  for (std::size_t j = 0; j < 3; ++j) a = a + s.sigma[j] * outer(s.x[j], s.v[j]);
  return a;
}

NullSpace rank_and_nullspace(const Hyper3& a, double tol) {
  const LEigenSystem s = l_eigen(a);
  NullSpace ns;
  std::vector<Mat3> row_space;
  if (s.sigma[0] > 0.0) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (s.sigma[j] > tol * s.sigma[0]) {
        row_space.push_back(s.v[j]);
        ++ns.rank;
      }
    }
  }
  ns.basis = complete_orthonormal(row_space, canonical_basis(), 9 - row_space.size());
  return ns;
}

Hyper3 l_inverse(const Hyper3& a) {
  const LEigenSystem s = l_eigen(a);
  if (!(s.sigma[0] > 0.0) || s.sigma[2] <= kSingularThreshold * s.sigma[0]) {
    const double ratio = s.sigma[0] > 0.0 ? s.sigma[2] / s.sigma[0] : 0.0;
    throw Error(ErrorKind::SingularTensor, "sigma_3 / sigma_1 = " + std::to_string(ratio));
  }
  Hyper3 b;
  for (std::size_t j = 0; j < 3; ++j) b = b + (1.0 / s.sigma[j]) * outer(s.v[j], s.x[j]);
  return b;
}

Hyper3 from_l_inverse(const Hyper3& b) {
  // (B^T)^T has the 9x3 unfolding of b as its 3x9 one; its L-inverse is the
  // transpose of the answer.
  return transpose(transpose(l_inverse(transpose(transpose(b)))));
}

double InverseResiduals::max() const {
  return std::max({identity, oplus, moore_penrose[0], moore_penrose[1], moore_penrose[2],
                   moore_penrose[3]});
}

InverseResiduals inverse_residuals(const Hyper3& a, const Hyper3& b) {
  InverseResiduals r;
  r.identity = (prod2(a, b) - Mat3::identity()).norm();
  r.oplus = (prod4(b, a) - prod4(transpose(a), transpose(transpose(b)))).norm();

  // Flat storage of a is the 3x9 unfolding, of b the 9x3 one.
  const auto am = [&](std::size_t i, std::size_t c) { return a[9 * i + c]; };
  const auto bm = [&](std::size_t c, std::size_t l) { return b[3 * c + l]; };
  std::array<std::array<double, 3>, 3> ab{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t c = 0; c < 9; ++c) ab[i][l] += am(i, c) * bm(c, l);
  std::array<std::array<double, 9>, 9> ba{};
  for (std::size_t c = 0; c < 9; ++c)
    for (std::size_t d = 0; d < 9; ++d)
      for (std::size_t i = 0; i < 3; ++i) ba[c][d] += bm(c, i) * am(i, d);

  double bab = 0.0, aba = 0.0, abt = 0.0, bat = 0.0;
  for (std::size_t c = 0; c < 9; ++c)
    for (std::size_t l = 0; l < 3; ++l) {
      double s = 0.0;
      for (std::size_t i = 0; i < 3; ++i) s += bm(c, i) * ab[i][l];
      bab += (s - bm(c, l)) * (s - bm(c, l));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 9; ++c) {
      double s = 0.0;
      for (std::size_t l = 0; l < 3; ++l) s += ab[i][l] * am(l, c);
      aba += (s - am(i, c)) * (s - am(i, c));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l < 3; ++l) abt += (ab[i][l] - ab[l][i]) * (ab[i][l] - ab[l][i]);
  for (std::size_t c = 0; c < 9; ++c)
    for (std::size_t d = 0; d < 9; ++d) bat += (ba[c][d] - ba[d][c]) * (ba[c][d] - ba[d][c]);
  r.moore_penrose = {std::sqrt(bab), std::sqrt(aba), std::sqrt(abt), std::sqrt(bat)};
  return r;
}

Vec3 recover(const Mat3& v, const Hyper3& a_inv) { return contract_mat(a_inv, v, Side::Left); }

bool is_orthogonal_tensor(const Hyper3& a, double tol) {
  return (kernel(a) - Mat3::identity()).norm() <= tol;
}

EigDecomposition3 eig_decompose_partial(const Hyper3& a, PartialSide side) {
  const SymmetryReport report = classify(a, 1e-8);
  const bool ok = side == PartialSide::Right  ? report.right_symmetric
                  : side == PartialSide::Left ? report.left_symmetric
                                              : report.centrally_symmetric;
  static constexpr const char* kNames[] = {"right", "left", "central"};
  const char* name = kNames[static_cast<int>(side)];
  if (!ok) throw Error(ErrorKind::NotPartiallySymmetric, std::string("tensor is not ") + name + "-side symmetric");

  // The left and central cases reduce to the right one: (A^T)^T is right-side
  // symmetric for left-symmetric A, and A^T for centrally symmetric A.
  const Hyper3 base = side == PartialSide::Right  ? a
                      : side == PartialSide::Left ? transpose(transpose(a))
                                                  : transpose(a);
  const LEigenSystem s = l_eigen(base);

  EigDecomposition3 d;
  d.side = side;
  d.sigma = s.sigma;
  d.x = s.x;

  std::array<Mat3, 3> v;
  std::vector<Mat3> known;
  std::size_t positive = 0;
  const double threshold = kZeroSigma * s.sigma[0];
  for (std::size_t j = 0; j < 3; ++j) {
    if (s.sigma[j] > threshold && s.sigma[j] > 0.0) {
      const double asym = (s.v[j] - s.v[j].transposed()).norm();
      d.max_asymmetry = std::max(d.max_asymmetry, asym);
      if (asym > 1e-6) {
        throw Error(ErrorKind::NotPartiallySymmetric,
                    "L-eigentensor asymmetry " + std::to_string(asym) + " for positive sigma");
      }
      v[j] = 0.5 * (s.v[j] + s.v[j].transposed());
      known.push_back(v[j]);
      ++positive;
    }
  }
  const auto extra = complete_orthonormal(known, symmetric_basis(), 3 - positive);
  for (std::size_t j = positive; j < 3; ++j) v[j] = extra[j - positive];

  for (std::size_t j = 0; j < 3; ++j) {
    const SymEig3 e = sym_eig3(v[j]);
    d.lambda[j] = e.values;
    d.y[j] = e.vectors;
  }
  return d;
}

Hyper3 reconstruct(const EigDecomposition3& d) {
  Hyper3 a;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      const double w = d.sigma[j] * d.lambda[j][k];
      const Vec3& x = d.x[j];
      const Vec3& y = d.y[j][k];
      switch (d.side) {
        case PartialSide::Right: a = a + w * outer(x, y, y); break;
        case PartialSide::Left: a = a + w * outer(y, y, x); break;
        case PartialSide::Central: a = a + w * outer(y, x, y); break;
      }
    }
  }
  return a;
}

}  // namespace t3
