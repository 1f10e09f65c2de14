#pragma once

// Kernel tensor, L-eigenvalue decomposition, L-inverse, null space and the
// eigenvector decompositions of partially symmetric tensors.
//
// Everything works on the 3x9 unfolding A = (a_ir), r = 3j + k. L-eigenvalues
// are its singular values, computed by one-sided Jacobi rotations of the rows
// so that small values keep absolute accuracy near eps |A|.

#include <array>
#include <vector>

#include "tensor3/core.hpp"
#include "tensor3/types.hpp"

namespace t3 {

struct SymEig3 {
  std::array<double, 3> values;  // descending
  std::array<Vec3, 3> vectors;   // orthonormal, largest |component| positive
};

/// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
/// Throws NotSymmetric unless u.is_symmetric(1e-8).
SymEig3 sym_eig3(const Mat3& u);

/// U = A A^T, i.e. u_il = a_ijk a_ljk.
Mat3 kernel(const Hyper3& a);

struct KernelTriple {
  Mat3 u;      // kernel of A
  Mat3 u_bar;  // kernel of A^T
  Mat3 u_hat;  // kernel of (A^T)^T
};

KernelTriple kernel_triple(const Hyper3& a);

using Unfolded = std::array<std::array<double, 9>, 3>;

Unfolded unfold(const Hyper3& a);
Hyper3 fold(const Unfolded& m);

struct LEigenSystem {
  std::array<double, 3> sigma;  // descending, >= 0
  std::array<Vec3, 3> x;        // L-eigenvectors
  std::array<Mat3, 3> v;        // L-eigentensors
};

/// A = sum_j sigma_j x_j ⊗ V_j with A V_j = sigma_j x_j and A^T x_j =
/// sigma_j V_j. Eigentensors for sigma_j <= 1e-12 sigma_1 are not fixed by
/// those equations; they are completed to an orthonormal set from the
/// canonical matrix basis, which keeps A V_j = 0.
LEigenSystem l_eigen(const Hyper3& a);

/// sum_j sigma_j x_j ⊗ V_j
Hyper3 reconstruct(const LEigenSystem& s);

struct NullSpace {
  int rank = 0;
  std::vector<Mat3> basis;  // 9 - rank orthonormal tensors with A N ~ 0
};

NullSpace rank_and_nullspace(const Hyper3& a, double tol = 1e-10);

inline constexpr double kSingularThreshold = 1e-10;

/// B = sum_j V_j ⊗ x_j / sigma_j, the unique tensor with A B = I and
/// B ⊕ A = A^T ⊕ (B^T)^T. Throws SingularTensor when sigma_3 <= 1e-10 sigma_1.
Hyper3 l_inverse(const Hyper3& a);

/// The tensor whose L-inverse is b, i.e. the Moore-Penrose inverse of b's
/// 9x3 unfolding b_(jk),l read back as a 3x9 one: from_l_inverse(l_inverse(A))
/// = A. Applying l_inverse twice does not return A in general, because
/// l_inverse unfolds its argument along the first index.
Hyper3 from_l_inverse(const Hyper3& b);

struct InverseResiduals {
  double identity = 0.0;  // |A B - I|
  double oplus = 0.0;     // |B ⊕ A - A^T ⊕ (B^T)^T|
  // Moore-Penrose conditions on the 3x9 / 9x3 unfoldings:
  // |BAB - B|, |ABA - A|, |AB - (AB)^T|, |BA - (BA)^T|.
  std::array<double, 4> moore_penrose{};

  double max() const;
};

InverseResiduals inverse_residuals(const Hyper3& a, const Hyper3& b);

/// x from V = x A, given B = l_inverse(A): x = V B.
Vec3 recover(const Mat3& v, const Hyper3& a_inv);

/// |A A^T - I| <= tol
bool is_orthogonal_tensor(const Hyper3& a, double tol = 1e-10);

enum class PartialSide { Right, Left, Central };

struct EigDecomposition3 {
  PartialSide side = PartialSide::Right;
  std::array<double, 3> sigma{};
  std::array<std::array<double, 3>, 3> lambda{};  // lambda[j][k]
  std::array<Vec3, 3> x;
  std::array<std::array<Vec3, 3>, 3> y;  // y[j][k]
  // Largest |V_j - V_j^T| over eigentensors with positive sigma_j, measured
  // before symmetrization.
  double max_asymmetry = 0.0;
};

/// Right:   A = sum sigma_j lambda_jk x_j ⊗ y_jk ⊗ y_jk
/// Left:    A = sum sigma_j lambda_jk y_jk ⊗ y_jk ⊗ x_j
/// Central: A = sum sigma_j lambda_jk y_jk ⊗ x_j ⊗ y_jk
/// Throws NotPartiallySymmetric when A lacks the side's symmetry (1e-8).
EigDecomposition3 eig_decompose_partial(const Hyper3& a, PartialSide side);

Hyper3 reconstruct(const EigDecomposition3& d);

}  // namespace t3
