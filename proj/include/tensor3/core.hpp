#pragma once

// Contraction products, outer products, transpose and change of basis for
// third order tensors, plus the Levi-Civita tensor.

#include <cstdint>

#include "tensor3/types.hpp"

namespace t3 {

/// Index position of a third order hypermatrix.
enum class Slot { First = 0, Second = 1, Third = 2 };

enum class Side { Left, Right };

/// Sum one index of A against v. First: v_i a_ijk, Second: a_ijk v_j,
/// Third: a_ijk v_k. The surviving indices keep their order.
Mat3 contract_one(const Hyper3& a, const Vec3& v, Slot slot);

/// Right: a_ijk v_jk. Left: v_ij a_ijk.
Vec3 contract_mat(const Hyper3& a, const Mat3& v, Side side);

/// Contract u against slot `su` and v against slot `sv`; the remaining
/// index carries the result. (Second, Third) gives a_ijk u_j v_k.
Vec3 contract_two(const Hyper3& a, const Vec3& u, const Vec3& v, Slot su, Slot sv);

/// x_i a_ijk y_j z_k
double contract_full(const Hyper3& a, const Vec3& x, const Vec3& y, const Vec3& z);

/// a_ijk b_ijk
double inner(const Hyper3& a, const Hyper3& b);

/// Second order product u_il = a_ijk b_jkl.
Mat3 prod2(const Hyper3& a, const Hyper3& b);

/// Fourth order product t_ijkl = a_ijm b_mkl.
Quad3 prod4(const Hyper3& a, const Hyper3& b);

Hyper3 outer(const Vec3& x, const Vec3& y, const Vec3& z);
/// a_ijk = u_ij z_k
Hyper3 outer(const Mat3& u, const Vec3& z);
/// a_ijk = x_i v_jk
Hyper3 outer(const Vec3& x, const Mat3& v);

/// The unique B with x A y z = y B z x for all vectors: b_ijk = a_kij.
/// Applying it three times returns A exactly.
Hyper3 transpose(const Hyper3& a);

/// Orthonormal change of basis, p_iq p_jr p_ks a_qrs. Throws NotOrthogonal
/// unless |P P^T - I| <= 1e-10.
Hyper3 rotate(const Hyper3& a, const Mat3& p);
Mat3 rotate(const Mat3& u, const Mat3& p);
Vec3 rotate(const Vec3& x, const Mat3& p);

inline constexpr double kRotationTolerance = 1e-10;

/// Proper rotation built by orthonormalizing a seeded Gaussian sample.
Mat3 random_rotation(std::uint64_t seed);

/// Tensor with independent standard normal entries.
Hyper3 random_tensor(std::uint64_t seed);

/// Uniformly distributed unit vector.
Vec3 random_unit(std::uint64_t seed);

Hyper3 levi_civita();

}  // namespace t3
