#pragma once

// Symmetry taxonomy of third order tensors and seeded fixtures for each class.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "tensor3/types.hpp"

namespace t3 {

struct SymmetryReport {
  bool right_symmetric = false;      // a_ijk = a_ikj
  bool left_symmetric = false;       // a_ijk = a_jik
  bool centrally_symmetric = false;  // a_ijk = a_kji
  bool partially_symmetric = false;  // any of the three above
  bool symmetric = false;            // all three, and cyclic
  bool cyclically_symmetric = false;  // transpose(A) = A
  bool right_anti = false;
  bool left_anti = false;
  bool centrally_anti = false;
  bool totally_anti = false;
  bool traceless = false;            // a_ijj = 0
  bool selectively_right = false;    // a_ijk = a_ikj for j != k
  bool selectively_left = false;     // a_ijk = a_jik for i != j
  double tol = 0.0;
};

inline constexpr double kDefaultSymmetryTolerance = 1e-10;

/// Entrywise classification. Each flag holds when the defining condition
/// is met within tol * max(1, |A|).
///
/// The lattice implications symmetric => right/left/central, symmetric =>
/// partially && cyclic, and totally_anti => each anti flag hold by
/// construction. The reverse direction of symmetric <=> partially &&
/// cyclic can only differ for inputs whose deviations sit at the tolerance
/// boundary.
SymmetryReport classify(const Hyper3& a, double tol = kDefaultSymmetryTolerance);

struct SelectiveSymmetry {
  bool right = false;
  bool left = false;
};

/// Selective symmetry decided by the contractions A E and E A with the
/// Levi-Civita tensor instead of entrywise.
SelectiveSymmetry selective_symmetry_via_levi_civita(const Hyper3& a,
                                                     double tol = kDefaultSymmetryTolerance);

enum class SymmetryClass {
  RightSymmetric,
  LeftSymmetric,
  CentrallySymmetric,
  PartiallySymmetric,
  Symmetric,
  CyclicallySymmetric,
  RightAnti,
  LeftAnti,
  CentrallyAnti,
  TotallyAnti,
  Traceless,
  SelectivelyRight,
  SelectivelyLeft,
  PrimarilySymmetric,
  PrimarilyCyclicallySymmetric,
};

/// Tags use snake_case, e.g. "right_symmetric", "primarily_symmetric".
/// Hyphens are accepted in place of underscores.
std::string_view to_string(SymmetryClass c);
SymmetryClass parse_symmetry_class(std::string_view tag);  // throws UnsupportedClass

/// True when the report contains the class. The primarily-* classes map to
/// symmetric and cyclically_symmetric.
bool has_class(const SymmetryReport& r, SymmetryClass c);

/// Nonzero tensor of the requested class, deterministic in seed.
Hyper3 make_fixture(SymmetryClass c, std::uint64_t seed);

/// sum_i lambda_i x_i ⊗ x_i ⊗ x_i for the columns x_i of an orthogonal q.
Hyper3 primarily_symmetric(const Mat3& q, const Vec3& lambda);

/// l1 x1⊗x2⊗x3 + l2 x2⊗x3⊗x1 + l3 x3⊗x1⊗x2 for the columns of q. Cyclically
/// symmetric only when the three weights agree.
Hyper3 primarily_cyclic(const Mat3& q, const Vec3& lambda);

/// Projections onto the symmetry classes (averages over index permutations).
Hyper3 symmetrize_right(const Hyper3& a);
Hyper3 symmetrize_left(const Hyper3& a);
Hyper3 symmetrize_central(const Hyper3& a);
Hyper3 symmetrize_full(const Hyper3& a);
Hyper3 symmetrize_cyclic(const Hyper3& a);

}  // namespace t3
