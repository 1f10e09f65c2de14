#pragma once

// Largest singular value, C-eigenvalue and Z-eigenvalue of a third order
// tensor by multistart alternating / shifted power iterations, and the seven
// kernel-trace invariants.
//
// The maximizations are nonconvex; the result is the best critical point
// over all restarts and is not certified globally optimal. Raise `restarts`
// when the distinct-value histogram shows competing maxima.

#include <cstdint>
#include <functional>
#include <vector>

#include "tensor3/types.hpp"

namespace t3 {

enum class CriticalKind { Singular, CEigen, ZEigen };

struct CriticalTriple {
  CriticalKind kind = CriticalKind::Singular;
  double value = 0.0;
  // Singular: left, central, right vectors. C-eigen: z == y. Z-eigen: all equal.
  Vec3 x, y, z;
  double residual = 0.0;  // max residual of the defining equations
  int starts_converged = 0;
};

struct PowerOptions {
  int restarts = 64;
  // A restart converges once the per-iteration vector update is below tol
  // and the residual is below critical_residual_bound.
  double tol = 1e-12;
  int max_iters = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Called after every iteration with (restart, iteration, objective). Must
  /// be thread-safe when threads > 1.
  std::function<void(int, int, double)> observer;
};

/// A distinct critical value and how many converged restarts reached it.
struct CriticalValueCount {
  double value = 0.0;
  int count = 0;
};

struct CriticalSearch {
  CriticalTriple best;
  std::vector<CriticalValueCount> distinct;  // descending by value
};

/// Residual threshold for accepting a converged restart, 1e-9 max(1, |A|).
double critical_residual_bound(const Hyper3& a);

CriticalSearch singular_search(const Hyper3& a, const PowerOptions& opts = {});
CriticalSearch c_eigen_search(const Hyper3& a, const PowerOptions& opts = {});
CriticalSearch z_eigen_search(const Hyper3& a, const PowerOptions& opts = {});

/// eta_1 = max x A y z over unit x, y, z.
CriticalTriple max_singular_value(const Hyper3& a, const PowerOptions& opts = {});
/// mu_1 = max x A y y; A must be right-side symmetric.
CriticalTriple max_c_eigenvalue(const Hyper3& a, const PowerOptions& opts = {});
/// nu_1 = max x A x x; A must be symmetric.
CriticalTriple max_z_eigenvalue(const Hyper3& a, const PowerOptions& opts = {});

/// Residual of the defining equations at a given point, value included.
double singular_residual(const Hyper3& a, double eta, const Vec3& x, const Vec3& y, const Vec3& z);
double c_eigen_residual(const Hyper3& a, double mu, const Vec3& x, const Vec3& y);
double z_eigen_residual(const Hyper3& a, double nu, const Vec3& x);

struct InvariantSet {
  double tr_u = 0.0;
  double tr_u2 = 0.0;
  double tr_u3 = 0.0;
  double tr_ubar2 = 0.0;
  double tr_ubar3 = 0.0;
  double tr_uhat2 = 0.0;
  double tr_uhat3 = 0.0;
};

InvariantSet invariants(const Hyper3& a);

}  // namespace t3
