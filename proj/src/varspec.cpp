#include "tensor3/varspec.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "tensor3/core.hpp"
#include "tensor3/spectral.hpp"
#include "tensor3/symmetry.hpp"

namespace t3 {

namespace {

struct Start {
  int restart = 0;
  std::optional<CriticalTriple> result;  // set when converged
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t n) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (n + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vec3 normalized_or(const Vec3& v, const Vec3& fallback) {
  const double n = v.norm();
  return n > 0.0 ? v / n : fallback;
}

double max_update(std::initializer_list<double> d) { return std::max(d); }

Vec3 ayz(const Hyper3& a, const Vec3& y, const Vec3& z) {
  return contract_two(a, y, z, Slot::Second, Slot::Third);
}
Vec3 xaz(const Hyper3& a, const Vec3& x, const Vec3& z) {
  return contract_two(a, x, z, Slot::First, Slot::Third);
}
Vec3 xya(const Hyper3& a, const Vec3& x, const Vec3& y) {
  return contract_two(a, x, y, Slot::First, Slot::Second);
}

bool lex_less(const CriticalTriple& l, const CriticalTriple& r) {
  return std::tie(l.x.array(), l.y.array(), l.z.array()) < std::tie(r.x.array(), r.y.array(), r.z.array());
}

template <class RunOne>
CriticalSearch multistart(const PowerOptions& opts, CriticalKind kind, RunOne run_one) {
  const int n = std::max(opts.restarts, 1);
  std::vector<Start> starts(static_cast<std::size_t>(n));
  auto work = [&](int first, int stride) {
    for (int r = first; r < n; r += stride) {
      starts[static_cast<std::size_t>(r)].restart = r;
      starts[static_cast<std::size_t>(r)].result = run_one(r);
    }
  };
  const int threads = std::clamp(opts.threads, 1, n);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  std::vector<CriticalTriple> found;
  for (const auto& s : starts)
    if (s.result) found.push_back(*s.result);
  if (found.empty()) {
    throw Error(ErrorKind::NoConvergence,
                "no restart converged within " + std::to_string(opts.max_iters) + " iterations");
  }
  // Order-independent reduction: value descending, then vectors lexicographic.
  std::sort(found.begin(), found.end(), [](const CriticalTriple& l, const CriticalTriple& r) {
    if (l.value != r.value) return l.value > r.value;
    return lex_less(l, r);
  });

  CriticalSearch out;
  out.best = found.front();
  out.best.kind = kind;
  out.best.starts_converged = static_cast<int>(found.size());
  for (const auto& t : found) {
    if (!out.distinct.empty() && std::fabs(out.distinct.back().value - t.value) <= 1e-8) {
      ++out.distinct.back().count;
    } else {
      out.distinct.push_back({t.value, 1});
    }
  }
  return out;
}

void notify(const PowerOptions& opts, int restart, int iter, double f) {
  if (opts.observer) opts.observer(restart, iter, f);
}

}  // namespace

double critical_residual_bound(const Hyper3& a) { return 1e-9 * std::max(1.0, a.norm()); }

double singular_residual(const Hyper3& a, double eta, const Vec3& x, const Vec3& y, const Vec3& z) {
  return max_update({(ayz(a, y, z) - eta * x).norm(), (xaz(a, x, z) - eta * y).norm(),
                     (xya(a, x, y) - eta * z).norm()});
}

double c_eigen_residual(const Hyper3& a, double mu, const Vec3& x, const Vec3& y) {
  return std::max((ayz(a, y, y) - mu * x).norm(), (xaz(a, x, y) - mu * y).norm());
}

double z_eigen_residual(const Hyper3& a, double nu, const Vec3& x) {
  return (ayz(a, x, x) - nu * x).norm();
}

CriticalSearch singular_search(const Hyper3& a, const PowerOptions& opts) {
  const double bound = critical_residual_bound(a);
  return multistart(opts, CriticalKind::Singular, [&](int r) -> std::optional<CriticalTriple> {
    const auto base = static_cast<std::uint64_t>(3 * r);
    Vec3 x = random_unit(mix(opts.seed, base));
    Vec3 y = random_unit(mix(opts.seed, base + 1));
    Vec3 z = random_unit(mix(opts.seed, base + 2));
    for (int it = 0; it < opts.max_iters; ++it) {
      const Vec3 xn = normalized_or(ayz(a, y, z), x);
      const Vec3 yn = normalized_or(xaz(a, xn, z), y);
      const Vec3 zn = normalized_or(xya(a, xn, yn), z);
      const double step = max_update({(xn - x).norm(), (yn - y).norm(), (zn - z).norm()});
      x = xn;
      y = yn;
      z = zn;
      double f = contract_full(a, x, y, z);
      if (f < 0.0) {
        x = -x;
        f = -f;
      }
      notify(opts, r, it, f);
      if (step < opts.tol) {
        const double res = singular_residual(a, f, x, y, z);
        if (res <= bound) return CriticalTriple{CriticalKind::Singular, f, x, y, z, res, 0};
      }
    }
    return std::nullopt;
  });
}

CriticalSearch c_eigen_search(const Hyper3& a, const PowerOptions& opts) {
  if (!classify(a).right_symmetric) {
    throw Error(ErrorKind::NotRightSymmetric, "C-eigenvalues need a right-side symmetric tensor");
  }
  const double bound = critical_residual_bound(a);
  // sym(x A) + shift I is positive semi-definite, so the shifted y step
  // cannot decrease x A y y.
  const double shift = a.norm();
  // Objective changes below this are rounding noise.
  const double slack = 1e-14 * std::max(1.0, a.norm());
  return multistart(opts, CriticalKind::CEigen, [&](int r) -> std::optional<CriticalTriple> {
    const auto base = static_cast<std::uint64_t>(2 * r);
    Vec3 x = random_unit(mix(opts.seed, base));
    Vec3 y = random_unit(mix(opts.seed, base + 1));
    for (int it = 0; it < opts.max_iters; ++it) {
      const Vec3 xn = normalized_or(ayz(a, y, y), x);
      const double f0 = contract_full(a, xn, y, y);
      const Vec3 target = normalized_or(xaz(a, xn, y) + shift * y, y);
      Vec3 yn = target;
      double f = contract_full(a, xn, yn, yn);
      for (int h = 0; h < 30 && f < f0 - slack; ++h) {
        const double t = std::ldexp(1.0, -(h + 1));
        yn = normalized_or(y + t * (target - y), y);
        f = contract_full(a, xn, yn, yn);
      }
      if (f < f0 - slack) {
        yn = y;
        f = f0;
      }
      const double step = std::max((xn - x).norm(), (yn - y).norm());
      x = xn;
      y = yn;
      if (f < 0.0) {
        x = -x;
        f = -f;
      }
      notify(opts, r, it, f);
      if (step < opts.tol) {
        const double res = c_eigen_residual(a, f, x, y);
        if (res <= bound) return CriticalTriple{CriticalKind::CEigen, f, x, y, y, res, 0};
      }
    }
    return std::nullopt;
  });
}

CriticalSearch z_eigen_search(const Hyper3& a, const PowerOptions& opts) {
  if (!classify(a).symmetric) {
    throw Error(ErrorKind::NotSymmetric, "Z-eigenvalues need a symmetric tensor");
  }
  const double bound = critical_residual_bound(a);
  // 2 |A| bounds the spectral radius of the Hessian part 2 A x on the unit
  // ball, which makes the shifted iteration monotone.
  const double shift = 1.0 + 2.0 * a.norm();
  return multistart(opts, CriticalKind::ZEigen, [&](int r) -> std::optional<CriticalTriple> {
    Vec3 x = random_unit(mix(opts.seed, static_cast<std::uint64_t>(r)));
    if (contract_full(a, x, x, x) < 0.0) x = -x;
    for (int it = 0; it < opts.max_iters; ++it) {
      const Vec3 xn = normalized_or(ayz(a, x, x) + shift * x, x);
      const double step = (xn - x).norm();
      x = xn;
      const double f = contract_full(a, x, x, x);
      notify(opts, r, it, f);
      if (step < opts.tol && f >= 0.0) {
        const double res = z_eigen_residual(a, f, x);
        if (res <= bound) return CriticalTriple{CriticalKind::ZEigen, f, x, x, x, res, 0};
      }
    }
    return std::nullopt;
  });
}

CriticalTriple max_singular_value(const Hyper3& a, const PowerOptions& opts) {
  return singular_search(a, opts).best;
}

CriticalTriple max_c_eigenvalue(const Hyper3& a, const PowerOptions& opts) {
  return c_eigen_search(a, opts).best;
}

CriticalTriple max_z_eigenvalue(const Hyper3& a, const PowerOptions& opts) {
  return z_eigen_search(a, opts).best;
}

InvariantSet invariants(const Hyper3& a) {
  const KernelTriple k = kernel_triple(a);
  const Mat3 u2 = k.u * k.u, ub2 = k.u_bar * k.u_bar, uh2 = k.u_hat * k.u_hat;
  InvariantSet s;
  s.tr_u = k.u.trace();
  s.tr_u2 = u2.trace();
  s.tr_u3 = (u2 * k.u).trace();
  s.tr_ubar2 = ub2.trace();
  s.tr_ubar3 = (ub2 * k.u_bar).trace();
  s.tr_uhat2 = uh2.trace();
  s.tr_uhat3 = (uh2 * k.u_hat).trace();
  return s;
}

}  // namespace t3
