// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from the independent routines in oracle.hpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tensor3/core.hpp"
#include "tensor3/spectral.hpp"
#include "tensor3/symmetry.hpp"
#include "tensor3/varspec.hpp"

using namespace t3;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Tracks the worst value of a quantity against its limit.
struct Worst {
  std::string name;
  double limit;
  double value = 0.0;
  void see(double v) { value = std::max(value, v); }
  bool ok() const { return value <= limit; }
  std::string str() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %.3g (limit %.0e)", name.c_str(), value, limit);
    return buf;
  }
};

Outcome summarize(const std::vector<Worst>& w, std::string extra = {}) {
  Outcome o;
  for (const auto& x : w) {
    o.pass = o.pass && x.ok();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += x.str();
  }
  if (!extra.empty()) o.detail += "; " + extra;
  return o;
}

constexpr std::array kAllClasses{
    SymmetryClass::RightSymmetric,      SymmetryClass::LeftSymmetric,
    SymmetryClass::CentrallySymmetric,  SymmetryClass::PartiallySymmetric,
    SymmetryClass::Symmetric,           SymmetryClass::CyclicallySymmetric,
    SymmetryClass::RightAnti,           SymmetryClass::LeftAnti,
    SymmetryClass::CentrallyAnti,       SymmetryClass::TotallyAnti,
    SymmetryClass::Traceless,           SymmetryClass::SelectivelyRight,
    SymmetryClass::SelectivelyLeft,     SymmetryClass::PrimarilySymmetric,
    SymmetryClass::PrimarilyCyclicallySymmetric,
};

Mat3 random_mat(std::uint64_t seed) {
  const Hyper3 t = random_tensor(seed);
  std::array<double, 9> m{};
  for (int n = 0; n < 9; ++n) m[n] = t[n];
  return Mat3(m);
}

Hyper3 rank_r(int r, std::uint64_t seed) {
  Hyper3 a;
  for (int j = 0; j < r; ++j) a = a + outer(random_unit(seed * 11 + j), random_mat(seed * 11 + j + 5));
  return a;
}

// 1. Levi-Civita golden values.
Outcome levi_civita_suite() {
  const Hyper3 e = levi_civita();
  Worst k{"|kernel(E) - 2I|max", 1e-14}, s{"|sigma - sqrt2|", 1e-12}, inv{"|E^-1 - E/2|max", 1e-12},
      rec{"|recover - z|", 1e-12};
  k.see((kernel(e) - 2.0 * Mat3::identity()).max_abs());
  for (double v : l_eigen(e).sigma) s.see(std::fabs(v - std::numbers::sqrt2));
  const Hyper3 b = l_inverse(e);
  inv.see((b - 0.5 * e).max_abs());
  for (int n = 0; n < 100; ++n) {
    const Vec3 z = random_unit(n) * (1.0 + n);
    const Mat3 u = contract_one(e, z, Slot::Third);
    rec.see((recover(u, b) - z).norm() / z.norm());
  }
  const bool orth = is_orthogonal_tensor(e / std::numbers::sqrt2);
  Outcome o = summarize({k, s, inv, rec}, std::string("orthogonal(E/sqrt2) ") + (orth ? "true" : "false"));
  o.pass = o.pass && orth;
  return o;
}

// 2. L-inverse and Moore-Penrose conditions.
Outcome l_inverse_suite() {
  Worst mp{"max MP residual", 1e-9}, id{"|A A^-1 - I|", 1e-9}, back{"rel |(A^-1)^-1 - A|", 1e-8};
  for (int s = 0; s < 1000; ++s) {
    const Hyper3 a = random_tensor(100000 + s);
    const Hyper3 b = l_inverse(a);
    const InverseResiduals r = inverse_residuals(a, b);
    for (double v : r.moore_penrose) mp.see(v);
    mp.see(r.oplus);
    id.see((prod2(a, b) - Mat3::identity()).norm());
    back.see((from_l_inverse(b) - a).norm() / a.norm());
  }
  return summarize({mp, id, back}, "1000 tensors");
}

// 3. Transpose and contraction oracles.
Outcome algebra_suite() {
  bool bitwise = true;
  Worst err{"max relative oracle error", 1e-13};
  const std::array<std::pair<int, int>, 6> pairs{{{1, 2}, {0, 1}, {0, 2}, {2, 1}, {1, 0}, {2, 0}}};
  for (int s = 0; s < 1000; ++s) {
    const Hyper3 a = random_tensor(200000 + s), b = random_tensor(300000 + s);
    bitwise = bitwise && transpose(transpose(transpose(a))) == a;
    const Vec3 x = random_unit(3 * s) * 2.0, y = random_unit(3 * s + 1), z = random_unit(3 * s + 2) * 0.5;
    const Mat3 v = random_mat(400000 + s);
    const double an = a.norm();
    for (int slot = 0; slot < 3; ++slot)
      err.see(oracle::max_abs_diff(oracle::contract_one(a, x, slot), contract_one(a, x, static_cast<Slot>(slot)).data()) /
              (an * x.norm()));
    err.see(oracle::max_abs_diff(oracle::contract_mat_right(a, v), contract_mat(a, v, Side::Right).data()) / (an * v.norm()));
    err.see(oracle::max_abs_diff(oracle::contract_mat_left(a, v), contract_mat(a, v, Side::Left).data()) / (an * v.norm()));
    for (auto [su, sv] : pairs) {
      const Vec3 got = contract_two(a, y, z, static_cast<Slot>(su), static_cast<Slot>(sv));
      err.see(oracle::max_abs_diff(oracle::contract_two(a, y, z, su, sv), got.data()) / (an * y.norm() * z.norm()));
    }
    err.see(std::fabs(contract_full(a, x, y, z) - oracle::contract_full(a, x, y, z)) / (an * x.norm() * y.norm() * z.norm()));
    err.see(std::fabs(inner(a, b) - oracle::inner(a, b)) / (an * b.norm()));
    err.see(oracle::max_abs_diff(oracle::prod2(a, b), prod2(a, b).data()) / (an * b.norm()));
    err.see(oracle::max_abs_diff(oracle::prod4(a, b), prod4(a, b).data()) / (an * b.norm()));
  }
  Outcome o = summarize({err}, std::string("transpose^3 bitwise ") + (bitwise ? "yes" : "NO"));
  o.pass = o.pass && bitwise;
  return o;
}

struct Quantity {
  std::string name;
  int degree;
  double value;
};

std::vector<Quantity> quantities(const Hyper3& a) {
  const InvariantSet s = invariants(a);
  const LEigenSystem l = l_eigen(a);
  std::vector<Quantity> q{{"trU", 2, s.tr_u},         {"trU2", 4, s.tr_u2},       {"trU3", 6, s.tr_u3},
                          {"trUbar2", 4, s.tr_ubar2}, {"trUbar3", 6, s.tr_ubar3}, {"trUhat2", 4, s.tr_uhat2},
                          {"trUhat3", 6, s.tr_uhat3}, {"sigma1", 1, l.sigma[0]},  {"sigma2", 1, l.sigma[1]},
                          {"sigma3", 1, l.sigma[2]},  {"eta1", 1, max_singular_value(a).value}};
  const SymmetryReport r = classify(a);
  if (r.right_symmetric) q.push_back({"mu1", 1, max_c_eigenvalue(a).value});
  if (r.symmetric) q.push_back({"nu1", 1, max_z_eigenvalue(a).value});
  return q;
}

// 4. Rotation invariance of every invariant.
Outcome rotation_suite() {
  std::vector<Hyper3> fixtures;
  for (int s = 0; s < 4; ++s) fixtures.push_back(make_fixture(SymmetryClass::Symmetric, s));
  for (int s = 0; s < 3; ++s) fixtures.push_back(make_fixture(SymmetryClass::PrimarilySymmetric, s));
  for (int s = 0; s < 4; ++s) fixtures.push_back(make_fixture(SymmetryClass::RightSymmetric, s));
  for (int s = 0; s < 3; ++s) fixtures.push_back(random_tensor(500 + s));
  for (SymmetryClass c : {SymmetryClass::LeftSymmetric, SymmetryClass::CentrallySymmetric,
                          SymmetryClass::CyclicallySymmetric, SymmetryClass::TotallyAnti,
                          SymmetryClass::Traceless, SymmetryClass::PrimarilyCyclicallySymmetric})
    fixtures.push_back(make_fixture(c, 7));

  Worst w{"max relative drift", 1e-8};
  std::string where;
  int checked = 0, mu = 0, nu = 0;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const Hyper3& a = fixtures[f];
    const auto base = quantities(a);
    const double norm = a.norm();
    for (int n = 0; n < 100; ++n) {
      const auto q = quantities(rotate(a, random_rotation(7000 + 100 * f + n)));
      if (q.size() != base.size()) {
        w.see(INFINITY);
        where = "class changed under rotation";
        continue;
      }
      for (std::size_t m = 0; m < base.size(); ++m) {
        // Relative to the value; the floor only guards exact zeros.
        const double scale = std::max(std::fabs(base[m].value), 1e-12 * std::pow(norm, base[m].degree));
        const double d = std::fabs(q[m].value - base[m].value) / scale;
        if (d > w.value) where = base[m].name + " fixture " + std::to_string(f);
        w.see(d);
        ++checked;
        mu += base[m].name == "mu1";
        nu += base[m].name == "nu1";
      }
    }
  }
  return summarize({w}, "worst at " + where + "; " + std::to_string(fixtures.size()) + " fixtures x 100 rotations, " +
                            std::to_string(checked) + " comparisons (" + std::to_string(mu) + " mu1, " +
                            std::to_string(nu) + " nu1)");
}

// 5. Rank-nullity.
Outcome rank_nullity_suite() {
  bool counts = true;
  Worst ann{"max |A N|", 1e-9};
  int cases = 0;
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s < 50; ++s) {
      const Hyper3 a = rank_r(r, 600 + 50 * r + s) * std::pow(10.0, s % 7 - 3);
      const NullSpace n = rank_and_nullspace(a);
      counts = counts && n.rank == r && n.rank == oracle::unfolding_rank(a) &&
               n.rank + static_cast<int>(n.basis.size()) == 9 && n.basis.size() >= 6;
      for (const Mat3& b : n.basis) ann.see(contract_mat(a, b, Side::Right).norm());
      ++cases;
    }
  }
  for (const Hyper3& a : {levi_civita(), make_fixture(SymmetryClass::Symmetric, 1)}) {
    const NullSpace n = rank_and_nullspace(a);
    counts = counts && n.rank == 3 && n.basis.size() == 6;
    for (const Mat3& b : n.basis) ann.see(contract_mat(a, b, Side::Right).norm());
    ++cases;
  }
  Outcome o = summarize({ann}, std::to_string(cases) + " tensors of rank 0..3, rank + nullity = 9 " +
                                   (counts ? "always" : "VIOLATED"));
  o.pass = o.pass && counts;
  return o;
}

// 6. Ordering of the variational values.
Outcome ordering_suite() {
  Worst nm{"max(nu1 - mu1)", 1e-9}, me{"max(mu1 - eta1)", 1e-9}, gap{"max|nu1 - mu1|", 1e-9},
      me_r{"right-symmetric max(mu1 - eta1)", 1e-9};
  for (int s = 0; s < 200; ++s) {
    const Hyper3 a = make_fixture(s % 2 ? SymmetryClass::Symmetric : SymmetryClass::PrimarilySymmetric, 800 + s);
    const double nu = max_z_eigenvalue(a).value, mu = max_c_eigenvalue(a).value, eta = max_singular_value(a).value;
    nm.see(nu - mu);
    me.see(mu - eta);
    gap.see(std::fabs(nu - mu));
  }
  for (int s = 0; s < 200; ++s) {
    const Hyper3 a = make_fixture(SymmetryClass::RightSymmetric, 1200 + s);
    me_r.see(max_c_eigenvalue(a).value - max_singular_value(a).value);
  }
  return summarize({nm, me, gap, me_r}, "200 symmetric + 200 right-symmetric fixtures");
}

// 7. Eigenvector decompositions.
Outcome decomposition_suite() {
  Worst rec{"max relative reconstruction residual", 1e-9}, asym{"max eigentensor asymmetry", 1e-8};
  const std::array<std::pair<PartialSide, SymmetryClass>, 3> cases{{
      {PartialSide::Right, SymmetryClass::RightSymmetric},
      {PartialSide::Left, SymmetryClass::LeftSymmetric},
      {PartialSide::Central, SymmetryClass::CentrallySymmetric},
  }};
  for (auto [side, cls] : cases) {
    for (int s = 0; s < 100; ++s) {
      // Rotated fixtures are symmetric only up to rounding.
      const Hyper3 f = make_fixture(cls, 1500 + s);
      const Hyper3 a = s % 2 ? rotate(f, random_rotation(1700 + s)) : f;
      const EigDecomposition3 d = eig_decompose_partial(a, side);
      rec.see((reconstruct(d) - a).norm() / a.norm());
      asym.see(d.max_asymmetry);
    }
  }
  return summarize({rec, asym}, "100 fixtures per side");
}

// 8. Power iteration against the sphere-grid oracle.
Outcome variational_suite(std::string& empirical) {
  Worst eta{"max |eta1 - oracle|", 1e-6}, mu{"max |mu1 - oracle|", 1e-6}, nu{"max |nu1 - oracle|", 1e-6};
  int n_eta = 0, n_mu = 0, n_nu = 0;
  for (SymmetryClass c : kAllClasses) {
    for (int s = 0; s < 20; ++s) {
      const Hyper3 a = make_fixture(c, 2000 + s);
      eta.see(std::fabs(max_singular_value(a).value - oracle::max_singular_grid(a, 300)));
      ++n_eta;
      const SymmetryReport r = classify(a);
      if (r.right_symmetric) {
        mu.see(std::fabs(max_c_eigenvalue(a).value - oracle::max_c_grid(a)));
        ++n_mu;
      }
      if (r.symmetric) {
        nu.see(std::fabs(max_z_eigenvalue(a).value - oracle::max_z_grid(a)));
        ++n_nu;
      }
    }
  }
  const Hyper3 e = levi_civita();
  const double power = max_singular_value(e).value, grid = oracle::max_singular_grid(e);
  eta.see(std::fabs(power - grid));
  char buf[200];
  std::snprintf(buf, sizeof buf, "eta1(E) = %.17g (power), %.17g (grid)", power, grid);
  empirical = buf;
  return summarize({eta, mu, nu}, std::to_string(n_eta) + " eta1, " + std::to_string(n_mu) + " mu1, " +
                                      std::to_string(n_nu) + " nu1 fixtures");
}

// 9. Selective symmetry: entrywise vs Levi-Civita contraction.
Outcome selective_suite() {
  int disagreements = 0, positives = 0, total = 0;
  const auto check = [&](const Hyper3& a) {
    const SymmetryReport r = classify(a);
    const SelectiveSymmetry v = selective_symmetry_via_levi_civita(a);
    disagreements += (r.selectively_right != v.right) + (r.selectively_left != v.left);
    positives += r.selectively_right + r.selectively_left;
    ++total;
  };
  for (int s = 0; s < 1000; ++s) {
    const int kind = s % 8;
    const Hyper3 g = random_tensor(3000 + s);
    Hyper3 a;
    if (kind == 0) a = g;
    if (kind == 1) a = make_fixture(kAllClasses[(s / 8) % kAllClasses.size()], s);
    if (kind == 2) a = symmetrize_right(g) + 1e-3 * random_tensor(9000 + s);
    if (kind == 3) a = symmetrize_left(g) * std::pow(10.0, s % 9 - 4);
    if (kind == 4) {
      // Only a single entry with a repeated index.
      a = Hyper3::generate([&](std::size_t i, std::size_t j, std::size_t k) {
        return 9 * i + 3 * j + k == static_cast<std::size_t>(s % 27) ? 1.0 : 0.0;
      });
    }
    if (kind == 5) a = symmetrize_right(g) + symmetrize_left(random_tensor(9500 + s));
    if (kind == 6) a = symmetrize_full(g) + (s % 3) * levi_civita();
    if (kind == 7) a = symmetrize_right(g) + 1e-15 * random_tensor(9700 + s);
    check(a);
  }
  Outcome o;
  o.pass = disagreements == 0;
  o.detail = std::to_string(disagreements) + " disagreements over " + std::to_string(total) + " inputs (" +
             std::to_string(positives) + " selective flags set)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 for none
    std::function<Outcome()> run;
  };
  std::string empirical;
  const std::vector<Criterion> criteria{
      {1, "Levi-Civita golden values", 1.0, levi_civita_suite},
      {2, "L-inverse / Moore-Penrose", 10.0, l_inverse_suite},
      {3, "transpose and contraction oracles", 0.0, algebra_suite},
      {4, "rotation invariance", 0.0, rotation_suite},
      {5, "rank-nullity", 0.0, rank_nullity_suite},
      {6, "ordering nu1 <= mu1 <= eta1", 0.0, ordering_suite},
      {7, "eigenvector decompositions", 0.0, decomposition_suite},
      {8, "variational cross-check", 60.0, [&] { return variational_suite(empirical); }},
      {9, "selective symmetry equivalence", 0.0, selective_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    std::string timing = std::to_string(secs).substr(0, 6) + " s";
    if (c.limit_s > 0.0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
      pass = pass && secs < c.limit_s;
    }
    std::printf("criterion %d %s: %s | %s | %s\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    failures += !pass;
  }
  if (!empirical.empty()) std::printf("empirical (no proof): %s\n", empirical.c_str());
  std::printf("%s: %d of %zu criteria passed\n", failures ? "FAIL" : "PASS",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
