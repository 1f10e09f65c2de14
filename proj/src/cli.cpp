#include "tensor3/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cfloat>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "tensor3/core.hpp"
#include "tensor3/io.hpp"
#include "tensor3/simd.hpp"
#include "tensor3/spectral.hpp"
#include "tensor3/symmetry.hpp"
#include "tensor3/varspec.hpp"

namespace t3::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  bool json = false;
  double tol = 0.0;
  int restarts = 64;
  std::uint64_t seed = 0;
  int rotations = 100;
  int max_iters = 10000;
  int threads = 1;
  std::string out;
  std::string side = "right";
  std::string matrix;
  std::string fixture;
};

// Aligned "key  value" lines for the human-readable reports.
class TextReport {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double v) { add(std::move(key), io::format_double(v)); }
  void add(std::string key, bool b) { add(std::move(key), std::string(b ? "true" : "false")); }
  void add(std::string key, int v) { add(std::move(key), std::to_string(v)); }

  std::string str() const {
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (n) s += "  ";
    s += io::format_double(v[n]);
  }
  return s;
}

std::string mat_text(const Mat3& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += "; ";
    s += join(std::span<const double>(m.data().data() + 3 * i, 3));
  }
  return s + "]";
}

std::string vec_text(const Vec3& v) { return join(v.data()); }

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  io::TensorFile load() const {
    if (o_.input == "-") return io::parse_tensor_file(in_);
    std::ifstream f(o_.input);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open '" + o_.input + "'");
    return io::parse_tensor_file(f);
  }

  void emit(const json& j, const TextReport& t) const { write(o_.json ? j.dump(2) + "\n" : t.str()); }

  void write(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + o_.out + "'");
    f << text;
  }

  PowerOptions power() const {
    PowerOptions p;
    p.restarts = o_.restarts;
    p.seed = o_.seed;
    p.max_iters = o_.max_iters;
    p.threads = o_.threads;
    if (o_.tol > 0.0) p.tol = o_.tol;
    return p;
  }

  json power_config() const {
    const PowerOptions p = power();
    return {{"restarts", p.restarts}, {"seed", p.seed},       {"tol", p.tol},
            {"max_iters", p.max_iters}, {"threads", p.threads}, {"kernels", simd::active().name}};
  }

  double tol_or(double fallback) const { return o_.tol > 0.0 ? o_.tol : fallback; }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

void cmd_classify(const Runner& r) {
  const auto f = r.load();
  const SymmetryReport rep = classify(f.tensor, r.tol_or(kDefaultSymmetryTolerance));
  const json j = io::to_json(rep);
  TextReport t;
  for (const auto& [k, v] : j.items()) {
    if (v.is_boolean()) t.add(k, v.get<bool>());
  }
  t.add("tol", rep.tol);
  r.emit(j, t);
}

void cmd_kernel(const Runner& r) {
  const auto f = r.load();
  const KernelTriple k = kernel_triple(f.tensor);
  const json j = {{"U", io::to_json(k.u)},
                  {"U_bar", io::to_json(k.u_bar)},
                  {"U_hat", io::to_json(k.u_hat)},
                  {"inner", inner(f.tensor, f.tensor)},
                  {"config", {{"kernels", simd::active().name}}}};
  TextReport t;
  t.add("U", mat_text(k.u));
  t.add("U_bar", mat_text(k.u_bar));
  t.add("U_hat", mat_text(k.u_hat));
  t.add("inner", inner(f.tensor, f.tensor));
  r.emit(j, t);
}

void cmd_l_eigen(const Runner& r) {
  const auto f = r.load();
  const LEigenSystem s = l_eigen(f.tensor);
  json j = io::to_json(s);
  j["reconstruction_residual"] = (reconstruct(s) - f.tensor).norm();
  j["config"] = {{"kernels", simd::active().name}};
  TextReport t;
  t.add("sigma", join(s.sigma));
  for (std::size_t n = 0; n < 3; ++n) t.add("x" + std::to_string(n + 1), vec_text(s.x[n]));
  for (std::size_t n = 0; n < 3; ++n) t.add("V" + std::to_string(n + 1), mat_text(s.v[n]));
  t.add("reconstruction_residual", j["reconstruction_residual"].get<double>());
  r.emit(j, t);
}

void cmd_l_inverse(const Runner& r) {
  const auto f = r.load();
  const Hyper3 b = l_inverse(f.tensor);
  const InverseResiduals res = inverse_residuals(f.tensor, b);
  json j = io::to_json(b, std::string("l-inverse"));
  j["residuals"] = io::to_json(res);
  TextReport t;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t jj = 0; jj < 3; ++jj) {
      t.add("b[" + std::to_string(i + 1) + "][" + std::to_string(jj + 1) + "][:]",
            join(std::span<const double>(b.data().data() + 9 * i + 3 * jj, 3)));
    }
  }
  t.add("residual_identity", res.identity);
  t.add("residual_oplus", res.oplus);
  t.add("residual_moore_penrose", join(res.moore_penrose));
  r.emit(j, t);
}

void cmd_recover(const Runner& r) {
  if (r.o_.matrix.empty()) throw Error(ErrorKind::InvalidInput, "--matrix is required");
  json mj;
  try {
    mj = json::parse(r.o_.matrix);
  } catch (const json::parse_error&) {
    throw Error(ErrorKind::InvalidInput, "--matrix: malformed JSON");
  }
  const Mat3 v = io::mat3_from_json(mj);
  const auto f = r.load();
  const Hyper3 b = l_inverse(f.tensor);
  const Vec3 x = recover(v, b);
  const double fwd = (contract_one(f.tensor, x, Slot::First) - v).norm();
  const json j = {{"x", io::to_json(x)}, {"forward_residual", fwd}};
  TextReport t;
  t.add("x", vec_text(x));
  t.add("forward_residual", fwd);
  r.emit(j, t);
}

void cmd_critical(const Runner& r, CriticalSearch (*search)(const Hyper3&, const PowerOptions&)) {
  const auto f = r.load();
  const CriticalSearch s = search(f.tensor, r.power());
  json j = io::to_json(s.best);
  json hist = json::array();
  for (const auto& d : s.distinct) hist.push_back({{"value", d.value}, {"count", d.count}});
  j["distinct"] = hist;
  j["config"] = r.power_config();
  TextReport t;
  t.add("kind", std::string(io::to_string(s.best.kind)));
  t.add("value", s.best.value);
  t.add("x", vec_text(s.best.x));
  t.add("y", vec_text(s.best.y));
  t.add("z", vec_text(s.best.z));
  t.add("residual", s.best.residual);
  t.add("starts_converged", s.best.starts_converged);
  for (const auto& d : s.distinct) t.add("distinct " + io::format_double(d.value), d.count);
  r.emit(j, t);
}

void cmd_invariants(const Runner& r) {
  const auto f = r.load();
  const json j = io::to_json(invariants(f.tensor));
  TextReport t;
  for (const auto& [k, v] : j.items()) t.add(k, v.get<double>());
  r.emit(j, t);
}

void cmd_decompose(const Runner& r) {
  const std::map<std::string, PartialSide> sides{
      {"right", PartialSide::Right}, {"left", PartialSide::Left}, {"central", PartialSide::Central}};
  const auto it = sides.find(r.o_.side);
  if (it == sides.end()) throw Error(ErrorKind::InvalidInput, "--side must be right, left or central");
  const auto f = r.load();
  const EigDecomposition3 d = eig_decompose_partial(f.tensor, it->second);
  const double norm = f.tensor.norm();
  const double resid = (reconstruct(d) - f.tensor).norm() / (norm > 0.0 ? norm : 1.0);
  json j = io::to_json(d);
  j["relative_reconstruction_residual"] = resid;
  TextReport t;
  t.add("side", r.o_.side);
  t.add("sigma", join(d.sigma));
  for (std::size_t n = 0; n < 3; ++n) {
    const std::string sfx = std::to_string(n + 1);
    t.add("x" + sfx, vec_text(d.x[n]));
    t.add("lambda" + sfx, join(d.lambda[n]));
    for (std::size_t k = 0; k < 3; ++k) t.add("y" + sfx + std::to_string(k + 1), vec_text(d.y[n][k]));
  }
  t.add("max_asymmetry", d.max_asymmetry);
  t.add("relative_reconstruction_residual", resid);
  r.emit(j, t);
}

void cmd_nullspace(const Runner& r) {
  const auto f = r.load();
  const double tol = r.tol_or(1e-10);
  const NullSpace ns = rank_and_nullspace(f.tensor, tol);
  double worst = 0.0;
  json basis = json::array();
  for (const Mat3& n : ns.basis) {
    worst = std::max(worst, contract_mat(f.tensor, n, Side::Right).norm());
    basis.push_back(io::to_json(n));
  }
  const int nullity = static_cast<int>(ns.basis.size());
  const json j = {{"rank", ns.rank}, {"nullity", nullity}, {"basis", basis},
                  {"max_annihilation_residual", worst}, {"tol", tol}};
  TextReport t;
  t.add("rank", ns.rank);
  t.add("nullity", nullity);
  for (std::size_t n = 0; n < ns.basis.size(); ++n) t.add("N" + std::to_string(n + 1), mat_text(ns.basis[n]));
  t.add("max_annihilation_residual", worst);
  t.add("tol", tol);
  r.emit(j, t);
}

struct Quantity {
  std::string name;
  int degree;  // homogeneity in A
  double value;
};

std::vector<Quantity> invariant_quantities(const Hyper3& a, const PowerOptions& p) {
  const InvariantSet s = invariants(a);
  const LEigenSystem l = l_eigen(a);
  std::vector<Quantity> q{{"trU", 2, s.tr_u},           {"trU2", 4, s.tr_u2},
                          {"trU3", 6, s.tr_u3},         {"trUbar2", 4, s.tr_ubar2},
                          {"trUbar3", 6, s.tr_ubar3},   {"trUhat2", 4, s.tr_uhat2},
                          {"trUhat3", 6, s.tr_uhat3},   {"sigma1", 1, l.sigma[0]},
                          {"sigma2", 1, l.sigma[1]},    {"sigma3", 1, l.sigma[2]},
                          {"eta1", 1, max_singular_value(a, p).value}};
  const SymmetryReport rep = classify(a);
  if (rep.right_symmetric) q.push_back({"mu1", 1, max_c_eigenvalue(a, p).value});
  if (rep.symmetric) q.push_back({"nu1", 1, max_z_eigenvalue(a, p).value});
  return q;
}

void cmd_invariance_check(const Runner& r) {
  const auto f = r.load();
  const PowerOptions p = r.power();
  const std::vector<Quantity> base = invariant_quantities(f.tensor, p);
  const double norm = f.tensor.norm();
  std::vector<double> drift(base.size(), 0.0);
  for (int n = 0; n < r.o_.rotations; ++n) {
    const Mat3 rot = random_rotation(r.o_.seed * 1000003ULL + static_cast<std::uint64_t>(n));
    const auto q = invariant_quantities(rotate(f.tensor, rot), p);
    for (std::size_t m = 0; m < base.size(); ++m) {
      // Relative to the value, floored at a millionth of its natural scale.
      const double scale = std::max({std::fabs(base[m].value), 1e-6 * std::pow(norm, base[m].degree), DBL_MIN});
      drift[m] = std::max(drift[m], std::fabs(q[m].value - base[m].value) / scale);
    }
  }
  json dj = json::object();
  TextReport t;
  double worst = 0.0;
  for (std::size_t m = 0; m < base.size(); ++m) {
    dj[base[m].name] = drift[m];
    t.add("drift " + base[m].name, drift[m]);
    worst = std::max(worst, drift[m]);
  }
  json cfg = r.power_config();
  cfg["rotations"] = r.o_.rotations;
  const json j = {{"drift", dj}, {"max_drift", worst}, {"config", cfg}};
  t.add("max_drift", worst);
  t.add("rotations", r.o_.rotations);
  t.add("seed", std::to_string(r.o_.seed));
  r.emit(j, t);
}

Hyper3 named_fixture(const std::string& name, std::uint64_t seed) {
  if (name == "levi-civita" || name == "levi_civita") return levi_civita();
  if (name == "zero") return Hyper3();
  if (name == "random") return random_tensor(seed);
  if (name == "orthogonal") return levi_civita() / std::sqrt(2.0);
  if (name == "rank-one" || name == "rank_one") {
    return outer(random_unit(seed), random_unit(seed + 1), random_unit(seed + 2));
  }
  return make_fixture(parse_symmetry_class(name), seed);
}

void cmd_fixture(const Runner& r) {
  const Hyper3 a = named_fixture(r.o_.fixture, r.o_.seed);
  r.write(io::to_json(a, r.o_.fixture).dump(2) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Third order tensor analysis in three dimensions", "tensor3"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(const Runner&)> fn;
  };
  const std::vector<Sub> subs{
      {"classify", "Symmetry classification", cmd_classify},
      {"kernel", "Kernel tensors of A, A^T and (A^T)^T", cmd_kernel},
      {"l-eigen", "L-eigenvalues, L-eigenvectors and L-eigentensors", cmd_l_eigen},
      {"l-inverse", "L-inverse with residual checks", cmd_l_inverse},
      {"recover", "Solve x A = V for x via the L-inverse", cmd_recover},
      {"singular", "Largest singular value", [](const Runner& r) { cmd_critical(r, singular_search); }},
      {"c-eigen", "Largest C-eigenvalue", [](const Runner& r) { cmd_critical(r, c_eigen_search); }},
      {"z-eigen", "Largest Z-eigenvalue", [](const Runner& r) { cmd_critical(r, z_eigen_search); }},
      {"invariants", "The seven kernel-trace invariants", cmd_invariants},
      {"decompose", "Eigenvector decomposition of a partially symmetric tensor", cmd_decompose},
      {"nullspace", "Rank and null space", cmd_nullspace},
      {"invariance-check", "Drift of every invariant under seeded rotations", cmd_invariance_check},
      {"fixture", "Write a named fixture tensor", cmd_fixture},
  };

  std::function<void(const Runner&)> chosen;
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) == "fixture") {
      sc->add_option("name", o.fixture,
                     "levi-civita, zero, random, orthogonal, rank-one or a symmetry class tag")
          ->required();
    } else {
      sc->add_option("input", o.input, "Tensor file, - for standard input");
    }
    sc->add_flag("--json", o.json, "JSON output");
    sc->add_option("--out", o.out, "Write output to this path");
    sc->add_option("--tol", o.tol, "Tolerance (subcommand default when omitted)");
    sc->add_option("--seed", o.seed, "Random seed");
    sc->add_option("--restarts", o.restarts, "Multistart count")->check(CLI::PositiveNumber);
    sc->add_option("--max-iters", o.max_iters, "Iteration cap per restart")->check(CLI::PositiveNumber);
    sc->add_option("--threads", o.threads, "Worker threads for restarts")->check(CLI::PositiveNumber);
    sc->add_option("--rotations", o.rotations, "Number of seeded rotations")->check(CLI::NonNegativeNumber);
    sc->add_option("--side", o.side, "right, left or central");
    sc->add_option("--matrix", o.matrix, "3x3 matrix as JSON, e.g. [[1,0,0],[0,1,0],[0,0,1]]");
    sc->callback([&chosen, fn = s.fn] { chosen = fn; });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    const Runner runner(o, in, out);
    chosen(runner);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::SingularTensor: return kSingularTensor;
      case ErrorKind::NoConvergence: return kNoConvergence;
      default: return kValidationError;
    }
  }
  return kOk;
}

}  // namespace t3::cli
