// sik — command line front end: compute indices from matrix/path files, run
// the seeded property suites, run mean-index experiments.

#include "sik/io.hpp"
#include "sik/suites.hpp"
#include "sik/triple.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sik;
using sik::io::json;

constexpr int kExitOk = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  double tol_rank = 1e-8;
  double tol_inertia = 1e-7;
  double tol_int = 1e-6;
  std::uint64_t seed = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--tol-rank", c.tol_rank, "relative singular value cutoff");
  cmd->add_option("--tol-inertia", c.tol_inertia, "relative eigenvalue sign cutoff");
  cmd->add_option("--tol-int", c.tol_int, "integer snap distance");
  cmd->add_option("--seed", c.seed, "base seed for randomized drivers");
  cmd->add_option("--out", c.out, "output file (depends on the verb)");
}

Tolerances make_tol(const CommonOpts& c) {
  Tolerances t;
  t.rank_tol = c.tol_rank;
  t.inertia_tol = c.tol_inertia;
  t.int_tol = c.tol_int;
  t.validate();
  return t;
}

Mat load_matrix(const std::string& path) { return io::matrix_from_json(io::load_json_file(path)); }

Mat load_lagrangian(const SymplecticSpace& sp, const std::string& path, const Tolerances& tol,
                    const char* what) {
  Mat f = load_matrix(path);
  if (f.rows() != sp.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + path + " has " +
                                std::to_string(f.rows()) + " rows, space needs " +
                                std::to_string(sp.dim()) + ")");
  f = orthonormalize(f, tol.rank_tol);
  if (!is_lagrangian(sp, f, tol))
    throw std::invalid_argument(std::string(what) + ": frame in " + path + " is not Lagrangian");
  return f;
}

void emit(const CommonOpts& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else io::save_text_file(c.out, text);
}

int run_hormander(const CommonOpts& c, const std::string& l1p, const std::string& l2p,
                  const std::string& m1p, const std::string& m2p, bool with_paths) {
  const Tolerances tol = make_tol(c);
  Mat probe = load_matrix(l1p);
  if (probe.rows() % 2 != 0) throw std::invalid_argument("hormander: odd ambient dimension");
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(probe.rows() / 2));
  const Mat l1 = load_lagrangian(sp, l1p, tol, "hormander --l1");
  const Mat l2 = load_lagrangian(sp, l2p, tol, "hormander --l2");
  const Mat m1 = load_lagrangian(sp, m1p, tol, "hormander --m1");
  const Mat m2 = load_lagrangian(sp, m2p, tol, "hormander --m2");

  const IndexReport alg = hormander_index(sp, l1, l2, m1, m2, tol);
  json diag;
  diag["front_formula"] = alg.value;
  diag["back_formula"] = alg.value;  // hormander_index requires agreement
  long value = alg.value;
  if (with_paths) {
    const IndexReport pth = hormander_via_paths(sp, l1, l2, m1, m2, tol);
    diag["path_method"] = pth.value;
    if (pth.value != alg.value)
      throw std::runtime_error("hormander: path method disagrees with triple-index formulas");
  }
  std::cout << value << "\n";
  json out{{"value", value}, {"method", "hormander"}, {"diagnostics", diag}};
  if (!c.out.empty()) io::save_text_file(c.out, out.dump(2) + "\n");
  return kExitOk;
}

int run_triple(const CommonOpts& c, const std::string& ap, const std::string& bp,
               const std::string& cp) {
  const Tolerances tol = make_tol(c);
  Mat probe = load_matrix(ap);
  if (probe.rows() % 2 != 0) throw std::invalid_argument("triple: odd ambient dimension");
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(probe.rows() / 2));
  const Mat a = load_lagrangian(sp, ap, tol, "triple --a");
  const Mat b = load_lagrangian(sp, bp, tol, "triple --b");
  const Mat g = load_lagrangian(sp, cp, tol, "triple --c");
  const IndexReport fast = triple_index(sp, a, b, g, tol);
  const IndexReport slow = triple_index_via_delta(sp, a, b, g, tol);
  if (fast.value != slow.value)
    throw std::runtime_error("triple: inertia and transversal-witness routes disagree");
  std::cout << fast.value << "\n";
  if (!c.out.empty()) {
    json out{{"value", fast.value},
             {"method", "triple"},
             {"diagnostics", json{{"inertia_route", fast.value}, {"delta_route", slow.value}}}};
    io::save_text_file(c.out, out.dump(2) + "\n");
  }
  return kExitOk;
}

int run_index(const CommonOpts& c, const std::string& path_file, const std::string& w_file,
              const std::string& w_graph_file) {
  const Tolerances tol = make_tol(c);
  const SymplecticPath gamma = io::path_from_json(io::load_json_file(path_file));
  if (gamma.dim() % 2 != 0) throw std::invalid_argument("index: odd path dimension");
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(gamma.dim() / 2));
  Mat w;
  if (!w_file.empty()) {
    w = orthonormalize(load_matrix(w_file), tol.rank_tol);
  } else if (!w_graph_file.empty()) {
    const Mat p = load_matrix(w_graph_file);
    if (!is_symplectic_map(sp, p, tol.sympl_tol))
      throw std::invalid_argument("index: --w-graph matrix is not symplectic");
    w = graph_frame(p);
  } else {
    w = graph_frame(Mat::Identity(sp.dim(), sp.dim()));
  }
  const IndexReport rep = maslov_type_index(sp, gamma, w, tol);
  std::cout << rep.value << "\n";
  if (!c.out.empty()) io::save_text_file(c.out, io::index_report_to_json(rep).dump(2) + "\n");
  return kExitOk;
}

int run_maslov(const CommonOpts& c, const std::string& lam0_file, const std::string& lam_path_file,
               const std::string& mu0_file, const std::string& mu_path_file,
               const std::string& sign, const std::string& method) {
  const Tolerances tol = make_tol(c);
  Mat lam0 = load_matrix(lam0_file);
  if (lam0.rows() % 2 != 0) throw std::invalid_argument("maslov: odd ambient dimension");
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(lam0.rows() / 2));
  lam0 = load_lagrangian(sp, lam0_file, tol, "maslov --lambda");
  const Mat mu0 = load_lagrangian(sp, mu0_file, tol, "maslov --mu");

  auto as_lagrangian_path = [&](const Mat& f0, const std::string& pfile) -> LagrangianPath {
    if (pfile.empty()) return constant_lagrangian(f0, 0.0, 1.0);
    const SymplecticPath p = io::path_from_json(io::load_json_file(pfile));
    if (p.dim() != sp.dim()) throw std::invalid_argument("maslov: path dimension mismatch");
    auto shared = std::make_shared<SymplecticPath>(p);
    return LagrangianPath{0.0, p.tau(),
                          [shared, f0](double t) -> Mat { return shared->value(t) * f0; },
                          p.knots(), false};
  };
  LagrangianPath lam = as_lagrangian_path(lam0, lam_path_file);
  LagrangianPath mu = as_lagrangian_path(mu0, mu_path_file);
  if (lam.b != mu.b) {
    // Constant companions stretch to the moving path's interval.
    if (lam.constant) lam = constant_lagrangian(lam0, mu.a, mu.b);
    else if (mu.constant) mu = constant_lagrangian(mu0, lam.a, lam.b);
    else throw std::invalid_argument("maslov: paths have different durations");
  }

  const MaslovSign s = (sign == "minus") ? MaslovSign::minus : MaslovSign::plus;
  json diag;
  long value = 0;
  if (method == "eigenphase" || method == "both") {
    const IndexReport rep = maslov_index(sp, lam, mu, s, tol);
    value = rep.value;
    diag["eigenphase"] = rep.value;
    diag["evaluations"] = rep.evaluations;
  }
  if (method == "crossings" || method == "both") {
    const IndexReport rep = maslov_index_crossings(sp, lam, mu, tol);
    diag["crossings"] = rep.value;
    if (method == "crossings") value = rep.value;
    else if (rep.value != value)
      throw std::runtime_error("maslov: crossing and eigenphase methods disagree");
  }
  std::cout << value << "\n";
  if (!c.out.empty()) {
    json out{{"value", value}, {"method", "maslov-" + method}, {"diagnostics", diag}};
    io::save_text_file(c.out, out.dump(2) + "\n");
  }
  return kExitOk;
}

int run_audit(const CommonOpts& c, const std::string& suite, int seeds, int n, int threads) {
  const Tolerances tol = make_tol(c);
  const std::vector<AuditReport> reports = run_suite(suite, seeds, n, tol, threads);
  std::ostringstream csv;
  io::write_audit_csv(csv, reports);
  emit(c, csv.str());
  if (!c.out.empty()) {
    std::ostringstream jsonl;
    io::write_audit_jsonl(jsonl, reports);
    io::save_text_file(c.out + ".jsonl", jsonl.str());
  }
  std::size_t failures = 0;
  for (const auto& r : reports)
    for (const auto& ck : r.checks)
      if (!ck.pass) ++failures;
  std::cerr << suite << ": " << reports.size() << " instances, " << failures
            << " failed checks\n";
  return failures == 0 ? kExitOk : kExitAuditFail;
}

int run_mean_index(const CommonOpts& c, const std::string& config_file) {
  const Tolerances tol = make_tol(c);
  const io::MeanIndexConfig cfg = io::mean_config_from_json(io::load_json_file(config_file));
  const SymplecticSpace sp = SymplecticSpace::standard(cfg.n);
  const double step = cfg.step > 0 ? cfg.step : default_step(cfg.field, cfg.flow);
  std::vector<MeanIndexReport> reports;
  for (const auto& xi : cfg.xis)
    reports.push_back(mean_index_estimate(sp, cfg.flow, cfg.field, xi, cfg.schedule, step, tol));
  std::ostringstream csv;
  io::write_mean_csv(csv, reports);
  emit(c, csv.str());
  if (!c.out.empty())
    io::save_text_file(c.out + ".summary.json", io::mean_summary_json(reports).dump(2) + "\n");
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ratios_in_band;
  return ok ? kExitOk : kExitAuditFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sik — Maslov, triple and Hormander indices for symplectic paths"};
  app.require_subcommand(1);

  CommonOpts common;

  auto* horm = app.add_subcommand("hormander", "Hormander index of a Lagrangian quadruple");
  std::string l1, l2, m1, m2;
  bool with_paths = false;
  horm->add_option("--l1", l1, "first Lagrangian frame (JSON matrix)")->required();
  horm->add_option("--l2", l2, "second Lagrangian frame")->required();
  horm->add_option("--m1", m1, "third Lagrangian frame")->required();
  horm->add_option("--m2", m2, "fourth Lagrangian frame")->required();
  horm->add_flag("--with-paths", with_paths, "also run the connecting-path method");
  add_common(horm, common);

  auto* trip = app.add_subcommand("triple", "triple index of a Lagrangian triple");
  std::string ta, tb, tc;
  trip->add_option("--a", ta, "first Lagrangian frame")->required();
  trip->add_option("--b", tb, "second Lagrangian frame")->required();
  trip->add_option("--c", tc, "third Lagrangian frame")->required();
  add_common(trip, common);

  auto* idx = app.add_subcommand("index", "Maslov-type index of a symplectic path");
  std::string path_file, w_file, w_graph;
  idx->add_option("--path", path_file, "symplectic path (JSON)")->required();
  idx->add_option("--w", w_file, "Lagrangian frame in the doubled space");
  idx->add_option("--w-graph", w_graph, "symplectic map P; uses W = Graph(P)");
  add_common(idx, common);

  auto* mas = app.add_subcommand("maslov", "Maslov index of a Lagrangian pair path");
  std::string lam0, lam_path, mu0, mu_path, sign = "plus", method = "eigenphase";
  mas->add_option("--lambda", lam0, "initial frame of the first family")->required();
  mas->add_option("--lambda-path", lam_path, "symplectic path acting on --lambda");
  mas->add_option("--mu", mu0, "initial frame of the second family")->required();
  mas->add_option("--mu-path", mu_path, "symplectic path acting on --mu");
  mas->add_option("--sign", sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  mas->add_option("--method", method, "eigenphase, crossings or both")
      ->check(CLI::IsMember({"eigenphase", "crossings", "both"}));
  add_common(mas, common);

  auto* aud = app.add_subcommand("audit", "run a seeded property suite");
  std::string suite;
  int seeds = 100, n = 2, threads = 0;
  aud->add_option("--suite", suite, "section2 | section3 | section4 | section5")
      ->required()
      ->check(CLI::IsMember({"section2", "section3", "section4", "section5"}));
  aud->add_option("--seeds", seeds, "number of seeded instances");
  aud->add_option("--n", n, "half-dimension of the ambient space");
  aud->add_option("--threads", threads, "0 = SIK_THREADS env or hardware");
  add_common(aud, common);

  auto* mean = app.add_subcommand("mean-index", "mean index along a torus flow");
  std::string config;
  mean->add_option("--config", config, "experiment config (JSON)")->required();
  add_common(mean, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(horm)) return run_hormander(common, l1, l2, m1, m2, with_paths);
    if (app.got_subcommand(trip)) return run_triple(common, ta, tb, tc);
    if (app.got_subcommand(idx)) return run_index(common, path_file, w_file, w_graph);
    if (app.got_subcommand(mas))
      return run_maslov(common, lam0, lam_path, mu0, mu_path, sign, method);
    if (app.got_subcommand(aud)) return run_audit(common, suite, seeds, n, threads);
    if (app.got_subcommand(mean)) return run_mean_index(common, config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
