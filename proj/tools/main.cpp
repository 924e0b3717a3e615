#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/acceptance.hpp"
#include "qcorr/bloch.hpp"
#include "qcorr/coherence.hpp"
#include "qcorr/mutual_info.hpp"
#include "qcorr/report.hpp"
#include "qcorr/rsp.hpp"
#include "qcorr/symmetry.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qcorr;

constexpr double kPi = 3.14159265358979323846;

struct CommonOpts {
  int quad_theta = 64;
  int quad_phi = 128;
  std::int64_t mc_samples = 0;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::string out;
  std::string format = "csv";
  int threads = 0;

  QuadratureSpec quad() const { return {quad_theta, quad_phi}; }
};

struct StateOpts {
  std::optional<double> kappa;
  std::vector<double> c_hat;
  std::optional<double> lambda;
  std::vector<double> b;
};

Vec3 to_vec(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) throw InvalidInput(std::string(what) + ": expected three components x,y,z");
  return {v[0], v[1], v[2]};
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mc = false, bool with_trials = false) {
  cmd->add_option("--quad-theta", o.quad_theta, "Gauss-Legendre nodes in cos(theta)")
      ->check(CLI::Range(2, 4096));
  cmd->add_option("--quad-phi", o.quad_phi, "uniform nodes in phi")->check(CLI::Range(4, 8192));
  if (with_mc) cmd->add_option("--mc-samples", o.mc_samples, "Monte-Carlo cross-check samples");
  cmd->add_option("--seed", o.seed, "random stream seed");
  if (with_trials) cmd->add_option("--trials", o.trials, "number of simulated protocol runs");
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
}

/// Flat key=value config file, same keys as the flags; '#' starts a comment.
/// The entries are spliced in ahead of the explicit flags, so flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InvalidInput("--config needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (path.empty()) return kept;
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read config file: " + path);
  std::vector<std::string> from_file;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    from_file.push_back("--" + key + "=" + value);
  }
  // args = [subcommand, user flags...]; insert config entries after the
  // subcommand name.
  std::vector<std::string> out;
  if (!kept.empty()) out.push_back(kept.front());
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), kept.begin() + (kept.empty() ? 0 : 1), kept.end());
  return out;
}

void add_state(CLI::App* cmd, StateOpts& s) {
  cmd->add_option("--kappa", s.kappa, "correlation magnitude");
  cmd->add_option("--c-hat", s.c_hat, "correlation direction x,y,z")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--lambda", s.lambda, "Schmidt coefficient of a pure state");
  cmd->add_option("--b", s.b, "marginal Bloch vector of side B, x,y,z")
      ->delimiter(',')
      ->expected(3);
}

TwoQubitState build_state(const StateOpts& s) {
  if (s.lambda) {
    if (s.kappa || !s.c_hat.empty() || !s.b.empty())
      throw InvalidInput("--lambda cannot be combined with --kappa/--c-hat/--b");
    return TwoQubitState::pure_schmidt(*s.lambda);
  }
  if (!s.kappa) throw InvalidInput("state needs either --lambda or --kappa");
  const Vec3 c_hat = s.c_hat.empty() ? kZAxis : normalized(to_vec(s.c_hat, "--c-hat"));
  const Vec3 e = c_hat * *s.kappa;
  if (s.b.empty()) return TwoQubitState::mmms(*s.kappa, c_hat);
  return TwoQubitState::general({0, 0, 0}, to_vec(s.b, "--b"), e);
}

void echo_state(json& cfg, const StateOpts& s) {
  if (s.lambda) cfg["lambda"] = *s.lambda;
  if (s.kappa) cfg["kappa"] = *s.kappa;
  if (!s.c_hat.empty()) cfg["c_hat"] = s.c_hat;
  if (!s.b.empty()) cfg["b"] = s.b;
}

void echo_state(Table& t, const StateOpts& s) {
  if (s.lambda) t.meta.emplace_back("lambda", format_double(*s.lambda));
  if (s.kappa) t.meta.emplace_back("kappa", format_double(*s.kappa));
}

void apply_threads(const CommonOpts& o) {
  if (o.threads > 0) detail::set_max_threads(o.threads);
}

void write_output(const CommonOpts& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + o.out);
  f << content;
}

void emit(const CommonOpts& o, const json& obj) {
  write_output(o, obj.dump(2) + "\n");
}

void emit_table(const CommonOpts& o, const Table& t) {
  write_output(o, o.format == "json" ? to_json(t) : to_csv(t));
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

Observable target_of(const std::vector<double>& t) { return Observable(to_vec(t, "--target")); }

RspTask make_task(const std::vector<double>& target, const std::vector<double>& beta) {
  const Observable n = target_of(target);
  const Observable axis =
      beta.empty() ? default_beta_for(n.axis()) : Observable(to_vec(beta, "--beta"));
  return {n, axis};
}

int run_figure(int id, const CommonOpts& common, int grid_points) {
  apply_threads(common);
  FigureOptions opts;
  opts.quad = common.quad();
  opts.grid_points = grid_points;
  emit_table(common, figure_table(id, opts));
  return 0;
}

int run_classify(const CommonOpts& common, const std::vector<double>& c_hat_in, double kappa) {
  const Vec3 c_hat = normalized(to_vec(c_hat_in, "--c-hat"));
  if (!is_in_tetrahedron(c_hat * kappa))
    throw DomainError("classify: kappa * c_hat is outside the admissible tetrahedron");
  const auto state = TwoQubitState::mmms(kappa, c_hat);
  const auto cls = classify(c_hat);

  json out;
  out["config"] = {{"kappa", kappa}, {"c_hat", vec_json(c_hat)}};
  out["class"] = to_string(cls.tag);
  if (cls.epsilon) out["epsilon"] = *cls.epsilon;
  out["boundary_warning"] = cls.boundary_warning;
  out["orbit"] = orbit(c_hat).size();
  out["physical_orbit"] = orbit_physical_subset(kappa, c_hat).size();
  if (kappa > 1e-9)
    out["omega_max_dim"] = omega_max_dim(state);
  else
    out["omega_max_dim"] = nullptr;
  out["purity"] = purity(state);
  emit(common, out);
  return 0;
}

int run_mi(const CommonOpts& common, const StateOpts& s, const std::vector<double>& n_in,
           const std::vector<double>& m_in) {
  const auto state = build_state(s);
  const ObservablePair pair{Observable(to_vec(n_in, "--n")), Observable(to_vec(m_in, "--m"))};
  const auto jd = joint_distribution(state, pair);

  json out;
  echo_state(out["config"], s);
  out["x"] = jd.x;
  out["mi"] = mutual_information(state, pair);
  out["p"] = {{jd.p[0][0], jd.p[0][1]}, {jd.p[1][0], jd.p[1][1]}};
  out["pa"] = {jd.pa[0], jd.pa[1]};
  out["pb"] = {jd.pb[0], jd.pb[1]};
  emit(common, out);
  return 0;
}

int run_coherence(const CommonOpts& common, const StateOpts& s, const std::vector<double>& n_in,
                  const std::vector<double>& m_in, int grid_points) {
  const auto state = build_state(s);
  if (!n_in.empty() || !m_in.empty()) {
    const ObservablePair pair{Observable(to_vec(n_in, "--n")), Observable(to_vec(m_in, "--m"))};
    const auto coh = coherence_of_basis(state, pair);
    json out;
    echo_state(out["config"], s);
    out["basis_entropy"] = coh.basis_entropy;
    out["von_neumann_entropy"] = coh.entropy;
    out["coherence"] = coh.coherence;
    out["mi"] = mutual_information(state, pair);
    emit(common, out);
    return 0;
  }
  // Complementarity sweep: n = m rotating in the xz plane.
  const int n_pts = grid_points > 0 ? grid_points : 65;
  Table t;
  t.columns = {"theta", "mi", "coherence"};
  for (int i = 0; i < n_pts; ++i) {
    const double theta = kPi * i / (n_pts - 1);
    const Observable axis(Vec3{std::sin(theta), 0.0, std::cos(theta)});
    const ObservablePair pair{axis, axis};
    t.rows.push_back({theta, mutual_information(state, pair),
                      coherence_of_basis(state, pair).coherence});
  }
  echo_state(t, s);
  emit_table(common, t);
  return 0;
}

int run_rsp_eval(const CommonOpts& common, const StateOpts& s, const std::vector<double>& target,
                 const std::vector<double>& beta) {
  const auto state = build_state(s);
  const RspTask task = make_task(target, beta);
  const auto eval = evaluate(state, task);

  json out;
  echo_state(out["config"], s);
  out["config"]["target"] = vec_json(task.target().axis());
  out["config"]["beta"] = vec_json(task.axis().axis());
  out["m_opt"] = vec_json(eval.m_opt.axis());
  out["F_U"] = eval.f_u;
  out["F_UN"] = eval.f_un;
  out["F_opt"] = eval.f_opt;
  out["gain"] = eval.gain;
  out["useful"] = eval.useful;
  out["zero_correlation"] = eval.zero_correlation;
  if (eval.negative_gain) out["negative_gain"] = true;
  if (eval.stripped_nonphysical) out["stripped_nonphysical"] = true;
  if (common.trials > 0) {
    const auto stats = simulate_trials(state, task, common.trials, common.seed);
    out["simulation"] = {{"trials", stats.n_trials},
                         {"freq_plus", stats.freq_plus},
                         {"expected_freq_plus", stats.expected_freq_plus},
                         {"std_err", stats.std_err}};
  }
  emit(common, out);
  return 0;
}

int run_rsp_average(const CommonOpts& common, const StateOpts& s) {
  apply_threads(common);
  const auto state = build_state(s);
  const auto avg = average_over_relevant(state, common.quad());

  json out;
  echo_state(out["config"], s);
  out["config"]["quad_theta"] = common.quad_theta;
  out["config"]["quad_phi"] = common.quad_phi;
  out["avg_F"] = avg.f_u;
  out["avg_F_opt"] = avg.f_opt;
  out["avg_gain_useful"] = avg.gain;
  if (common.mc_samples > 0) {
    const McSpec mc{common.mc_samples, common.seed};
    const auto f_mc = mc_average_s2(
        [&](const Vec3& n) {
          return 1.0 - std::log2(1.0 + norm(state.correlation().apply(n)));
        },
        mc);
    const auto g_mc = mc_average_s2(
        [&](const Vec3& n) {
          const double x = norm(state.correlation().apply(n));
          const double b = std::abs(dot(n, state.b()));
          return x >= b ? rsp_gain(x, b) : 0.0;
        },
        mc);
    out["mc"] = {{"samples", common.mc_samples},
                 {"seed", common.seed},
                 {"avg_F", f_mc.mean},
                 {"avg_F_std_err", f_mc.std_err},
                 {"avg_gain_useful", g_mc.mean},
                 {"avg_gain_useful_std_err", g_mc.std_err}};
  }
  emit(common, out);
  return 0;
}

int run_simulate(const CommonOpts& common, const StateOpts& s, const std::vector<double>& target,
                 const std::vector<double>& beta) {
  const auto state = build_state(s);
  const RspTask task = make_task(target, beta);
  const std::int64_t trials = common.trials > 0 ? common.trials : 100000;
  const auto stats = simulate_trials(state, task, trials, common.seed);

  json out;
  echo_state(out["config"], s);
  out["config"]["target"] = vec_json(task.target().axis());
  out["config"]["beta"] = vec_json(task.axis().axis());
  out["config"]["seed"] = common.seed;
  out["trials"] = stats.n_trials;
  out["n_plus"] = stats.n_plus;
  out["freq_plus"] = stats.freq_plus;
  out["expected_freq_plus"] = stats.expected_freq_plus;
  out["std_err"] = stats.std_err;
  emit(common, out);
  return 0;
}

int run_verify(const std::string& suite_name, std::uint64_t seed) {
  accept::Suite suite = accept::Suite::All;
  if (suite_name == "props") suite = accept::Suite::Props;
  if (suite_name == "closed-forms") suite = accept::Suite::ClosedForms;
  const auto results = accept::run_acceptance(suite, seed);
  for (const auto& r : results)
    std::printf("[%s] %s (%.2f s)\n    %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  const bool ok = accept::all_passed(results);
  std::printf("%zu checks, %s\n", results.size(), ok ? "all passed" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit observable correlations: averages, symmetry classes and remote state "
               "preparation analysis"};
  app.require_subcommand(1);
  // Later occurrences win, so config-file entries can be overridden by flags.
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CommonOpts common;
  StateOpts state_opts;
  std::vector<double> target, beta, n_axis, m_axis, c_hat_req;
  int figure_id = 1, grid_points = 0;
  double kappa_req = 0.0;
  std::string suite_name = "all";

  auto* fig = app.add_subcommand("figure", "emit the data table behind one of the plots");
  fig->add_option("id", figure_id, "figure id (1-6)")->required()->check(CLI::Range(1, 6));
  fig->add_option("--grid-points", grid_points, "sweep resolution (0 = default)");
  add_common(fig, common);

  auto* cls = app.add_subcommand("classify", "symmetry class and orbit of a direction");
  cls->add_option("--c-hat", c_hat_req, "correlation direction x,y,z")
      ->delimiter(',')
      ->expected(3)
      ->required();
  cls->add_option("--kappa", kappa_req, "correlation magnitude")->required();
  add_common(cls, common);

  auto* mi = app.add_subcommand("mi", "mutual information of an observable pair");
  add_state(mi, state_opts);
  mi->add_option("--n", n_axis, "side A axis x,y,z")->delimiter(',')->expected(3)->required();
  mi->add_option("--m", m_axis, "side B axis x,y,z")->delimiter(',')->expected(3)->required();
  add_common(mi, common);

  auto* coh = app.add_subcommand("coherence", "basis coherence vs correlations");
  add_state(coh, state_opts);
  coh->add_option("--n", n_axis, "side A axis x,y,z (omit for a sweep)")
      ->delimiter(',')
      ->expected(3);
  coh->add_option("--m", m_axis, "side B axis x,y,z (omit for a sweep)")
      ->delimiter(',')
      ->expected(3);
  coh->add_option("--grid-points", grid_points, "sweep resolution (0 = default)");
  add_common(coh, common);

  auto* ev = app.add_subcommand("rsp-eval", "figure of merit, gain and usefulness of one task");
  add_state(ev, state_opts);
  ev->add_option("--target", target, "target state x,y,z")->delimiter(',')->expected(3)->required();
  ev->add_option("--beta", beta, "rotation axis x,y,z (default: orthogonal policy)")
      ->delimiter(',')
      ->expected(3);
  add_common(ev, common, /*with_mc=*/false, /*with_trials=*/true);

  auto* avg = app.add_subcommand("rsp-average", "target-sphere averages of the protocol figures");
  add_state(avg, state_opts);
  add_common(avg, common, /*with_mc=*/true);

  auto* sim = app.add_subcommand("simulate", "stochastic protocol trials");
  add_state(sim, state_opts);
  sim->add_option("--target", target, "target state x,y,z")
      ->delimiter(',')
      ->expected(3)
      ->required();
  sim->add_option("--beta", beta, "rotation axis x,y,z (default: orthogonal policy)")
      ->delimiter(',')
      ->expected(3);
  add_common(sim, common, /*with_mc=*/false, /*with_trials=*/true);

  auto* ver = app.add_subcommand("verify", "run the verification checks");
  ver->add_option("suite", suite_name, "props | closed-forms | all")
      ->check(CLI::IsMember({"props", "closed-forms", "all"}));
  ver->add_option("--seed", common.seed, "random stream seed");
  ver->add_option("--threads", common.threads, "worker threads (0 = hardware)");

  for (auto* cmd : app.get_subcommands({}))
    cmd->add_option("--config", "flat key=value file with the same keys as the flags");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }

  try {
    if (fig->parsed()) return run_figure(figure_id, common, grid_points);
    if (cls->parsed()) return run_classify(common, c_hat_req, kappa_req);
    if (mi->parsed()) return run_mi(common, state_opts, n_axis, m_axis);
    if (coh->parsed()) return run_coherence(common, state_opts, n_axis, m_axis, grid_points);
    if (ev->parsed()) return run_rsp_eval(common, state_opts, target, beta);
    if (avg->parsed()) return run_rsp_average(common, state_opts);
    if (sim->parsed()) return run_simulate(common, state_opts, target, beta);
    if (ver->parsed()) {
      apply_threads(common);
      return run_verify(suite_name, common.seed != 0 ? common.seed : 20260801);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
