// qtsallis: command-line front end for the Tsallis q-exponential calculus
// library. Subcommands compute coefficient tables, evaluate kernels, run
// identity-verification suites, and transform series/realization files.
//
// Exit codes: 0 success, 1 check failure, 2 domain error, 3 I/O/parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "qts/qts.hpp"

using nlohmann::json;
using namespace qts;
using cd = std::complex<double>;

namespace {

// ---------------------------------------------------------------------------
// shared configuration

struct RunConfig {
  std::string q_str = "1";
  int trunc = 64;
  double tol = 1e-10;
  std::string mode = "auto";  // auto | float | exact
  unsigned seed = 0;
  std::string output = "json";  // json | csv
  std::string out_path;         // empty = stdout
  std::string config_path;

  QParam q() const { return QParam::parse(q_str); }

  bool exact() const {
    if (mode == "exact") return true;
    if (mode == "float") return false;
    return q_str.find('/') != std::string::npos;
  }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--q", cfg.q_str, "deformation parameter, decimal or exact \"p/r\"");
  cmd->add_option("--trunc", cfg.trunc, "series truncation degree (>= 4)")
      ->check(CLI::Range(4, 1 << 20));
  cmd->add_option("--tol", cfg.tol, "defect tolerance for checks (> 0)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", cfg.mode, "arithmetic mode")
      ->check(CLI::IsMember({"auto", "float", "exact"}));
  cmd->add_option("--seed", cfg.seed, "seed for randomized instances");
  cmd->add_option("--output", cfg.output, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
  cmd->add_option("--config", cfg.config_path,
                  "JSON config file; explicit flags take precedence");
}

// Merge config-file values into options the user did not pass on the line.
void merge_config_file(CLI::App* cmd, RunConfig& cfg) {
  if (cfg.config_path.empty()) return;
  std::ifstream in(cfg.config_path);
  if (!in) throw std::ios_base::failure("cannot open config file " + cfg.config_path);
  json j = json::parse(in);
  auto maybe = [&](const char* flag, const char* key, auto& field) {
    auto* opt = cmd->get_option(flag);
    if (opt->count() == 0 && j.contains(key))
      field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  maybe("--q", "q", cfg.q_str);
  maybe("--trunc", "trunc", cfg.trunc);
  maybe("--tol", "tol", cfg.tol);
  maybe("--mode", "mode", cfg.mode);
  maybe("--seed", "seed", cfg.seed);
  maybe("--output", "output", cfg.output);
  maybe("--out", "out", cfg.out_path);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw std::ios_base::failure("cannot open output file " + cfg.out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// ---------------------------------------------------------------------------
// scalar rendering

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <class F>
std::string fmt_real(const typename F::Real& v);

template <>
std::string fmt_real<FloatField>(const double& v) {
  return fmt_double(v);
}

template <>
std::string fmt_real<ExactField>(const Rational& v) {
  return rational_str(v);
}

// complex as "re+imi" / "re-imi"
template <class F>
std::string fmt_complex(const typename F::Complex& c);

template <>
std::string fmt_complex<FloatField>(const cd& c) {
  std::string s = fmt_double(c.real());
  s += (c.imag() < 0 ? "-" : "+") + fmt_double(std::abs(c.imag())) + "i";
  return s;
}

template <>
std::string fmt_complex<ExactField>(const RationalComplex& c) {
  std::string s = rational_str(c.re);
  s += (c.im < 0 ? "-" : "+") + rational_str(rational_abs(c.im)) + "i";
  return s;
}

template <class F>
json real_to_json(const typename F::Real& v);

template <>
json real_to_json<FloatField>(const double& v) {
  return v;
}

template <>
json real_to_json<ExactField>(const Rational& v) {
  return rational_str(v);
}

// Parses "re", "re,im"; parts are decimals or exact "p/r".
template <class F>
typename F::Real parse_real_part(const std::string& s) {
  if constexpr (std::is_same_v<F, ExactField>) {
    if (s.find('/') != std::string::npos) return Rational(s);
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
      return Rational(std::stod(s));
    return Rational(s);
  } else {
    if (s.find('/') != std::string::npos)
      return static_cast<double>(Rational(s));
    return std::stod(s);
  }
}

template <class F>
typename F::Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    return F::to_complex(parse_real_part<F>(s));
  return {parse_real_part<F>(s.substr(0, comma)),
          parse_real_part<F>(s.substr(comma + 1))};
}

std::string dump(const json& j) { return j.dump(2); }

// ---------------------------------------------------------------------------
// coeffs

template <class F>
std::string run_coeffs(const RunConfig& cfg, int k_max) {
  QParam q = cfg.q();
  auto seq = coeff_sequence<F>(q, k_max + 1);
  int n_gamma = static_cast<int>(seq.gammas.size());
  auto gamma_str = [&](int k) -> std::string {
    return k < n_gamma ? fmt_real<F>(seq.gammas[k]) : std::string("undefined");
  };
  auto ratio_str = [&](int k) -> std::string {
    if (k + 1 >= n_gamma) return "undefined";
    double a = std::abs(F::to_double(seq.gammas[k]));
    double b = std::abs(F::to_double(seq.gammas[k + 1]));
    return fmt_double(b / a);
  };
  auto sign_str = [&](int k) -> std::string {
    if (k < n_gamma)
      return F::to_double(seq.gammas[k]) < 0 ? "-1" : "1";
    return "undefined";
  };

  if (cfg.output == "csv") {
    std::ostringstream os;
    os << "k,alpha,gamma,sign,ratio\n";
    for (int k = 0; k <= k_max; ++k)
      os << k << ',' << fmt_real<F>(seq.alphas[k]) << ',' << gamma_str(k) << ','
         << sign_str(k) << ',' << ratio_str(k) << '\n';
    return os.str();
  }
  json rows = json::array();
  for (int k = 0; k <= k_max; ++k) {
    json row{{"k", k}, {"alpha", real_to_json<F>(seq.alphas[k])}};
    if (k < n_gamma) {
      row["gamma"] = real_to_json<F>(seq.gammas[k]);
      row["sign"] = F::to_double(seq.gammas[k]) < 0 ? -1 : 1;
    } else {
      row["gamma"] = nullptr;
      row["sign"] = nullptr;
    }
    row["ratio"] = (k + 1 < n_gamma)
                       ? json(std::abs(F::to_double(seq.gammas[k + 1])) /
                              std::abs(F::to_double(seq.gammas[k])))
                       : json(nullptr);
    rows.push_back(row);
  }
  return dump(json{{"q", cfg.q_str},
                   {"space", classify(q).name()},
                   {"rows", rows}});
}

// ---------------------------------------------------------------------------
// kernel

template <class F>
std::string run_kernel(const RunConfig& cfg, const std::string& zs,
                       const std::string& ws) {
  QParam q = cfg.q();
  auto z = parse_complex<F>(zs);
  auto w = parse_complex<F>(ws);
  auto v = kernel_eval<F>(z, w, q, cfg.trunc);
  if (cfg.output == "csv") {
    std::ostringstream os;
    os << "value,radius,space\n";
    os << fmt_complex<F>(v) << ',' << fmt_double(radius(q)) << ','
       << classify(q).name() << '\n';
    return os.str();
  }
  return dump(json{{"q", cfg.q_str},
                   {"value", entry_to_json<F>(v)},
                   {"radius", radius(q)},
                   {"space", classify(q).name()},
                   {"trunc", cfg.trunc}});
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  json checks = json::array();
  bool pass = true;

  void add(const std::string& name, double defect, double tol) {
    bool ok = defect <= tol;
    checks.push_back(json{{"name", name}, {"defect", defect}, {"pass", ok}});
    pass = pass && ok;
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back(json{{"name", name}, {"skipped", why}, {"pass", true}});
  }
};

template <class F>
void suite_adjoints(const RunConfig& cfg, SuiteResult& r) {
  QParam q = cfg.q();
  int N = std::min(cfg.trunc, 30);
  r.add("adjoint Mz/MzAdj", verify_adjoint<F>(OpKind::Mz, OpKind::MzAdj, q, N).max_defect,
        cfg.tol);
  r.add("adjoint R0/R0Adj", verify_adjoint<F>(OpKind::R0, OpKind::R0Adj, q, N).max_defect,
        cfg.tol);
  r.add("adjoint Integ/IntegAdj",
        verify_adjoint<F>(OpKind::Integ, OpKind::IntegAdj, q, N).max_defect, cfg.tol);
}

template <class F>
void suite_identities(const RunConfig& cfg, SuiteResult& r) {
  QParam q = cfg.q();
  int N = std::min(cfg.trunc, 30);
  r.add("R0Adj = (q-1)Mz - (q-2)Integ", check_identity_r0adj<F>(q, N).max_defect,
        cfg.tol);
  if (q.is(1.0))
    r.skip("(q-1)MzAdj = R0 + (q-2)IntegAdj", "identity requires q != 1");
  else
    r.add("(q-1)MzAdj = R0 + (q-2)IntegAdj", check_identity_mzadj<F>(q, N).max_defect,
          cfg.tol);
}

template <class F>
void suite_commutators(const RunConfig& cfg, SuiteResult& r) {
  QParam q = cfg.q();
  double d_r0 = 0.0, d_mz = 0.0, d_op = 0.0;
  for (int k = 0; k <= 25; ++k) {
    auto a = commutator_r0<F>(k, q);
    auto b = commutator_mz<F>(k, q);
    d_r0 = std::max(d_r0, std::abs(F::to_double(a.direct - a.closed_form)));
    d_mz = std::max(d_mz, std::abs(F::to_double(b.direct - b.closed_form)));
    d_op = std::max({d_op, std::abs(F::to_double(a.operator_form - a.closed_form)),
                     std::abs(F::to_double(b.operator_form - b.closed_form))});
  }
  r.add("[R0, R0Adj] closed form vs direct", d_r0, cfg.tol);
  r.add("[Mz, MzAdj] closed form vs direct", d_mz, cfg.tol);
  r.add("operator-composition forms", d_op, cfg.tol);
}

template <class F>
void suite_eigen(const RunConfig& cfg, SuiteResult& r) {
  QParam q = cfg.q();
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double rad = std::min(radius(q), 4.0);
  double m = 0.6 * std::sqrt(rad);  // keeps |w|^2 inside the disk
  double defect = 0.0;
  for (int i = 0; i < 10; ++i) {
    cd wd(m * u(rng), m * u(rng));
    typename F::Complex w;
    if constexpr (std::is_same_v<F, ExactField>)
      w = RationalComplex{Rational(wd.real()), Rational(wd.imag())};
    else
      w = wd;
    defect = std::max(defect, kernel_eigen_check<F>(w, q, cfg.trunc).max_defect);
  }
  r.add("MzAdj K_q(., w) = conj(w) K_q(., w)", defect, cfg.tol);
}

template <class F>
void suite_jordan(const RunConfig& cfg, SuiteResult& r) {
  QParam q = cfg.q();
  int N = cfg.trunc;
  auto f0 = F::to_complex(F::real(0));
  auto sol = solve_jordan<F>(f0, q, N);
  r.add("jordan recursion residual", sol.residual, cfg.tol);
  auto cf = jordan_closed_form<F>(f0, q, N);
  double d = 0.0;
  for (int k = 0; k <= N; ++k) d = std::max(d, abs_cd<F>(sol.coeffs[k] - cf[k]));
  r.add("jordan recursion vs closed form", d, cfg.tol);
  auto shifted = solve_shifted<F>(f0, F::to_complex(F::ratio(1, 2)), q, N);
  r.add("jordan shifted-eigenvalue residual", shifted.residual, cfg.tol);
}

Realization synthetic_realization(std::mt19937& rng, int N) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto fill = [&](int rr, int cc) {
    Eigen::MatrixXcd m(rr, cc);
    for (int i = 0; i < rr; ++i)
      for (int j = 0; j < cc; ++j) m(i, j) = cd(u(rng), u(rng));
    return m;
  };
  // reject instances that are not minimal (classical Hankel rank < N)
  for (;;) {
    Realization r{fill(2, N), 0.3 * fill(N, N), fill(N, 2), std::nullopt};
    auto s = taylor_from_realization(r, QParam(1.0), 2 * N + 4);
    if (numerical_rank(to_eigen(hankel(s, QParam(1.0), N + 1, N + 1)), 1e-8) == N)
      return r;
  }
}

void suite_rational(const RunConfig& cfg, SuiteResult& r,
                    const std::string& in_path) {
  QParam q = cfg.q();
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) throw std::ios_base::failure("cannot open " + in_path);
    auto real = realization_from_json(json::parse(in));
    auto s = taylor_from_realization(real, q, cfg.trunc);
    auto rep = is_q_rational(s, q, 1e-8);
    r.checks.push_back(json{{"name", "rationality of provided realization"},
                            {"rank", rep.estimated_rank},
                            {"rank_prev", rep.rank_prev},
                            {"pass", rep.is_rational}});
    r.pass = r.pass && rep.is_rational;
    return;
  }
  std::mt19937 rng(cfg.seed);
  for (int N = 1; N <= 4; ++N) {
    auto real = synthetic_realization(rng, N);
    auto s = taylor_from_realization(real, q, 2 * N + 6);
    int rank = numerical_rank(to_eigen(hankel(s, q, N + 2, N + 2)), 1e-8);
    r.add("hankel rank defect, synthetic N=" + std::to_string(N),
          std::abs(rank - N), 0.5);
    int span = adjoint_span_dimension(s, q, N + 1, 1e-8);
    r.add("adjoint-span vs state dim, N=" + std::to_string(N),
          std::abs(span - N), 0.5);
  }
}

std::string run_verify(const RunConfig& cfg, const std::string& suite,
                       const std::string& in_path, int& exit_code) {
  SuiteResult r;
  bool exact = cfg.exact();
  if (suite == "adjoints")
    exact ? suite_adjoints<ExactField>(cfg, r) : suite_adjoints<FloatField>(cfg, r);
  else if (suite == "identities")
    exact ? suite_identities<ExactField>(cfg, r)
          : suite_identities<FloatField>(cfg, r);
  else if (suite == "commutators")
    exact ? suite_commutators<ExactField>(cfg, r)
          : suite_commutators<FloatField>(cfg, r);
  else if (suite == "eigen")
    exact ? suite_eigen<ExactField>(cfg, r) : suite_eigen<FloatField>(cfg, r);
  else if (suite == "jordan")
    exact ? suite_jordan<ExactField>(cfg, r) : suite_jordan<FloatField>(cfg, r);
  else
    suite_rational(cfg, r, in_path);

  exit_code = r.pass ? 0 : 1;
  return dump(json{{"suite", suite},
                   {"q", cfg.q_str},
                   {"mode", exact ? "exact" : "float"},
                   {"trunc", cfg.trunc},
                   {"tol", cfg.tol},
                   {"seed", cfg.seed},
                   {"checks", r.checks},
                   {"pass", r.pass}});
}

// ---------------------------------------------------------------------------
// stirling

std::string run_stirling(const RunConfig& cfg, int n_max, int subst_k) {
  auto t = stirling_table(n_max);
  bool subst = subst_k > 0;
  QParam q = cfg.q();
  if (cfg.output == "csv") {
    std::ostringstream os;
    os << (subst ? "n,j,value\n" : "n,j,entry\n");
    for (int n = 1; n <= n_max; ++n)
      for (int j = 1; j <= n; ++j) {
        os << n << ',' << j << ',';
        if (subst) {
          if (cfg.exact())
            os << rational_str(t.entry(n, j).eval<ExactField>(
                   commutator_lambda<ExactField>(subst_k, q)));
          else
            os << fmt_double(t.entry(n, j).eval<FloatField>(
                   commutator_lambda<FloatField>(subst_k, q)));
        } else {
          os << '"' << t.entry(n, j).str() << '"';
        }
        os << '\n';
      }
    return os.str();
  }
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    json row = json::array();
    for (int j = 1; j <= n; ++j) {
      if (subst) {
        if (cfg.exact())
          row.push_back(rational_str(t.entry(n, j).eval<ExactField>(
              commutator_lambda<ExactField>(subst_k, q))));
        else
          row.push_back(t.entry(n, j).eval<FloatField>(
              commutator_lambda<FloatField>(subst_k, q)));
      } else {
        row.push_back(t.entry(n, j).str());
      }
    }
    rows.push_back(row);
  }
  json out{{"n_max", n_max}, {"rows", rows}};
  if (subst) {
    out["lambda_of"] = json{{"k", subst_k}, {"q", cfg.q_str}};
  }
  return dump(out);
}

// ---------------------------------------------------------------------------
// borel

template <class F>
json borel_transform_json(const json& j, const QParam& q, bool inverse) {
  if (is_matrix_series_json(j)) {
    auto s = matrix_series_from_json<F>(j);
    return matrix_series_to_json<F>(inverse ? inverse_borel(s, q) : borel(s, q));
  }
  auto f = series_from_json<F>(j);
  auto m = as_matrix_series(f);
  auto t = inverse ? inverse_borel(m, q) : borel(m, q);
  return series_to_json<F>(as_scalar_series(t));
}

std::string run_borel(const RunConfig& cfg, const std::string& in_path,
                      const std::string& direction) {
  std::ifstream in(in_path);
  if (!in) throw std::ios_base::failure("cannot open " + in_path);
  json j = json::parse(in);
  bool inverse = direction == "inverse";
  QParam q = cfg.q();
  json out = cfg.exact() ? borel_transform_json<ExactField>(j, q, inverse)
                         : borel_transform_json<FloatField>(j, q, inverse);
  return dump(out);
}

// ---------------------------------------------------------------------------
// jordan

template <class F>
std::string run_jordan(const RunConfig& cfg, const std::string& f0s,
                       const std::string& lams, int& exit_code) {
  QParam q = cfg.q();
  auto f0 = parse_complex<F>(f0s);
  auto lam = parse_complex<F>(lams);
  JordanSolution<F> sol = (abs_cd<F>(lam - F::to_complex(F::real(1))) == 0.0)
                              ? solve_jordan<F>(f0, q, cfg.trunc)
                              : solve_shifted<F>(f0, lam, q, cfg.trunc);
  exit_code = sol.residual <= cfg.tol ? 0 : 1;
  if (cfg.output == "csv") {
    std::ostringstream os;
    os << "k,coeff\n";
    for (int k = 0; k <= sol.coeffs.degree_bound(); ++k)
      os << k << ',' << fmt_complex<F>(sol.coeffs[k]) << '\n';
    return os.str();
  }
  return dump(json{{"q", cfg.q_str},
                   {"f0", entry_to_json<F>(sol.f0)},
                   {"lambda", entry_to_json<F>(sol.lambda)},
                   {"residual", sol.residual},
                   {"candidate_defect", sol.candidate_defect},
                   {"series", series_to_json<F>(sol.coeffs)}});
}

// ---------------------------------------------------------------------------
// hankel

std::string run_hankel(const RunConfig& cfg, const std::string& in_path, int rows,
                       int cols) {
  std::ifstream in(in_path);
  if (!in) throw std::ios_base::failure("cannot open " + in_path);
  json j = json::parse(in);
  MatrixSeries<FloatField> s = is_matrix_series_json(j)
                                   ? matrix_series_from_json<FloatField>(j)
                                   : as_matrix_series(series_from_json<FloatField>(j));
  QParam q = cfg.q();
  if (rows <= 0 || cols <= 0) rows = cols = s.degree_bound() / 2 + 1;
  int rank = numerical_rank(to_eigen(hankel(s, q, rows, cols)), 1e-8);
  json out{{"q", cfg.q_str},
           {"block_rows", rows},
           {"block_cols", cols},
           {"rank", rank}};
  if (s.degree_bound() >= 6) {
    auto rep = is_q_rational(s, q, 1e-8);
    out["is_rational"] = rep.is_rational;
    out["stabilized_rank"] = rep.estimated_rank;
    out["rank_prev"] = rep.rank_prev;
  }
  int depth = std::min(6, s.degree_bound());
  out["adjoint_span_dim"] = adjoint_span_dimension(s, q, depth, 1e-8);
  return dump(out);
}

// ---------------------------------------------------------------------------
// realize

std::string run_realize(const RunConfig& cfg, const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw std::ios_base::failure("cannot open " + in_path);
  auto r = realization_from_json(json::parse(in));
  QParam q = cfg.q();
  auto s = taylor_from_realization(r, q, cfg.trunc);
  json out = matrix_series_to_json<FloatField>(s);
  out["state_dim"] = r.state_dim();
  if (s.degree_bound() >= 6) {
    auto rep = is_q_rational(s, q, 1e-8);
    out["stabilized_rank"] = rep.estimated_rank;
    out["is_rational"] = rep.is_rational;
  }
  return dump(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsallis q-exponential calculus toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;

  int k_max = -1;
  auto* c_coeffs = app.add_subcommand("coeffs", "coefficient sequences alpha_k, gamma_k");
  add_common_flags(c_coeffs, cfg);
  c_coeffs->add_option("--kmax", k_max, "largest index (default trunc)");

  std::string z_str = "0", w_str = "0";
  auto* c_kernel = app.add_subcommand("kernel", "evaluate K_q(z, w)");
  add_common_flags(c_kernel, cfg);
  c_kernel->add_option("--z", z_str, "complex z as \"re\" or \"re,im\"");
  c_kernel->add_option("--w", w_str, "complex w as \"re\" or \"re,im\"");

  std::string suite, verify_in;
  auto* c_verify = app.add_subcommand("verify", "run an identity-verification suite");
  add_common_flags(c_verify, cfg);
  c_verify
      ->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"adjoints", "identities", "commutators", "eigen", "jordan", "rational"}));
  c_verify->add_option("--in", verify_in, "realization JSON (rational suite)");

  int n_max = 5, subst_k = 0;
  auto* c_stirling = app.add_subcommand("stirling", "q-Stirling-like triangle");
  add_common_flags(c_stirling, cfg);
  c_stirling->add_option("--nmax", n_max, "number of rows")->check(CLI::PositiveNumber);
  c_stirling->add_option("--subst-k", subst_k,
                         "substitute lambda = lambda(k; q) numerically");

  std::string borel_in, direction = "forward";
  auto* c_borel = app.add_subcommand("borel", "q-Tsallis Borel transform of a series file");
  add_common_flags(c_borel, cfg);
  c_borel->add_option("--in", borel_in, "series JSON path")->required();
  c_borel->add_option("--direction", direction, "forward | inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));

  std::string f0_str = "0", lam_str = "1";
  auto* c_jordan = app.add_subcommand("jordan", "solve (MzAdj - lambda I) f = e_q(lambda z)");
  add_common_flags(c_jordan, cfg);
  c_jordan->add_option("--f0", f0_str, "free coefficient f_0");
  c_jordan->add_option("--lambda", lam_str, "eigenvalue lambda");

  std::string hankel_in;
  int h_rows = 0, h_cols = 0;
  auto* c_hankel = app.add_subcommand("hankel", "Hankel rank report of a series file");
  add_common_flags(c_hankel, cfg);
  c_hankel->add_option("--in", hankel_in, "series JSON path")->required();
  c_hankel->add_option("--rows", h_rows, "block rows (default auto)");
  c_hankel->add_option("--cols", h_cols, "block cols (default auto)");

  std::string realize_in;
  auto* c_realize = app.add_subcommand("realize", "Taylor series of a realization file");
  add_common_flags(c_realize, cfg);
  c_realize->add_option("--in", realize_in, "realization JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  int exit_code = 0;
  try {
    auto* sub = app.get_subcommands().front();
    merge_config_file(sub, cfg);
    bool exact = cfg.exact();
    std::string text;
    if (sub == c_coeffs) {
      int km = k_max >= 0 ? k_max : cfg.trunc;
      text = exact ? run_coeffs<ExactField>(cfg, km) : run_coeffs<FloatField>(cfg, km);
    } else if (sub == c_kernel) {
      text = exact ? run_kernel<ExactField>(cfg, z_str, w_str)
                   : run_kernel<FloatField>(cfg, z_str, w_str);
    } else if (sub == c_verify) {
      text = run_verify(cfg, suite, verify_in, exit_code);
    } else if (sub == c_stirling) {
      text = run_stirling(cfg, n_max, subst_k);
    } else if (sub == c_borel) {
      text = run_borel(cfg, borel_in, direction);
    } else if (sub == c_jordan) {
      text = exact ? run_jordan<ExactField>(cfg, f0_str, lam_str, exit_code)
                   : run_jordan<FloatField>(cfg, f0_str, lam_str, exit_code);
    } else if (sub == c_hankel) {
      text = run_hankel(cfg, hankel_in, h_rows, h_cols);
    } else {
      text = run_realize(cfg, realize_in);
    }
    emit(cfg, text);
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
