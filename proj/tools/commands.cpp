#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "mlf/mlf.hpp"

namespace mlf::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EvalMethod { Auto, Series, Asymptotic, QuadParabolic, QuadHyperbolic, Reduction };

const std::map<std::string, EvalMethod> kMethodNames = {
    {"auto", EvalMethod::Auto},
    {"series", EvalMethod::Series},
    {"asymp", EvalMethod::Asymptotic},
    {"quad-par", EvalMethod::QuadParabolic},
    {"quad-hyp", EvalMethod::QuadHyperbolic},
    {"reduction", EvalMethod::Reduction},
};

const std::map<std::string, PadeSolver> kSolverNames = {
    {"fixed", PadeSolver::FixedQ0},
    {"svd", PadeSolver::SvdNull},
    {"lu", PadeSolver::LuHomogeneous},
};

// shortest decimal that round-trips
std::string csv_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string sci17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw InvalidParameter("not a number: '" + std::string(text) + "'");
  return v;
}

// "RE" or "RE,IM"
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text), 0.0};
  return {parse_double(std::string_view(text).substr(0, comma)),
          parse_double(std::string_view(text).substr(comma + 1))};
}

// Evaluation by a named method. Explicit methods call exactly what ml_auto
// would call for that branch, so auto and its reported method agree bitwise.
EvalResult evaluate(EvalMethod method, Complex z, double alpha, double beta, double tol,
                    std::optional<int> nodes) {
  switch (method) {
    case EvalMethod::Auto: return ml_auto(z, alpha, beta, tol);
    case EvalMethod::Series: {
      const SeriesResult s = ml_series(z, alpha, beta, tol);
      if (!s.converged) throw ConvergenceError("series did not reach the tolerance within the term cap");
      return {s.value, Method::Series, s.terms_used, s.err_estimate};
    }
    case EvalMethod::Asymptotic: {
      const AsymptoticResult a = ml_asymptotic(z, alpha, beta, tol);
      return {a.value, Method::Asymptotic, a.m, a.err_estimate};
    }
    case EvalMethod::QuadParabolic:
    case EvalMethod::QuadHyperbolic: {
      const ContourKind kind =
          method == EvalMethod::QuadParabolic ? ContourKind::Parabolic : ContourKind::Hyperbolic;
      const int N = nodes.value_or(auto_rule_nodes(tol));
      if (N < 1 || N > kMaxRuleNodes) throw InvalidParameter("--N must lie in [1, 300]");
      return ml_quad(z, alpha, beta, cached_rule(kind, N));
    }
    case EvalMethod::Reduction: return ml_reduce(z, alpha, beta, tol);
  }
  throw InvalidParameter("unknown method");
}

const char* count_label(Method method) {
  switch (method) {
    case Method::Series: return "terms";
    case Method::Asymptotic: return "m";
    default: return "N";
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void finish_output(const std::string& path, std::ofstream& file) {
  if (!file.is_open()) return;
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

struct EvalArgs {
  double alpha = 1.0, beta = 1.0, tol = 1e-14;
  std::string z = "0";
  std::string method = "auto";
  std::optional<int> nodes;
};

void cmd_eval(const EvalArgs& a, std::ostream& out) {
  const EvalResult r = evaluate(kMethodNames.at(a.method), parse_complex(a.z), a.alpha, a.beta, a.tol, a.nodes);
  out << sci17(r.value.real()) << ' ' << sci17(r.value.imag()) << '\n'
      << "method=" << to_string(r.method) << ' ' << count_label(r.method) << '=' << r.nodes_or_terms
      << " err_estimate=" << csv_number(r.err_estimate) << '\n';
}

struct GridArgs {
  double alpha = 0.5, beta = 1.0, tol = 1e-14;
  double re_min = -5, re_max = 5, im_min = -5, im_max = 5;
  int steps = 51;
  std::string out;
  std::string method = "auto";
  std::string compare;
  std::optional<int> nodes;
  unsigned threads = 0;
};

double grid_coord(double lo, double hi, int i, int steps) {
  return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
}

void cmd_grid(const GridArgs& a, std::ostream& stdout_stream) {
  if (a.steps < 1) throw InvalidParameter("--steps must be positive");
  const EvalMethod method = kMethodNames.at(a.method);
  std::optional<std::pair<EvalMethod, EvalMethod>> compare;
  if (!a.compare.empty()) {
    const auto comma = a.compare.find(',');
    if (comma == std::string::npos) throw InvalidParameter("--compare-method expects M1,M2");
    const auto m1 = kMethodNames.find(a.compare.substr(0, comma));
    const auto m2 = kMethodNames.find(a.compare.substr(comma + 1));
    if (m1 == kMethodNames.end() || m2 == kMethodNames.end())
      throw InvalidParameter("--compare-method: unknown method in '" + a.compare + "'");
    compare.emplace(m1->second, m2->second);
  }

  const std::size_t count = static_cast<std::size_t>(a.steps) * a.steps;
  std::vector<std::string> rows(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t k) {
    try {
      const auto i_im = static_cast<int>(k / a.steps), i_re = static_cast<int>(k % a.steps);
      const Complex z(grid_coord(a.re_min, a.re_max, i_re, a.steps), grid_coord(a.im_min, a.im_max, i_im, a.steps));
      const Complex v = evaluate(method, z, a.alpha, a.beta, a.tol, a.nodes).value;
      std::string row = csv_number(z.real()) + ',' + csv_number(z.imag()) + ',' + csv_number(v.real()) + ',' +
                        csv_number(v.imag());
      if (compare) {
        const Complex v1 = evaluate(compare->first, z, a.alpha, a.beta, a.tol, a.nodes).value;
        const Complex v2 = evaluate(compare->second, z, a.alpha, a.beta, a.tol, a.nodes).value;
        row += ',' + csv_number(std::log10(std::abs(v1 - v2)));
      }
      rows[k] = std::move(row);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };

  const unsigned hw = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(hw, count));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < count; k += n_threads) work(k);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::ofstream file;
  std::ostream& out = open_output(a.out, file, stdout_stream);
  out << "re,im,value_re,value_im" << (compare ? ",log10_abs_err" : "") << '\n';
  for (const auto& row : rows) out << row << '\n';
  finish_output(a.out, file);
}

struct PadeArgs {
  double alpha = 0.5, beta = 1.0;
  int m = 6, n = 5;
  std::string solver = "fixed";
  std::string emit = "coeffs";
  std::string out;
  int points = 200;
};

void cmd_pade(const PadeArgs& a, std::ostream& stdout_stream) {
  const PadeApproximant approx = build_pade(a.alpha, a.beta, a.m, a.n, kSolverNames.at(a.solver));
  std::ostringstream buf;
  if (a.emit == "coeffs") {
    buf << "index,p,q\n";
    for (int j = 0; j <= approx.r; ++j)
      buf << j << ',' << csv_number(approx.p[j]) << ',' << csv_number(approx.q[j]) << '\n';
  } else if (a.emit == "pf") {
    const PartialFractionForm pf = partial_fractions(approx);
    buf << "re_chi,im_chi,re_rho,im_rho\n";
    for (std::size_t j = 0; j < pf.size(); ++j)
      buf << csv_number(pf.poles[j].real()) << ',' << csv_number(pf.poles[j].imag()) << ','
          << csv_number(pf.residues[j].real()) << ',' << csv_number(pf.residues[j].imag()) << '\n';
  } else {
    if (a.points < 2) throw InvalidParameter("--points must be at least 2");
    buf << "x,pade,reference,abs_err\n";
    for (int i = 0; i < a.points; ++i) {
      const double x = std::pow(10.0, -3.0 + 6.0 * i / (a.points - 1));
      const double p = pade_eval(approx, x);
      const double ref = ml_auto(-x, a.alpha, a.beta).value.real();
      buf << csv_number(x) << ',' << csv_number(p) << ',' << csv_number(ref) << ',' << csv_number(std::abs(p - ref))
          << '\n';
    }
  }
  std::ofstream file;
  open_output(a.out, file, stdout_stream) << buf.str();
  finish_output(a.out, file);
}

struct TableArgs {
  double alpha = 0.7, beta = 1.0, tol = 1e-12;
  std::vector<double> xs = {5, 15, 25, 35, 45, 55};
  int nodes = 14;
};

void cmd_table_asymp(const TableArgs& a, std::ostream& out) {
  if (a.nodes < 1 || a.nodes > kMaxRuleNodes) throw InvalidParameter("--N must lie in [1, 300]");
  const QuadratureRule& rule = cached_rule(ContourKind::Hyperbolic, a.nodes);
  char line[160];
  std::snprintf(line, sizeof line, "%8s %4s %12s %12s %14s %12s\n", "x", "m", "x^(1/a)/a", "error", "tau_(m-1)",
                "tau_m");
  out << line;
  for (double x : a.xs) {
    if (!(x > 0.0)) throw InvalidParameter("table-asymp: x values must be positive");
    const AsymptoticResult r = ml_asymptotic(-x, a.alpha, a.beta, a.tol);
    const double ref = ml_quad(-x, a.alpha, a.beta, rule).value.real();
    std::snprintf(line, sizeof line, "%8g %4d %12.1f %12.2e %14.2e %12.2e\n", x, r.m,
                  std::pow(x, 1.0 / a.alpha) / a.alpha, ref - r.value.real(), r.err_estimate, r.next_term);
    out << line;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mittag-Leffler function evaluation and two-point Pade approximation"};
  app.name(args.empty() ? "mlf" : args.front());
  app.require_subcommand(1);

  const auto method_check = CLI::IsMember(kMethodNames);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate E_{alpha,beta}(z) at one point");
  eval->add_option("--alpha", ev.alpha, "alpha > 0")->required();
  eval->add_option("--beta", ev.beta, "real beta")->required();
  eval->add_option("--z", ev.z, "argument as RE or RE,IM")->required()->allow_extra_args(false);
  eval->add_option("--method", ev.method, "evaluation method")->check(method_check)->capture_default_str();
  eval->add_option("--N", ev.nodes, "quadrature nodes for quad-par and quad-hyp");
  eval->add_option("--tol", ev.tol, "tolerance in [1e-15, 1e-2]")->capture_default_str();

  GridArgs gr;
  auto* grid = app.add_subcommand("grid", "Write E over a rectangular grid as CSV");
  grid->add_option("--alpha", gr.alpha)->required();
  grid->add_option("--beta", gr.beta)->required();
  grid->add_option("--re-min", gr.re_min)->capture_default_str();
  grid->add_option("--re-max", gr.re_max)->capture_default_str();
  grid->add_option("--im-min", gr.im_min)->capture_default_str();
  grid->add_option("--im-max", gr.im_max)->capture_default_str();
  grid->add_option("--steps", gr.steps, "points per axis")->capture_default_str();
  grid->add_option("--out", gr.out, "output file, '-' for stdout")->required();
  grid->add_option("--method", gr.method)->check(method_check)->capture_default_str();
  grid->add_option("--compare-method", gr.compare, "M1,M2: add log10|M1 - M2|");
  grid->add_option("--N", gr.nodes, "quadrature nodes for quad-par and quad-hyp");
  grid->add_option("--tol", gr.tol)->capture_default_str();
  grid->add_option("--threads", gr.threads, "worker threads, 0 for all cores")->capture_default_str();

  PadeArgs pa;
  auto* pade = app.add_subcommand("pade", "Build a two-point Pade approximant of E(-x)");
  pade->add_option("--alpha", pa.alpha)->required();
  pade->add_option("--beta", pa.beta)->required();
  pade->add_option("--m", pa.m, "Maclaurin matching order")->required();
  pade->add_option("--n", pa.n, "matching order at infinity")->required();
  pade->add_option("--solver", pa.solver)->check(CLI::IsMember(kSolverNames))->capture_default_str();
  pade->add_option("--emit", pa.emit)->check(CLI::IsMember({"coeffs", "pf", "errgrid"}))->capture_default_str();
  pade->add_option("--out", pa.out, "output file, default stdout");
  pade->add_option("--points", pa.points, "errgrid sample count")->capture_default_str();

  TableArgs ta;
  auto* table = app.add_subcommand("table-asymp", "Asymptotic expansion errors on the negative axis");
  table->add_option("--alpha", ta.alpha)->capture_default_str();
  table->add_option("--beta", ta.beta)->capture_default_str();
  table->add_option("--tol", ta.tol)->capture_default_str();
  table->add_option("--x", ta.xs, "comma-separated x values")->delimiter(',')->capture_default_str();
  table->add_option("--N", ta.nodes, "hyperbolic nodes for the reference")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) cmd_eval(ev, out);
    if (grid->parsed()) cmd_grid(gr, out);
    if (pade->parsed()) cmd_pade(pa, out);
    if (table->parsed()) cmd_table_asymp(ta, out);
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace mlf::cli
