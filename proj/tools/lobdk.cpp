// Command-line front end: identity verification, mode construction and export,
// sigma tables, raw Bessel evaluation.
//
// Exit codes: 0 pass, 1 identity/residual failure, 2 inconsistent quantum
// numbers, 3 numeric range, 4 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lobdk/dk_algebra.hpp"
#include "lobdk/errors.hpp"
#include "lobdk/geometry.hpp"
#include "lobdk/helicity.hpp"
#include "lobdk/mode_builder.hpp"
#include "lobdk/special_functions.hpp"

using namespace lobdk;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitQuantum = 2;
constexpr int kExitRange = 3;
constexpr int kExitIo = 4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_cplx(cplx w) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", w.real(), w.imag());
  return buf;
}

// "a+bi" literals: "3", "-2.5", "2i", "-i", "1.5e-2+3i", "1-2i"
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInputError("empty complex literal");

  auto to_double = [](const std::string& tok) {
    if (tok.empty() || tok == "+") return 1.0;
    if (tok == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw InvalidInputError("bad numeric token: " + tok);
    return v;
  };

  if (s.back() != 'i') return cplx(to_double(s), 0.0);
  s.pop_back();
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return cplx(0.0, to_double(s));
  return cplx(to_double(s.substr(0, split)), to_double(s.substr(split)));
}

struct RunConfig {
  double epsilon = 5.0;
  double a = 1.0;
  double b = 0.0;
  double mass = 3.0;
  std::string sigma_branch = "plus";
  int bessel_branch = +1;
  double z_min = -2.0;
  double z_max = 2.0;
  int samples = 401;
  double tolerance = 1e-8;
  std::string out;
  std::string format;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config file " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("malformed config file: ") + ex.what());
  }
  auto get = [&](const char* key, auto& dst) {
    if (j.contains(key)) dst = j.at(key).get<std::decay_t<decltype(dst)>>();
  };
  get("epsilon", cfg.epsilon);
  get("a", cfg.a);
  get("b", cfg.b);
  get("mass", cfg.mass);
  get("branch", cfg.sigma_branch);
  get("bessel_branch", cfg.bessel_branch);
  get("z_min", cfg.z_min);
  get("z_max", cfg.z_max);
  get("samples", cfg.samples);
  get("tolerance", cfg.tolerance);
  get("out", cfg.out);
  get("format", cfg.format);
}

std::vector<double> make_grid(const RunConfig& cfg, double s) {
  if (cfg.samples < 3) throw InvalidInputError("samples must be >= 3");
  if (!(cfg.z_min < cfg.z_max)) throw InvalidInputError("z_min must be < z_max");
  if (!(cfg.tolerance > 0.0)) throw InvalidInputError("tolerance must be > 0");
  const double zmax_abs = s * std::exp(cfg.z_max);
  if (zmax_abs > 30.0)
    throw NumericRangeError("grid pushes |Z| = " + fmt17(zmax_abs) +
                            " past the series regime (|Z| <= 30); shrink z_max or sqrt(a^2+b^2)");
  std::vector<double> grid(cfg.samples);
  for (int i = 0; i < cfg.samples; ++i)
    grid[i] = cfg.z_min + (cfg.z_max - cfg.z_min) * double(i) / double(cfg.samples - 1);
  return grid;
}

struct Check {
  std::string name;
  double deviation;
  double tol;
  bool pass() const { return deviation < tol; }
};

int report_checks(const std::vector<Check>& checks) {
  bool all = true;
  for (const Check& c : checks) {
    std::printf("%-34s %-12.3e (tol %.0e)  %s\n", c.name.c_str(), c.deviation, c.tol,
                c.pass() ? "PASS" : "FAIL");
    all = all && c.pass();
  }
  return all ? kExitPass : kExitIdentity;
}

int cmd_verify(bool inject_beta_error) {
  std::vector<Check> checks;
  const DKMatrixSet& set = dk_canonical();

  if (inject_beta_error) {
    DKMatrixSet bad = build_beta_set(build_cyclic_generators(), /*validate=*/false);
    bad.beta[1](2, 8) += 1e-3;
    const auto viol = dkp_trilinear_violations(bad, 1e-12);
    std::printf("injected beta corruption: %zu trilinear triples violated, first (%d,%d,%d)\n",
                viol.size(), viol.empty() ? -1 : viol[0][0], viol.empty() ? -1 : viol[0][1],
                viol.empty() ? -1 : viol[0][2]);
    checks.push_back({"trilinear algebra (corrupted)", verify_dkp_trilinear(bad), 1e-12});
    return report_checks(checks);
  }

  checks.push_back({"trilinear algebra", verify_dkp_trilinear(set), 1e-12});
  checks.push_back({"J12 = -i S3", (set.J12 + kI * set.S[2]).cwiseAbs().maxCoeff(), 1e-15});
  checks.push_back({"J13 = +i S2", (set.J13 - kI * set.S[1]).cwiseAbs().maxCoeff(), 1e-15});
  checks.push_back({"J23 = -i S1", (set.J23 + kI * set.S[0]).cwiseAbs().maxCoeff(), 1e-15});
  checks.push_back({"-S1 J31 + S2 J23 = -S3",
                    (set.S[0] * set.J13 + set.S[1] * set.J23 + set.S[2]).cwiseAbs().maxCoeff(),
                    1e-15});

  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const double z = dist(rng);
      const ConnectionData an = christoffel_at(z);
      const ConnectionData fd = christoffel_oracle(z, 1e-5);
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, (an.christoffel[i] - fd.christoffel[i]).cwiseAbs().maxCoeff());
    }
    checks.push_back({"christoffel vs fd oracle", worst, 1e-6});

    double ricci_dev = 0.0;
    const ConnectionData cd = christoffel_at(0.7);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int w = 0; w < 3; ++w) {
          const double expected = (x == 2 && y == 0 && w == 0)   ? -1.0
                                  : (x == 1 && y == 2 && w == 1) ? 1.0
                                                                 : 0.0;
          ricci_dev = std::max(ricci_dev, std::abs(cd.ricci_rotation[x][y][w] - expected));
        }
    checks.push_back({"ricci rotation table", ricci_dev, 1e-300});
  }

  {
    const auto basis = commutator_test_basis();
    const std::vector<double> zs{-1.5, -0.6, 0.0, 0.7, 1.6};
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    std::uniform_real_distribution<double> m(0.0, 4.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const QuantumNumbers q{.epsilon = d(rng), .a = d(rng), .b = d(rng), .mass = m(rng)};
      worst = std::max(worst, commutator_residual(q, basis, zs));
    }
    checks.push_back({"helicity/wave commutator", worst, 1e-10});
  }

  return report_checks(checks);
}

int cmd_mode(const RunConfig& cfg) {
  QuantumNumbers q{.epsilon = cfg.epsilon, .a = cfg.a, .b = cfg.b, .mass = cfg.mass};
  const Branch branch = branch_from_string(cfg.sigma_branch);
  const auto grid = make_grid(cfg, q.s());

  const ModeField mode = build_mode(q, branch, cfg.bessel_branch, grid);
  const ScanReport rep = residual_scan(mode, cfg.tolerance);

  std::printf("branch=%s sigma=%s\n", to_string(branch).c_str(), fmt_cplx(mode.q.sigma).c_str());
  std::printf("max relative residual (10-eq system) = %.3e\n", rep.max_rel_wave);
  std::printf("max helicity eigen-residual          = %.3e\n", rep.max_rel_helicity);
  const LorentzResidual lor = lorentz_residual(mode.q, mode.f);
  std::printf("lorentz condition residual           = %.3e\n", lor.max_rel);

  if (branch == Branch::massless_gauge) {
    double eh = 0.0;
    for (int c = kE1; c <= kH3; ++c)
      for (const cplx& v : mode.f.value[c]) eh = std::max(eh, std::abs(v));
    std::printf("gauge check: max |E|,|H| = %.3e (%s)\n", eh,
                eh == 0.0 ? "E=H=0 checks passed" : "FAILED");
    if (eh != 0.0) return kExitIdentity;
  }

  if (!cfg.out.empty()) {
    std::string format = cfg.format;
    if (format.empty()) {
      const auto dot = cfg.out.rfind('.');
      format = (dot != std::string::npos && cfg.out.substr(dot) == ".json") ? "json" : "csv";
    }
    export_mode(mode, rep, format, cfg.out);
    std::printf("wrote %s (%s)\n", cfg.out.c_str(), format.c_str());
  }

  std::printf("scan %s (tolerance %.1e)\n", rep.pass ? "PASS" : "FAIL", rep.tolerance);
  return rep.pass ? kExitPass : kExitIdentity;
}

int cmd_sigma_table(double eps_min, double eps_max, int eps_steps, double m_min, double m_max,
                    int m_steps, const std::string& out) {
  if (eps_steps < 1 || m_steps < 1) throw InvalidInputError("steps must be >= 1");
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw IoError("cannot open " + out);
    file << "epsilon,mass,sigma_plus_re,sigma_plus_im,sigma_minus_re,sigma_minus_im,zero_branch\n";
  }
  std::printf("%12s %12s %26s %26s  %s\n", "epsilon", "mass", "sigma_plus", "sigma_minus", "note");
  for (int i = 0; i < eps_steps; ++i) {
    const double eps =
        eps_steps == 1 ? eps_min : eps_min + (eps_max - eps_min) * double(i) / (eps_steps - 1);
    for (int k = 0; k < m_steps; ++k) {
      const double M = m_steps == 1 ? m_min : m_min + (m_max - m_min) * double(k) / (m_steps - 1);
      const cplx sp = std::sqrt(cplx(eps * eps - M * M, 0.0));
      const bool zero = eps * eps == M * M;
      std::printf("%12g %12g %26s %26s  %s\n", eps, M, fmt_cplx(sp).c_str(), fmt_cplx(-sp).c_str(),
                  zero ? "zero-branch" : "");
      if (file)
        file << fmt17(eps) << "," << fmt17(M) << "," << fmt17(sp.real()) << "," << fmt17(sp.imag())
             << "," << fmt17(-sp.real()) << "," << fmt17(-sp.imag()) << "," << (zero ? 1 : 0)
             << "\n";
    }
  }
  if (file && !file.good()) throw IoError("write failed for " + out);
  return kExitPass;
}

int cmd_bessel(const std::string& order_str, const std::string& arg_str) {
  const cplx order = parse_complex(order_str);
  const cplx arg = parse_complex(arg_str);
  const BesselEval ev = bessel_j(order, arg);
  std::printf("J_(%s)(%s)\n", fmt_cplx(order).c_str(), fmt_cplx(arg).c_str());
  std::printf("value      = %s\n", fmt_cplx(ev.value).c_str());
  std::printf("derivative = %s\n", fmt_cplx(ev.derivative).c_str());
  std::printf("truncation = %.3e (%d terms)\n", ev.truncation_estimate, ev.terms_used);
  if (arg != cplx(0.0, 0.0)) {
    const BesselOracleResult orc = bessel_oracle(order, arg);
    const double delta =
        std::abs(ev.value - orc.value) / std::max(std::abs(orc.value), 1e-300);
    std::printf("oracle delta = %.3e\n", delta);
    if (delta > 1e-10) return kExitIdentity;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-1 field modes in Lobachevsky space: verification and construction"};
  app.require_subcommand(1);

  RunConfig cfg;
  // a config file seeds the defaults; explicit flags then override
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        load_config_file(argv[i + 1], cfg);
      } catch (const IoError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitIo;
      }
    }
  }
  std::string config_path;

  auto* verify = app.add_subcommand("verify", "run the algebra/geometry/commutator suites");
  bool inject = false;
  verify->add_flag("--inject-beta-error", inject)->group("");  // test hook, hidden

  auto* mode = app.add_subcommand("mode", "build a mode, certify residuals, export");
  mode->add_option("--config", config_path, "JSON config file (flags override)");
  mode->add_option("--epsilon", cfg.epsilon, "energy");
  mode->add_option("--a", cfg.a, "quasi-momentum along x");
  mode->add_option("--b", cfg.b, "quasi-momentum along y");
  mode->add_option("--mass", cfg.mass, "mass");
  mode->add_option("--branch", cfg.sigma_branch, "plus | minus | zero | gauge");
  mode->add_option("--bessel-branch", cfg.bessel_branch, "+1 or -1")
      ->check(CLI::IsMember({1, -1}));
  mode->add_option("--z-min", cfg.z_min);
  mode->add_option("--z-max", cfg.z_max);
  mode->add_option("--samples", cfg.samples);
  mode->add_option("--tolerance", cfg.tolerance);
  mode->add_option("--out", cfg.out, "output file");
  mode->add_option("--format", cfg.format, "csv | json (default: from extension)");

  auto* table = app.add_subcommand("sigma-table", "tabulate sigma = +-sqrt(eps^2 - M^2)");
  double eps_min = 1.0, eps_max = 5.0, m_min = 0.0, m_max = 5.0;
  int eps_steps = 5, m_steps = 6;
  std::string table_out;
  table->add_option("--eps-min", eps_min);
  table->add_option("--eps-max", eps_max);
  table->add_option("--eps-steps", eps_steps);
  table->add_option("--mass-min", m_min);
  table->add_option("--mass-max", m_max);
  table->add_option("--mass-steps", m_steps);
  table->add_option("--out", table_out, "CSV output file");

  auto* bessel = app.add_subcommand("bessel", "evaluate J_order(arg) with oracle cross-check");
  std::string order_str = "0", arg_str = "0";
  bessel->add_option("--order", order_str, "complex literal a+bi");
  bessel->add_option("--arg", arg_str, "complex literal a+bi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (verify->parsed()) return cmd_verify(inject);
    if (mode->parsed()) return cmd_mode(cfg);
    if (table->parsed())
      return cmd_sigma_table(eps_min, eps_max, eps_steps, m_min, m_max, m_steps, table_out);
    if (bessel->parsed()) return cmd_bessel(order_str, arg_str);
  } catch (const InconsistentQuantumNumbersError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    std::fprintf(stderr, "constraint: sigma^2 = epsilon^2 - M^2\n");
    return kExitQuantum;
  } catch (const DegenerateTransverseMomentumError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitQuantum;
  } catch (const NumericRangeError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitRange;
  } catch (const PoleError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitRange;
  } catch (const UnavailableBranchError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitRange;
  } catch (const IoError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitIo;
  } catch (const InvalidInputError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitQuantum;
  }
  return kExitPass;
}
