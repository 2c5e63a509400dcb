#include "lobdk/mode_builder.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lobdk/errors.hpp"
#include "lobdk/helicity.hpp"

namespace lobdk {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::helicity_plus: return "plus";
    case Branch::helicity_minus: return "minus";
    case Branch::sigma_zero: return "zero";
    case Branch::massless_gauge: return "gauge";
  }
  return "?";
}

Branch branch_from_string(const std::string& s) {
  if (s == "plus") return Branch::helicity_plus;
  if (s == "minus") return Branch::helicity_minus;
  if (s == "zero") return Branch::sigma_zero;
  if (s == "gauge") return Branch::massless_gauge;
  throw InvalidInputError("unknown branch: " + s);
}

Vec10 ModeField::at(double t, double x, double y, std::size_t i) const {
  const cplx phase = std::exp(cplx(0.0, -q.epsilon * t + q.a * x + q.b * y));
  return phase * f.at(i);
}

namespace {

struct Htriple {
  cplx H1, H2, H3;
  cplx dH1, dH2, dH3;
};

Htriple h_triple(const QuantumNumbers& q, int branch, double z) {
  const RadialEval r1 = radial_h1(q, branch, z);
  const RadialEval r3 = companion_h3(q, branch, z);
  const cplx apb = cplx(q.a, q.b), amb = cplx(q.a, -q.b);
  const double ez = std::exp(z);
  Htriple h;
  h.H1 = r1.H;
  h.dH1 = r1.dH_dz;
  h.H3 = r3.H;
  h.dH3 = r3.dH_dz;
  h.H2 = kInvSqrt2 * ez * (apb * h.H1 + amb * h.H3) / q.sigma;
  h.dH2 = h.H2 + kInvSqrt2 * ez * (apb * h.dH1 + amb * h.dH3) / q.sigma;
  return h;
}

ModeField build_helicity_mode(QuantumNumbers q, Branch branch, int bessel_branch,
                              const std::vector<double>& z_grid) {
  if (!(q.mass > 0.0))
    throw InconsistentQuantumNumbersError("helicity branch requires M > 0");
  const cplx c(q.epsilon * q.epsilon - q.mass * q.mass, 0.0);
  if (c == 0.0)
    throw InconsistentQuantumNumbersError(
        "sigma^2 = epsilon^2 - M^2 = 0: use the zero branch");
  const double sign = branch == Branch::helicity_plus ? +1.0 : -1.0;
  const cplx sigma = sign * std::sqrt(c);
  if (std::abs(q.sigma) > 0.0 && std::abs(q.sigma - sigma) > 1e-9 * std::abs(sigma))
    throw InconsistentQuantumNumbersError("given sigma inconsistent with branch");
  q.sigma = sigma;
  sigma_nonzero_constraints(q);  // validates sigma^2 = eps^2 - M^2

  ModeField m;
  m.q = q;
  m.branch = branch;
  m.bessel_branch = bessel_branch;
  m.f.resize(z_grid.size());
  m.f.z = z_grid;
  m.f.validate();

  const cplx phi_over_h = q.mass / sigma;
  const cplx e_over_phi = -kI * q.epsilon / q.mass;

  // normalization: Phi2(0) = 1, falling back to the first nonvanishing component
  const Htriple h0 = h_triple(q, bessel_branch, 0.0);
  cplx norm = phi_over_h * h0.H2;
  if (std::abs(norm) < 1e-12) {
    for (const cplx& cand : {phi_over_h * h0.H1, phi_over_h * h0.H3}) {
      if (std::abs(cand) > 1e-12) { norm = cand; break; }
    }
  }
  if (std::abs(norm) < 1e-280)
    throw NumericRangeError("build_mode: vanishing normalization at z = 0");

  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const Htriple h = h_triple(q, bessel_branch, z_grid[i]);
    const cplx Hv[3] = {h.H1 / norm, h.H2 / norm, h.H3 / norm};
    const cplx Hd[3] = {h.dH1 / norm, h.dH2 / norm, h.dH3 / norm};
    for (int j = 0; j < 3; ++j) {
      m.f.value[kH1 + j][i] = Hv[j];
      m.f.deriv[kH1 + j][i] = Hd[j];
      m.f.value[kPhi1 + j][i] = phi_over_h * Hv[j];
      m.f.deriv[kPhi1 + j][i] = phi_over_h * Hd[j];
      m.f.value[kE1 + j][i] = e_over_phi * phi_over_h * Hv[j];
      m.f.deriv[kE1 + j][i] = e_over_phi * phi_over_h * Hd[j];
    }
    m.f.value[kPhi0][i] = 0.0;
    m.f.deriv[kPhi0][i] = 0.0;
  }
  return m;
}

}  // namespace

ModeField build_mode(const QuantumNumbers& q, Branch branch, int bessel_branch,
                     const std::vector<double>& z_grid) {
  if (z_grid.size() < 3) throw InvalidInputError("build_mode: need at least 3 grid points");
  switch (branch) {
    case Branch::helicity_plus:
    case Branch::helicity_minus:
      return build_helicity_mode(q, branch, bessel_branch, z_grid);
    case Branch::sigma_zero: {
      if (!(q.mass > 0.0))
        throw InconsistentQuantumNumbersError("sigma_zero branch requires M > 0");
      if (std::abs(q.sigma) != 0.0)
        throw InconsistentQuantumNumbersError("sigma_zero branch requires sigma = 0");
      ModeField m;
      m.q = q;
      m.branch = branch;
      m.bessel_branch = bessel_branch;
      m.f = phi0_mode(q, bessel_branch, z_grid);
      return m;
    }
    case Branch::massless_gauge: {
      if (q.mass != 0.0)
        throw InconsistentQuantumNumbersError("gauge branch requires M = 0");
      if (std::abs(q.sigma) != 0.0)
        throw InconsistentQuantumNumbersError("gauge branch requires sigma = 0");
      ModeField m;
      m.q = q;
      m.branch = branch;
      m.bessel_branch = bessel_branch;
      m.f = phi0_mode(q, bessel_branch, z_grid);
      return m;
    }
  }
  throw InvalidInputError("build_mode: unknown branch");
}

ScanReport residual_scan(const ModeField& mode, double tolerance, Exec exec) {
  ScanReport rep;
  rep.tolerance = tolerance;

  const ResidualReport wave = explicit_residuals(mode.q, mode.f, exec);
  rep.max_rel_wave = wave.max_rel;
  double best = -1.0;
  for (int e = 0; e < 10; ++e)
    for (std::size_t i = 0; i < mode.f.size(); ++i)
      if (wave.abs_residual[e][i] > best) {
        best = wave.abs_residual[e][i];
        rep.worst_equation = e;
        rep.worst_z = mode.f.z[i];
      }

  const HelicityResiduals hel = helicity_residuals(mode.q.sigma, mode.q, mode.f, exec);
  rep.max_rel_helicity = hel.max_rel;

  rep.pass = rep.max_rel_wave < tolerance && rep.max_rel_helicity < tolerance;
  return rep;
}

namespace {

constexpr const char* kComponentNames[10] = {"Phi0", "Phi1", "Phi2", "Phi3", "E1",
                                             "E2",   "E3",   "H1",   "H2",   "H3"};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void export_csv(const ModeField& mode, const ScanReport& rep, const std::filesystem::path& dest) {
  std::ofstream os(dest);
  if (!os) throw IoError("export_mode: cannot open " + dest.string());
  os << "# lobdk mode export\n";
  os << "# epsilon=" << fmt17(mode.q.epsilon) << " a=" << fmt17(mode.q.a)
     << " b=" << fmt17(mode.q.b) << " mass=" << fmt17(mode.q.mass)
     << " sigma=" << fmt17(mode.q.sigma.real()) << "+" << fmt17(mode.q.sigma.imag()) << "i"
     << " branch=" << to_string(mode.branch) << " bessel_branch=" << mode.bessel_branch << "\n";
  os << "# max_rel_residual=" << fmt17(rep.max_rel_wave)
     << " helicity_residual=" << fmt17(rep.max_rel_helicity)
     << " tolerance=" << fmt17(rep.tolerance) << " pass=" << (rep.pass ? 1 : 0) << "\n";
  os << "z";
  for (const char* name : kComponentNames) os << "," << name << "_re," << name << "_im";
  os << "\n";
  for (std::size_t i = 0; i < mode.f.size(); ++i) {
    os << fmt17(mode.f.z[i]);
    for (int c = 0; c < 10; ++c)
      os << "," << fmt17(mode.f.value[c][i].real()) << "," << fmt17(mode.f.value[c][i].imag());
    os << "\n";
  }
  if (!os) throw IoError("export_mode: write failed for " + dest.string());
}

void export_json(const ModeField& mode, const ScanReport& rep, const std::filesystem::path& dest) {
  nlohmann::json j;
  j["meta"] = {
      {"epsilon", mode.q.epsilon},
      {"a", mode.q.a},
      {"b", mode.q.b},
      {"mass", mode.q.mass},
      {"sigma", {mode.q.sigma.real(), mode.q.sigma.imag()}},
      {"branch", to_string(mode.branch)},
      {"bessel_branch", mode.bessel_branch},
      {"max_rel_residual", rep.max_rel_wave},
      {"helicity_residual", rep.max_rel_helicity},
      {"tolerance", rep.tolerance},
      {"pass", rep.pass},
  };
  nlohmann::json profiles;
  profiles["z"] = mode.f.z;
  for (int c = 0; c < 10; ++c) {
    nlohmann::json arr = nlohmann::json::array();
    nlohmann::json darr = nlohmann::json::array();
    for (std::size_t i = 0; i < mode.f.size(); ++i) {
      arr.push_back({mode.f.value[c][i].real(), mode.f.value[c][i].imag()});
      darr.push_back({mode.f.deriv[c][i].real(), mode.f.deriv[c][i].imag()});
    }
    profiles[kComponentNames[c]] = std::move(arr);
    profiles[std::string(kComponentNames[c]) + "_deriv"] = std::move(darr);
  }
  j["profiles"] = std::move(profiles);

  std::ofstream os(dest);
  if (!os) throw IoError("export_mode: cannot open " + dest.string());
  os << j.dump(1) << "\n";
  if (!os) throw IoError("export_mode: write failed for " + dest.string());
}

}  // namespace

void export_mode(const ModeField& mode, const ScanReport& report, const std::string& format,
                 const std::filesystem::path& destination) {
  if (format == "csv")
    export_csv(mode, report, destination);
  else if (format == "json")
    export_json(mode, report, destination);
  else
    throw InvalidInputError("export_mode: unknown format " + format);
}

ModeField import_mode_json(const std::filesystem::path& source) {
  std::ifstream is(source);
  if (!is) throw IoError("import_mode_json: cannot open " + source.string());
  nlohmann::json j;
  is >> j;

  ModeField m;
  const auto& meta = j.at("meta");
  m.q.epsilon = meta.at("epsilon").get<double>();
  m.q.a = meta.at("a").get<double>();
  m.q.b = meta.at("b").get<double>();
  m.q.mass = meta.at("mass").get<double>();
  m.q.sigma = cplx(meta.at("sigma")[0].get<double>(), meta.at("sigma")[1].get<double>());
  m.branch = branch_from_string(meta.at("branch").get<std::string>());
  m.bessel_branch = meta.at("bessel_branch").get<int>();

  const auto& profiles = j.at("profiles");
  m.f.z = profiles.at("z").get<std::vector<double>>();
  const std::size_t n = m.f.z.size();
  for (int c = 0; c < 10; ++c) {
    const auto& arr = profiles.at(kComponentNames[c]);
    const auto& darr = profiles.at(std::string(kComponentNames[c]) + "_deriv");
    if (arr.size() != n || darr.size() != n)
      throw IoError("import_mode_json: malformed profile arrays");
    m.f.value[c].resize(n);
    m.f.deriv[c].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.f.value[c][i] = cplx(arr[i][0].get<double>(), arr[i][1].get<double>());
      m.f.deriv[c][i] = cplx(darr[i][0].get<double>(), darr[i][1].get<double>());
    }
  }
  m.f.validate();
  return m;
}

}  // namespace lobdk
