#pragma once

// Assembly of complete quasi-plane-wave modes
//   Psi = e^{-i eps t} e^{i a x} e^{i b y} (Phi0, Phi_j, E_j, H_j)(z)
// for the sigma != 0 helicity branches, the sigma = 0 massive branch and
// the massless gauge branch, with residual certification and CSV/JSON export.

#include <filesystem>
#include <string>
#include <vector>

#include "lobdk/radial.hpp"
#include "lobdk/wave_system.hpp"

namespace lobdk {

enum class Branch { helicity_plus, helicity_minus, sigma_zero, massless_gauge };

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);

struct ModeField {
  QuantumNumbers q;
  Branch branch = Branch::helicity_plus;
  int bessel_branch = +1;
  FieldComponents f;  // z-profiles with analytic derivatives

  // Psi at (t, x, y, z_grid[i]); the (t,x,y)-dependence is the exact phase.
  Vec10 at(double t, double x, double y, std::size_t i) const;
};

// branch-consistent q required: sigma^2 = eps^2 - M^2 with M > 0 for the
// helicity branches (sigma computed from eps, M when q.sigma == 0),
// sigma = 0 and eps^2 != M^2 for sigma_zero, M = 0 for massless_gauge.
ModeField build_mode(const QuantumNumbers& q, Branch branch, int bessel_branch,
                     const std::vector<double>& z_grid);

struct ScanReport {
  double tolerance = 0.0;
  double max_rel_wave = 0.0;      // ten-equation system, relative
  int worst_equation = -1;
  double worst_z = 0.0;
  double max_rel_helicity = 0.0;  // eigen-residual at the mode's sigma
  bool pass = false;
};

ScanReport residual_scan(const ModeField& mode, double tolerance, Exec exec = Exec::parallel);

// format "csv" or "json"; writes grid, re/im profiles and a metadata header
// (quantum numbers, branch, residual summary).
void export_mode(const ModeField& mode, const ScanReport& report, const std::string& format,
                 const std::filesystem::path& destination);

// Lossless JSON round-trip of the profiles.
ModeField import_mode_json(const std::filesystem::path& source);

}  // namespace lobdk
