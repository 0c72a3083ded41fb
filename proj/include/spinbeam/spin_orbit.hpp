#pragma once

#include <complex>

#include <Eigen/Core>

namespace spinbeam {

using Complex = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Propagation axis of a lead. Leads 2 and 3 run along y, leads 1 and 4 along x.
enum class LeadAxis { kX, kY };

/// Spin-orbit eigenbranch label.
enum class Branch { kPlus, kMinus };

/// Rashba (alpha) and Dresselhaus (beta) couplings with the effective mass.
class SpinOrbitParams {
 public:
  /// Throws DomainError unless mass > 0.
  SpinOrbitParams(double alpha, double beta, double mass = 1.0);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double mass() const { return mass_; }

  /// sqrt(alpha^2 + beta^2).
  double gamma() const { return gamma_; }

  /// Mixing angle arctan(beta / alpha); 0 for the SO-free device.
  double kappa() const { return kappa_; }

  /// Spin precession phase per unit length, m * gamma / 2.
  double precession_rate() const { return 0.5 * mass_ * gamma_; }

 private:
  double alpha_;
  double beta_;
  double mass_;
  double gamma_;
  double kappa_;
};

struct Spinor {
  Complex up;
  Complex down;
};

struct BranchEnergies {
  double plus;
  double minus;
};

struct ChannelWavevectors {
  double k_plus;
  double k_minus;

  /// (k_plus + k_minus) / 2, the orbital wavevector shared by both branches.
  double mean() const { return 0.5 * (k_plus + k_minus); }
};

/// E(k) for a wavevector at angle theta to the y axis. The cross term is
/// 4 alpha beta sin(theta) cos(theta). Throws DomainError for k < 0.
BranchEnergies dispersion_general(const SpinOrbitParams& params, double k, double theta);

/// Wavevectors of both branches at energy E > 0 on a straight lead;
/// k_minus - k_plus = 2 m gamma. Throws DomainError for E <= 0.
ChannelWavevectors channel_wavevectors(const SpinOrbitParams& params, double energy);

/// y leads: (1, -/+ e^{-i kappa}) / sqrt2; x leads: (1, +/- i e^{i kappa}) / sqrt2.
Spinor eigenspinor(const SpinOrbitParams& params, LeadAxis axis, Branch branch);

/// Columns are eigenspinor(+), eigenspinor(-): maps SO-basis coefficient
/// pairs to (up, down) coefficients.
Eigen::Matrix2cd so_to_spin_basis_matrix(const SpinOrbitParams& params, LeadAxis axis);

/// e^{+i Lambda length} for kPlus, e^{-i Lambda length} for kMinus.
Complex precession_phase(const SpinOrbitParams& params, double length, Branch branch);

}  // namespace spinbeam
