#pragma once

#include <Eigen/Core>

#include "spinbeam/scattering.hpp"
#include "spinbeam/spin_orbit.hpp"

namespace spinbeam {

/// 2x2 density matrix in the (up, down) spin basis.
using SpinDensityMatrix = Eigen::Matrix2cd;

struct PolarizationVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Coefficients of |up up>, |up down>, |down up>, |down down>; the first
/// slot is the lead-3 electron, the second the lead-4 electron.
struct SpinBasisCoefficients {
  Complex up_up;
  Complex up_down;
  Complex down_up;
  Complex down_down;
};

/// |t+ + r+ + t- + r-| / (2 norm2). Throws DomainError for a zero state.
double concurrence_closed(const TwoParticleState& state, const JunctionAmplitudes& rt);

/// Antisymmetric pair-amplitude matrix over (a3+, a3-, a4+, a4-) built from
/// the normalized state; nonzero only in rows 1-2, columns 3-4.
Eigen::Matrix4cd omega_matrix(const TwoParticleState& state);

/// |eps^{abcd} W_ab W_cd| with W = (Omega - Omega^T) / 2.
double concurrence_omega(const TwoParticleState& state);

/// Reduced one-electron density matrices of the normalized pure state, in
/// the SO basis of the respective lead.
Eigen::Matrix2cd reduced_density_lead3(const TwoParticleState& state);
Eigen::Matrix2cd reduced_density_lead4(const TwoParticleState& state);

/// 2 (1 - tr rho^2) of the lead-3 reduction.
double linear_entropy(const TwoParticleState& state);

/// Spin-basis expansion of the normalized state:
///   A = (X+Y+Z+W)/2,            B = i e^{i kappa} (X-Y+Z-W)/2,
///   C = e^{-i kappa} (-X-Y+Z+W)/2, D = i (-X+Y+Z-W)/2.
SpinBasisCoefficients spin_basis_coefficients(const TwoParticleState& state,
                                              const SpinOrbitParams& params);

struct DetectorPolarizations {
  PolarizationVector d3;
  PolarizationVector d4;
};

/// Partial traces of the two-electron spin density matrix.
DetectorPolarizations detector_polarizations(const SpinBasisCoefficients& coeffs);

/// P_i = tr(rho sigma_i). Throws DomainError if rho is not Hermitian to 1e-10.
PolarizationVector polarization_of_density(const SpinDensityMatrix& rho);

/// Outputs of a1+|0> and a1-|0> over (3+, 3-, 4+, 4-) for the mixed input.
struct MixedBranches {
  Eigen::Vector4cd plus;
  Eigen::Vector4cd minus;
};

MixedBranches mixed_branch_outputs(const SpinOrbitParams& params, double energy,
                                   const JunctionCoefficients& junction, double occupation,
                                   double length, double distance,
                                   JunctionPhase phase = JunctionPhase::kCommonOrbital);

/// Per-detector spin density matrices of the equal-weight branch mixture.
/// Cross-lead coherences never enter; each matrix is post-selected
/// (normalized by its own weight).
struct MixedDetectorDensities {
  SpinDensityMatrix d3;
  SpinDensityMatrix d4;
  double d3_weight;
  double d4_weight;
};

/// Throws DomainError when nothing arrives at D4.
MixedDetectorDensities mixed_detector_density(const SpinOrbitParams& params,
                                              const MixedBranches& branches);

}  // namespace spinbeam
