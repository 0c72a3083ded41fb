#include "spinbeam/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "spinbeam/errors.hpp"

namespace spinbeam {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd gamma_block(const TwoParticleState& state) {
  const TwoParticleState s = state.normalized();
  Eigen::Matrix2cd g;
  g << s.x, s.y,
       s.z, s.w;
  return g;
}

// Sign of a permutation of {0, 1, 2, 3} by counting inversions.
int permutation_sign(const std::array<int, 4>& perm) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

const Eigen::Matrix2cd& pauli(int axis) {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    std::array<Eigen::Matrix2cd, 3> m;
    m[0] << 0.0, 1.0, 1.0, 0.0;
    m[1] << 0.0, -kI, kI, 0.0;
    m[2] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  return sigma[axis];
}

}  // namespace

double PolarizationVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double concurrence_closed(const TwoParticleState& state, const JunctionAmplitudes& rt) {
  const double n2 = state.norm2();
  if (!(n2 > 0.0)) throw DomainError("concurrence of a zero state is undefined");
  return std::abs(rt.t_plus + rt.r_plus + rt.t_minus + rt.r_minus) / (2.0 * n2);
}

Eigen::Matrix4cd omega_matrix(const TwoParticleState& state) {
  Eigen::Matrix4cd omega = Eigen::Matrix4cd::Zero();
  omega.block<2, 2>(0, 2) = gamma_block(state);
  return omega;
}

double concurrence_omega(const TwoParticleState& state) {
  const Eigen::Matrix4cd omega = omega_matrix(state);
  const Eigen::Matrix4cd skew = 0.5 * (omega - omega.transpose());

  std::array<int, 4> perm{0, 1, 2, 3};
  Complex total = 0.0;
  do {
    total += static_cast<double>(permutation_sign(perm)) * skew(perm[0], perm[1]) *
             skew(perm[2], perm[3]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::abs(total);
}

Eigen::Matrix2cd reduced_density_lead3(const TwoParticleState& state) {
  const Eigen::Matrix2cd g = gamma_block(state);
  return g * g.adjoint();
}

Eigen::Matrix2cd reduced_density_lead4(const TwoParticleState& state) {
  const Eigen::Matrix2cd g = gamma_block(state);
  return g.transpose() * g.conjugate();
}

double linear_entropy(const TwoParticleState& state) {
  const Eigen::Matrix2cd rho = reduced_density_lead3(state);
  return 2.0 * (1.0 - (rho * rho).trace().real());
}

SpinBasisCoefficients spin_basis_coefficients(const TwoParticleState& state,
                                              const SpinOrbitParams& params) {
  const TwoParticleState s = state.normalized();
  const Complex phase = std::polar(1.0, params.kappa());
  return {
      0.5 * (s.x + s.y + s.z + s.w),
      0.5 * kI * phase * (s.x - s.y + s.z - s.w),
      0.5 * std::conj(phase) * (-s.x - s.y + s.z + s.w),
      0.5 * kI * (-s.x + s.y + s.z - s.w),
  };
}

DetectorPolarizations detector_polarizations(const SpinBasisCoefficients& c) {
  // Index 2 * (lead-3 spin) + (lead-4 spin), spin 0 = up.
  Eigen::Vector4cd psi;
  psi << c.up_up, c.up_down, c.down_up, c.down_down;
  const Eigen::Matrix4cd rho = psi * psi.adjoint();

  SpinDensityMatrix rho3 = SpinDensityMatrix::Zero();
  SpinDensityMatrix rho4 = SpinDensityMatrix::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) {
        rho3(a, b) += rho(2 * a + k, 2 * b + k);
        rho4(a, b) += rho(2 * k + a, 2 * k + b);
      }
    }
  }
  return {polarization_of_density(rho3), polarization_of_density(rho4)};
}

PolarizationVector polarization_of_density(const SpinDensityMatrix& rho) {
  const double defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw DomainError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  // Components within a few ulps of tr(rho) are rounding residue of the
  // basis rotation, not polarization.
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(rho.trace().real());
  auto component = [&](int axis) {
    const double v = (rho * pauli(axis)).trace().real();
    return std::abs(v) <= floor ? 0.0 : v;
  };
  return {component(0), component(1), component(2)};
}

MixedBranches mixed_branch_outputs(const SpinOrbitParams& params, double energy,
                                   const JunctionCoefficients& junction, double occupation,
                                   double length, double distance, JunctionPhase phase) {
  const BeamSplitter bs = BeamSplitter::fifty_fifty();
  const TwoParticleState lead4 =
      output_amplitudes(params, energy, junction, occupation, length, distance, phase);
  const Complex along_plus = precession_phase(params, length, Branch::kPlus);
  const Complex along_minus = precession_phase(params, length, Branch::kMinus);

  MixedBranches out;
  const Eigen::Vector4cd plus = scatter_single(bs, Branch::kPlus);
  const Eigen::Vector4cd minus = scatter_single(bs, Branch::kMinus);
  out.plus << plus(0) * along_plus, plus(1) * along_minus, lead4.x, lead4.y;
  out.minus << minus(0) * along_plus, minus(1) * along_minus, lead4.z, lead4.w;
  return out;
}

MixedDetectorDensities mixed_detector_density(const SpinOrbitParams& params,
                                              const MixedBranches& branches) {
  // Each lead is projected separately: Phi_x and Phi_y never overlap, so
  // lead-3/lead-4 coherences drop out of every local observable.
  auto lead_block = [&](int offset) {
    const Eigen::Vector2cd p = branches.plus.segment<2>(offset);
    const Eigen::Vector2cd m = branches.minus.segment<2>(offset);
    return Eigen::Matrix2cd(0.5 * (p * p.adjoint() + m * m.adjoint()));
  };
  const Eigen::Matrix2cd so3 = lead_block(0);
  const Eigen::Matrix2cd so4 = lead_block(2);

  const double w3 = so3.trace().real();
  const double w4 = so4.trace().real();
  if (!(w4 > 0.0)) {
    throw DomainError("no weight reaches D4; post-selected density matrix is undefined");
  }
  const Eigen::Matrix2cd m3 = so_to_spin_basis_matrix(params, LeadAxis::kY);
  const Eigen::Matrix2cd m4 = so_to_spin_basis_matrix(params, LeadAxis::kX);
  return {m3 * so3 * m3.adjoint() / w3, m4 * so4 * m4.adjoint() / w4, w3, w4};
}

}  // namespace spinbeam
