#pragma once

#include <complex>

#include <Eigen/Core>

#include "spinbeam/spin_orbit.hpp"

namespace spinbeam {

/// Four-port splitter. Rows of its S-matrix are outputs (3+, 3-, 4+, 4-),
/// columns inputs (1+, 1-, 2+, 2-).
struct BeamSplitter {
  Complex r;
  Complex t;
  double incidence_angle;

  /// 50-50 splitter at pi/4 with r = i/sqrt2, t = 1/sqrt2.
  static BeamSplitter fifty_fifty();
};

/// Throws DomainError if the assembled matrix is not unitary to 1e-12
/// (requires |r|^2 + |t|^2 = 1 and Re(r t*) = 0).
Eigen::Matrix4cd beam_splitter_matrix(const BeamSplitter& splitter);

/// Amplitudes over a3+a4+, a3+a4-, a3-a4+, a3-a4- (lead-3 operator first).
struct TwoParticleState {
  Complex x;
  Complex y;
  Complex z;
  Complex w;

  double norm2() const;
  TwoParticleState normalized() const;
};

/// Result of scattering a two-electron input off the splitter. Both
/// double-occupancy amplitudes vanish for the antibunching Bell input.
struct ScatteredPair {
  TwoParticleState state;
  Complex lead3_pair;  // a3+ a3-
  Complex lead4_pair;  // a4+ a4-
};

/// Scatters (a1+ a2+ + a1- a2-)/sqrt2 |0>.
ScatteredPair scatter_bell(const BeamSplitter& splitter);

/// One electron a1+/-|0>; amplitudes over (3+, 3-, 4+, 4-).
Eigen::Vector4cd scatter_single(const BeamSplitter& splitter, Branch branch);

/// Reservoir junction on lead 4.
struct JunctionCoefficients {
  double a;
  double b;
  double epsilon;

  /// Junction S-matrix over (reservoir wire, lead-4 in, lead-4 out).
  Eigen::Matrix3d matrix() const;
};

/// Throws DomainError unless 0 <= epsilon <= 1/2.
JunctionCoefficients junction_coefficients(double epsilon);

/// Fermi function; exactly 1/2 at E = E_F, a step at T = 0.
double fermi_function(double energy, double fermi_energy, double temperature_au);

/// Occupation flux factor f(E) / (2 pi v) of the reservoir wire.
/// Throws DomainError for v <= 0 or T < 0.
double reservoir_occupation(double energy, double fermi_energy, double temperature_au,
                            double wire_velocity);

/// C = -(a+b) + sqrt(epsilon/N) e^{i phi}. Throws DomainError for N <= 0.
Complex reservoir_back_amplitude(const JunctionCoefficients& junction, double occupation,
                                 double phase);

/// j_d = N (1 - |C|^2).
double decoherence_current(const JunctionCoefficients& junction, double occupation, double phase);

/// j_d = 2 sqrt(N eps (1 - 2 eps)) cos(phi) - eps (1 - 2N); the same
/// current written without C.
double decoherence_current_closed(const JunctionCoefficients& junction, double occupation,
                                  double phase);

/// Phase the reservoir imprints on each SO branch at the junction.
enum class JunctionPhase {
  /// Both branches share the orbital phase e^{-i kbar d}; the branch
  /// splitting of k+/- is carried by the precession phase.
  kCommonOrbital,
  /// e^{-/+ i Lambda d} e^{-i k+/- d} per branch, as printed.
  kPrintedBranch,
};

struct JunctionAmplitudes {
  Complex r_plus;
  Complex r_minus;
  Complex t_plus;
  Complex t_minus;
};

/// Reflection/transmission of the two SO branches at a junction a distance
/// `distance` down lead 4. t - r = b - a = 1 for both branches.
JunctionAmplitudes junction_rt_amplitudes(const SpinOrbitParams& params, double energy,
                                          const JunctionCoefficients& junction,
                                          double occupation, double distance,
                                          JunctionPhase phase = JunctionPhase::kCommonOrbital);

/// Un-normalized output state X, Y, Z, W after the splitter, propagation
/// along arms of length `length` and the junction at `distance`.
TwoParticleState output_amplitudes(const SpinOrbitParams& params, double energy,
                                   const JunctionCoefficients& junction, double occupation,
                                   double length, double distance,
                                   JunctionPhase phase = JunctionPhase::kCommonOrbital);

/// Same, from already computed junction amplitudes.
TwoParticleState output_amplitudes(const SpinOrbitParams& params, const JunctionAmplitudes& rt,
                                   double length, double distance);

}  // namespace spinbeam
