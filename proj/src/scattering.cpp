#include "spinbeam/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "spinbeam/errors.hpp"

namespace spinbeam {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kUnitarityTolerance = 1e-12;

// Output mode indices.
constexpr int k3Plus = 0;
constexpr int k3Minus = 1;
constexpr int k4Plus = 2;
constexpr int k4Minus = 3;

}  // namespace

BeamSplitter BeamSplitter::fifty_fifty() {
  return {Complex(0.0, kInvSqrt2), Complex(kInvSqrt2, 0.0),
          std::numbers::pi / 4.0};
}

Eigen::Matrix4cd beam_splitter_matrix(const BeamSplitter& bs) {
  const Complex rc = bs.r * std::cos(bs.incidence_angle);
  const Complex irs = kI * bs.r * std::sin(bs.incidence_angle);
  const Complex t = bs.t;
  Eigen::Matrix4cd s;
  s << rc,  irs,  t,    0.0,
       irs, rc,   0.0,  t,
       t,   0.0,  rc,  -irs,
       0.0, t,   -irs,  rc;
  const double defect = (s * s.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  if (defect > kUnitarityTolerance) {
    throw DomainError("beam splitter is not unitary (defect " + std::to_string(defect) +
                      "); need |r|^2 + |t|^2 = 1 and Re(r t*) = 0");
  }
  return s;
}

double TwoParticleState::norm2() const {
  return std::norm(x) + std::norm(y) + std::norm(z) + std::norm(w);
}

TwoParticleState TwoParticleState::normalized() const {
  const double n2 = norm2();
  if (!(n2 > 0.0)) throw DomainError("cannot normalize a zero two-particle state");
  const double inv = 1.0 / std::sqrt(n2);
  return {x * inv, y * inv, z * inv, w * inv};
}

ScatteredPair scatter_bell(const BeamSplitter& bs) {
  const Eigen::Matrix4cd s = beam_splitter_matrix(bs);

  // Pair amplitudes over input modes (1+, 1-, 2+, 2-).
  Eigen::Matrix4cd input = Eigen::Matrix4cd::Zero();
  input(0, 2) = kInvSqrt2;
  input(1, 3) = kInvSqrt2;

  const Eigen::Matrix4cd out = s * input * s.transpose();
  // c_i c_j = -c_j c_i: the coefficient of the ordered pair i < j.
  const Eigen::Matrix4cd pair = out - out.transpose();

  ScatteredPair result;
  result.state = {pair(k3Plus, k4Plus), pair(k3Plus, k4Minus), pair(k3Minus, k4Plus),
                  pair(k3Minus, k4Minus)};
  result.lead3_pair = pair(k3Plus, k3Minus);
  result.lead4_pair = pair(k4Plus, k4Minus);
  return result;
}

Eigen::Vector4cd scatter_single(const BeamSplitter& bs, Branch branch) {
  const Eigen::Matrix4cd s = beam_splitter_matrix(bs);
  return s.col(branch == Branch::kPlus ? 0 : 1);
}

Eigen::Matrix3d JunctionCoefficients::matrix() const {
  const double root = std::sqrt(epsilon);
  Eigen::Matrix3d m;
  m << -(a + b), root, root,
       root,     a,    b,
       root,     b,    a;
  return m;
}

JunctionCoefficients junction_coefficients(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    throw DomainError("reservoir coupling epsilon must lie in [0, 0.5], got " +
                      std::to_string(epsilon));
  }
  const double root = std::sqrt(1.0 - 2.0 * epsilon);
  return {0.5 * (root - 1.0), 0.5 * (root + 1.0), epsilon};
}

double fermi_function(double energy, double fermi_energy, double temperature_au) {
  const double delta = energy - fermi_energy;
  if (delta == 0.0) return 0.5;
  if (temperature_au == 0.0) return delta < 0.0 ? 1.0 : 0.0;
  const double x = delta / temperature_au;
  // Symmetric form keeps exp() from overflowing on either side.
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double reservoir_occupation(double energy, double fermi_energy, double temperature_au,
                            double wire_velocity) {
  if (!(wire_velocity > 0.0)) {
    throw DomainError("reservoir wire velocity must be > 0");
  }
  if (!(temperature_au >= 0.0)) {
    throw DomainError("temperature must be >= 0");
  }
  return fermi_function(energy, fermi_energy, temperature_au) /
         (2.0 * std::numbers::pi * wire_velocity);
}

Complex reservoir_back_amplitude(const JunctionCoefficients& jc, double occupation, double phase) {
  if (!(occupation > 0.0)) {
    throw DomainError("reservoir occupation N must be > 0 to define the back amplitude");
  }
  return -(jc.a + jc.b) + std::sqrt(jc.epsilon / occupation) * std::polar(1.0, phase);
}

double decoherence_current(const JunctionCoefficients& jc, double occupation, double phase) {
  const Complex c = reservoir_back_amplitude(jc, occupation, phase);
  return occupation * (1.0 - std::norm(c));
}

double decoherence_current_closed(const JunctionCoefficients& jc, double occupation,
                                  double phase) {
  const double eps = jc.epsilon;
  return 2.0 * std::sqrt(occupation * eps * (1.0 - 2.0 * eps)) * std::cos(phase) -
         eps * (1.0 - 2.0 * occupation);
}

JunctionAmplitudes junction_rt_amplitudes(const SpinOrbitParams& p, double energy,
                                          const JunctionCoefficients& jc, double occupation,
                                          double distance, JunctionPhase phase) {
  if (!(distance >= 0.0)) throw DomainError("junction distance must be >= 0");
  if (!(occupation >= 0.0)) throw DomainError("reservoir occupation must be >= 0");
  const ChannelWavevectors k = channel_wavevectors(p, energy);

  Complex phase_plus;
  Complex phase_minus;
  if (phase == JunctionPhase::kCommonOrbital) {
    phase_plus = phase_minus = std::polar(1.0, -k.mean() * distance);
  } else {
    phase_plus = precession_phase(p, distance, Branch::kMinus) *
                 std::polar(1.0, -k.k_plus * distance);
    phase_minus = precession_phase(p, distance, Branch::kPlus) *
                  std::polar(1.0, -k.k_minus * distance);
  }

  const double injected = std::sqrt(occupation * jc.epsilon);
  const Complex wave_plus = injected * phase_plus;
  const Complex wave_minus = injected * phase_minus;
  return {wave_plus + jc.a, wave_minus + jc.a, wave_plus + jc.b, wave_minus + jc.b};
}

TwoParticleState output_amplitudes(const SpinOrbitParams& p, const JunctionAmplitudes& rt,
                                   double length, double distance) {
  const double scale = -1.0 / (2.0 * std::numbers::sqrt2);
  const Complex u_plus = rt.t_plus + rt.r_plus;
  const Complex u_minus = rt.t_minus + rt.r_minus;
  const Complex arm_plus = precession_phase(p, 2.0 * length, Branch::kPlus);
  const Complex arm_minus = precession_phase(p, 2.0 * length, Branch::kMinus);

  TwoParticleState s{scale * arm_plus * (u_plus + 1.0), scale * (u_plus - 1.0),
                     scale * (u_minus - 1.0), scale * arm_minus * (u_minus + 1.0)};

  if (distance < length) {
    // Free precession between the junction and D4 acts on the lead-4 label.
    const Complex after_plus = precession_phase(p, length - distance, Branch::kPlus);
    const Complex after_minus = precession_phase(p, length - distance, Branch::kMinus);
    s.x *= after_plus;
    s.z *= after_plus;
    s.y *= after_minus;
    s.w *= after_minus;
  }
  return s;
}

TwoParticleState output_amplitudes(const SpinOrbitParams& p, double energy,
                                   const JunctionCoefficients& jc, double occupation,
                                   double length, double distance, JunctionPhase phase) {
  if (!(length >= 0.0)) throw DomainError("arm length must be >= 0");
  if (distance > length) throw DomainError("junction distance exceeds arm length");
  return output_amplitudes(p, junction_rt_amplitudes(p, energy, jc, occupation, distance, phase),
                           length, distance);
}

}  // namespace spinbeam
