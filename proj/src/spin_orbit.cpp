#include "spinbeam/spin_orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinbeam/errors.hpp"

namespace spinbeam {

namespace {
constexpr Complex kI{0.0, 1.0};
}

SpinOrbitParams::SpinOrbitParams(double alpha, double beta, double mass)
    : alpha_(alpha), beta_(beta), mass_(mass), gamma_(std::hypot(alpha, beta)),
      kappa_(std::atan2(beta, alpha)) {
  if (!(mass > 0.0)) {
    throw DomainError("effective mass must be > 0, got " + std::to_string(mass));
  }
}

BranchEnergies dispersion_general(const SpinOrbitParams& p, double k, double theta) {
  if (!(k >= 0.0)) throw DomainError("wavevector must be >= 0");
  const double cross = 4.0 * p.alpha() * p.beta() * std::sin(theta) * std::cos(theta);
  // Radicand is >= (|alpha| - |beta|)^2 analytically; clamp rounding noise.
  const double radicand = std::max(0.0, p.alpha() * p.alpha() + p.beta() * p.beta() + cross);
  const double kinetic = k * k / (2.0 * p.mass());
  const double splitting = k * std::sqrt(radicand);
  return {kinetic + splitting, kinetic - splitting};
}

ChannelWavevectors channel_wavevectors(const SpinOrbitParams& p, double energy) {
  if (!(energy > 0.0)) {
    throw DomainError("energy must be > 0, got " + std::to_string(energy));
  }
  const double m = p.mass();
  const double g2 = p.gamma() * p.gamma();
  const double mean = m * std::sqrt(g2 + 2.0 * energy / m);
  const double half_split = m * p.gamma();
  return {mean - half_split, mean + half_split};
}

Spinor eigenspinor(const SpinOrbitParams& p, LeadAxis axis, Branch branch) {
  const double norm = kInvSqrt2;
  const double sign = branch == Branch::kPlus ? 1.0 : -1.0;
  if (axis == LeadAxis::kY) {
    return {norm, -sign * norm * std::polar(1.0, -p.kappa())};
  }
  return {norm, sign * norm * kI * std::polar(1.0, p.kappa())};
}

Eigen::Matrix2cd so_to_spin_basis_matrix(const SpinOrbitParams& p, LeadAxis axis) {
  const Spinor plus = eigenspinor(p, axis, Branch::kPlus);
  const Spinor minus = eigenspinor(p, axis, Branch::kMinus);
  Eigen::Matrix2cd m;
  m << plus.up, minus.up,
       plus.down, minus.down;
  return m;
}

Complex precession_phase(const SpinOrbitParams& p, double length, Branch branch) {
  const double angle = p.precession_rate() * length;
  return std::polar(1.0, branch == Branch::kPlus ? angle : -angle);
}

}  // namespace spinbeam
