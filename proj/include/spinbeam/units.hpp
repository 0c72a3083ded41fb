#pragma once

#include <optional>

// Atomic units throughout: hbar = e = m_e = 1.

namespace spinbeam::units {

inline constexpr double kKelvinPerAu = 3.157e5;
inline constexpr double kBohrRadiusMeters = 5.29177210903e-11;
inline constexpr double kMetersPerMicron = 1.0e-6;

// Linear spin-orbit conversion anchored at 3.9e-12 eV m = 0.0027 a.u.
inline constexpr double kSoAnchorEvM = 3.9e-12;
inline constexpr double kSoAnchorAu = 0.0027;

/// Throws DomainError for negative temperatures.
double kelvin_to_au(double kelvin);
double au_to_kelvin(double temperature_au);

constexpr double microns_to_au(double microns) {
  return microns * kMetersPerMicron / kBohrRadiusMeters;
}
constexpr double au_to_microns(double length_au) {
  return length_au * kBohrRadiusMeters / kMetersPerMicron;
}

/// Throws DomainError for negative couplings.
double so_coupling_evm_to_au(double coupling_evm);
double so_coupling_au_to_evm(double coupling_au);

/// Widest hard-wall lead (unit mass) whose first subband gap 3 pi^2 / (2 w^2)
/// still exceeds the intersubband Rashba element 8 alpha / (3 w), i.e.
/// 9 pi^2 / (16 |alpha|). std::nullopt means no constraint (alpha == 0).
std::optional<double> max_single_subband_width(double alpha);

}  // namespace spinbeam::units
