#include "spinbeam/units.hpp"

#include <cmath>
#include <numbers>

#include "spinbeam/errors.hpp"

namespace spinbeam::units {

double kelvin_to_au(double kelvin) {
  if (!(kelvin >= 0.0)) {
    throw DomainError("temperature must be >= 0 K, got " + std::to_string(kelvin));
  }
  return kelvin / kKelvinPerAu;
}

double au_to_kelvin(double temperature_au) { return temperature_au * kKelvinPerAu; }

double so_coupling_evm_to_au(double coupling_evm) {
  if (!(coupling_evm >= 0.0)) {
    throw DomainError("spin-orbit coupling must be >= 0 eV m");
  }
  return coupling_evm * (kSoAnchorAu / kSoAnchorEvM);
}

double so_coupling_au_to_evm(double coupling_au) {
  return coupling_au * (kSoAnchorEvM / kSoAnchorAu);
}

std::optional<double> max_single_subband_width(double alpha) {
  if (alpha == 0.0) return std::nullopt;
  return 9.0 * std::numbers::pi * std::numbers::pi / (16.0 * std::abs(alpha));
}

}  // namespace spinbeam::units
