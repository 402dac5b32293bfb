#pragma once

#include <numbers>

namespace spdc {

/// CODATA 2018 SI values. The struct is an aggregate so tests can build
/// perturbed copies, but the library only ever passes it by const reference.
struct PhysicalConstants {
  double epsilon0 = 8.8541878128e-12;  // F/m
  double hbar = 1.054571817e-34;       // J s
  double c = 299792458.0;              // m/s
};

inline constexpr PhysicalConstants kCodata{};

inline constexpr double kPi = std::numbers::pi;

// Angular frequency of a vacuum wavelength.
constexpr double angular_frequency(double lambda_vac, const PhysicalConstants& pc = kCodata) {
  return 2.0 * kPi * pc.c / lambda_vac;
}

}  // namespace spdc
