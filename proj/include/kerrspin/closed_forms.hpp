#pragma once

// Hand-reduced closed forms of the local Lorentz and Wigner generators for the
// two equatorial scenarios. They are cross-check fixtures for the general
// tetrad pipeline in wigner.hpp and are never used to produce rotation angles.
// Every 1/ω is carried as a_over_omega / a so that a = 0 is a regular point.

#include "kerrspin/geodesics.hpp"

namespace kerrspin::closed_form {

struct RadialFallGenerators {
  double lambda01;  ///< λ^0_1 = λ^1_0
  double lambda03;  ///< λ^0_3 = λ^3_0
  double lambda13;  ///< λ^1_3 = −λ^3_1
  double theta13;   ///< ϑ¹₃
};

RadialFallGenerators radial_fall(const GravitationalSource& source, double r);

struct CircularGenerators {
  double lambda01;
  double lambda13;
  double theta13;
};

CircularGenerators circular(const GravitationalSource& source, double r, OrbitSense sense);

}  // namespace kerrspin::closed_form
