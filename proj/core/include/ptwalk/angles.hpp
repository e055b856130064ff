#ifndef PTWALK_ANGLES_HPP
#define PTWALK_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace ptwalk {

inline constexpr double kPi = std::numbers::pi;

/// Wrap an angle in radians to [-pi, pi).
inline double wrap_radians(double x) {
  double y = std::remainder(x, 2.0 * kPi);  // [-pi, pi], ties toward even
  return y == kPi ? -kPi : y;
}

/// Wrap an angle measured in units of pi to [-1, 1).
inline double wrap_pi_units(double x) {
  double y = std::remainder(x, 2.0);
  return y == 1.0 ? -1.0 : y;
}

/// Circular distance between two angles in radians (result in [0, pi]).
inline double circular_distance(double a, double b) {
  return std::abs(wrap_radians(a - b));
}

}  // namespace ptwalk

#endif  // PTWALK_ANGLES_HPP
