#pragma once

// Library code is SI throughout (metres, radians, newtons). Files and CLI
// flags use millimetres and degrees; convert at that boundary only.

#include <numbers>

namespace foldkit {

inline constexpr double pi = std::numbers::pi;

constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }
constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

}  // namespace foldkit
