#pragma once

// Example families of sphere maps shipped with the tool.

#include <cstddef>

#include "crspan/crmap.hpp"
#include "crspan/exact.hpp"

namespace crspan {

/// (z_1, ..., z_n, c z_{n+1}, s z_1 z_{n+1}, ..., s z_{n+1}^2), N = 2n+1.
/// No sphere check; c^2 + s^2 = 1 is the caller's business.
CRMap dt_family(std::size_t n, const GaussianRational& c, const GaussianRational& s);

/// D_t with (cos t, sin t) = circle_point(u). Requires n >= 2.
CRMap builtin_dt(std::size_t n, const Rational& u);

/// H_{s,t}, N = 3n+2:
/// (z_1, ..., z_{n-1}, cos s z_n, z_{n+1},
///  sin s z_1 z_n, ..., sin s z_n^2,
///  sin s cos t z_n z_{n+1},
///  sin s sin t z_1 z_n z_{n+1}, ..., sin s sin t z_n z_{n+1}^2).
CRMap builtin_hst(std::size_t n, const Rational& u_s, const Rational& u_t);

}  // namespace crspan
