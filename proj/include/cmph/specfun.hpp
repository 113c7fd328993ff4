#pragma once

#include "cmph/quadrature.hpp"

namespace cmph {

// Gamma function for strictly positive real argument (Lanczos approximation,
// relative error well below 1e-13 on the range used here).
double gamma_pos(double x);

// Weber parabolic cylinder function D_nu(z) for nu <= 0, z >= 0, computed
// from the integral representation
//   D_nu(z) = e^{-z^2/4} / Gamma(-nu) * int_0^inf t^{-nu-1} e^{-t^2/2 - z t} dt
// with the nu = 0 limit D_0(z) = e^{-z^2/4} handled analytically. The near
// singular endpoint power t^{-nu-1} is integrated by a series expansion on
// an initial panel, the remainder by adaptive quadrature.
double pcf_D(double nu, double z);

// int_0^inf r^{nu-1} e^{-p r^2 - q r} dr for nu > 0, p > 0, q >= 0,
// evaluated through the Gamma/D_nu closed form
//   (2p)^{-nu/2} Gamma(nu) exp(q^2/(8p)) D_{-nu}(q / sqrt(2p)).
double gaussian_power_integral(double nu, double p, double q);

} // namespace cmph
