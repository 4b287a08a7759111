#pragma once

// Test-only oracles, independent of the library's evaluation paths:
// Rodrigues-form Legendre values via explicit polynomial coefficients,
// finite-difference Laplacians, and seeded random points.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "contrakernel/harmonics.hpp"
#include "contrakernel/monogenic.hpp"

namespace oracles {

using contrakernel::Point3;

// Coefficients of the Legendre polynomial P_nu, highest power first absent:
// c[k] multiplies t^k.
inline std::vector<double> legendre_poly_coeffs(int nu) {
  // P_nu(t) = 2^-nu sum_k (-1)^k C(nu,k) C(2nu-2k,nu) t^(nu-2k)
  std::vector<double> c(nu + 1, 0.0);
  auto binom = [](int a, int b) {
    double out = 1.0;
    for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
    return out;
  };
  for (int k = 0; 2 * k <= nu; ++k) {
    const double val = std::pow(-1.0, k) * binom(nu, k) * binom(2 * nu - 2 * k, nu) /
                       std::pow(2.0, nu);
    c[nu - 2 * k] = val;
  }
  return c;
}

// P_nu^m(t) = (1-t^2)^{m/2} d^m/dt^m P_nu(t), no Condon-Shortley phase.
inline double legendre_rodrigues(int nu, int m, double t) {
  if (m > nu) return 0.0;
  std::vector<double> c = legendre_poly_coeffs(nu);
  for (int d = 0; d < m; ++d) {
    for (size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * static_cast<double>(k);
    c.pop_back();
  }
  double val = 0.0;
  for (size_t k = c.size(); k-- > 0;) val = val * t + c[k];
  return std::pow(1.0 - t * t, m / 2.0) * val;
}

// Central-difference Laplacian of a scalar function.
template <typename F>
double laplacian_fd(const F& f, const Point3& p, double h) {
  const double c = f(p);
  double out = 0.0;
  const Point3 steps[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
  for (const auto& dp : steps) out += f(p + dp) + f(p - dp) - 2.0 * c;
  return out / (h * h);
}

class RandomPoints {
 public:
  explicit RandomPoints(unsigned seed) : rng_(seed) {}

  Point3 interior(double rho_min = 0.15, double rho_max = 0.85) {
    return at_radius(rho_min + (rho_max - rho_min) * u01_(rng_));
  }
  Point3 exterior(double rho_min = 1.15, double rho_max = 2.5) {
    return at_radius(rho_min + (rho_max - rho_min) * u01_(rng_));
  }
  Point3 in(contrakernel::Domain d) {
    return d == contrakernel::Domain::interior ? interior() : exterior();
  }
  Point3 at_radius(double rho) {
    const double ct = 2.0 * u01_(rng_) - 1.0;
    const double phi = 2.0 * std::numbers::pi * u01_(rng_);
    return Point3::from_spherical(rho, std::acos(ct), phi);
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> u01_{0.0, 1.0};
};

// Richardson-extrapolated Cauchy-Riemann residual.
inline contrakernel::Quaternion dbar_richardson(const contrakernel::AFunction& f, const Point3& p,
                                                double h) {
  const auto a = contrakernel::dbar_fd(f, p, h);
  const auto b = contrakernel::dbar_fd(f, p, h / 2.0);
  return {(4.0 * b.a0 - a.a0) / 3.0, (4.0 * b.a1 - a.a1) / 3.0, (4.0 * b.a2 - a.a2) / 3.0,
          (4.0 * b.a3 - a.a3) / 3.0};
}

}  // namespace oracles
