#pragma once

#include <functional>

#include "contrakernel/harmonics.hpp"

// Basic monogenic functions X_{n,m}^{+-} = d U_{n+1,m}^{+-} in coordinates,
// their norms and vector-part norms, the Appell property, finite-difference
// Cauchy-Riemann operators as verification tools, and the ambigenic basis.

namespace contrakernel {

using AFunction = std::function<ReducedQuaternion(const Point3&)>;

inline double alpha_coeff(int n, int m) {
  return static_cast<double>(n + m) * (n + m + 1);
}
// <X, conj X> / ||X||^2, finite for every admissible ambigenic index.
inline double beta_coeff(int n, int m) {
  return static_cast<double>(n - 2 * m * m + 1) / (static_cast<double>(n + 1) * (2 * n + 1));
}

// Raw coordinate-form evaluation through a shared point table.
ReducedQuaternion x_value(const HarmonicTable& t, int n, int m, Parity parity);
ReducedQuaternion y_value(const HarmonicTable& t, Family f, int n, int m, Parity parity);

ReducedQuaternion eval_X(const BasisIndex& idx, const Point3& p);
// Family Y (= X) and Ytilde (= conj X - beta X).
ReducedQuaternion eval_Y(const BasisIndex& idx, const Point3& p);

// Closed-form squared norms.
double norm_X(Domain d, int n, int m);
double norm_vec_X(Domain d, int n, int m);  // zero exactly when n^2 + m^2 + n = 0
double norm_Ytilde(Domain d, int n, int m);
// <conj X_{n,m}, X_{n,m}>; pairs with different degree or order vanish.
double mixed_inner_XXbar(Domain d, int n, int m);

// Central-difference Cauchy-Riemann operators, quaternion units applied on
// the left; the e3 component is exposed since the algebra is not closed.
Quaternion dbar_fd(const AFunction& f, const Point3& p, double h);
Quaternion d_fd(const AFunction& f, const Point3& p, double h);

// d X_{n,m}^{+-} - 2(n+m+1) X_{n-1,m}^{+-}, with d by central differences.
// Valid for n >= 1 with 0 <= m <= n, and for n <= -3.
ReducedQuaternion appell_residual(int n, int m, Parity parity, const Point3& p, double h = 1e-5);

// Monogenic exponential and its reflection E*(x0,x1,x2) = E(-x0,x1,x2).
ReducedQuaternion exp_monogenic(const Point3& p);
ReducedQuaternion exp_monogenic_star(const Point3& p);

}  // namespace contrakernel
