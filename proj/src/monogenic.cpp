#include "contrakernel/monogenic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace contrakernel {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

void check_exterior_point(const BasisIndex& idx, const Point3& p) {
  if (idx.n < 0 && p.rho() == 0.0)
    throw std::domain_error(idx.to_string() + ": singular at the origin");
}

}  // namespace

ReducedQuaternion x_value(const HarmonicTable& t, int n, int m, Parity parity) {
  if (m == 0) {
    // The order-(-1) harmonics reduce to order 1 and the alpha coefficient
    // cancels, leaving plain order-1 components.
    return {(n + 1) * t.u(n, 0, Parity::plus), t.u(n, 1, Parity::plus), t.u(n, 1, Parity::minus)};
  }
  const double a = alpha_coeff(n, m);
  const Parity op = opposite(parity);
  const double sc = (n + m + 1) * t.u(n, m, parity);
  const double v1 = 0.5 * (t.u(n, m + 1, parity) - a * t.u(n, m - 1, parity));
  const double v2 = parity_sign(parity) * 0.5 * (t.u(n, m + 1, op) + a * t.u(n, m - 1, op));
  return {sc, v1, v2};
}

ReducedQuaternion y_value(const HarmonicTable& t, Family f, int n, int m, Parity parity) {
  const ReducedQuaternion x = x_value(t, n, m, parity);
  if (f == Family::Y) return x;
  return conj(x) - beta_coeff(n, m) * x;
}

ReducedQuaternion eval_X(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::X) invalid("eval_X requires family X");
  idx.require_valid();
  check_exterior_point(idx, p);
  HarmonicTable table(p, effective_degree(idx.n));
  return x_value(table, idx.n, idx.m, idx.parity);
}

ReducedQuaternion eval_Y(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::Y && idx.family != Family::Ytilde)
    invalid("eval_Y requires family Y or Ytilde");
  idx.require_valid();
  check_exterior_point(idx, p);
  HarmonicTable table(p, effective_degree(idx.n));
  return y_value(table, idx.family, idx.n, idx.m, idx.parity);
}

double norm_X(Domain d, int n, int m) {
  BasisIndex idx{Family::X, d, n, m, m == 0 ? Parity::plus : Parity::minus};
  idx.require_valid();
  const int mu = d == Domain::interior ? n + 1 : -n - 2;
  const double delta = m == 0 ? 1.0 : 0.0;
  return 2.0 * kPi * (n + 1) * (delta + 1.0) * factorial_ratio(mu + m, mu - m) /
         static_cast<double>(2 * n + 3);
}

double norm_vec_X(Domain d, int n, int m) {
  BasisIndex idx{Family::X, d, n, m, m == 0 ? Parity::plus : Parity::minus};
  idx.require_valid();
  const int mu = d == Domain::interior ? n + 1 : -n - 2;
  const double delta = m == 0 ? 1.0 : 0.0;
  const double num = static_cast<double>(n) * n + static_cast<double>(m) * m + n;
  return 2.0 * kPi * num * (delta + 1.0) * factorial_ratio(mu + m, mu - m) /
         (static_cast<double>(2 * n + 3) * (2 * n + 1));
}

double norm_Ytilde(Domain d, int n, int m) {
  const double b = beta_coeff(n, m);
  return norm_X(d, n, m) * (1.0 - b * b);
}

double mixed_inner_XXbar(Domain d, int n, int m) {
  BasisIndex idx{Family::X, d, n, m, m == 0 ? Parity::plus : Parity::minus};
  idx.require_valid();
  if (d == Domain::interior) {
    // the scalar part vanishes at the top order m = n+1
    const double sc2 = m <= max_order_U(d, n)
                           ? static_cast<double>(n + m + 1) * (n + m + 1) * norm_U(d, n, m)
                           : 0.0;
    return sc2 - norm_vec_X(d, n, m);
  }
  const double delta = m == 0 ? 1.0 : 0.0;
  return 2.0 * kPi * (n - 2.0 * m * m + 1) * (1.0 + delta) *
         factorial_ratio(-(n - m + 2), -(n + m + 2)) /
         (static_cast<double>(2 * n + 3) * (2 * n + 1));
}

Quaternion dbar_fd(const AFunction& f, const Point3& p, double h) {
  const double inv = 1.0 / (2.0 * h);
  auto diff = [&](const Point3& dp) {
    return (f(p + dp) - f(p - dp)) * inv;
  };
  const ReducedQuaternion d0 = diff({h, 0, 0});
  const ReducedQuaternion d1 = diff({0, h, 0});
  const ReducedQuaternion d2 = diff({0, 0, h});
  Quaternion out = embed(d0);
  const Quaternion t1 = quat_mul({0, 1, 0, 0}, embed(d1));
  const Quaternion t2 = quat_mul({0, 0, 1, 0}, embed(d2));
  out.a0 += t1.a0 + t2.a0;
  out.a1 += t1.a1 + t2.a1;
  out.a2 += t1.a2 + t2.a2;
  out.a3 += t1.a3 + t2.a3;
  return out;
}

Quaternion d_fd(const AFunction& f, const Point3& p, double h) {
  const double inv = 1.0 / (2.0 * h);
  auto diff = [&](const Point3& dp) {
    return (f(p + dp) - f(p - dp)) * inv;
  };
  const ReducedQuaternion d0 = diff({h, 0, 0});
  const ReducedQuaternion d1 = diff({0, h, 0});
  const ReducedQuaternion d2 = diff({0, 0, h});
  Quaternion out = embed(d0);
  const Quaternion t1 = quat_mul({0, 1, 0, 0}, embed(d1));
  const Quaternion t2 = quat_mul({0, 0, 1, 0}, embed(d2));
  out.a0 -= t1.a0 + t2.a0;
  out.a1 -= t1.a1 + t2.a1;
  out.a2 -= t1.a2 + t2.a2;
  out.a3 -= t1.a3 + t2.a3;
  return out;
}

ReducedQuaternion appell_residual(int n, int m, Parity parity, const Point3& p, double h) {
  const bool interior_ok = n >= 1 && m >= 0 && m <= n;
  const bool exterior_ok = n <= -3 && m >= 0 && m <= max_order_X(Domain::exterior, n);
  if (!interior_ok && !exterior_ok)
    invalid("appell_residual: index outside n >= 1 with m <= n, or n <= -3");
  if (m == 0 && parity == Parity::minus) invalid("appell_residual: (m=0, minus) excluded");
  const BasisIndex xi{Family::X, domain_of_degree(n), n, m, parity};
  const BasisIndex xl{Family::X, domain_of_degree(n - 1), n - 1, m, parity};
  const AFunction f = [&](const Point3& q) { return eval_X(xi, q); };
  const Quaternion d = d_fd(f, p, h);
  const ReducedQuaternion target = 2.0 * (n + m + 1) * eval_X(xl, p);
  return {d.a0 - target.a0, d.a1 - target.a1, d.a2 - target.a2};
}

ReducedQuaternion exp_monogenic(const Point3& p) {
  const double r2 = std::numbers::sqrt2;
  const double e0 = std::exp(p.x0);
  const double c1 = std::cos(p.x1 / r2);
  const double s1 = std::sin(p.x1 / r2);
  const double c2 = std::cos(p.x2 / r2);
  const double s2 = std::sin(p.x2 / r2);
  return {e0 * c1 * c2, e0 * s1 * c2 / r2, e0 * c1 * s2 / r2};
}

ReducedQuaternion exp_monogenic_star(const Point3& p) {
  return exp_monogenic({-p.x0, p.x1, p.x2});
}

}  // namespace contrakernel
