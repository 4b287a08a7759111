#include "contrakernel/contragenic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace contrakernel {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

// Coefficient of the order-(m-1) harmonics in the contragenic definition.
// The symmetric form (m-n-1)(m-n) matches both the explicit low-degree
// exterior functions and the duality relation.
double z_coeff(int n, int m) { return static_cast<double>(m - n - 1) * (m - n); }

}  // namespace

bool is_scalar_Z(Domain d, int n, int m) { return d == Domain::exterior && m == -n + 1; }

ReducedQuaternion z_value(const HarmonicTable& t, Domain d, int n, int m, Parity parity) {
  if (is_scalar_Z(d, n, m)) return {t.u(n, -n - 1, parity), 0.0, 0.0};
  if (m == 0) return {0.0, t.u(n, 1, Parity::minus), -t.u(n, 1, Parity::plus)};
  const double a = z_coeff(n, m);
  const Parity op = opposite(parity);
  const double v1 = t.u(n, m + 1, op) + a * t.u(n, m - 1, op);
  const double v2 = -parity_sign(parity) * (t.u(n, m + 1, parity) - a * t.u(n, m - 1, parity));
  return {0.0, v1, v2};
}

ReducedQuaternion eval_Z(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::Z) invalid("eval_Z requires family Z");
  idx.require_valid();
  if (idx.n < 0 && p.rho() == 0.0)
    throw std::domain_error(idx.to_string() + ": singular at the origin");
  HarmonicTable table(p, effective_degree(idx.n));
  return z_value(table, idx.domain, idx.n, idx.m, idx.parity);
}

double norm_Z(Domain d, int n, int m) {
  BasisIndex idx{Family::Z, d, n, m, m == 0 ? Parity::plus : Parity::minus};
  idx.require_valid();
  if (is_scalar_Z(d, n, m))
    return 2.0 * kPi * factorial(-2 * n - 2) /
           (static_cast<double>(2 * n + 3) * (2 * n + 1));
  const int kappa = d == Domain::interior ? n - 1 : -n;
  // At m = 0 the general two-term formula degenerates to twice the defined
  // function, so the printed closed form carries an extra factor 4.
  const double weight = m == 0 ? 0.5 : 1.0;
  const double num = static_cast<double>(n) * n + static_cast<double>(m) * m + n;
  return 8.0 * kPi * num * weight * factorial_ratio(kappa + m, kappa - m) /
         (static_cast<double>(2 * n + 3) * (2 * n + 1));
}

Vec2 duality_residual(int n, int m, Parity parity, const Point3& p) {
  const Domain zd = domain_of_degree(n);
  if (n == 0) invalid("duality_residual: contragenic degree 0 does not exist");
  if (is_scalar_Z(zd, n, m)) invalid("duality_residual: scalar contragenics excluded");
  const BasisIndex zi{Family::Z, zd, n, m, parity};
  zi.require_valid();
  const BasisIndex xi{Family::X, domain_of_degree(-n - 1), -n - 1, m, parity};
  xi.require_valid();
  const double rho = p.rho();
  if (rho == 0.0) throw std::domain_error("duality_residual: rho = 0");
  const double c = m == 0 ? 1.0 : 2.0;
  const double scale = parity_sign(parity) * c * std::pow(rho, 2 * n + 1);
  const Vec2 lhs = vec(eval_Z(zi, p));
  const Vec2 rhs = scale * perp(vec(eval_X(xi, p)));
  return lhs - rhs;
}

Vec2 eval_vec_X_normalized(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::X) invalid("eval_vec_X_normalized requires family X");
  idx.require_valid();
  const double n2 = norm_vec_X(idx.domain, idx.n, idx.m);
  if (n2 <= 0.0) invalid(idx.to_string() + ": vector part has zero norm");
  return vec(eval_X(idx, p)) * (1.0 / std::sqrt(n2));
}

ReducedQuaternion eval_Z_normalized(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::Z) invalid("eval_Z_normalized requires family Z");
  idx.require_valid();
  const double n2 = norm_Z(idx.domain, idx.n, idx.m);
  if (n2 <= 0.0) invalid(idx.to_string() + ": zero norm");
  return eval_Z(idx, p) * (1.0 / std::sqrt(n2));
}

}  // namespace contrakernel
