#include "contrakernel/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace contrakernel {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

std::string to_string(Domain d) { return d == Domain::interior ? "interior" : "exterior"; }
std::string to_string(Parity p) { return p == Parity::plus ? "+" : "-"; }
std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::Ytilde: return "Yt";
    case Family::Z: return "Z";
  }
  return "?";
}

int max_order_U(Domain d, int n) { return d == Domain::interior ? n : -n - 1; }
int max_order_X(Domain d, int n) { return d == Domain::interior ? n + 1 : -n - 2; }
int max_order_Z(Domain d, int n) { return d == Domain::interior ? n - 1 : -n + 1; }

double Point3::theta() const {
  const double r = rho();
  if (r == 0.0) return 0.0;
  return std::acos(std::clamp(x0 / r, -1.0, 1.0));
}

double Point3::phi() const {
  const double a = std::atan2(x2, x1);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

bool BasisIndex::valid() const {
  if (m < 0) return false;
  if (m == 0 && parity == Parity::minus) return false;
  if (!degree_in_domain(domain, n)) return false;
  if (effective_degree(n) > kMaxDegree) return false;
  switch (family) {
    case Family::U:
      return m <= max_order_U(domain, n);
    case Family::X:
    case Family::Y:
    case Family::Ytilde:
      return m <= max_order_X(domain, n);
    case Family::Z:
      if (n == 0) return false;
      return m <= max_order_Z(domain, n);
  }
  return false;
}

void BasisIndex::require_valid() const {
  if (!valid()) invalid("invalid basis index " + to_string());
}

std::string BasisIndex::to_string() const {
  return contrakernel::to_string(family) + "(" + contrakernel::to_string(domain) +
         ", n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", " +
         contrakernel::to_string(parity) + ")";
}

std::vector<std::pair<int, Parity>> index_range(Family f, Domain d, int n) {
  if (!degree_in_domain(d, n)) invalid("degree outside J^sigma");
  if (f == Family::Z && n == 0) invalid("contragenic degree 0 does not exist");
  int mmax = 0;
  switch (f) {
    case Family::U: mmax = max_order_U(d, n); break;
    case Family::X:
    case Family::Y:
    case Family::Ytilde: mmax = max_order_X(d, n); break;
    case Family::Z: mmax = max_order_Z(d, n); break;
  }
  std::vector<std::pair<int, Parity>> out;
  for (int m = 0; m <= mmax; ++m) {
    if (f == Family::Ytilde) {
      // Ytilde vanishes identically where beta = +-1: interior (0,0) and the
      // monogenic-constant orders m = n+1.
      if (d == Domain::interior && n == 0 && m == 0) continue;
      if (d == Domain::interior && m == n + 1) continue;
    }
    out.emplace_back(m, Parity::plus);
    if (m > 0) out.emplace_back(m, Parity::minus);
  }
  return out;
}

std::vector<BasisIndex> enumerate_family(Family f, Domain d, int max_abs_degree) {
  std::vector<BasisIndex> out;
  const int lo = d == Domain::interior ? (f == Family::Z ? 1 : 0) : -max_abs_degree;
  const int hi = d == Domain::interior ? max_abs_degree : -2;
  for (int n = lo; n <= hi; ++n)
    for (auto [m, par] : index_range(f, d, n)) out.push_back({f, d, n, m, par});
  return out;
}

HarmonicTable::HarmonicTable(const Point3& p, int max_abs_degree)
    : point_(p),
      rho_(p.rho()),
      legendre_(max_abs_degree,
                rho_ > 0.0 ? std::clamp(p.x0 / rho_, -1.0, 1.0) : 1.0,
                rho_ > 0.0 ? std::hypot(p.x1, p.x2) / rho_ : 0.0),
      max_degree_(max_abs_degree) {
  const int L = max_abs_degree;
  cosm_.resize(L + 1);
  sinm_.resize(L + 1);
  const double rxy = std::hypot(p.x1, p.x2);
  const double c = rxy > 0.0 ? p.x1 / rxy : 1.0;
  const double s = rxy > 0.0 ? p.x2 / rxy : 0.0;
  cosm_[0] = 1.0;
  sinm_[0] = 0.0;
  for (int m = 1; m <= L; ++m) {
    cosm_[m] = cosm_[m - 1] * c - sinm_[m - 1] * s;
    sinm_[m] = sinm_[m - 1] * c + cosm_[m - 1] * s;
  }
  rho_pow_.assign(2 * L + 3, 0.0);
  const int off = L + 1;  // exponent k stored at off + k
  rho_pow_[off] = 1.0;
  for (int k = 1; k <= L + 1; ++k) rho_pow_[off + k] = rho_pow_[off + k - 1] * rho_;
  if (rho_ > 0.0) {
    const double inv = 1.0 / rho_;
    for (int k = 1; k <= L + 1; ++k) rho_pow_[off - k] = rho_pow_[off - k + 1] * inv;
  } else {
    for (int k = 1; k <= L + 1; ++k)
      rho_pow_[off - k] = std::numeric_limits<double>::infinity();
  }
}

double HarmonicTable::rho_power(int n) const {
  return rho_pow_[static_cast<size_t>(max_degree_ + 1 + n)];
}

double HarmonicTable::u(int n, int m, Parity parity) const {
  const int nu = effective_degree(n);
  if (m > nu) return 0.0;
  if (m == 0 && parity == Parity::minus) return 0.0;
  const double ph = parity == Parity::plus ? cosm_[m] : sinm_[m];
  return rho_power(n) * legendre_(nu, m) * ph;
}

double eval_U(const BasisIndex& idx, const Point3& p) {
  if (idx.family != Family::U) invalid("eval_U requires family U");
  // 1/rho and its cousins are evaluable although not square integrable.
  const bool eval_only = idx.domain == Domain::exterior && idx.n == -1 &&
                         idx.m == 0 && idx.parity == Parity::plus;
  if (!eval_only) idx.require_valid();
  if (idx.n < 0 && p.rho() == 0.0) throw std::domain_error("eval_U: singular at the origin");
  HarmonicTable table(p, effective_degree(idx.n));
  return table.u(idx.n, idx.m, idx.parity);
}

double kelvin_residual(int n, int m, Parity parity, const Point3& p) {
  if (n < 1) invalid("kelvin_residual requires n >= 1");
  const double rho = p.rho();
  if (rho == 0.0) throw std::domain_error("kelvin_residual: rho = 0");
  BasisIndex in{Family::U, Domain::interior, n, m, parity};
  BasisIndex ex{Family::U, Domain::exterior, -n - 1, m, parity};
  in.require_valid();
  ex.require_valid();
  const double lhs = eval_U(in, p);
  const double rhs = std::pow(rho, 2 * n + 1) * eval_U(ex, p);
  return lhs - rhs;
}

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

double factorial_ratio(int a, int b) {
  if (a < 0 || b < 0) invalid("factorial_ratio: negative argument");
  double out = 1.0;
  if (a >= b)
    for (int k = b + 1; k <= a; ++k) out *= k;
  else
    for (int k = a + 1; k <= b; ++k) out /= k;
  return out;
}

double norm_U(Domain d, int n, int m) {
  BasisIndex idx{Family::U, d, n, m, m == 0 ? Parity::plus : Parity::minus};
  idx.require_valid();
  const int nu = effective_degree(n);
  const double delta = m == 0 ? 1.0 : 0.0;
  return 2.0 * kPi * (1.0 + delta) * factorial_ratio(nu + m, nu - m) /
         (static_cast<double>(2 * n + 3) * (2 * n + 1));
}

double norm_U(const BasisIndex& idx) {
  if (idx.family != Family::U) invalid("norm_U requires family U");
  idx.require_valid();
  return norm_U(idx.domain, idx.n, idx.m);
}

}  // namespace contrakernel
