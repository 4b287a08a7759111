#include "contrakernel/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace contrakernel {

namespace {

constexpr double kDomainTol = 1e-12;

void check_args(int n, int m, double t) {
  if (m < 0) throw std::invalid_argument("legendre: order m must be non-negative");
  if (effective_degree(n) > kMaxDegree)
    throw std::invalid_argument("legendre: degree out of supported range");
  if (std::abs(t) > 1.0 + kDomainTol) throw std::domain_error("legendre: |t| > 1");
}

}  // namespace

double legendre_p(int n, int m, double t) {
  check_args(n, m, t);
  const int nu = effective_degree(n);
  if (m > nu) return 0.0;
  t = std::clamp(t, -1.0, 1.0);
  const double s = std::sqrt((1.0 - t) * (1.0 + t));

  // P_m^m = (2m-1)!! s^m, then upward recurrence in the degree.
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2 * i - 1) * s;
  if (nu == m) return pmm;
  double pprev = pmm;
  double pcur = (2 * m + 1) * t * pmm;
  for (int k = m + 2; k <= nu; ++k) {
    const double pnext = ((2 * k - 1) * t * pcur - (k + m - 1) * pprev) / (k - m);
    pprev = pcur;
    pcur = pnext;
  }
  return pcur;
}

double legendre_p_neg_order(int n, int m, double t) {
  if (n < 0) throw std::invalid_argument("legendre_p_neg_order: degree must be non-negative");
  if (m < 0 || m > n) throw std::invalid_argument("legendre_p_neg_order: requires 0 <= m <= n");
  double ratio = 1.0;  // (n-m)!/(n+m)!
  for (int k = n - m + 1; k <= n + m; ++k) ratio /= k;
  return ratio * legendre_p(n, m, t);
}

LegendreTable::LegendreTable(int nmax, double t, double s) : nmax_(nmax) {
  if (nmax < 0 || nmax > kMaxDegree + 1)
    throw std::invalid_argument("LegendreTable: degree out of supported range");
  p_.assign(static_cast<size_t>(nmax + 1) * (nmax + 2) / 2, 0.0);
  auto at = [this](int nu, int m) -> double& {
    return p_[static_cast<size_t>(nu) * (nu + 1) / 2 + m];
  };
  at(0, 0) = 1.0;
  double pmm = 1.0;
  for (int m = 1; m <= nmax; ++m) {
    pmm *= (2 * m - 1) * s;
    at(m, m) = pmm;
  }
  for (int m = 0; m < nmax; ++m) {
    at(m + 1, m) = (2 * m + 1) * t * at(m, m);
    for (int nu = m + 2; nu <= nmax; ++nu)
      at(nu, m) = ((2 * nu - 1) * t * at(nu - 1, m) - (nu + m - 1) * at(nu - 2, m)) / (nu - m);
  }
}

}  // namespace contrakernel
