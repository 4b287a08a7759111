#pragma once

#include <vector>

// Associated Legendre functions P_n^m(t) in the convention without the
// Condon-Shortley phase: P_n^m(t) = (1-t^2)^{m/2} d^m/dt^m P_n(t).
// Negative degrees reduce through P_{-n}^m = P_{n-1}^m.

namespace contrakernel {

// Factorial-based norm formulas overflow doubles not far beyond this.
inline constexpr int kMaxDegree = 64;

// Effective degree after the negative-degree reduction.
inline constexpr int effective_degree(int n) { return n >= 0 ? n : -n - 1; }

// P_n^m(t) for any integer degree n and order m >= 0; zero when m exceeds
// the effective degree.  Throws std::invalid_argument for m < 0 or degrees
// beyond the supported range, std::domain_error for |t| > 1.
double legendre_p(int n, int m, double t);

// P_n^{-m}(t) = (n-m)!/(n+m)! P_n^m(t) for 0 <= m <= n.
double legendre_p_neg_order(int n, int m, double t);

// All P_nu^m for 0 <= nu <= nmax, 0 <= m <= nu at fixed t = cos(theta),
// s = sin(theta) >= 0.  Evaluation never divides by s, so the poles are
// exact.
class LegendreTable {
 public:
  LegendreTable(int nmax, double t, double s);

  double operator()(int nu, int m) const {
    if (m > nu) return 0.0;
    return p_[static_cast<size_t>(nu) * (nu + 1) / 2 + m];
  }
  int max_degree() const { return nmax_; }

 private:
  int nmax_;
  std::vector<double> p_;
};

}  // namespace contrakernel
