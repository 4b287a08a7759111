#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contrakernel/algebra.hpp"
#include "contrakernel/legendre.hpp"

// Solid spherical harmonics U_{n,m}^{+-} on the interior and exterior of the
// unit ball, index-set logic shared by every basis family, closed-form norms
// and the degree identity U_{n,m} = |x|^{2n+1} U_{-n-1,m}.

namespace contrakernel {

enum class Domain { interior, exterior };
enum class Parity { plus, minus };
enum class Family { U, X, Y, Ytilde, Z };

inline Parity opposite(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }
inline double parity_sign(Parity p) { return p == Parity::plus ? 1.0 : -1.0; }

std::string to_string(Domain d);
std::string to_string(Parity p);
std::string to_string(Family f);

// J^sigma membership: interior degrees n >= 0, exterior degrees n <= -2.
inline bool degree_in_domain(Domain d, int n) {
  return d == Domain::interior ? n >= 0 : n <= -2;
}
inline Domain domain_of_degree(int n) { return n >= 0 ? Domain::interior : Domain::exterior; }

// Largest admissible order per family and degree (inclusive).
int max_order_U(Domain d, int n);  // n (interior), -n-1 (exterior)
int max_order_X(Domain d, int n);  // order set of degree n+1 harmonics
int max_order_Z(Domain d, int n);  // vectorial m <= n-1 / -n; exterior adds scalar m = -n+1

struct Point3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  double rho() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2); }
  double theta() const;  // in [0, pi]
  double phi() const;    // in [0, 2*pi)

  static Point3 from_spherical(double rho, double theta, double phi) {
    const double s = std::sin(theta);
    return {rho * std::cos(theta), rho * s * std::cos(phi), rho * s * std::sin(phi)};
  }

  Point3 operator+(const Point3& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  Point3 operator-(const Point3& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
};

struct BasisIndex {
  Family family = Family::U;
  Domain domain = Domain::interior;
  int n = 0;
  int m = 0;
  Parity parity = Parity::plus;

  bool valid() const;
  // Throws std::invalid_argument with a description when invalid.
  void require_valid() const;
  std::string to_string() const;
};

// Exact enumeration of (m, parity) pairs of one family at one degree.
// Ytilde omits the identically vanishing combinations.  Throws when n is
// outside J^sigma (or n == 0 for Z).
std::vector<std::pair<int, Parity>> index_range(Family f, Domain d, int n);

// All valid indices of a family with |n| <= max_abs_degree.
std::vector<BasisIndex> enumerate_family(Family f, Domain d, int max_abs_degree);

// Point-local tables: Legendre values, azimuthal trig values and signed
// powers of rho, enough to read off any basis function of |degree| <=
// max_abs_degree.  Construction costs O(max_abs_degree^2); each value read
// afterwards is O(1).
class HarmonicTable {
 public:
  HarmonicTable(const Point3& p, int max_abs_degree);

  // Raw value of U_{n,m}^{parity}; zero when m exceeds the effective degree
  // and for the identically vanishing (m = 0, minus) combination.
  double u(int n, int m, Parity parity) const;

  double rho() const { return rho_; }
  double rho_power(int n) const;
  const Point3& point() const { return point_; }

 private:
  Point3 point_;
  double rho_;
  LegendreTable legendre_;
  std::vector<double> cosm_, sinm_;
  std::vector<double> rho_pow_;  // exponents -(L+1) .. L+1
  int max_degree_;
};

// U_{n,m}^{parity}(p).  Validates the index; additionally accepts the
// non-square-integrable evaluation-only degree n = -1 (m = 0, parity +),
// whose derivatives feed the exterior monogenics.
double eval_U(const BasisIndex& idx, const Point3& p);

// U_{n,m}^{parity}(p) - rho^{2n+1} U_{-n-1,m}^{parity}(p) for n >= 1.
double kelvin_residual(int n, int m, Parity parity, const Point3& p);

// Closed-form squared L2 norms over B^sigma (Lebesgue volume measure).
double norm_U(Domain d, int n, int m);
double norm_U(const BasisIndex& idx);

// a!/b! for non-negative integers.
double factorial_ratio(int a, int b);
double factorial(int k);

}  // namespace contrakernel
