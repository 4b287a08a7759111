#pragma once

#include "contrakernel/quadrature.hpp"

// Truncated Bergman reproducing kernels and projection operators for the
// vector parts of monogenic functions and for the contragenic functions,
// through both the kernel-series and the coefficient-expansion paths, plus
// the composite projectors P = B_M + B_N and Q = I - P.

namespace contrakernel {

using A2Function = std::function<Vec2(const Point3&)>;

struct KernelTruncation {
  Domain domain = Domain::interior;
  int degrees = 0;  // degree list {0..N} interior, {-2..-2-N} exterior

  std::vector<int> degree_list() const;
  // 0-based position of a degree inside the truncation order.
  static int degree_position(int n) { return n >= 0 ? n : -n - 2; }
};

// A truncated orthonormal system of A2-valued functions: the normalized
// vector parts Vec X-hat (zero-vector indices excluded) or the normalized
// vectorial contragenics Z-hat.
class A2System {
 public:
  enum class Kind { vec_monogenic, contragenic };

  static A2System vec_monogenic(const KernelTruncation& trunc);
  static A2System contragenic(const KernelTruncation& trunc);

  size_t size() const { return items_.size(); }
  const BasisIndex& index(size_t k) const { return items_[k]; }
  double inv_norm(size_t k) const { return inv_norm_[k]; }
  int max_abs_degree() const { return max_abs_degree_; }
  Kind kind() const { return kind_; }
  const KernelTruncation& truncation() const { return trunc_; }

  Vec2 value(size_t k, const HarmonicTable& t) const;

 private:
  Kind kind_ = Kind::vec_monogenic;
  KernelTruncation trunc_;
  std::vector<BasisIndex> items_;
  std::vector<double> inv_norm_;
  int max_abs_degree_ = 1;
};

struct KernelMatrix {
  // b[j][k]: e_k coefficient of the kernel component b_{j+1}(x, y).
  double b[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  Vec2 row(int j) const { return {b[j][0], b[j][1]}; }
  Vec2 apply(const Vec2& f) const {
    return {b[0][0] * f.v1 + b[0][1] * f.v2, b[1][0] * f.v1 + b[1][1] * f.v2};
  }
};

void require_in_domain(Domain d, const Point3& p);

KernelMatrix kernel_matrix(const A2System& sys, const Point3& x, const Point3& y);
KernelMatrix kernel_vecM(const KernelTruncation& trunc, const Point3& x, const Point3& y);
KernelMatrix kernel_N(const KernelTruncation& trunc, const Point3& x, const Point3& y);
// The same Vec M kernel assembled from the dual-domain contragenics; the
// interior degree-0 block has no contragenic counterpart and enters in the
// monogenic form.
KernelMatrix kernel_vecM_dual(const KernelTruncation& trunc, const Point3& x, const Point3& y);

// Coefficient-path projection: one quadrature pass per basis element.
struct Projection {
  A2System system;
  std::vector<double> coeffs;

  Vec2 eval(const Point3& x) const;
  // Uses only contributions of the first `degrees`+1 degrees of the list.
  Vec2 eval_truncated(const Point3& x, int degrees) const;
};

Projection project(const A2System& sys, const A2Function& f, const QuadratureRule& rule);
Projection project_vecM(const KernelTruncation& trunc, const A2Function& f,
                        const QuadratureRule& rule);
Projection project_N(const KernelTruncation& trunc, const A2Function& f,
                     const QuadratureRule& rule);

// Direct kernel-integral path, retained for verification.
Vec2 project_kernel(const A2System& sys, const A2Function& f, const QuadratureRule& rule,
                    const Point3& x);

// Composite projector onto the truncated harmonic A2-fields and its
// complement.
struct HarmonicProjector {
  Projection vec_m;
  Projection contragenic;

  Vec2 p(const Point3& x) const { return vec_m.eval(x) + contragenic.eval(x); }
};
HarmonicProjector projector_P(const KernelTruncation& trunc_m, const KernelTruncation& trunc_n,
                              const A2Function& f, const QuadratureRule& rule);
Vec2 projector_Q(const HarmonicProjector& p, const A2Function& f, const Point3& x);

// Error-table machinery for the monogenic exponential targets.
enum class TableMetric {
  pointwise_relative,  // max over the grid of |B[f]-f| / max(|f|, eps)
  sup_ratio            // max |B[f]-f| over the grid / max |f| over the grid
};

struct BergmanTableSpec {
  Domain domain = Domain::interior;
  char op = 'M';  // 'M' reproduction error, 'N' annihilation quotient
  std::vector<int> degree_counts;
  std::vector<double> rhos;
  int grid_theta = 30;
  int grid_phi = 60;
  int radial = 0, polar = 0, azimuthal = 0;  // 0: sized from max degree count
  TableMetric metric = TableMetric::sup_ratio;
};

// Rows follow spec.rhos, columns spec.degree_counts.
std::vector<std::vector<double>> bergman_error_table(const BergmanTableSpec& spec);

// (theta, phi, value) samples of the projected field on one sphere.
struct GridSample {
  double theta, phi, v1, v2;
};
std::vector<GridSample> bergman_grid(const BergmanTableSpec& spec, int degree_count, double rho);

}  // namespace contrakernel
