#pragma once

#include <functional>
#include <vector>

#include "contrakernel/contragenic.hpp"

// Tensor-product integration over B^i and B^e with the Lebesgue volume
// measure, the scalar inner product <f,g> = int f0 g0 + f1 g1 + f2 g2 dV,
// and Gram-matrix assembly as the universal numerical oracle.
//
// Interior radial rule: Gauss-Legendre on [0,1] in rho with the rho^2
// Jacobian folded into the weights.  Exterior: Gauss-Legendre on (0,1] in
// u = 1/rho, so basis integrands become polynomials in u and Gauss-exact.
// Polar: Gauss-Legendre in t = cos(theta).  Azimuthal: uniform midpoint
// rule, exact for trigonometric polynomials of order below the node count.
//
// Node-wise work may be partitioned across workers (capped by the
// CONTRAKERNEL_THREADS environment variable); per-block partial sums are
// combined in a fixed order, so results are bitwise reproducible for any
// worker count.

namespace contrakernel {

// Nodes and weights on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadratureRule {
  struct Node {
    Point3 p;
    double w;
  };

  Domain domain = Domain::interior;
  int radial = 0, polar = 0, azimuthal = 0;
  std::vector<Node> nodes;

  static QuadratureRule build(Domain d, int radial, int polar, int azimuthal);
};

double integrate(const std::function<double(const Point3&)>& f, const QuadratureRule& rule);
double inner(const AFunction& f, const AFunction& g, const QuadratureRule& rule);

// One basis function, optionally conjugated or restricted to its vector
// part, as a Gram-matrix entry.
struct GramEntry {
  BasisIndex index;
  bool conjugated = false;
  bool vec_only = false;
};

struct GramMatrix {
  int size = 0;
  std::vector<double> values;

  double at(int i, int j) const { return values[static_cast<size_t>(i) * size + j]; }
  // max |G_ij| / sqrt(G_ii G_jj) over i != j.
  double max_offdiag_ratio() const;
};

GramMatrix gram(const std::vector<GramEntry>& entries, const QuadratureRule& rule);
GramMatrix gram(const std::vector<BasisIndex>& indices, const QuadratureRule& rule);

double inner_basis(const GramEntry& a, const GramEntry& b, const QuadratureRule& rule);

// Squared quadrature norms of many entries in one sweep over the nodes.
std::vector<double> quadrature_norms(const std::vector<GramEntry>& entries,
                                     const QuadratureRule& rule);

// Rank of a symmetric positive semi-definite matrix by pivoted elimination;
// pivots below rel_tol * max_diagonal count as zero.
int psd_rank(const GramMatrix& g, double rel_tol);

// Fixed-order pairwise summation.
double pairwise_sum(const std::vector<double>& terms);

// Worker count: min(hardware, CONTRAKERNEL_THREADS when set).
int worker_count();

// Runs fn(block) for blocks [0, nblocks) on the worker pool.
void for_blocks(int nblocks, const std::function<void(int)>& fn);

ReducedQuaternion eval_entry(const GramEntry& e, const HarmonicTable& t);

}  // namespace contrakernel
