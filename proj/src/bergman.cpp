#include "contrakernel/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "contrakernel/monogenic.hpp"

namespace contrakernel {

namespace {

constexpr int kBlock = 512;

int degree_from_position(Domain d, int pos) { return d == Domain::interior ? pos : -2 - pos; }

Vec2 raw_vec_value(A2System::Kind kind, const BasisIndex& idx, const HarmonicTable& t) {
  if (kind == A2System::Kind::vec_monogenic)
    return vec(x_value(t, idx.n, idx.m, idx.parity));
  return vec(z_value(t, idx.domain, idx.n, idx.m, idx.parity));
}

}  // namespace

std::vector<int> KernelTruncation::degree_list() const {
  std::vector<int> out;
  out.reserve(degrees + 1);
  for (int k = 0; k <= degrees; ++k) out.push_back(degree_from_position(domain, k));
  return out;
}

void require_in_domain(Domain d, const Point3& p) {
  const double r = p.rho();
  const bool inside = d == Domain::interior ? r < 1.0 : r > 1.0;
  if (!inside) throw std::domain_error("point outside " + to_string(d) + " domain");
}

A2System A2System::vec_monogenic(const KernelTruncation& trunc) {
  A2System sys;
  sys.kind_ = Kind::vec_monogenic;
  sys.trunc_ = trunc;
  for (int n : trunc.degree_list()) {
    for (auto [m, par] : index_range(Family::X, trunc.domain, n)) {
      const double n2 = norm_vec_X(trunc.domain, n, m);
      if (n2 <= 0.0) continue;  // vanishing vector parts stay out
      sys.items_.push_back({Family::X, trunc.domain, n, m, par});
      sys.inv_norm_.push_back(1.0 / std::sqrt(n2));
    }
  }
  for (const auto& i : sys.items_)
    sys.max_abs_degree_ = std::max(sys.max_abs_degree_, effective_degree(i.n) + 1);
  return sys;
}

A2System A2System::contragenic(const KernelTruncation& trunc) {
  A2System sys;
  sys.kind_ = Kind::contragenic;
  sys.trunc_ = trunc;
  for (int n : trunc.degree_list()) {
    if (n == 0) continue;  // no degree-0 contragenics
    for (auto [m, par] : index_range(Family::Z, trunc.domain, n)) {
      if (is_scalar_Z(trunc.domain, n, m)) continue;  // zero vector part
      sys.items_.push_back({Family::Z, trunc.domain, n, m, par});
      sys.inv_norm_.push_back(1.0 / std::sqrt(norm_Z(trunc.domain, n, m)));
    }
  }
  for (const auto& i : sys.items_)
    sys.max_abs_degree_ = std::max(sys.max_abs_degree_, effective_degree(i.n) + 1);
  return sys;
}

Vec2 A2System::value(size_t k, const HarmonicTable& t) const {
  return raw_vec_value(kind_, items_[k], t) * inv_norm_[k];
}

KernelMatrix kernel_matrix(const A2System& sys, const Point3& x, const Point3& y) {
  require_in_domain(sys.truncation().domain, x);
  require_in_domain(sys.truncation().domain, y);
  const HarmonicTable tx(x, sys.max_abs_degree());
  const HarmonicTable ty(y, sys.max_abs_degree());
  KernelMatrix out;
  for (size_t k = 0; k < sys.size(); ++k) {
    const Vec2 vx = sys.value(k, tx);
    const Vec2 vy = sys.value(k, ty);
    out.b[0][0] += vx.v1 * vy.v1;
    out.b[0][1] += vx.v1 * vy.v2;
    out.b[1][0] += vx.v2 * vy.v1;
    out.b[1][1] += vx.v2 * vy.v2;
  }
  return out;
}

KernelMatrix kernel_vecM(const KernelTruncation& trunc, const Point3& x, const Point3& y) {
  return kernel_matrix(A2System::vec_monogenic(trunc), x, y);
}

KernelMatrix kernel_N(const KernelTruncation& trunc, const Point3& x, const Point3& y) {
  return kernel_matrix(A2System::contragenic(trunc), x, y);
}

KernelMatrix kernel_vecM_dual(const KernelTruncation& trunc, const Point3& x, const Point3& y) {
  require_in_domain(trunc.domain, x);
  require_in_domain(trunc.domain, y);
  KernelMatrix out;
  const double rx = x.rho();
  const double ry = y.rho();
  const Domain dual = trunc.domain == Domain::interior ? Domain::exterior : Domain::interior;
  const double eps[2] = {1.0, -1.0};

  int max_dual_degree = 1;
  for (int n : trunc.degree_list())
    if (n != 0) max_dual_degree = std::max(max_dual_degree, effective_degree(-n - 1) + 1);
  const HarmonicTable tx(x, max_dual_degree);
  const HarmonicTable ty(y, max_dual_degree);

  for (int n : trunc.degree_list()) {
    if (n == 0) {
      // Degree 0 has no contragenic counterpart; keep its monogenic form.
      KernelTruncation t0{trunc.domain, 0};
      const KernelMatrix block = kernel_matrix(A2System::vec_monogenic(t0), x, y);
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out.b[j][k] += block.b[j][k];
      continue;
    }
    const int nd = -n - 1;  // dual contragenic degree
    const double ratio = static_cast<double>(2 * n + 3) / (2 * n - 1);
    const double radial = std::pow(rx * ry, 2 * n + 1);
    for (auto [m, par] : index_range(Family::Z, dual, nd)) {
      if (is_scalar_Z(dual, nd, m)) continue;
      const double inv2 = 1.0 / norm_Z(dual, nd, m);
      const Vec2 zx = vec(z_value(tx, dual, nd, m, par));
      const Vec2 zy = vec(z_value(ty, dual, nd, m, par));
      const double c = ratio * radial * inv2;
      // components swap under the quarter-turn pairing
      const double comp_x[2] = {zx.v2, zx.v1};
      const double comp_y[2] = {zy.v2, zy.v1};
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          out.b[j][k] += c * eps[j] * eps[k] * comp_x[j] * comp_y[k];
    }
  }
  return out;
}

Projection project(const A2System& sys, const A2Function& f, const QuadratureRule& rule) {
  if (rule.domain != sys.truncation().domain)
    throw std::invalid_argument("project: rule and truncation domains differ");
  const size_t nn = rule.nodes.size();
  const size_t k = sys.size();
  const int nblocks = static_cast<int>((nn + kBlock - 1) / kBlock);
  std::vector<std::vector<double>> partial(nblocks);
  for_blocks(nblocks, [&](int b) {
    std::vector<double> acc(k, 0.0);
    const size_t lo = static_cast<size_t>(b) * kBlock;
    const size_t hi = std::min(nn, lo + kBlock);
    for (size_t i = lo; i < hi; ++i) {
      const HarmonicTable table(rule.nodes[i].p, sys.max_abs_degree());
      const Vec2 fv = f(rule.nodes[i].p);
      const double w = rule.nodes[i].w;
      for (size_t a = 0; a < k; ++a) {
        const Vec2 psi = sys.value(a, table);
        acc[a] += w * (psi.v1 * fv.v1 + psi.v2 * fv.v2);
      }
    }
    partial[b] = std::move(acc);
  });
  Projection out{sys, std::vector<double>(k, 0.0)};
  std::vector<double> terms(nblocks);
  for (size_t a = 0; a < k; ++a) {
    for (int b = 0; b < nblocks; ++b) terms[static_cast<size_t>(b)] = partial[b][a];
    out.coeffs[a] = pairwise_sum(terms);
  }
  return out;
}

Projection project_vecM(const KernelTruncation& trunc, const A2Function& f,
                        const QuadratureRule& rule) {
  return project(A2System::vec_monogenic(trunc), f, rule);
}

Projection project_N(const KernelTruncation& trunc, const A2Function& f,
                     const QuadratureRule& rule) {
  return project(A2System::contragenic(trunc), f, rule);
}

Vec2 Projection::eval(const Point3& x) const {
  return eval_truncated(x, system.truncation().degrees);
}

Vec2 Projection::eval_truncated(const Point3& x, int degrees) const {
  // a finite basis combination extends to the closed domain, which the
  // boundary-sphere sample grids rely on
  const double r = x.rho();
  const bool ok = system.truncation().domain == Domain::interior ? r <= 1.0 : r >= 1.0;
  if (!ok) throw std::domain_error("point outside the closed domain");
  const HarmonicTable table(x, system.max_abs_degree());
  Vec2 out;
  for (size_t a = 0; a < system.size(); ++a) {
    if (KernelTruncation::degree_position(system.index(a).n) > degrees) continue;
    out = out + system.value(a, table) * coeffs[a];
  }
  return out;
}

Vec2 project_kernel(const A2System& sys, const A2Function& f, const QuadratureRule& rule,
                    const Point3& x) {
  require_in_domain(sys.truncation().domain, x);
  const HarmonicTable tx(x, sys.max_abs_degree());
  std::vector<Vec2> at_x(sys.size());
  for (size_t a = 0; a < sys.size(); ++a) at_x[a] = sys.value(a, tx);

  const size_t nn = rule.nodes.size();
  const int nblocks = static_cast<int>((nn + kBlock - 1) / kBlock);
  std::vector<Vec2> partial(nblocks);
  for_blocks(nblocks, [&](int b) {
    Vec2 acc;
    const size_t lo = static_cast<size_t>(b) * kBlock;
    const size_t hi = std::min(nn, lo + kBlock);
    for (size_t i = lo; i < hi; ++i) {
      const HarmonicTable ty(rule.nodes[i].p, sys.max_abs_degree());
      const Vec2 fv = f(rule.nodes[i].p);
      const double w = rule.nodes[i].w;
      for (size_t a = 0; a < sys.size(); ++a) {
        const Vec2 psi = sys.value(a, ty);
        const double dot = psi.v1 * fv.v1 + psi.v2 * fv.v2;
        acc = acc + at_x[a] * (w * dot);
      }
    }
    partial[b] = acc;
  });
  Vec2 out;
  for (const Vec2& v : partial) out = out + v;
  return out;
}

HarmonicProjector projector_P(const KernelTruncation& trunc_m, const KernelTruncation& trunc_n,
                              const A2Function& f, const QuadratureRule& rule) {
  if (trunc_m.domain != trunc_n.domain)
    throw std::invalid_argument("projector_P: mismatched domains");
  return {project_vecM(trunc_m, f, rule), project_N(trunc_n, f, rule)};
}

Vec2 projector_Q(const HarmonicProjector& p, const A2Function& f, const Point3& x) {
  return f(x) - p.p(x);
}

namespace {

A2Function exp_target(Domain d) {
  if (d == Domain::interior)
    return [](const Point3& p) { return vec(exp_monogenic(p)); };
  return [](const Point3& p) { return vec(exp_monogenic_star(p)); };
}

struct TableContext {
  Projection projection;
  A2Function target;
};

TableContext table_context(const BergmanTableSpec& spec) {
  const int max_count = *std::max_element(spec.degree_counts.begin(), spec.degree_counts.end());
  const KernelTruncation trunc{spec.domain, max_count};
  const int far_degree = spec.domain == Domain::interior ? max_count : max_count + 2;
  const int radial = spec.radial > 0 ? spec.radial : far_degree + 6;
  const int polar = spec.polar > 0 ? spec.polar : far_degree + 6;
  const int azimuthal = spec.azimuthal > 0 ? spec.azimuthal : 4 * far_degree + 8;
  const QuadratureRule rule = QuadratureRule::build(spec.domain, radial, polar, azimuthal);
  const A2Function f = exp_target(spec.domain);
  const A2System sys = spec.op == 'M' ? A2System::vec_monogenic(trunc)
                                      : A2System::contragenic(trunc);
  return {project(sys, f, rule), f};
}

}  // namespace

std::vector<std::vector<double>> bergman_error_table(const BergmanTableSpec& spec) {
  if (spec.op != 'M' && spec.op != 'N') throw std::invalid_argument("table: operator must be M or N");
  for (double rho : spec.rhos) {
    const bool inside = spec.domain == Domain::interior ? rho < 1.0 && rho > 0.0 : rho > 1.0;
    if (!inside) throw std::domain_error("table: rho outside the domain");
  }
  const TableContext ctx = table_context(spec);

  std::vector<std::vector<double>> table;
  for (double rho : spec.rhos) {
    std::vector<double> row;
    for (int count : spec.degree_counts) {
      double worst = 0.0;
      double sup_dev = 0.0, sup_ref = 0.0;
      for (int i = 0; i < spec.grid_theta; ++i) {
        const double theta = (i + 0.5) * std::numbers::pi / spec.grid_theta;
        for (int j = 0; j < spec.grid_phi; ++j) {
          const double phi = (j + 0.5) * 2.0 * std::numbers::pi / spec.grid_phi;
          const Point3 p = Point3::from_spherical(rho, theta, phi);
          const Vec2 approx = ctx.projection.eval_truncated(p, count);
          const Vec2 exact = ctx.target(p);
          if (spec.op == 'M') {
            const double dev = (approx - exact).norm();
            sup_dev = std::max(sup_dev, dev);
            sup_ref = std::max(sup_ref, exact.norm());
            worst = std::max(worst, dev / std::max(exact.norm(), 1e-300));
          } else {
            const double dev = std::abs(approx.v1);
            sup_dev = std::max(sup_dev, dev);
            sup_ref = std::max(sup_ref, std::abs(exact.v1));
            worst = std::max(worst, dev / std::max(std::abs(exact.v1), 1e-300));
          }
        }
      }
      if (spec.metric == TableMetric::sup_ratio)
        row.push_back(sup_ref > 0.0 ? sup_dev / sup_ref : sup_dev);
      else
        row.push_back(worst);
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<GridSample> bergman_grid(const BergmanTableSpec& spec, int degree_count, double rho) {
  BergmanTableSpec one = spec;
  one.degree_counts = {degree_count};
  const TableContext ctx = table_context(one);
  std::vector<GridSample> out;
  out.reserve(static_cast<size_t>(spec.grid_theta) * spec.grid_phi);
  for (int i = 0; i < spec.grid_theta; ++i) {
    const double theta = (i + 0.5) * std::numbers::pi / spec.grid_theta;
    for (int j = 0; j < spec.grid_phi; ++j) {
      const double phi = (j + 0.5) * 2.0 * std::numbers::pi / spec.grid_phi;
      const Point3 p = Point3::from_spherical(rho, theta, phi);
      const Vec2 v = ctx.projection.eval_truncated(p, degree_count);
      out.push_back({theta, phi, v.v1, v.v2});
    }
  }
  return out;
}

}  // namespace contrakernel
