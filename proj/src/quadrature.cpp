#include "contrakernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace contrakernel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBlock = 512;  // fixed reduction granularity, independent of workers

int max_abs_degree(const std::vector<GramEntry>& entries) {
  int out = 1;
  for (const auto& e : entries) out = std::max(out, effective_degree(e.index.n) + 1);
  return out;
}

}  // namespace

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be >= 1");
  nodes.resize(count);
  weights.resize(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_count.
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < count; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = count * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[count - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[count - 1 - i] = weights[i];
  }
}

QuadratureRule QuadratureRule::build(Domain d, int radial, int polar, int azimuthal) {
  if (radial < 1 || polar < 1) throw std::invalid_argument("quadrature: counts must be >= 1");
  if (azimuthal < 4) throw std::invalid_argument("quadrature: azimuthal count must be >= 4");
  QuadratureRule rule;
  rule.domain = d;
  rule.radial = radial;
  rule.polar = polar;
  rule.azimuthal = azimuthal;

  std::vector<double> rx, rw, tx, tw;
  gauss_legendre(radial, rx, rw);
  gauss_legendre(polar, tx, tw);

  // Radial nodes and weights including the volume Jacobian.
  std::vector<double> rho(radial), rhow(radial);
  for (int i = 0; i < radial; ++i) {
    const double y = 0.5 * (rx[i] + 1.0);  // on (0,1)
    const double wy = 0.5 * rw[i];
    if (d == Domain::interior) {
      rho[i] = y;
      rhow[i] = wy * y * y;
    } else {
      rho[i] = 1.0 / y;  // u = 1/rho, d rho rho^2 = u^-4 du
      rhow[i] = wy / (y * y * y * y);
    }
  }

  rule.nodes.reserve(static_cast<size_t>(radial) * polar * azimuthal);
  const double wphi = 2.0 * kPi / azimuthal;
  for (int i = 0; i < radial; ++i)
    for (int j = 0; j < polar; ++j) {
      const double t = tx[j];
      const double s = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
      for (int k = 0; k < azimuthal; ++k) {
        const double phi = wphi * (k + 0.5);
        Point3 p{rho[i] * t, rho[i] * s * std::cos(phi), rho[i] * s * std::sin(phi)};
        rule.nodes.push_back({p, rhow[i] * tw[j] * wphi});
      }
    }
  return rule;
}

double pairwise_sum(const std::vector<double>& terms) {
  std::vector<double> acc(terms);
  size_t n = acc.size();
  if (n == 0) return 0.0;
  while (n > 1) {
    const size_t half = n / 2;
    for (size_t i = 0; i < half; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
    if (n % 2) {
      acc[half] = acc[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return acc[0];
}

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("CONTRAKERNEL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

void for_blocks(int nblocks, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), nblocks);
  if (workers <= 1) {
    for (int b = 0; b < nblocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int b = w; b < nblocks; b += workers) fn(b);
    });
  for (auto& th : pool) th.join();
}

double integrate(const std::function<double(const Point3&)>& f, const QuadratureRule& rule) {
  const size_t n = rule.nodes.size();
  const int nblocks = static_cast<int>((n + kBlock - 1) / kBlock);
  std::vector<double> partial(nblocks, 0.0);
  for_blocks(nblocks, [&](int b) {
    const size_t lo = static_cast<size_t>(b) * kBlock;
    const size_t hi = std::min(n, lo + kBlock);
    std::vector<double> terms;
    terms.reserve(hi - lo);
    for (size_t i = lo; i < hi; ++i) terms.push_back(rule.nodes[i].w * f(rule.nodes[i].p));
    partial[b] = pairwise_sum(terms);
  });
  return pairwise_sum(partial);
}

double inner(const AFunction& f, const AFunction& g, const QuadratureRule& rule) {
  return integrate(
      [&](const Point3& p) {
        const ReducedQuaternion a = f(p);
        const ReducedQuaternion b = g(p);
        return a.a0 * b.a0 + a.a1 * b.a1 + a.a2 * b.a2;
      },
      rule);
}

ReducedQuaternion eval_entry(const GramEntry& e, const HarmonicTable& t) {
  const BasisIndex& i = e.index;
  ReducedQuaternion q;
  switch (i.family) {
    case Family::U: q = {t.u(i.n, i.m, i.parity), 0.0, 0.0}; break;
    case Family::X: q = x_value(t, i.n, i.m, i.parity); break;
    case Family::Y:
    case Family::Ytilde: q = y_value(t, i.family, i.n, i.m, i.parity); break;
    case Family::Z: q = z_value(t, i.domain, i.n, i.m, i.parity); break;
  }
  if (e.vec_only) q.a0 = 0.0;
  return e.conjugated ? conj(q) : q;
}

std::vector<double> quadrature_norms(const std::vector<GramEntry>& entries,
                                     const QuadratureRule& rule) {
  const int k = static_cast<int>(entries.size());
  const int L = max_abs_degree(entries);
  const size_t nn = rule.nodes.size();
  const int nblocks = static_cast<int>((nn + kBlock - 1) / kBlock);
  std::vector<std::vector<double>> partial(nblocks);
  for_blocks(nblocks, [&](int b) {
    std::vector<double> acc(k, 0.0);
    const size_t lo = static_cast<size_t>(b) * kBlock;
    const size_t hi = std::min(nn, lo + kBlock);
    for (size_t i = lo; i < hi; ++i) {
      const HarmonicTable table(rule.nodes[i].p, L);
      const double w = rule.nodes[i].w;
      for (int a = 0; a < k; ++a) {
        const ReducedQuaternion v = eval_entry(entries[a], table);
        acc[a] += w * (v.a0 * v.a0 + v.a1 * v.a1 + v.a2 * v.a2);
      }
    }
    partial[b] = std::move(acc);
  });
  std::vector<double> out(k, 0.0);
  std::vector<double> terms(nblocks);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < nblocks; ++b) terms[static_cast<size_t>(b)] = partial[b][a];
    out[a] = pairwise_sum(terms);
  }
  return out;
}

GramMatrix gram(const std::vector<GramEntry>& entries, const QuadratureRule& rule) {
  for (const auto& e : entries) {
    e.index.require_valid();
    if ((e.index.n < 0) != (rule.domain == Domain::exterior))
      throw std::invalid_argument("gram: mixed domains");
  }
  const int k = static_cast<int>(entries.size());
  const int L = max_abs_degree(entries);
  const size_t nn = rule.nodes.size();
  const int nblocks = static_cast<int>((nn + kBlock - 1) / kBlock);

  std::vector<std::vector<double>> block_gram(nblocks);
  for_blocks(nblocks, [&](int b) {
    std::vector<double> acc(static_cast<size_t>(k) * k, 0.0);
    std::vector<ReducedQuaternion> vals(k);
    const size_t lo = static_cast<size_t>(b) * kBlock;
    const size_t hi = std::min(nn, lo + kBlock);
    for (size_t i = lo; i < hi; ++i) {
      const HarmonicTable table(rule.nodes[i].p, L);
      const double w = rule.nodes[i].w;
      for (int a = 0; a < k; ++a) vals[a] = eval_entry(entries[a], table);
      for (int a = 0; a < k; ++a)
        for (int c = a; c < k; ++c) {
          const double dot = vals[a].a0 * vals[c].a0 + vals[a].a1 * vals[c].a1 +
                             vals[a].a2 * vals[c].a2;
          acc[static_cast<size_t>(a) * k + c] += w * dot;
        }
    }
    block_gram[b] = std::move(acc);
  });

  GramMatrix out;
  out.size = k;
  out.values.assign(static_cast<size_t>(k) * k, 0.0);
  std::vector<double> terms(nblocks);
  for (int a = 0; a < k; ++a)
    for (int c = a; c < k; ++c) {
      for (int b = 0; b < nblocks; ++b) terms[b] = block_gram[b][static_cast<size_t>(a) * k + c];
      const double v = pairwise_sum(terms);
      out.values[static_cast<size_t>(a) * k + c] = v;
      out.values[static_cast<size_t>(c) * k + a] = v;
    }
  return out;
}

GramMatrix gram(const std::vector<BasisIndex>& indices, const QuadratureRule& rule) {
  std::vector<GramEntry> entries;
  entries.reserve(indices.size());
  for (const auto& i : indices) entries.push_back({i, false});
  return gram(entries, rule);
}

double inner_basis(const GramEntry& a, const GramEntry& b, const QuadratureRule& rule) {
  return gram(std::vector<GramEntry>{a, b}, rule).at(0, 1);
}

double GramMatrix::max_offdiag_ratio() const {
  double worst = 0.0;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      const double denom = std::sqrt(std::abs(at(i, i) * at(j, j)));
      if (denom > 0.0) worst = std::max(worst, std::abs(at(i, j)) / denom);
    }
  return worst;
}

int psd_rank(const GramMatrix& g, double rel_tol) {
  const int k = g.size;
  std::vector<double> a(g.values);
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * k + j]; };
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  double max_diag = 0.0;
  for (int i = 0; i < k; ++i) max_diag = std::max(max_diag, at(i, i));
  const double tol = rel_tol * max_diag;

  int rank = 0;
  for (int step = 0; step < k; ++step) {
    int piv = step;
    for (int i = step + 1; i < k; ++i)
      if (at(i, i) > at(piv, piv)) piv = i;
    if (at(piv, piv) <= tol) break;
    if (piv != step) {
      for (int j = 0; j < k; ++j) std::swap(at(piv, j), at(step, j));
      for (int i = 0; i < k; ++i) std::swap(at(i, piv), at(i, step));
    }
    const double d = at(step, step);
    for (int i = step + 1; i < k; ++i) {
      const double f = at(i, step) / d;
      for (int j = step; j < k; ++j) at(i, j) -= f * at(step, j);
      at(i, step) = 0.0;
    }
    for (int j = step + 1; j < k; ++j) at(step, j) = 0.0;
    ++rank;
  }
  return rank;
}

}  // namespace contrakernel
