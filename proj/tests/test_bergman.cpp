#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "contrakernel/bergman.hpp"
#include "contrakernel/monogenic.hpp"
#include "oracles.hpp"

using namespace contrakernel;

namespace {
constexpr double kPi = std::numbers::pi;

A2Function vec_exp_interior() {
  return [](const Point3& p) { return vec(exp_monogenic(p)); };
}
}  // namespace

TEST_SUITE_BEGIN("bergman");

TEST_CASE("truncation degree lists") {
  CHECK(KernelTruncation{Domain::interior, 3}.degree_list() == std::vector<int>{0, 1, 2, 3});
  CHECK(KernelTruncation{Domain::exterior, 2}.degree_list() == std::vector<int>{-2, -3, -4});
  // every included vector part has positive norm
  const A2System sys = A2System::vec_monogenic({Domain::interior, 2});
  for (size_t k = 0; k < sys.size(); ++k)
    CHECK(norm_vec_X(Domain::interior, sys.index(k).n, sys.index(k).m) > 0.0);
  CHECK(sys.size() == 2 + 5 + 7);  // degree 0 loses its scalar-only element
}

TEST_CASE("kernel symmetry and the degree-0 constant block") {
  oracles::RandomPoints pts(13);
  for (Domain d : {Domain::interior, Domain::exterior}) {
    const KernelTruncation trunc{d, 4};
    const Point3 x = pts.in(d);
    const Point3 y = pts.in(d);
    const KernelMatrix a = kernel_vecM(trunc, x, y);
    const KernelMatrix b = kernel_vecM(trunc, y, x);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(a.b[j][k] == doctest::Approx(b.b[k][j]).epsilon(1e-12));
  }
  // truncation at degree 0 keeps only Vec X of order 1, a constant kernel
  const KernelTruncation t0{Domain::interior, 0};
  const KernelMatrix k0 = kernel_vecM(t0, Point3{0.1, 0.2, 0.1}, Point3{-0.3, 0.1, 0.2});
  CHECK(k0.b[0][0] == doctest::Approx(3.0 / (4.0 * kPi)));
  CHECK(k0.b[1][1] == doctest::Approx(3.0 / (4.0 * kPi)));
  CHECK(k0.b[0][1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(k0.b[1][0] == doctest::Approx(0.0).epsilon(1e-15));

  CHECK_THROWS_AS(kernel_vecM({Domain::interior, 2}, Point3{1.5, 0, 0}, Point3{0.1, 0, 0}),
                  std::domain_error);
  CHECK_THROWS_AS(kernel_N({Domain::exterior, 2}, Point3{0.5, 0, 0}, Point3{1.5, 0, 0}),
                  std::domain_error);
}

TEST_CASE("dual-domain form of the Vec M kernel") {
  oracles::RandomPoints pts(14);
  for (Domain d : {Domain::interior, Domain::exterior}) {
    for (int count = 0; count <= 4; ++count) {
      const KernelTruncation trunc{d, count};
      for (int k = 0; k < 5; ++k) {
        const Point3 x = pts.in(d);
        const Point3 y = pts.in(d);
        const KernelMatrix direct = kernel_vecM(trunc, x, y);
        const KernelMatrix dual = kernel_vecM_dual(trunc, x, y);
        double scale = 1e-300;
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l) scale = std::max(scale, std::abs(direct.b[j][l]));
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l)
            CHECK(std::abs(direct.b[j][l] - dual.b[j][l]) / scale <= 1e-12);
      }
    }
  }
}

TEST_CASE("reproduction and annihilation") {
  oracles::RandomPoints pts(15);
  for (Domain d : {Domain::interior, Domain::exterior}) {
    const KernelTruncation trunc{d, 4};
    const QuadratureRule rule = QuadratureRule::build(d, 16, 16, 64);

    const BasisIndex xi{Family::X, d, d == Domain::interior ? 1 : -3, 1, Parity::plus};
    const A2Function fx = [xi](const Point3& q) { return vec(eval_X(xi, q)); };
    const Projection pm = project_vecM(trunc, fx, rule);
    const Projection pn_x = project_N(trunc, fx, rule);

    const BasisIndex zi{Family::Z, d, d == Domain::interior ? 2 : -2, 1, Parity::plus};
    const A2Function fz = [zi](const Point3& q) { return vec(eval_Z(zi, q)); };
    const Projection pm_z = project_vecM(trunc, fz, rule);
    const Projection pn = project_N(trunc, fz, rule);

    for (int k = 0; k < 5; ++k) {
      const Point3 p = pts.in(d);
      const double sx = std::max(1.0, fx(p).norm());
      const double sz = std::max(1.0, fz(p).norm());
      CHECK((pm.eval(p) - fx(p)).norm() / sx <= 1e-8);   // B_M reproduces Vec X-hat
      CHECK(pm_z.eval(p).norm() / sz <= 1e-8);           // B_M annihilates Z-hat
      CHECK((pn.eval(p) - fz(p)).norm() / sz <= 1e-8);   // B_N reproduces Z-hat
      CHECK(pn_x.eval(p).norm() / sx <= 1e-8);           // B_N annihilates Vec X-hat
    }
  }
}

TEST_CASE("kernel path agrees with the coefficient path") {
  const KernelTruncation trunc{Domain::interior, 4};
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 16, 16, 64);
  const A2Function f = vec_exp_interior();
  const A2System sys = A2System::vec_monogenic(trunc);
  const Projection coeff = project_vecM(trunc, f, rule);
  oracles::RandomPoints pts(16);
  for (int k = 0; k < 10; ++k) {
    const Point3 x = pts.interior();
    const Vec2 via_kernel = project_kernel(sys, f, rule, x);
    const Vec2 via_coeff = coeff.eval(x);
    CHECK((via_kernel - via_coeff).norm() <= 1e-9);
  }
}

TEST_CASE("composite projectors split the harmonic part") {
  const KernelTruncation trunc{Domain::interior, 4};
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 16, 16, 64);
  oracles::RandomPoints pts(17);

  // harmonic basis element inside the truncation is reproduced by P
  const BasisIndex zi{Family::Z, Domain::interior, 3, 1, Parity::minus};
  const A2Function fz = [zi](const Point3& q) { return vec(eval_Z(zi, q)); };
  const HarmonicProjector pz = projector_P(trunc, trunc, fz, rule);
  const BasisIndex xi{Family::X, Domain::interior, 1, 0, Parity::plus};
  const A2Function fx = [xi](const Point3& q) { return vec(eval_X(xi, q)); };
  const HarmonicProjector px = projector_P(trunc, trunc, fx, rule);
  for (int k = 0; k < 5; ++k) {
    const Point3 p = pts.interior();
    CHECK((pz.p(p) - fz(p)).norm() <= 1e-8);
    CHECK(projector_Q(px, fx, p).norm() <= 1e-8);  // harmonic input has no complement
  }

  // P after Q annihilates up to quadrature error
  const A2Function fe = vec_exp_interior();
  const HarmonicProjector pe = projector_P(trunc, trunc, fe, rule);
  const A2Function q_of_fe = [&](const Point3& p) { return projector_Q(pe, fe, p); };
  const HarmonicProjector p_of_q = projector_P(trunc, trunc, q_of_fe, rule);
  for (int k = 0; k < 5; ++k) {
    const Point3 p = pts.interior();
    CHECK(p_of_q.p(p).norm() <= 1e-6);
  }

  CHECK_THROWS_AS(projector_P({Domain::interior, 2}, {Domain::exterior, 2}, fe, rule),
                  std::invalid_argument);
}

TEST_CASE("ranges of the two projections are orthogonal") {
  const KernelTruncation trunc{Domain::interior, 3};
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 16, 16, 64);
  oracles::RandomPoints pts(18);
  std::mt19937_64 rng(987);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  // random finite combinations of basis vector parts
  auto random_combo = [&]() {
    std::vector<std::pair<BasisIndex, double>> terms;
    for (int n = 0; n <= 3; ++n)
      for (auto [m, par] : index_range(Family::X, Domain::interior, n))
        terms.push_back({{Family::X, Domain::interior, n, m, par}, u(rng)});
    for (int n = 1; n <= 3; ++n)
      for (auto [m, par] : index_range(Family::Z, Domain::interior, n))
        terms.push_back({{Family::Z, Domain::interior, n, m, par}, u(rng)});
    return A2Function([terms](const Point3& p) {
      Vec2 out;
      for (const auto& [idx, c] : terms) {
        if (idx.family == Family::X)
          out = out + vec(eval_X(idx, p)) * c;
        else
          out = out + vec(eval_Z(idx, p)) * c;
      }
      return out;
    });
  };

  for (int trial = 0; trial < 3; ++trial) {
    const A2Function f = random_combo();
    const A2Function g = random_combo();
    const Projection bf = project_vecM(trunc, f, rule);
    const Projection bg = project_N(trunc, g, rule);
    const double ip = inner([&](const Point3& p) { return ReducedQuaternion{0.0, bf.eval(p)}; },
                            [&](const Point3& p) { return ReducedQuaternion{0.0, bg.eval(p)}; },
                            rule);
    const double nf = std::sqrt(inner([&](const Point3& p) { return ReducedQuaternion{0.0, f(p)}; },
                                      [&](const Point3& p) { return ReducedQuaternion{0.0, f(p)}; },
                                      rule));
    const double ng = std::sqrt(inner([&](const Point3& p) { return ReducedQuaternion{0.0, g(p)}; },
                                      [&](const Point3& p) { return ReducedQuaternion{0.0, g(p)}; },
                                      rule));
    CHECK(std::abs(ip) <= 1e-8 * nf * ng);
  }
}

TEST_CASE("projection coefficients are reproducible for any worker count") {
  const KernelTruncation trunc{Domain::interior, 3};
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 12, 12, 48);
  const A2Function f = vec_exp_interior();
  setenv("CONTRAKERNEL_THREADS", "1", 1);
  const Projection p1 = project_vecM(trunc, f, rule);
  setenv("CONTRAKERNEL_THREADS", "5", 1);
  const Projection p5 = project_vecM(trunc, f, rule);
  unsetenv("CONTRAKERNEL_THREADS");
  REQUIRE(p1.coeffs.size() == p5.coeffs.size());
  for (size_t k = 0; k < p1.coeffs.size(); ++k) CHECK(p1.coeffs[k] == p5.coeffs[k]);
}

TEST_CASE("error table behaviour for the exponential target") {
  BergmanTableSpec spec;
  spec.domain = Domain::interior;
  spec.op = 'M';
  spec.degree_counts = {5, 10, 15, 20};
  spec.rhos = {0.4, 0.8};
  spec.metric = TableMetric::pointwise_relative;
  const auto table = bergman_error_table(spec);

  // truncation-dominated cell sits at the published order of magnitude
  CHECK(table[0][0] >= 1.28e-4 / 5.0);
  CHECK(table[0][0] <= 1.28e-4 * 5.0);

  // deviation decays monotonically in the truncation down to roundoff
  for (size_t k = 1; k < table[1].size(); ++k)
    CHECK(table[1][k] <= std::max(table[1][k - 1], 1e-12));

  // rho outside the domain is rejected
  BergmanTableSpec bad = spec;
  bad.rhos = {1.5};
  CHECK_THROWS_AS(bergman_error_table(bad), std::domain_error);

  // the annihilation quotient stays at quadrature noise level
  BergmanTableSpec nspec;
  nspec.domain = Domain::interior;
  nspec.op = 'N';
  nspec.degree_counts = {15};
  nspec.rhos = {0.2, 0.4};
  nspec.metric = TableMetric::sup_ratio;
  const auto quot = bergman_error_table(nspec);
  CHECK(quot[0][0] <= 1e-10);
  CHECK(quot[1][0] <= 1e-10);
}

TEST_SUITE_END();
