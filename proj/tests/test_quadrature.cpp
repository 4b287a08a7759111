#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "contrakernel/quadrature.hpp"
#include "oracles.hpp"

using namespace contrakernel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("rule construction and elementary integrals") {
  const QuadratureRule small = QuadratureRule::build(Domain::interior, 8, 8, 16);
  CHECK(integrate([](const Point3&) { return 1.0; }, small) ==
        doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));

  const QuadratureRule rule_i = QuadratureRule::build(Domain::interior, 16, 16, 64);
  CHECK(integrate([](const Point3& p) { return p.x1 * p.x1; }, rule_i) ==
        doctest::Approx(4.0 * kPi / 15.0).epsilon(1e-10));

  const QuadratureRule rule_e = QuadratureRule::build(Domain::exterior, 16, 16, 64);
  CHECK(integrate([](const Point3& p) { return std::pow(p.rho(), -4.0); }, rule_e) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-10));

  CHECK_THROWS_AS(QuadratureRule::build(Domain::interior, 0, 8, 16), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureRule::build(Domain::interior, 8, 8, 2), std::invalid_argument);
}

TEST_CASE("azimuthal rule integrates low-order trigonometric products exactly") {
  const int A = 16;
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 4, 4, A);
  for (int k = 0; k + 4 < A; ++k)
    for (int l = 0; l + k < A; ++l) {
      const double got = integrate(
          [&](const Point3& p) {
            const double phi = p.phi();
            return std::cos(k * phi) * std::sin(l * phi);
          },
          rule);
      CHECK(std::abs(got) <= 1e-12);
    }
}

TEST_CASE("scalar inner product reconciles with the closed-form norms") {
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 16, 16, 64);
  const BasisIndex u10{Family::U, Domain::interior, 1, 0, Parity::plus};
  const double ip = inner([&](const Point3& p) { return ReducedQuaternion{eval_U(u10, p), 0, 0}; },
                          [&](const Point3& p) { return ReducedQuaternion{eval_U(u10, p), 0, 0}; },
                          rule);
  CHECK(ip == doctest::Approx(4.0 * kPi / 15.0).epsilon(1e-10));
  CHECK(ip == doctest::Approx(norm_U(Domain::interior, 1, 0)).epsilon(1e-10));

  CHECK(std::abs(inner_basis({{Family::X, Domain::interior, 1, 0, Parity::plus}},
                             {{Family::X, Domain::interior, 1, 1, Parity::plus}, true}, rule)) <=
        1e-10);

  const QuadratureRule rule_e = QuadratureRule::build(Domain::exterior, 16, 16, 64);
  CHECK(std::abs(inner_basis({{Family::Z, Domain::exterior, -2, 0, Parity::plus}},
                             {{Family::X, Domain::exterior, -3, 1, Parity::minus}}, rule_e)) <=
        1e-10);
}

TEST_CASE("exactness for products of basis functions") {
  // R = T = N+2 and A = 4N+4 integrate all |degree| <= N products to 1e-10.
  const int N = 6;
  for (Domain d : {Domain::interior, Domain::exterior}) {
    const QuadratureRule rule = QuadratureRule::build(d, N + 2, N + 2, 4 * N + 4);
    std::vector<GramEntry> entries;
    for (const auto& i : enumerate_family(Family::U, d, N)) entries.push_back({i, false, false});
    const auto norms = quadrature_norms(entries, rule);
    for (size_t k = 0; k < entries.size(); ++k) {
      const double cf = norm_U(d, entries[k].index.n, entries[k].index.m);
      CHECK(std::abs(norms[k] - cf) / cf <= 1e-10);
    }
  }
}

TEST_CASE("doubling the rule leaves Gram entries unchanged") {
  const auto idxs = enumerate_family(Family::X, Domain::interior, 3);
  const GramMatrix g1 = gram(idxs, QuadratureRule::build(Domain::interior, 16, 16, 64));
  const GramMatrix g2 = gram(idxs, QuadratureRule::build(Domain::interior, 32, 32, 128));
  for (int i = 0; i < g1.size; ++i)
    for (int j = 0; j < g1.size; ++j) {
      const double scale = std::sqrt(g1.at(i, i) * g1.at(j, j));
      CHECK(std::abs(g1.at(i, j) - g2.at(i, j)) / scale <= 1e-10);
    }
}

TEST_CASE("gram rejects mixed domains") {
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 8, 8, 16);
  std::vector<BasisIndex> mixed = {{Family::U, Domain::interior, 1, 0, Parity::plus},
                                   {Family::U, Domain::exterior, -2, 0, Parity::plus}};
  CHECK_THROWS_AS(gram(mixed, rule), std::invalid_argument);
}

TEST_CASE("summation is reproducible for any worker count") {
  const auto idxs = enumerate_family(Family::U, Domain::interior, 3);
  const QuadratureRule rule = QuadratureRule::build(Domain::interior, 12, 12, 32);
  setenv("CONTRAKERNEL_THREADS", "1", 1);
  const GramMatrix g1 = gram(idxs, rule);
  setenv("CONTRAKERNEL_THREADS", "7", 1);
  const GramMatrix g7 = gram(idxs, rule);
  unsetenv("CONTRAKERNEL_THREADS");
  for (int i = 0; i < g1.size; ++i)
    for (int j = 0; j < g1.size; ++j) CHECK(g1.at(i, j) == g7.at(i, j));
}

TEST_SUITE_END();
