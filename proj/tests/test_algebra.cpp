#include <doctest.h>

#include <random>

#include "contrakernel/algebra.hpp"

using namespace contrakernel;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("quaternion product follows the defining unit relations") {
  const Quaternion e1{0, 1, 0, 0};
  const Quaternion e2{0, 0, 1, 0};

  const Quaternion e1e1 = quat_mul(e1, e1);
  CHECK(e1e1.a0 == -1.0);
  CHECK(e1e1.a1 == 0.0);
  CHECK(e1e1.a2 == 0.0);
  CHECK(e1e1.a3 == 0.0);

  const Quaternion e1e2 = quat_mul(e1, e2);
  CHECK(e1e2.a3 == 1.0);
  CHECK(e1e2.a0 == 0.0);
  CHECK(e1e2.a1 == 0.0);
  CHECK(e1e2.a2 == 0.0);

  // anticommutation
  const Quaternion e2e1 = quat_mul(e2, e1);
  CHECK(e2e1.a3 == -1.0);

  const Quaternion p{1, 1, 0, 0};
  const Quaternion q{1, -1, 0, 0};
  const Quaternion pq = quat_mul(p, q);
  CHECK(pq.a0 == 2.0);
  CHECK(pq.a1 == 0.0);
  CHECK(pq.a2 == 0.0);
  CHECK(pq.a3 == 0.0);
}

TEST_CASE("star swaps components and matches -e1*f*e2") {
  CHECK(star({1.0, 0.0}).v1 == 0.0);
  CHECK(star({1.0, 0.0}).v2 == 1.0);
  CHECK(star({0.0, 0.0}).v1 == 0.0);
  CHECK(star({0.0, 0.0}).v2 == 0.0);

  const Vec2 v{2.0, -3.0};
  CHECK(star(v).v1 == -3.0);
  CHECK(star(v).v2 == 2.0);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int k = 0; k < 50; ++k) {
    const Vec2 f{u(rng), u(rng)};
    // -e1 * f * e2 through the quaternion product
    const Quaternion prod =
        quat_mul(quat_mul({0, -1, 0, 0}, embed(f)), {0, 0, 1, 0});
    CHECK(prod.a0 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(prod.a3 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(star(f).v1 == doctest::Approx(prod.a1));
    CHECK(star(f).v2 == doctest::Approx(prod.a2));

    // involution and isometry
    CHECK(star(star(f)).v1 == f.v1);
    CHECK(star(star(f)).v2 == f.v2);
    CHECK(star(f).norm() == doctest::Approx(f.norm()));

    // perp is right multiplication by e3 and squares to -1
    const Quaternion pe3 = quat_mul(embed(f), {0, 0, 0, 1});
    CHECK(perp(f).v1 == doctest::Approx(pe3.a1));
    CHECK(perp(f).v2 == doctest::Approx(pe3.a2));
    CHECK(perp(perp(f)).v1 == doctest::Approx(-f.v1));
    CHECK(perp(perp(f)).v2 == doctest::Approx(-f.v2));
  }
}

TEST_CASE("scalar and vector extraction") {
  const ReducedQuaternion q{2.0, 3.0, -1.0};
  CHECK(sc(q) == 2.0);
  CHECK(vec(q).v1 == 3.0);
  CHECK(vec(q).v2 == -1.0);
  const ReducedQuaternion c = conj(q);
  CHECK(c.a0 == 2.0);
  CHECK(c.a1 == -3.0);
  CHECK(c.a2 == 1.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const ReducedQuaternion f{u(rng), u(rng), u(rng)};
    const ReducedQuaternion half_sum = 0.5 * (f + conj(f));
    const ReducedQuaternion half_diff = 0.5 * (f - conj(f));
    CHECK(half_sum.a0 == doctest::Approx(sc(f)));
    CHECK(half_sum.a1 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(half_diff.a0 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(half_diff.a1 == doctest::Approx(vec(f).v1));
    CHECK(half_diff.a2 == doctest::Approx(vec(f).v2));
  }
}

TEST_SUITE_END();
