#include <doctest.h>

#include <random>

#include "gseq/linalg.hpp"

using namespace gseq;

TEST_CASE("rank_kernel_image on the zero and identity maps") {
  QMatrix z(3, 3);
  auto r = rank_kernel_image(z);
  CHECK(r.rank == 0);
  CHECK(r.kernel.dim() == 3);
  CHECK(r.image.dim() == 0);

  auto id = QMatrix::identity(4);
  r = rank_kernel_image(id);
  CHECK(r.rank == 4);
  CHECK(r.kernel.dim() == 0);
  CHECK(r.image.dim() == 4);
}

TEST_CASE("rank_kernel_image on the 1x1 matrix (-3)") {
  QMatrix m(1, 1);
  m.set(0, 0, Rational(-3));
  auto r = rank_kernel_image(m);
  CHECK(r.rank == 1);
  CHECK(r.kernel.dim() == 0);
}

TEST_CASE("kernel vectors map to zero") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + trial % 5, cols = 1 + (trial * 3) % 6;
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, Rational(d(rng)));
    auto r = rank_kernel_image(m);
    CHECK(r.rank + r.kernel.dim() == cols);
    CHECK(r.image.dim() == r.rank);
    for (const auto& k : r.kernel.basis()) CHECK(is_zero_vec(m.apply(k)));
  }
}

TEST_CASE("solve_linear") {
  auto id = QMatrix::identity(3);
  Vec b = {Rational(2), Rational(-1), Rational(5)};
  auto x = solve_linear(id, b);
  REQUIRE(x);
  CHECK(*x == b);

  QMatrix z(2, 2);
  auto none = solve_linear(z, {Rational(1), Rational(0)});
  CHECK(!none);

  // singular but consistent: (2 4; 1 2) x = (6, 3)
  QMatrix m(2, 2);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  m.set(1, 0, 1);
  m.set(1, 1, 2);
  auto s = solve_linear(m, {Rational(6), Rational(3)});
  REQUIRE(s);
  CHECK(m.apply(*s) == Vec{Rational(6), Rational(3)});
}

TEST_CASE("subspace operations") {
  auto a = Subspace::span(2, {{Rational(1), Rational(0)}});
  auto b = Subspace::span(2, {{Rational(1), Rational(1)}});
  auto ops = subspace_ops(a, b);
  CHECK(ops.sum.dim() == 2);
  CHECK(ops.intersection.dim() == 0);
  CHECK(!ops.contains);

  auto same = subspace_ops(a, a);
  CHECK(same.sum == a);
  CHECK(same.intersection == a);
  CHECK(same.contains);

  // dim(sum) + dim(intersection) = dim(a) + dim(b) on random subspaces
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int amb = 4;
    auto rnd = [&](int count) {
      std::vector<Vec> vs;
      for (int i = 0; i < count; ++i) {
        Vec v(amb);
        for (auto& x : v) x = Rational(d(rng));
        vs.push_back(v);
      }
      return Subspace::span(amb, vs);
    };
    auto u = rnd(2), w = rnd(3);
    auto o = subspace_ops(u, w);
    CHECK(o.sum.dim() + o.intersection.dim() == u.dim() + w.dim());
    for (const auto& v : o.intersection.basis()) {
      CHECK(u.contains(v));
      CHECK(w.contains(v));
    }
  }
}

TEST_CASE("ambient mismatch is rejected") {
  auto a = Subspace::span(2, {{Rational(1), Rational(0)}});
  auto b = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
  CHECK_THROWS_AS(subspace_ops(a, b), Error);
}

TEST_CASE("quotient spaces") {
  // cycles = boundaries: acyclic
  auto s = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
  QuotientSpace acyclic(s, s);
  CHECK(acyclic.dim() == 0);
  CHECK(is_zero_vec(acyclic.project({Rational(5), Rational(0), Rational(0)})));

  // boundaries = 0: coordinates in the cycle basis
  QuotientSpace freeq(s, Subspace::zero(3));
  CHECK(freeq.dim() == 1);
  CHECK(freeq.project({Rational(7), Rational(0), Rational(0)}) ==
        Vec{Rational(7)});

  // span{x4|x11, x4^2|x11} over span{x4^2|x11} (in coordinates): dim 1
  auto cycles = Subspace::span(
      2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  auto boundaries = Subspace::span(2, {{Rational(0), Rational(1)}});
  QuotientSpace q(cycles, boundaries);
  CHECK(q.dim() == 1);
  CHECK(q.project({Rational(1), Rational(3)}) == Vec{Rational(1)});
  // project kills exactly the boundaries
  CHECK(is_zero_vec(q.project({Rational(0), Rational(9)})));

  // containment violation reports the offending vector
  auto big = Subspace::span(2, {{Rational(0), Rational(1)}});
  auto notin = Subspace::span(2, {{Rational(1), Rational(0)}});
  CHECK_THROWS_AS(QuotientSpace(big, notin), Error);
}

TEST_CASE("exact arithmetic round-trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), 1 + std::abs(d(rng)));
    Rational b(d(rng), 1 + std::abs(d(rng)));
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}
