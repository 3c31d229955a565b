#include <doctest.h>

#include <random>

#include "gseq/algebra.hpp"
#include "gseq/morphism.hpp"
#include "gseq/parser.hpp"
#include "helpers.hpp"

using namespace gseq;
using namespace gseq::testing;

TEST_CASE("graded multiplication") {
  auto a = make_algebra("A", {{"a3", 3}, {"x4", 4}, {"b5", 5}});
  CHECK(parse_element(*a, "x4") * parse_element(*a, "x4") ==
        parse_element(*a, "x4^2"));
  CHECK((parse_element(*a, "a3") * parse_element(*a, "a3")).is_zero());
  // b5 * a3 = -(a3 * b5), both odd
  auto lhs = parse_element(*a, "b5") * parse_element(*a, "a3");
  CHECK(lhs == -parse_element(*a, "a3*b5"));
  CHECK_THROWS_AS(
      parse_element(*a, "x4") *
          parse_element(*make_algebra("B", {{"z2", 2}}), "z2"),
      Error);
}

TEST_CASE("algebra laws on random elements") {
  auto alg = make_algebra("A", {{"x2", 2}, {"y3", 3}, {"z4", 4}, {"w5", 5}},
                          {{"y3", "x2^2"}, {"w5", "x2*z4"}});
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dd(1, 7);
  for (int t = 0; t < 60; ++t) {
    Element a = random_element(*alg, dd(rng), rng);
    Element b = random_element(*alg, dd(rng), rng);
    Element c = random_element(*alg, dd(rng), rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // graded commutativity with the Koszul sign
    auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
    if (da && db) {
      const int sign = pow_sign(static_cast<long long>(*da) * *db);
      CHECK(a * b == (b * a).scaled(sign));
    }
    // d^2 = 0 and Leibniz
    CHECK(alg->d(alg->d(a)).is_zero());
    if (da)
      CHECK(alg->d(a * b) ==
            alg->d(a) * b + (a * alg->d(b)).scaled(pow_sign(*da)));
  }
}

TEST_CASE("monomial bases") {
  auto x = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  auto b15 = x->monomial_basis(15);
  REQUIRE(b15.size() == 1);
  CHECK(x->monomial_str(b15[0]) == "x4*x11");
  CHECK(x->monomial_basis(22).empty());  // 4a+11b=22 forces b=2, x11 odd
  REQUIRE(x->monomial_basis(0).size() == 1);
  CHECK(x->monomial_basis(0)[0].is_unit());

  // graded-lex order is deterministic and sorted
  auto a = make_algebra("A", {{"u2", 2}, {"v2", 2}, {"w3", 3}});
  const auto& b6 = a->monomial_basis(6);
  for (size_t i = 1; i < b6.size(); ++i) CHECK(b6[i - 1] < b6[i]);
}

TEST_CASE("Poincare series check") {
  // dim Lambda(V)^k = [t^k] prod_even (1-t^d)^-1 * prod_odd (1+t^d)
  auto a = make_algebra("A", {{"x2", 2}, {"y3", 3}, {"z4", 4}, {"w5", 5}});
  const int bound = 20;
  std::vector<long long> series(bound + 1, 0);
  series[0] = 1;
  for (const auto& g : a->generators()) {
    std::vector<long long> next(bound + 1, 0);
    if (g.odd()) {
      for (int k = 0; k <= bound; ++k) {
        next[k] = series[k];
        if (k >= g.degree) next[k] += series[k - g.degree];
      }
    } else {
      for (int k = 0; k <= bound; ++k) {
        next[k] = series[k];
        if (k >= g.degree) next[k] += next[k - g.degree];
      }
    }
    series = next;
  }
  for (int k = 0; k <= bound; ++k) CHECK(a->dim(k) == series[k]);
}

TEST_CASE("differential extension") {
  auto x = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  CHECK(x->d(parse_element(*x, "x11")) == parse_element(*x, "x4^3"));
  CHECK(x->d(parse_element(*x, "x4*x11")) == parse_element(*x, "x4^4"));
  CHECK(x->d(x->unit()).is_zero());
}

TEST_CASE("validation") {
  auto x = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  CHECK(x->validation().valid());
  CHECK(x->minimal());

  // contractible: valid DG algebra, not minimal
  auto c = make_algebra("C", {{"y1", 1}, {"x2", 2}}, {{"y1", "x2"}});
  CHECK(c->validation().valid());
  CHECK(!c->minimal());

  // d^2 != 0 is reported, not thrown
  auto bad = std::make_shared<FreeDGAlgebra>(
      "bad",
      std::vector<std::pair<std::string, int>>{{"c2", 2}, {"a3", 3}, {"b4", 4}});
  bad->set_differential(*bad->gen_index("a3"), parse_element(*bad, "b4"));
  bad->set_differential(*bad->gen_index("b4"), parse_element(*bad, "c2*a3"));
  bad->freeze();
  CHECK(!bad->validation().valid());
  bool mentions_a3 = false;
  for (const auto& i : bad->validation().issues)
    if (i.where.find("a3") != std::string::npos) mentions_a3 = true;
  CHECK(mentions_a3);
}

TEST_CASE("morphism application") {
  auto e = example41();
  CHECK(e.phi->apply(parse_element(*e.Y, "y19")) ==
        parse_element(*e.X, "x4^2*x11"));
  CHECK(e.phi->apply(parse_element(*e.Y, "y8*y4")) ==
        parse_element(*e.X, "x4^3"));
  auto id = DGMorphism::identity(e.X.get());
  auto el = parse_element(*e.X, "x4^2*x11");
  CHECK(id.apply(el) == el);
}

TEST_CASE("morphism commutes with d on random elements") {
  auto e = example41();
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(*e.Y, 4 + t % 18, rng);
    CHECK(e.phi->apply(e.Y->d(a)) == e.X->d(e.phi->apply(a)));
  }
}

TEST_CASE("cohomology") {
  auto x = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  const std::vector<int> expect = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int k = 0; k <= 8; ++k)
    CHECK(cohomology_space(*x, k).dimension == expect[k]);
  CHECK(cohomology_space(*x, 11).dimension == 0);
  CHECK(cohomology_space(*x, 12).dimension == 0);

  auto s3 = make_algebra("S3", {{"x3", 3}});
  for (int k = 0; k <= 8; ++k)
    CHECK(cohomology_space(*s3, k).dimension == ((k == 0 || k == 3) ? 1 : 0));

  auto s2 = make_algebra("S2", {{"x2", 2}, {"y3", 3}}, {{"y3", "x2^2"}});
  for (int k = 0; k <= 8; ++k)
    CHECK(cohomology_space(*s2, k).dimension == ((k == 0 || k == 2) ? 1 : 0));
}

TEST_CASE("class_of vanishes on coboundaries") {
  auto x = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  auto h12 = cohomology_space(*x, 12);
  Element db = x->d(parse_element(*x, "x11"));  // x4^3, a coboundary
  CHECK(is_zero_vec(h12.class_of(db)));
}

TEST_CASE("linear part") {
  auto e = example41();
  // only phi(y4) = x4 has a linear component
  CHECK(e.phi->linear_part(4) == QMatrix::identity(1));
  CHECK(e.phi->linear_part(8).is_zero());
  CHECK(e.phi->linear_part(15).is_zero());
  CHECK(e.phi->linear_part(19).is_zero());
  CHECK(!e.phi->linear_part_vanishes());

  auto id = DGMorphism::identity(e.X.get());
  CHECK(id.linear_part(4) == QMatrix::identity(1));
  CHECK(id.linear_part(11) == QMatrix::identity(1));

  auto s2 = make_algebra("S2", {{"x2", 2}, {"y3", 3}}, {{"y3", "x2^2"}});
  auto z4 = make_algebra("Z4", {{"z4", 4}});
  auto f = make_morphism("f", z4, s2, {{"z4", "x2^2"}});
  CHECK(f->linear_part(4).is_zero());
  CHECK(f->linear_part_vanishes());

  auto nonmin = make_algebra("C", {{"y1", 1}, {"x2", 2}}, {{"y1", "x2"}});
  auto g = make_morphism("g", nonmin, nonmin,
                         {{"y1", "y1"}, {"x2", "x2"}});
  CHECK_THROWS_AS(g->linear_part(2), Error);
}

TEST_CASE("odd squares in the DSL vanish with a report") {
  auto a = make_algebra("A", {{"a3", 3}});
  std::vector<std::string> errs;
  Element e = element_from_poly(*a, parse_poly_text("a3^2"), &errs, "d a3");
  CHECK(e.is_zero());
  REQUIRE(errs.size() == 1);
  CHECK(errs[0].find("odd-degree") != std::string::npos);
}
