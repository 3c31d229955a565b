#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gseq/algebra.hpp"
#include "gseq/morphism.hpp"
#include "gseq/parser.hpp"

namespace gseq::testing {

inline std::shared_ptr<FreeDGAlgebra> make_algebra(
    const std::string& name,
    const std::vector<std::pair<std::string, int>>& gens,
    const std::vector<std::pair<std::string, std::string>>& diffs = {}) {
  auto a = std::make_shared<FreeDGAlgebra>(name, gens);
  for (const auto& [g, poly] : diffs)
    a->set_differential(*a->gen_index(g), parse_element(*a, poly));
  a->freeze();
  if (!a->validation().valid())
    throw Error("test model " + name + " invalid:\n" + a->validation().summary());
  return a;
}

inline std::shared_ptr<DGMorphism> make_morphism(
    const std::string& name, const std::shared_ptr<FreeDGAlgebra>& src,
    const std::shared_ptr<FreeDGAlgebra>& tgt,
    const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<Element> imgs(src->gen_count(), Element(tgt.get()));
  for (const auto& [g, poly] : images)
    imgs[*src->gen_index(g)] = parse_element(*tgt, poly);
  auto m = std::make_shared<DGMorphism>(name, src.get(), tgt.get(),
                                        std::move(imgs));
  auto rep = m->validate();
  if (!rep.valid())
    throw Error("test morphism " + name + " invalid:\n" + rep.summary());
  return m;
}

struct Ex41 {
  std::shared_ptr<FreeDGAlgebra> X, Y;
  std::shared_ptr<DGMorphism> phi;
};

// Example: X = HP^2, Y = S^8 x HP^4, phi the model of the pinch-and-include.
inline Ex41 example41() {
  Ex41 e;
  e.X = make_algebra("X", {{"x4", 4}, {"x11", 11}}, {{"x11", "x4^3"}});
  e.Y = make_algebra("Y", {{"y8", 8}, {"y15", 15}, {"y4", 4}, {"y19", 19}},
                     {{"y15", "y8^2"}, {"y19", "y4^5"}});
  e.phi = make_morphism("phi", e.Y, e.X,
                        {{"y8", "x4^2"},
                         {"y15", "x4*x11"},
                         {"y4", "x4"},
                         {"y19", "x4^2*x11"}});
  return e;
}

// Random element of fixed degree with small integer coefficients.
inline Element random_element(const FreeDGAlgebra& a, int degree,
                              std::mt19937& rng) {
  const auto& basis = a.monomial_basis(degree);
  Element e(&a);
  if (basis.empty()) return e;
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  for (const auto& m : basis)
    if (keep(rng) == 0) e.add_term(m, Rational(coef(rng)));
  return e;
}

}  // namespace gseq::testing
