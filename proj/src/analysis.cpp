#include "gseq/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace gseq {

PhiXMap phi_x_map(const DerivationComplex& self_complex,
                  const CohomologyPresentation& hp, int n) {
  if (&self_complex.source() != &self_complex.target())
    throw Error("phi_x_map: complex is not Der(A, A; 1)");
  if (&self_complex.source() != &hp.model())
    throw Error("phi_x_map: presentation of a different model");
  PhiXMap out;
  out.degree = n;
  const HomologySpace& dom = self_complex.homology(n);
  out.domain_dim = dom.dim;
  PresentedMap id = identity_presented_map(hp.algebra());
  auto codomain =
      cohomology_derivation_space(hp.algebra(), hp.algebra(), id, n);
  out.codomain_dim = codomain.dimension;
  out.matrix = QMatrix(codomain.dimension, dom.dim);
  if (codomain.dimension == 0 || dom.dim == 0) return out;

  QMatrix basis(codomain.solutions.ambient(), 0);
  {
    std::vector<Vec> cols(codomain.solutions.basis().begin(),
                          codomain.solutions.basis().end());
    basis = QMatrix::from_columns(codomain.solutions.ambient(), cols);
  }
  for (int j = 0; j < dom.dim; ++j) {
    Derivation theta = self_complex.from_coords(n, dom.representative(j));
    Vec unknowns = zero_vec(codomain.solutions.ambient());
    for (const auto& s : codomain.slots) {
      Element val = theta.evaluate(hp.gen_rep(s.gen));
      if (val.is_zero()) continue;
      Vec cls = hp.H(s.value_degree).class_of(val);
      Vec q = hp.class_to_presented(s.value_degree, cls);
      for (int i = 0; i < s.width; ++i) unknowns[s.offset + i] = q[i];
    }
    auto x = solve_linear(basis, unknowns);
    if (!x)
      throw InternalError(
          "phi_x_map: image is not a derivation of the cohomology algebra");
    for (int r = 0; r < codomain.dimension; ++r)
      if ((*x)[r] != 0) out.matrix.set(r, j, (*x)[r]);
  }
  return out;
}

ThomTable thom_check(const FreeDGAlgebra& x, int m, const Element* image) {
  if (m < 2) throw Error("thom_check: m must be >= 2");
  ThomTable out;
  out.m = m;
  out.model = x.name();
  auto km = std::make_shared<FreeDGAlgebra>(
      "KQ" + std::to_string(m),
      std::vector<std::pair<std::string, int>>{{"z" + std::to_string(m), m}});
  km->freeze();
  Element img = image ? *image : Element(&x);
  if (!img.is_zero()) {
    if (!img.homogeneous_of(m))
      throw Error("thom_check: image must be homogeneous of degree " +
                  std::to_string(m));
    if (!x.d(img).is_zero())
      throw Error("thom_check: image of z" + std::to_string(m) +
                  " must be a cocycle");
  }
  DGMorphism phi("f", km.get(), &x, {img});
  DerivationComplex cx(&phi, m + 1);
  for (int n = 2; n <= m; ++n) {
    ThomRow row;
    row.n = n;
    row.der_dim = cx.homology(n).dim;
    row.cohom_dim = cohomology_space(x, m - n).dimension;
    out.all_match = out.all_match && row.der_dim == row.cohom_dim;
    out.rows.push_back(row);
  }
  return out;
}

std::optional<std::string> f0_obstruction(const FreeDGAlgebra& a) {
  int odd = 0, even = 0;
  int degsum = 0;
  for (const auto& g : a.generators()) {
    (g.odd() ? odd : even) += 1;
    degsum += g.degree;
  }
  if (odd != even)
    return "generator count imbalance (" + std::to_string(even) + " even vs " +
           std::to_string(odd) + " odd) rules out an F0 model";
  const int bound = degsum + 1;
  for (int k = 1; k <= bound; k += 2) {
    if (cohomology_space(a, k).dimension != 0)
      return "odd-degree cohomology H^" + std::to_string(k) + "(" + a.name() +
             ") is nonzero";
  }
  return std::nullopt;
}

GrivelReport grivel_check(const DGMorphism& phi, int max_even) {
  GrivelReport out;
  for (const FreeDGAlgebra* m : {&phi.source(), &phi.target()}) {
    if (auto bad = f0_obstruction(*m))
      throw Error("F0 validation failed for " + m->name() + ": " + *bad);
  }
  auto trunc = [](const FreeDGAlgebra& m) {
    int s = 1;
    for (const auto& g : m.generators()) s += g.degree;
    return s;
  };
  // common truncation: source relations land in target slices of the same
  // degree, so both presentations need the larger bound
  const int t = std::max(trunc(phi.source()), trunc(phi.target()));
  out.assumptions.push_back(
      "F0 asserted for " + phi.source().name() + " and " + phi.target().name() +
      "; validated: H^odd = 0 up to degree " + std::to_string(t) +
      ", balanced generator parity");
  CohomologyPresentation py = cohomology_presentation(phi.source(), t);
  CohomologyPresentation px = cohomology_presentation(phi.target(), t);
  PresentedMap h = induced_presented_map(py, px, phi);
  DerivationComplex cx(&phi, max_even + 1);
  for (int d = 2; d <= max_even; d += 2) {
    GrivelRow row;
    row.degree = d;
    row.der_dim = cx.homology(d).dim;
    row.cohom_der_dim =
        cohomology_derivation_space(py.algebra(), px.algebra(), h, d).dimension;
    out.all_match = out.all_match && row.der_dim == row.cohom_der_dim;
    out.rows.push_back(row);
  }
  return out;
}

SplittingReport splitting_check(const DGMorphism& phi, int window,
                                bool assume_f0) {
  SplittingReport out;
  if (!phi.source().zero_differential()) {
    out.refused = true;
    out.refusal = "source model " + phi.source().name() +
                  " has a nonzero differential (not an H0-model)";
    return out;
  }
  if (!phi.linear_part_vanishes()) {
    out.refused = true;
    out.refusal =
        "nonzero linear part: " + phi.name() +
        " is not zero on rational homotopy groups, so the splitting "
        "hypotheses fail";
    return out;
  }
  if (!assume_f0) {
    out.refused = true;
    out.refusal = "F0 hypothesis for " + phi.target().name() +
                  " not asserted (pass assume-f0 = true)";
    return out;
  }
  if (auto bad = f0_obstruction(phi.target())) {
    out.refused = true;
    out.refusal = "F0 validation failed for " + phi.target().name() + ": " + *bad;
    return out;
  }
  out.assumptions.push_back("F0 asserted for " + phi.target().name() +
                            "; necessary conditions validated");
  auto L = build_ladder(phi, window);
  auto g = build_g_sequence(*L);
  for (int n = 2; n + 1 <= g.N + 1; ++n) {
    SplittingRow row;
    row.n = n;
    row.dim_gab = g.GAB.at(n + 1).sub.dim();
    row.dim_grel = g.GREL.at(n + 1).sub.dim();
    row.dim_gb = g.GB.at(n).sub.dim();
    auto jk = rank_kernel_image(g.j_hat.at(n + 1).mat);
    auto pk = rank_kernel_image(g.p_hat.at(n + 1).mat);
    row.injective = jk.kernel.dim() == 0;
    row.surjective = pk.image.dim() == row.dim_gb;
    row.middle_exact = pk.kernel == jk.image;
    out.all_ok = out.all_ok && row.ok();
    out.rows.push_back(row);
  }
  return out;
}

namespace {

// translate an element of `from` into `to` by generator name
Element translate(const Element& e, const FreeDGAlgebra& from,
                  const FreeDGAlgebra& to) {
  Element out(&to);
  for (const auto& [m, c] : e.terms()) {
    Monomial t;
    t.exps.assign(to.gen_count(), 0);
    for (size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      auto gi = to.gen_index(from.generator(static_cast<int>(i)).name);
      if (!gi) throw Error("translate: generator missing in target");
      t.exps[*gi] = m.exps[i];
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

TnczAnalysis::TnczAnalysis(std::shared_ptr<FreeDGAlgebra> total,
                           std::shared_ptr<FreeDGAlgebra> fiber,
                           const std::string& base_gen)
    : total_(std::move(total)), fiber_(std::move(fiber)) {
  auto ui = total_->gen_index(base_gen);
  if (!ui) throw Error("tncz: base generator '" + base_gen + "' not declared");
  const Generator& u = total_->generator(*ui);
  if (!u.odd()) throw Error("tncz: base generator must have odd degree");
  if (!total_->differential_of(*ui).is_zero())
    throw Error("tncz: base generator must be a cocycle (D(" + base_gen +
                ") = 0)");
  if (fiber_->gen_count() != total_->gen_count() - 1)
    throw Error("tncz: fiber generators must be the total generators minus '" +
                base_gen + "'");
  for (const auto& g : fiber_->generators()) {
    auto ti = total_->gen_index(g.name);
    if (!ti || g.name == base_gen ||
        total_->generator(*ti).degree != g.degree)
      throw Error("tncz: fiber generator '" + g.name +
                  "' does not match the total model");
  }

  // projection pi: total -> fiber, u |-> 0; validates pi o D = d o pi
  std::vector<Element> pimg(total_->gen_count(), Element(fiber_.get()));
  for (const auto& g : total_->generators()) {
    if (g.index == *ui) continue;
    pimg[g.index] = fiber_->gen_elem(*fiber_->gen_index(g.name));
  }
  pi_ = std::make_unique<DGMorphism>("pi", total_.get(), fiber_.get(),
                                     std::move(pimg));
  auto rep = pi_->validate();
  if (!rep.valid())
    throw Error("tncz: malformed relative model (pi o D != d o pi):\n" +
                rep.summary());

  const int r2 = u.degree;  // 2r + 1
  // unknown layout: psi(v) in fiber degree |v| - (2r+1); psi(u) = 1 pinned
  struct Slot {
    int gen;
    int vdeg;
    int offset;
    int width;
  };
  std::vector<Slot> slots;
  int unknowns = 0;
  for (const auto& g : total_->generators()) {
    if (g.index == *ui) continue;
    const int vd = g.degree - r2;
    if (vd < 0) continue;
    const int w = fiber_->dim(vd);
    if (w == 0) continue;
    slots.push_back({g.index, vd, unknowns, w});
    unknowns += w;
  }
  struct Row {
    int gen;
    int vdeg;
    int offset;
    int width;
  };
  std::vector<Row> rows;
  int nrows = 0;
  for (const auto& g : total_->generators()) {
    const int vd = g.degree - r2 + 1;  // degree of delta(psi) values
    if (vd < 0) continue;
    const int w = fiber_->dim(vd);
    if (w == 0) continue;
    rows.push_back({g.index, vd, nrows, w});
    nrows += w;
  }
  auto stack_delta = [&](const Derivation& psi) {
    Derivation d = psi.delta();
    Vec v = zero_vec(nrows);
    for (const auto& row : rows) {
      const Element& val = d.value(row.gen);
      if (val.is_zero()) continue;
      Vec c = fiber_->coords(val, row.vdeg);
      for (int i = 0; i < row.width; ++i) v[row.offset + i] = c[i];
    }
    return v;
  };

  Derivation background(pi_.get(), r2);
  background.set_value(*ui, fiber_->unit());
  Vec b = vec_scale(Rational(-1), stack_delta(background));

  QMatrix M(nrows, unknowns);
  for (const auto& s : slots) {
    for (int i = 0; i < s.width; ++i) {
      Derivation impulse(pi_.get(), r2);
      Vec q = zero_vec(fiber_->dim(s.vdeg));
      q[i] = 1;
      impulse.set_value(s.gen, fiber_->from_coords(s.vdeg, q));
      Vec col = stack_delta(impulse);
      for (int r = 0; r < nrows; ++r)
        if (col[r] != 0) M.set(r, s.offset + i, col[r]);
    }
  }

  auto sol = solve_linear(M, b);
  if (!sol) {
    // infeasibility certificate: y with y^T M = 0 and y^T b != 0
    auto leftker = rank_kernel_image(M.transpose()).kernel;
    Vec cert;
    for (const auto& y : leftker.basis()) {
      Rational dot(0);
      for (size_t i = 0; i < y.size(); ++i) dot += y[i] * b[i];
      if (dot != 0) {
        cert = y;
        break;
      }
    }
    if (cert.empty())
      throw InternalError("tncz: unsolvable system without certificate");
    std::vector<int> involved;
    for (const auto& row : rows) {
      for (int i = 0; i < row.width; ++i) {
        if (cert[row.offset + i] != 0) {
          involved.push_back(row.gen);
          break;
        }
      }
    }
    for (int gi : involved) {
      const Element& dg = total_->differential_of(gi);
      Element residual = background.evaluate(dg);
      TnczObstruction ob;
      ob.generator = total_->generator(gi).name;
      ob.equation = "psi(" + dg.str() + ") = " + residual.str();
      ob.residual = residual.str();
      verdict_.obstructions.push_back(std::move(ob));
    }
    verdict_.trivializable = false;
    verdict_.audit.push_back(
        "no pi-derivation cocycle psi with psi(" + base_gen + ") = 1 exists");
    return;
  }

  Derivation psi = background;
  for (const auto& s : slots) {
    Vec q = zero_vec(s.width);
    bool nz = false;
    for (int i = 0; i < s.width; ++i) {
      q[i] = (*sol)[s.offset + i];
      nz = nz || q[i] != 0;
    }
    if (nz) psi.set_value(s.gen, fiber_->from_coords(s.vdeg, q));
  }
  if (!psi.delta().is_zero())
    throw InternalError("tncz: solver returned a non-cocycle psi");
  verdict_.audit.push_back("psi = " + psi.str() + " is a delta-cocycle with psi(" +
                           base_gen + ") = 1");

  // product-differential target: D'(u) = 0, D'(v) = d_fiber(v) embedded
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& g : total_->generators()) gens.emplace_back(g.name, g.degree);
  product_ = std::make_shared<FreeDGAlgebra>(total_->name() + ".prod", gens);
  for (const auto& g : fiber_->generators()) {
    const int ti = *product_->gen_index(g.name);
    product_->set_differential(
        ti, translate(fiber_->differential_of(g.index), *fiber_, *product_));
  }
  product_->freeze();
  if (!product_->validation().valid())
    throw InternalError("tncz: product model invalid:\n" +
                        product_->validation().summary());

  // Phi(u) = u, Phi(v) = v + u psi(v)
  std::vector<Element> images(total_->gen_count(), Element(product_.get()));
  for (const auto& g : total_->generators()) {
    Element img = product_->gen_elem(*product_->gen_index(g.name));
    if (g.index != *ui) {
      const Element& pv = psi.value(g.index);
      if (!pv.is_zero())
        img = img + product_->gen_elem(*product_->gen_index(base_gen)) *
                        translate(pv, *fiber_, *product_);
    }
    images[g.index] = img;
  }
  DGMorphism Phi("Phi", total_.get(), product_.get(), images);
  auto prep = Phi.validate();
  if (!prep.valid())
    throw InternalError("tncz: Phi is not a DG algebra map:\n" + prep.summary());
  verdict_.audit.push_back(
      "Phi(a + ub) = a + ub + u psi(a) commutes with the differentials");
  for (const auto& g : total_->generators())
    verdict_.phi_images.emplace_back(g.name, Phi.image_of(g.index).str());

  // pi' o Phi = pi and Phi(u) = u
  for (const auto& g : total_->generators()) {
    Element lhs(fiber_.get());
    {
      // push Phi(g) down to the fiber through the product projection
      const Element& img = Phi.image_of(g.index);
      for (const auto& [m, c] : img.terms()) {
        if (m.exps[*product_->gen_index(base_gen)] != 0) continue;
        lhs = lhs + translate(product_->monomial_elem(m, c), *product_, *fiber_);
      }
    }
    if (!(lhs == pi_->apply(total_->gen_elem(g.index))))
      throw InternalError("tncz: pi o Phi != pi on " + g.name);
  }
  verdict_.audit.push_back("pi o Phi = pi and Phi(" + base_gen + ") = " +
                           base_gen);

  // inverse on generators by solving degreewise
  std::vector<Element> inv(product_->gen_count(), Element(total_.get()));
  for (const auto& g : product_->generators()) {
    const int k = g.degree;
    const auto& basis = total_->monomial_basis(k);
    std::vector<Vec> cols;
    for (const auto& m : basis)
      cols.push_back(
          product_->coords(Phi.apply(total_->monomial_elem(m)), k));
    QMatrix mat = QMatrix::from_columns(product_->dim(k), cols);
    auto x = solve_linear(mat, product_->coords(product_->gen_elem(g.index), k));
    if (!x) throw InternalError("tncz: Phi not invertible on " + g.name);
    inv[g.index] = total_->from_coords(k, *x);
  }
  DGMorphism PhiInv("PhiInv", product_.get(), total_.get(), inv);
  auto irep = PhiInv.validate();
  if (!irep.valid())
    throw InternalError("tncz: Phi^{-1} not a DG map:\n" + irep.summary());
  for (const auto& g : total_->generators()) {
    if (!(PhiInv.apply(Phi.image_of(g.index)) == total_->gen_elem(g.index)))
      throw InternalError("tncz: Phi^{-1} o Phi != 1 on " + g.name);
    verdict_.phi_inverse_images.emplace_back(g.name,
                                             PhiInv.image_of(g.index).str());
  }
  verdict_.audit.push_back("Phi is invertible (inverse solved on generators)");
  verdict_.trivializable = true;
  verdict_.psi = std::move(psi);
}

TnczAnalysis tncz_analyze(std::shared_ptr<FreeDGAlgebra> total,
                          std::shared_ptr<FreeDGAlgebra> fiber,
                          const std::string& base_gen) {
  return TnczAnalysis(std::move(total), std::move(fiber), base_gen);
}

}  // namespace gseq
