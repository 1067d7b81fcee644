#include <gtest/gtest.h>

#include "darboux/normal_form.hpp"
#include "darboux/verifier.hpp"
#include "helpers.hpp"

using namespace darboux;
using testing_support::congruence_oracle;

namespace {

AltForm e(std::size_t n, std::size_t i) { return AltForm::basis_covector(n, i); }
AltForm ee(std::size_t n, std::size_t i, std::size_t j) { return wedge(e(n, i), e(n, j)); }
Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> vs;
  for (auto i : idx) vs.push_back(unit_vec(n, i));
  return Subspace::span(n, vs);
}

std::string clause_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const StructureError& err) {
    return err.clause();
  }
  return "<no error>";
}

bool oracle(const DarbouxReport& r, const std::vector<AltForm>& omegas, const std::vector<AltForm>& etas) {
  return congruence_oracle(r.frame.change(), omegas, etas, r.tmpl);
}

}  // namespace

TEST(SymplecticDarboux, Examples) {
  const auto r1 = symplectic_darboux(ee(2, 0, 1));
  EXPECT_TRUE(r1.verified);
  EXPECT_EQ(r1.frame.change(), Mat::identity(2));
  const AltForm w3 = Rat(3) * ee(2, 0, 1);
  const auto r3 = symplectic_darboux(w3);
  EXPECT_TRUE(r3.verified);
  EXPECT_EQ(determinant(r3.frame.change()), Rat(1, 3));
  EXPECT_TRUE(oracle(r3, {w3}, {}));
  EXPECT_EQ(clause_of([] { symplectic_darboux(ee(3, 0, 1) + ee(3, 0, 2)); }), "even dimension");
  EXPECT_EQ(clause_of([] { symplectic_darboux(ee(4, 0, 1)); }), "nondegenerate");
}

TEST(PresymplecticDarboux, Examples) {
  const auto z = presymplectic_darboux(AltForm(3, 2));
  EXPECT_EQ(z.tmpl.r, 0u);
  EXPECT_EQ(z.tmpl.d, 3u);
  EXPECT_EQ(z.frame.change(), Mat::identity(3));
  const auto r = presymplectic_darboux(ee(3, 0, 1));
  EXPECT_EQ(r.tmpl.r, 1u);
  EXPECT_EQ(r.tmpl.d, 1u);
  const AltForm w4 = ee(4, 0, 2) + Rat(2) * ee(4, 1, 3) + ee(4, 0, 3);
  const auto p = presymplectic_darboux(w4);
  const auto s = symplectic_darboux(w4);
  EXPECT_EQ(p.tmpl.r, 2u);
  EXPECT_EQ(p.tmpl.d, 0u);
  EXPECT_EQ(p.tmpl.omegas(), s.tmpl.omegas());
  EXPECT_TRUE(oracle(p, {w4}, {}));
}

TEST(CosymplecticDarboux, Examples) {
  const auto d1 = cosymplectic_darboux(e(1, 0), AltForm(1, 2));
  EXPECT_TRUE(d1.verified);
  EXPECT_EQ(d1.reeb, std::vector<Vec>{unit_vec(1, 0)});
  const auto d3 = cosymplectic_darboux(e(3, 2), ee(3, 0, 1));
  EXPECT_EQ(d3.frame.change(), Mat::identity(3));
  EXPECT_EQ(d3.reeb, std::vector<Vec>{unit_vec(3, 2)});
  EXPECT_EQ(clause_of([] { cosymplectic_darboux(e(3, 0), ee(3, 0, 1)); }), "ker eta (+) ker omega = E");
}

TEST(PrecosymplecticDarboux, Examples) {
  const auto r = precosymplectic_darboux(e(4, 3), ee(4, 0, 1));
  EXPECT_EQ(r.tmpl.r, 1u);
  EXPECT_EQ(r.tmpl.d, 1u);
  EXPECT_TRUE(oracle(r, {ee(4, 0, 1)}, {e(4, 3)}));
  const auto c = precosymplectic_darboux(e(3, 2), ee(3, 0, 1));
  EXPECT_EQ(c.tmpl.r, 1u);
  EXPECT_EQ(c.tmpl.d, 0u);
  EXPECT_EQ(c.frame.change(), cosymplectic_darboux(e(3, 2), ee(3, 0, 1)).frame.change());
  // ker eta cap ker omega = ker omega
  EXPECT_EQ(clause_of([] { precosymplectic_darboux(e(3, 0), ee(3, 0, 1)); }),
            "ker eta cap ker omega strictly inside ker omega");
  // eta = e^1, omega = 0 on a plane satisfies the strict inclusion: r = 0, d = 1
  const auto flat = precosymplectic_darboux(e(2, 0), AltForm(2, 2));
  EXPECT_EQ(flat.tmpl.r, 0u);
  EXPECT_EQ(flat.tmpl.d, 1u);
  EXPECT_EQ(clause_of([] { precosymplectic_darboux(AltForm(2, 1), ee(2, 0, 1)); }), "eta nonzero");
}

TEST(KSymplecticDarboux, Examples) {
  const std::vector<AltForm> w{ee(3, 0, 1), ee(3, 0, 2)};
  const auto r = k_symplectic_darboux(w, span_units(3, {1, 2}));
  EXPECT_EQ(r.frame.change(), Mat::identity(3));
  ASSERT_TRUE(r.splitting);
  EXPECT_EQ(r.splitting->v_alpha[0], span_units(3, {1}));
  EXPECT_EQ(r.splitting->v_alpha[1], span_units(3, {2}));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const Mat L = random_invertible(rng, 3);
    const std::vector<AltForm> wl{pullback(L, w[0]), pullback(L, w[1])};
    const Subspace VL = Subspace::span(3, {inverse(L) * unit_vec(3, 1), inverse(L) * unit_vec(3, 2)});
    const auto rl = k_symplectic_darboux(wl, VL);
    EXPECT_TRUE(rl.verified);
    EXPECT_TRUE(oracle(rl, wl, {}));
  }
  EXPECT_EQ(clause_of([&] { k_symplectic_darboux(w, span_units(3, {0, 1})); }), "omega^alpha|VxV = 0");
}

TEST(KPresymplecticDarboux, Examples) {
  const std::vector<AltForm> w{ee(4, 0, 2), ee(4, 1, 3)};
  const Splitting sp{{span_units(4, {2}), span_units(4, {3})}, Subspace(4)};
  const auto r = k_presymplectic_darboux(w, span_units(4, {2, 3}), sp, Mat::identity(4));
  EXPECT_EQ(r.frame.change(), Mat::identity(4));
  EXPECT_EQ(r.tmpl.index_sets, (std::vector<std::vector<std::size_t>>{{0}, {1}}));
  EXPECT_EQ(r.tmpl.d, 0u);

  const std::vector<AltForm> zero{AltForm(3, 2), AltForm(3, 2)};
  const Splitting zs{{Subspace(3), Subspace(3)}, Subspace::full(3)};
  const auto z = k_presymplectic_darboux(zero, Subspace::full(3), zs, Mat::identity(3));
  EXPECT_EQ(z.tmpl.d, 3u);
  EXPECT_EQ(z.tmpl.r_alpha(), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(z.frame.change(), Mat::identity(3));
}

TEST(KPresymplecticDarboux, CounterExampleRejected) {
  // proportional forms at lambda = 1 with f = lambda^2
  const std::vector<AltForm> w{ee(3, 0, 1), Rat(2) * ee(3, 0, 1)};
  const Subspace V = span_units(3, {0, 2});
  // whichever splitting is offered, the separation clause fails
  EXPECT_EQ(clause_of([&] {
              k_presymplectic_darboux(w, V, k_presymplectic_splitting(w, V, Mat::identity(3)), Mat::identity(3));
            }),
            "kernel separation");
  const Splitting guess{{span_units(3, {0}), Subspace(3)}, span_units(3, {2})};
  EXPECT_NE(clause_of([&] { k_presymplectic_darboux(w, V, guess, Mat::identity(3)); }), "<no error>");
}

TEST(KCosymplecticDarboux, Examples) {
  const std::vector<AltForm> etas{e(5, 0), e(5, 1)};
  const std::vector<AltForm> w{ee(5, 2, 3), ee(5, 2, 4)};
  const Subspace V = span_units(5, {3, 4});
  const auto r = k_cosymplectic_darboux(etas, w, V);
  EXPECT_EQ(r.frame.change(), Mat::identity(5));
  EXPECT_EQ(r.reeb, (std::vector<Vec>{unit_vec(5, 0), unit_vec(5, 1)}));
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    const Mat L = random_invertible(rng, 5);
    const Mat Li = inverse(L);
    std::vector<AltForm> el, wl;
    for (const auto& x : etas) el.push_back(pullback(L, x));
    for (const auto& x : w) wl.push_back(pullback(L, x));
    const auto rl = k_cosymplectic_darboux(el, wl, Subspace::span(5, {Li * unit_vec(5, 3), Li * unit_vec(5, 4)}));
    EXPECT_TRUE(oracle(rl, wl, el));
    // Reeb system solved independently: rows eta^b and the contractions against omega^b
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(el[b].evaluate({rl.reeb[a]}), a == b ? 1 : 0);
      for (const auto& x : wl) EXPECT_TRUE(interior(rl.reeb[a], x).is_zero());
    }
  }
  EXPECT_EQ(clause_of([&] { k_cosymplectic_darboux({e(5, 0), e(5, 0)}, w, V); }), "eta^1 ^ ... ^ eta^k != 0");
}

TEST(KPrecosymplecticDarboux, ProductModels) {
  // R^2 x (the k-presymplectic example)
  const std::vector<AltForm> etas{e(6, 0), e(6, 1)};
  const std::vector<AltForm> w{ee(6, 2, 4), ee(6, 3, 5)};
  const Splitting sp{{span_units(6, {4}), span_units(6, {5})}, Subspace(6)};
  const auto r = k_precosymplectic_darboux(etas, w, span_units(6, {4, 5}), sp, Mat::identity(6));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.tmpl.d, 0u);
  EXPECT_EQ(r.tmpl.r_alpha(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.frame.change(), Mat::identity(6));
  // a trivial extra direction becomes D
  const std::vector<AltForm> etas7{e(7, 0), e(7, 1)};
  const std::vector<AltForm> w7{ee(7, 2, 4), ee(7, 3, 5)};
  const Splitting sp7{{span_units(7, {4}), span_units(7, {5})}, span_units(7, {6})};
  const auto r7 = k_precosymplectic_darboux(etas7, w7, span_units(7, {4, 5, 6}), sp7, Mat::identity(7));
  EXPECT_EQ(r7.tmpl.d, 1u);
  ASSERT_TRUE(r7.splitting);
  EXPECT_EQ(r7.splitting->d, span_units(7, {6}));
  EXPECT_TRUE(oracle(r7, w7, etas7));
}

TEST(ReebSolve, Examples) {
  const auto r = reeb_solve({e(5, 0), e(5, 1)}, {ee(5, 2, 3), ee(5, 2, 4)});
  EXPECT_EQ(r.base, (std::vector<Vec>{unit_vec(5, 0), unit_vec(5, 1)}));
  EXPECT_TRUE(r.freedom.is_zero());
  const auto p = reeb_solve({e(4, 3)}, {ee(4, 0, 1)});
  EXPECT_EQ(p.base, std::vector<Vec>{unit_vec(4, 3)});
  EXPECT_EQ(p.freedom, span_units(4, {2}));
  EXPECT_THROW(reeb_solve({AltForm(2, 1)}, {AltForm(2, 2)}), StructureError);
}

namespace {

std::vector<CanonicalTemplate> family_samples() {
  return {CanonicalTemplate::symplectic(1),
          CanonicalTemplate::symplectic(3),
          CanonicalTemplate::presymplectic(2, 2),
          CanonicalTemplate::presymplectic(0, 2),
          CanonicalTemplate::cosymplectic(2),
          CanonicalTemplate::precosymplectic(2, 1),
          CanonicalTemplate::k_symplectic(3, 2),
          CanonicalTemplate::k_presymplectic(2, {{0, 1}, {1}}, 1),
          CanonicalTemplate::k_cosymplectic(2, 2),
          CanonicalTemplate::k_precosymplectic(2, {{0}, {0, 1}}, 2)};
}

}  // namespace

TEST(NormalFormProperties, RoundTripAndRankInvariance) {
  std::mt19937_64 rng(33);
  for (const auto& t : family_samples())
    for (int i = 0; i < 12; ++i) {
      const Instance inst = random_instance(t, rng);
      const DarbouxReport r = normal_form(inst.spec);
      EXPECT_TRUE(r.verified) << to_string(t.kind);
      EXPECT_EQ(r.tmpl.k, t.k);
      EXPECT_EQ(r.tmpl.n, t.n);
      EXPECT_EQ(r.tmpl.r, t.r);
      EXPECT_EQ(r.tmpl.d, t.d);
      EXPECT_EQ(r.tmpl.r_alpha(), t.r_alpha());
      EXPECT_TRUE(oracle(r, inst.spec.omegas, inst.spec.etas)) << to_string(t.kind);
    }
}

TEST(NormalFormProperties, KOneConsistency) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 20; ++i) {
    const Instance inst = random_instance(CanonicalTemplate::k_symplectic(1, 2), rng);
    const auto a = k_symplectic_darboux(inst.spec.omegas, *inst.spec.V);
    const auto b = symplectic_darboux(inst.spec.omegas[0]);
    // same template up to the layout change [y | p] -> interleaved pairs
    ASSERT_EQ(a.tmpl.n, b.tmpl.n);
    const std::size_t n = a.tmpl.n;
    Mat P(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      P(i, 2 * i) = 1;
      P(n + i, 2 * i + 1) = 1;
    }
    EXPECT_EQ(pullback(P, a.tmpl.omegas()[0]), b.tmpl.omegas()[0]);
    const Instance c = random_instance(CanonicalTemplate::cosymplectic(2), rng);
    const auto pc = precosymplectic_darboux(c.spec.etas[0], c.spec.omegas[0]);
    EXPECT_EQ(pc.tmpl.d, 0u);
    EXPECT_EQ(pc.tmpl.omegas(), cosymplectic_darboux(c.spec.etas[0], c.spec.omegas[0]).tmpl.omegas());
  }
}

TEST(NormalFormProperties, ReebDuality) {
  std::mt19937_64 rng(35);
  const std::vector<CanonicalTemplate> ts = {CanonicalTemplate::cosymplectic(2),
                                             CanonicalTemplate::precosymplectic(1, 2),
                                             CanonicalTemplate::k_cosymplectic(2, 2),
                                             CanonicalTemplate::k_precosymplectic(2, {{0}, {1}}, 1)};
  for (int i = 0; i < 120; ++i) {
    const Instance inst = random_instance(ts[i % ts.size()], rng);
    const auto sol = reeb_solve(inst.spec.etas, inst.spec.omegas);
    for (std::size_t a = 0; a < sol.base.size(); ++a)
      for (std::size_t b = 0; b < inst.spec.etas.size(); ++b)
        EXPECT_EQ(inst.spec.etas[b].evaluate({sol.base[a]}), a == b ? 1 : 0);
    for (const auto& R : sol.base)
      for (const auto& w : inst.spec.omegas) EXPECT_TRUE(interior(R, w).is_zero());
    for (const auto& f : sol.freedom.basis()) {
      for (const auto& eta : inst.spec.etas) EXPECT_EQ(eta.evaluate({f}), 0);
      for (const auto& w : inst.spec.omegas) EXPECT_TRUE(interior(f, w).is_zero());
    }
  }
}
