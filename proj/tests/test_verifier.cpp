#include <gtest/gtest.h>

#include <algorithm>

#include "darboux/verifier.hpp"
#include "helpers.hpp"

using namespace darboux;

namespace {

AltForm e(std::size_t n, std::size_t i) { return AltForm::basis_covector(n, i); }
AltForm ee(std::size_t n, std::size_t i, std::size_t j) { return wedge(e(n, i), e(n, j)); }
Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> vs;
  for (auto i : idx) vs.push_back(unit_vec(n, i));
  return Subspace::span(n, vs);
}

bool accepts(const Classification& c, StructureKind k) {
  return std::find(c.accepted.begin(), c.accepted.end(), k) != c.accepted.end();
}

const Verdict& verdict_for(const Classification& c, StructureKind k) {
  return *std::find_if(c.verdicts.begin(), c.verdicts.end(), [&](const Verdict& v) { return v.kind == k; });
}

bool fails(const Verdict& v, const std::string& clause) {
  const Clause* c = v.find(clause);
  return c && !c->pass;
}

StructureSpec k_precosymplectic_product() {
  StructureSpec s;
  s.kind = StructureKind::k_precosymplectic;
  s.dim = 6;
  s.etas = {e(6, 0), e(6, 1)};
  s.omegas = {ee(6, 2, 4), ee(6, 3, 5)};
  s.V = span_units(6, {4, 5});
  s.splitting = Splitting{{span_units(6, {4}), span_units(6, {5})}, Subspace(6)};
  return s;
}

}  // namespace

TEST(Classify, CanonicalSymplectic) {
  const StructureSpec s = template_spec(CanonicalTemplate::symplectic(2));
  const Classification c = classify(s);
  EXPECT_TRUE(accepts(c, StructureKind::symplectic));
  ASSERT_TRUE(accepts(c, StructureKind::presymplectic));
  const Verdict& p = verdict_for(c, StructureKind::presymplectic);
  EXPECT_EQ(p.params.r, std::vector<std::size_t>{2});
  EXPECT_EQ(p.params.d, 0u);
}

TEST(Classify, CanonicalTwoSymplectic) {
  const Classification c = classify(template_spec(CanonicalTemplate::k_symplectic(2, 1)));
  ASSERT_TRUE(accepts(c, StructureKind::k_symplectic));
  const Verdict& v = verdict_for(c, StructureKind::k_symplectic);
  EXPECT_EQ(v.params.k, 2u);
  EXPECT_EQ(v.params.n, 1u);
}

TEST(Classify, LagrangianPolarisation) {
  StructureSpec s;
  s.dim = 4;
  s.omegas = {ee(4, 0, 1) + ee(4, 2, 3)};
  s.V = span_units(4, {1, 3});
  EXPECT_TRUE(accepts(classify(s), StructureKind::k_symplectic));
  EXPECT_TRUE(check_k_symplectic(s.omegas, s.V).accepted);
}

TEST(CheckKSymplectic, Examples) {
  EXPECT_TRUE(check_k_symplectic({ee(3, 0, 1), ee(3, 0, 2)}, span_units(3, {1, 2})).accepted);
  const Verdict v = check_k_symplectic({ee(3, 0, 1), ee(3, 0, 1)}, span_units(3, {1, 2}));
  EXPECT_FALSE(v.accepted);
  const Clause* c = v.find("intersection of ker omega^alpha = {0}");
  ASSERT_TRUE(c && !c->pass);
  EXPECT_EQ(Subspace::span(3, c->witness), span_units(3, {2}));
  EXPECT_TRUE(fails(check_k_symplectic({ee(3, 0, 1), ee(3, 0, 2)}, span_units(3, {1})), "rank V = nk"));
}

TEST(CheckKCosymplectic, Examples) {
  const std::vector<AltForm> w{ee(5, 2, 3), ee(5, 2, 4)};
  EXPECT_TRUE(check_k_cosymplectic({e(5, 0), e(5, 1)}, w, span_units(5, {3, 4})).accepted);
  EXPECT_TRUE(fails(check_k_cosymplectic({e(5, 0), e(5, 0)}, w, span_units(5, {3, 4})), "eta^1 ^ ... ^ eta^k != 0"));
  const Verdict v = check_k_cosymplectic({e(5, 0), e(5, 1)}, w, span_units(5, {0, 3, 4}));
  const Clause* c = v.find("eta^alpha|V = 0");
  ASSERT_TRUE(c && !c->pass);
  ASSERT_FALSE(c->witness.empty());
  EXPECT_EQ(e(5, 0).evaluate({c->witness[0]}), 1);
}

TEST(CheckKPrecosymplectic, Examples) {
  StructureSpec s = k_precosymplectic_product();
  EXPECT_TRUE(check(StructureKind::k_precosymplectic, s).accepted);
  StructureSpec wrong = s;
  wrong.declared.d = 1;
  EXPECT_TRUE(fails(check(StructureKind::k_precosymplectic, wrong),
                    "rank of intersection of (ker omega^alpha cap ker eta^alpha) = d"));
  StructureSpec bare = s;
  bare.splitting.reset();
  EXPECT_TRUE(fails(check(StructureKind::k_precosymplectic, bare), "splitting required"));
}

TEST(CheckKPresymplectic, CounterDiagnostic) {
  const Verdict v = check_k_presymplectic({ee(3, 0, 1), Rat(2) * ee(3, 0, 1)}, span_units(3, {0, 2}), std::nullopt,
                                          std::nullopt);
  EXPECT_FALSE(v.accepted);
  const Clause* c = v.find("kernel separation");
  ASSERT_TRUE(c && !c->pass);
  EXPECT_NE(c->note.find("kernels coincide"), std::string::npos);
}

TEST(CheckMultisymplectic, Examples) {
  const AltForm vol = wedge(ee(3, 0, 1), e(3, 2));
  const Verdict v = check_multisymplectic(vol);
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.params.degree, 3u);
  // dp12 ∧ dx1 ∧ dx2 with coordinates (x1, x2, p11, p12, p21, p22)
  const AltForm omega_q = wedge(wedge(e(6, 3), e(6, 0)), e(6, 1));
  const Verdict pre = check_multisymplectic(omega_q);
  EXPECT_FALSE(pre.accepted);
  EXPECT_EQ(pre.note, "premultisymplectic");
  EXPECT_EQ(Subspace::span(6, pre.find("one-nondegenerate")->witness), span_units(6, {2, 4, 5}));
  const Verdict two = check_multisymplectic(ee(2, 0, 1));
  EXPECT_TRUE(two.accepted);
  EXPECT_EQ(two.params.degree, 2u);
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(isotropy_type(span_units(2, {0}), ee(2, 0, 1), 1), IsotropyType::lagrangian);
  const AltForm w4 = ee(4, 0, 1) + ee(4, 2, 3);
  EXPECT_EQ(isotropy_type(span_units(4, {0}), w4, 1), IsotropyType::isotropic);
  EXPECT_EQ(isotropy_type(Subspace::full(4), w4, 1), IsotropyType::coisotropic);
}

TEST(StandardNplectic, Examples) {
  // dp ∧ dx1 ∧ dx2 on (x1, x2, p)
  const Verdict v = check_standard_nplectic(wedge(wedge(e(3, 2), e(3, 0)), e(3, 1)));
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(Subspace::span(3, v.data.at("W")), span_units(3, {2}));
  const Verdict vol = check_standard_nplectic(wedge(ee(3, 0, 1), e(3, 2)));
  EXPECT_TRUE(vol.accepted || vol.note == "not standard");
  EXPECT_FALSE(check_standard_nplectic(wedge(ee(4, 0, 1), e(4, 2))).accepted);
}

TEST(VerifierProperties, PullbackInvariance) {
  std::mt19937_64 rng(41);
  const std::vector<CanonicalTemplate> ts = {CanonicalTemplate::symplectic(2),
                                             CanonicalTemplate::presymplectic(1, 1),
                                             CanonicalTemplate::cosymplectic(1),
                                             CanonicalTemplate::precosymplectic(1, 1),
                                             CanonicalTemplate::k_symplectic(2, 1),
                                             CanonicalTemplate::k_presymplectic(2, {{0}, {0, 1}}, 1),
                                             CanonicalTemplate::k_cosymplectic(2, 1),
                                             CanonicalTemplate::k_precosymplectic(2, {{0}, {1}}, 0)};
  for (int i = 0; i < 120; ++i) {
    const auto& t = ts[i % ts.size()];
    const StructureSpec base = template_spec(t);
    const Mat L = random_invertible(rng, base.dim);
    const StructureSpec moved = base.pulled_back(L);
    const Classification a = classify(base), b = classify(moved);
    EXPECT_EQ(a.accepted, b.accepted) << to_string(t.kind);
    for (std::size_t j = 0; j < a.verdicts.size(); ++j) {
      if (!a.verdicts[j].accepted) continue;
      EXPECT_EQ(a.verdicts[j].params, b.verdicts[j].params) << to_string(a.verdicts[j].kind);
    }
    EXPECT_TRUE(accepts(b, structure_kind_of(t.kind))) << to_string(t.kind);
  }
}

TEST(VerifierProperties, Nesting) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const Instance s = random_instance(CanonicalTemplate::symplectic(1 + i % 3), rng);
    const Verdict p = check_presymplectic(s.spec.omegas[0]);
    EXPECT_TRUE(check_symplectic(s.spec.omegas[0]).accepted);
    EXPECT_TRUE(p.accepted);
    EXPECT_EQ(p.params.d, 0u);
    const Instance c = random_instance(CanonicalTemplate::cosymplectic(1 + i % 2), rng);
    EXPECT_TRUE(check_cosymplectic(c.spec.etas[0], c.spec.omegas[0]).accepted);
    const Verdict pc = check_precosymplectic(c.spec.etas[0], c.spec.omegas[0]);
    EXPECT_TRUE(pc.accepted);
    EXPECT_EQ(pc.params.d, 0u);
    const std::size_t n = 1 + i % 2;
    const Instance k = random_instance(CanonicalTemplate::k_symplectic(2, n), rng);
    ASSERT_TRUE(check_k_symplectic(k.spec.omegas, k.spec.V).accepted);
    const Verdict kp = check_k_presymplectic(k.spec.omegas, k.spec.V, std::nullopt, std::nullopt);
    EXPECT_TRUE(kp.accepted);
    EXPECT_EQ(kp.params.r, (std::vector<std::size_t>{n, n}));
    EXPECT_EQ(kp.params.d, 0u);
  }
}

TEST(VerifierProperties, WitnessSoundness) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + i % 3;
    const AltForm w = testing_support::random_altform(rng, n, 2, 0.3);
    const Verdict v = check_symplectic(w);
    const Clause* c = v.find("ker omega = {0}");
    ASSERT_TRUE(c);
    for (const auto& x : c->witness) EXPECT_TRUE(interior(x, w).is_zero());
    EXPECT_EQ(c->pass, c->witness.empty());
    // polarisation witness: pairs in V on which omega does not vanish
    const Subspace V = Subspace::span(n, {testing_support::random_vec(rng, n), testing_support::random_vec(rng, n)});
    const Verdict kv = check_k_symplectic({w}, V);
    for (const auto& cl : kv.clauses)
      if (cl.name == "omega^alpha|VxV = 0" && !cl.pass) {
        ASSERT_EQ(cl.witness.size(), 2u);
        EXPECT_NE(w.evaluate({cl.witness[0], cl.witness[1]}), 0);
        EXPECT_TRUE(V.contains(cl.witness[0]) && V.contains(cl.witness[1]));
      }
  }
}

TEST(VerifierProperties, LagrangianHalfDimension) {
  std::mt19937_64 rng(44);
  int lagrangian = 0;
  for (int i = 0; i < 150; ++i) {
    const Instance s = random_instance(CanonicalTemplate::symplectic(1 + i % 3), rng);
    const std::size_t n = s.spec.dim;
    std::vector<Vec> gens;
    const std::size_t m = 1 + i % n;
    // half the time use the image of the Lagrangian span{e_1, e_3, ...}
    if (i % 2 == 0) {
      const Mat Li = inverse(s.L);
      for (std::size_t j = 0; j < n; j += 2) gens.push_back(Li * unit_vec(n, j));
    } else {
      for (std::size_t j = 0; j < m; ++j) gens.push_back(testing_support::random_vec(rng, n));
    }
    const Subspace W = Subspace::span(n, gens);
    if (isotropy_type(W, s.spec.omegas[0], 1) == IsotropyType::lagrangian) {
      ++lagrangian;
      EXPECT_EQ(2 * W.dim(), n);
    }
  }
  EXPECT_GE(lagrangian, 75);
}

TEST(VerifierProperties, SignatureMismatchRejected) {
  StructureSpec s = template_spec(CanonicalTemplate::cosymplectic(1));
  s.etas.clear();
  EXPECT_TRUE(fails(check(StructureKind::cosymplectic, s), "form signature"));
}
