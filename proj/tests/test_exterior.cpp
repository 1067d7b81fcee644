#include <gtest/gtest.h>

#include "darboux/exterior.hpp"
#include "helpers.hpp"

using namespace darboux;
using testing_support::random_altform;
using testing_support::random_vec;

namespace {

AltForm e(std::size_t n, std::size_t i) { return AltForm::basis_covector(n, i); }

AltForm form(std::size_t n, std::size_t deg, std::initializer_list<std::pair<Multi, long>> terms) {
  AltForm a(n, deg);
  for (const auto& [idx, c] : terms) a.add(idx, Rat(c));
  return a;
}

Rat sign(std::size_t p, std::size_t q) { return (p * q) % 2 ? Rat(-1) : Rat(1); }

}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge(e(2, 0), e(2, 1)), form(2, 2, {{{0, 1}, 1}}));
  EXPECT_TRUE(wedge(e(2, 0), e(2, 0)).is_zero());
  EXPECT_EQ(wedge(e(3, 0) + e(3, 1), e(3, 2)), form(3, 2, {{{0, 2}, 1}, {{1, 2}, 1}}));
}

TEST(Interior, Examples) {
  const AltForm w = form(2, 2, {{{0, 1}, 1}});
  EXPECT_EQ(interior(unit_vec(2, 0), w), e(2, 1));
  EXPECT_TRUE(interior(unit_vec(3, 2), form(3, 2, {{{0, 1}, 1}})).is_zero());
  EXPECT_EQ(interior(unit_vec(3, 0), form(3, 3, {{{0, 1, 2}, 1}})), form(3, 2, {{{1, 2}, 1}}));
}

TEST(Pullback, Examples) {
  const AltForm area = form(2, 2, {{{0, 1}, 1}});
  EXPECT_EQ(pullback(Mat::identity(2), area), area);
  Mat D(2, 2);
  D(0, 0) = 2;
  D(1, 1) = 3;
  EXPECT_EQ(pullback(D, area), Rat(6) * area);
  Mat S(2, 2);
  S(0, 1) = 1;
  S(1, 0) = 1;
  EXPECT_EQ(pullback(S, area), -area);
}

TEST(OneKernel, Examples) {
  EXPECT_EQ(one_kernel(form(3, 2, {{{0, 1}, 1}})), Subspace::span(3, {unit_vec(3, 2)}));
  EXPECT_TRUE(one_kernel(form(3, 3, {{{0, 1, 2}, 1}})).is_zero());
  EXPECT_EQ(one_kernel(AltForm(3, 2)), Subspace::full(3));
}

TEST(ROrthogonal, Examples) {
  const Subspace W1 = Subspace::span(3, {unit_vec(3, 0)});
  EXPECT_EQ(r_orthogonal(W1, form(3, 3, {{{0, 1, 2}, 1}}), 1), W1);
  EXPECT_EQ(r_orthogonal(Subspace(3), form(3, 3, {{{0, 1, 2}, 1}}), 1), Subspace::full(3));
  const Subspace L = Subspace::span(2, {unit_vec(2, 0)});
  EXPECT_EQ(r_orthogonal(L, form(2, 2, {{{0, 1}, 1}}), 1), L);
}

TEST(Evaluate, MatchesDeterminant) {
  const AltForm vol = form(3, 3, {{{0, 1, 2}, 1}});
  EXPECT_EQ(vol.evaluate({unit_vec(3, 1), unit_vec(3, 0), unit_vec(3, 2)}), -1);
}

TEST(ExteriorProperties, GradedAnticommutativity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 4;
    std::uniform_int_distribution<std::size_t> deg(0, n);
    const std::size_t p = deg(rng), q = deg(rng);
    const AltForm a = random_altform(rng, n, p), b = random_altform(rng, n, q);
    EXPECT_EQ(wedge(a, b), sign(p, q) * wedge(b, a));
  }
}

TEST(ExteriorProperties, InteriorIsAntiderivation) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 4;
    std::uniform_int_distribution<std::size_t> deg(1, n);
    const std::size_t p = deg(rng), q = deg(rng);
    const AltForm a = random_altform(rng, n, p), b = random_altform(rng, n, q);
    const Vec v = random_vec(rng, n);
    const Rat s = p % 2 ? Rat(-1) : Rat(1);
    EXPECT_EQ(interior(v, wedge(a, b)), wedge(interior(v, a), b) + s * wedge(a, interior(v, b)));
  }
}

TEST(ExteriorProperties, PullbackCommutesWithWedge) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 4, m = 1 + t % 5;
    Mat L(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) L(i, j) = random_rat(rng);
    std::uniform_int_distribution<std::size_t> deg(0, 2);
    const AltForm a = random_altform(rng, n, deg(rng)), b = random_altform(rng, n, deg(rng));
    EXPECT_EQ(pullback(L, wedge(a, b)), wedge(pullback(L, a), pullback(L, b)));
  }
}

TEST(ExteriorProperties, PullbackMatchesEvaluation) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + t % 3;
    const Mat L = random_invertible(rng, n);
    const AltForm a = random_altform(rng, n, 2);
    const Vec x = random_vec(rng, n), y = random_vec(rng, n);
    EXPECT_EQ(pullback(L, a).evaluate({x, y}), a.evaluate({L * x, L * y}));
  }
}

// dim ker = n - rank, with the rank taken from the skew matrix built by hand
TEST(ExteriorProperties, OneKernelOracle) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    const AltForm w = random_altform(rng, n, 2, 0.35);
    const auto A = testing_support::skew_matrix(w);
    std::vector<Vec> rows(A.begin(), A.end());
    EXPECT_EQ(one_kernel(w).dim(), n - rank(Mat::from_rows(rows, n)));
  }
}

TEST(ExteriorProperties, ROrthogonalIsSymplecticOrthogonal) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 4;
    const AltForm w = random_altform(rng, n, 2);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < static_cast<std::size_t>(1 + t % 3); ++i) gens.push_back(random_vec(rng, n));
    const Subspace D = Subspace::span(n, gens);
    // {v : w(v, u) = 0 for all u in D} is the kernel of the rows w(., u)
    std::vector<Vec> rows;
    for (const auto& u : D.basis()) rows.push_back(interior(u, w).as_vector());
    const Subspace expected = rows.empty() ? Subspace::full(n) : kernel_basis(Mat::from_rows(rows, n));
    EXPECT_EQ(r_orthogonal(D, w, 1), expected);
  }
}
