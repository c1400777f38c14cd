#include "test_support.hpp"

#include <chrono>

namespace ob = orbit_braid;
using ob::testing::bw;
using ob::testing::fw;

namespace {

const ob::GroupParams g22(2, 2);

ob::EndoF rho(std::string_view w, const ob::GroupParams& g) {
  return ob::rho_word(bw(w, g), g);
}

TEST(ConjugateForm, Identity) {
  const auto f = ob::parse_conjugate_form(ob::EndoF::identity(g22));
  for (const auto& a : f.conjugators) EXPECT_TRUE(a.empty());
  EXPECT_EQ(f.mu, (std::vector<int>{0, 1, 2, 3}));
}

TEST(ConjugateForm, SwapGenerator) {
  const auto f = ob::parse_conjugate_form(rho("b0", g22));
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(f.conjugator(i, 0).empty());
    EXPECT_EQ(f.target(i, 0), g22.index(i, 1));
    EXPECT_EQ(f.conjugator(i, 1), fw("x" + std::to_string(i) + ".1", g22));
    EXPECT_EQ(f.target(i, 1), g22.index(i, 0));
  }
}

TEST(ConjugateForm, Rejections) {
  auto im = ob::EndoF::identity(g22).images();
  im[0] = fw("x0.0 x0.1", g22);
  EXPECT_THROW(ob::parse_conjugate_form(ob::EndoF(g22, im)), ob::NotConjugateForm);

  im = ob::EndoF::identity(g22).images();
  im[0] = fw("x0.1 x0.0 x1.1", g22);
  EXPECT_THROW(ob::parse_conjugate_form(ob::EndoF(g22, im)), ob::NotConjugateForm);

  im = ob::EndoF::identity(g22).images();
  im[0] = fw("x0.0^-1", g22);
  EXPECT_THROW(ob::parse_conjugate_form(ob::EndoF(g22, im)), ob::NotConjugateForm);

  im = ob::EndoF::identity(g22).images();
  im[0] = fw("x0.1", g22);
  EXPECT_THROW(ob::parse_conjugate_form(ob::EndoF(g22, im)), ob::NotPermutation);
}

TEST(Equivariance, Examples) {
  EXPECT_TRUE(ob::check_equivariance(ob::parse_conjugate_form(ob::EndoF::identity(g22)), g22));
  EXPECT_TRUE(ob::check_equivariance(ob::parse_conjugate_form(rho("b0 b b0^-1", g22)), g22));

  auto im = rho("b0", g22).images();
  im[static_cast<std::size_t>(g22.index(1, 1))] = fw("x0.1 x1.0 x0.1^-1", g22);
  const auto f = ob::parse_conjugate_form(ob::EndoF(g22, im));
  EXPECT_FALSE(ob::check_equivariance(f, g22));
}

TEST(Boundary, Examples) {
  EXPECT_EQ(ob::check_boundary(rho("b", g22)), fw("x0.0^-1", g22));
  EXPECT_EQ(ob::check_boundary(rho("b0", g22)), ob::FreeWord{});
  EXPECT_EQ(ob::check_boundary(ob::EndoF::identity(g22)), ob::FreeWord{});

  auto im = ob::EndoF::identity(g22).images();
  std::swap(im[0], im[1]);
  EXPECT_FALSE(ob::check_boundary(ob::EndoF(g22, im)).has_value());
}

TEST(Length, Examples) {
  EXPECT_EQ(ob::length(ob::EndoF::identity(g22)), 4);
  EXPECT_EQ(ob::length(rho("b0", g22)), 8);
  EXPECT_EQ(ob::length(rho("b", g22)), 8);
}

TEST(ReduceStep, SwapGeneratorUndoneInOneMove) {
  const auto s = ob::reduce_step(rho("b0", g22));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->rotation, 0);
  EXPECT_EQ(s->letter, ob::BraidLetter::swap(0, -1));
  EXPECT_EQ(ob::length(s->result), 4);
}

TEST(ReduceStep, MinimalHasNoMove) {
  EXPECT_FALSE(ob::reduce_step(ob::EndoF::identity(g22)).has_value());
}

TEST(ReduceStep, FindsAShorteningMove) {
  const ob::GroupParams g(2, 3);
  const ob::EndoF e = rho("b^2 b1", g);
  const auto s = ob::reduce_step(e);
  ASSERT_TRUE(s.has_value());
  EXPECT_LT(ob::length(s->result), ob::length(e));
  // result == ρ(letter · δ^rotation) then e
  const ob::BraidWord move = ob::BraidWord{s->letter} *
                             ob::power(ob::boundary_rotation_braid(g), s->rotation);
  EXPECT_TRUE(ob::eq_endo(s->result, ob::compose(ob::rho_word(move, g), e)));
}

TEST(ReduceStep, RejectsNonBraidMaps) {
  auto im = ob::EndoF::identity(g22).images();
  std::swap(im[0], im[1]);
  EXPECT_THROW(ob::reduce_step(ob::EndoF(g22, im)), ob::PreconditionViolated);
}

TEST(BoundaryRotation, DeltaActsAsRotation) {
  for (int p = 1; p <= 4; ++p) {
    for (int n = 1; n <= 4; ++n) {
      const ob::GroupParams g(p, n);
      EXPECT_TRUE(ob::eq_endo(ob::rho_word(ob::boundary_rotation_braid(g), g),
                              ob::boundary_rotation(g, 1)));
      EXPECT_TRUE(ob::eq_endo(ob::boundary_rotation(g, n), ob::shift_c(g, 1)));
      EXPECT_EQ(ob::boundary_rotation_of(ob::boundary_rotation(g, 2 % g.rank())), 2 % g.rank());
    }
  }
}

TEST(Decompose, Identity) {
  const auto d = ob::decompose(ob::EndoF::identity(g22), g22);
  EXPECT_TRUE(d.word.empty());
  EXPECT_EQ(d.twist, 0);
}

TEST(Decompose, SingleGenerator) {
  const auto d = ob::decompose(rho("b0", g22), g22);
  EXPECT_EQ(ob::format(d.word), "b0");
  EXPECT_EQ(d.twist, 0);
}

TEST(Decompose, MixedWord) {
  const ob::GroupParams g(2, 3);
  const ob::EndoF e = rho("b0 b b1^-1", g);
  const auto d = ob::decompose(e, g);
  EXPECT_TRUE(ob::eq_endo(ob::compose(ob::rho_word(d.word, g), ob::twist(g, d.twist)), e));
}

TEST(Decompose, TwistIsFactoredOut) {
  const ob::EndoF e = ob::compose(rho("b0", g22), ob::twist(g22, -2));
  const auto d = ob::decompose(e, g22);
  EXPECT_TRUE(ob::eq_endo(ob::compose(ob::rho_word(d.word, g22), ob::twist(g22, d.twist)), e));
}

TEST(Decompose, OrbitShiftIsABoundaryRotation) {
  // The orbit shift passes every condition and is the image of δ^n.
  for (const auto& g : ob::testing::grid()) {
    const ob::EndoF c = ob::shift_c(g, 1);
    EXPECT_NO_THROW(ob::check_conditions(c));
    const auto d = ob::decompose(c, g);
    EXPECT_TRUE(ob::eq_endo(ob::compose(ob::rho_word(d.word, g), ob::twist(g, d.twist)), c));
  }
}

TEST(Decompose, RoundTripRandomWords) {
  ob::Rng rng(41);
  for (const auto& g : ob::testing::grid()) {
    for (int t = 0; t < 15; ++t) {
      const auto w = ob::random_word(rng, g, 12);
      const ob::EndoF e = ob::rho_word(w, g);
      const auto t0 = std::chrono::steady_clock::now();
      const auto d = ob::decompose(e, g);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      EXPECT_LT(secs, 1.0);
      EXPECT_TRUE(ob::eq_endo(ob::compose(ob::rho_word(d.word, g), ob::twist(g, d.twist)), e))
          << ob::format(w);
      for (std::size_t k = 1; k < d.lengths.size(); ++k) {
        EXPECT_LT(d.lengths[k], d.lengths[k - 1]);
      }
    }
  }
}

TEST(Decompose, ParamsMismatch) {
  EXPECT_THROW(ob::decompose(ob::EndoF::identity(g22), {2, 3}), ob::ParamsMismatch);
}

}  // namespace
