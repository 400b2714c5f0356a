#include <gtest/gtest.h>

#include <random>

#include "absgame/absgame.hpp"
#include "oracle.hpp"

using namespace absgame;

namespace {

std::vector<FormId> forms_upto(Arena& a, int b) { return all_forms(a, b, 1u << 20).forms; }

}  // namespace

TEST(Arena, ZeroIsFirstForm) {
  Arena a;
  EXPECT_EQ(a.intern({}, {}), Arena::zero());
  EXPECT_EQ(a.birthday(Arena::zero()), 0);
}

TEST(Arena, OptionSetsAreDeduplicated) {
  Arena a;
  const FormId z = Arena::zero();
  EXPECT_EQ(a.intern({z, z}, {z}), a.intern({z}, {z}));
  EXPECT_EQ(a.intern({z, z}, {z}), a.star());
}

TEST(Arena, OptionOrderDoesNotMatter) {
  Arena a;
  const FormId one = a.moves(1), star = a.star();
  EXPECT_EQ(a.intern({one, star}, {}), a.intern({star, one}, {}));
}

TEST(Arena, HatTwoFromOptions) {
  Arena a;
  EXPECT_EQ(a.intern({Arena::zero(), a.moves(1)}, {}), a.hat(2));
}

TEST(Arena, Birthdays) {
  Arena a;
  EXPECT_EQ(a.birthday(a.star()), 1);
  EXPECT_EQ(a.birthday(a.ostar(2)), 3);
  EXPECT_EQ(a.birthday(a.moves(-4)), 4);
  EXPECT_EQ(a.birthday(a.hat(3)), 3);
}

TEST(Arena, SumExamples) {
  Arena a;
  const FormId one = a.moves(1), star = a.star();
  EXPECT_EQ(a.sum(one, one), a.moves(2));
  EXPECT_EQ(a.sum(star, star), a.intern({star}, {star}));
  EXPECT_EQ(a.sum({one, one, one}), a.moves(3));
  EXPECT_EQ(a.sum(std::vector<FormId>{}), Arena::zero());
}

TEST(Arena, ConjugateExamples) {
  Arena a;
  EXPECT_EQ(a.conjugate(Arena::zero()), Arena::zero());
  EXPECT_EQ(a.conjugate(a.moves(1)), a.intern({}, {Arena::zero()}));
  EXPECT_EQ(a.conjugate(a.moves(1)), a.moves(-1));
  EXPECT_EQ(a.conjugate(a.star()), a.star());
}

TEST(Arena, AdjointExamples) {
  Arena a;
  const FormId z = Arena::zero(), star = a.star();
  EXPECT_EQ(a.adjoint(z), star);
  EXPECT_EQ(a.adjoint(a.moves(1)), a.intern({z}, {star}));
  EXPECT_EQ(a.adjoint(star), a.intern({star}, {star}));
  EXPECT_EQ(a.adjoint(a.moves(-1)), a.intern({star}, {z}));
}

TEST(Arena, Families) {
  Arena a;
  const FormId z = Arena::zero();
  EXPECT_EQ(a.ostar(0), a.star());
  EXPECT_EQ(a.ostar(1), a.intern({z}, {a.star()}));
  EXPECT_EQ(a.hat(1), a.moves(1));
  EXPECT_EQ(a.hat(2), a.intern({z, a.moves(1)}, {}));
  EXPECT_EQ(a.zeta(3), a.intern({}, {a.moves(3)}));
  EXPECT_EQ(a.zeta(-2), a.conjugate(a.zeta(2)));
  EXPECT_EQ(a.hat(-2), a.conjugate(a.hat(2)));
  EXPECT_EQ(a.family(Family::Hat, 2), a.hat(2));
  EXPECT_EQ(a.family(Family::OStar, 0), a.star());
  EXPECT_EQ(a.moves(0), z);
}

TEST(Arena, FamilyDomainErrors) {
  Arena a;
  EXPECT_THROW(a.zeta(1), DomainError);
  EXPECT_THROW(a.zeta(0), DomainError);
  EXPECT_THROW(a.zeta(-1), DomainError);
  EXPECT_THROW(a.ostar(-1), DomainError);
}

TEST(Arena, Followers) {
  Arena a;
  EXPECT_EQ(a.followers(Arena::zero()), std::vector<FormId>{Arena::zero()});
  const std::vector<FormId> star_f{Arena::zero(), a.star()};
  EXPECT_EQ(a.followers(a.star()), star_f);
  const std::vector<FormId> o2{Arena::zero(), a.ostar(0), a.ostar(1), a.ostar(2)};
  EXPECT_EQ(a.followers(a.ostar(2)), o2);
}

TEST(Arena, ChildrenPrecedeParents) {
  Arena a;
  for (FormId g : forms_upto(a, 2))
    for (Side s : {Side::Left, Side::Right})
      for (FormId o : a.options(g, s)) EXPECT_LT(o, g);
}

TEST(Arena, ForeignIdIsStructuralError) {
  Arena a;
  const FormId bogus{12345};
  EXPECT_THROW(a.intern({bogus}, {}), StructuralError);
  EXPECT_THROW(a.sum(bogus, Arena::zero()), StructuralError);
  EXPECT_THROW(a.conjugate(bogus), StructuralError);
}

TEST(Arena, CapacityIsResourceError) {
  Arena a(ArenaLimits{8, 4096});
  EXPECT_THROW(for (int n = 1; n < 20; ++n) a.moves(n), ResourceError);
}

TEST(Arena, DepthIsResourceError) {
  Arena a(ArenaLimits{1u << 20, 16});
  const FormId deep = a.moves(40);
  EXPECT_THROW(a.sum(deep, a.star()), ResourceError);
}

TEST(Arena, FrozenArenaRefusesNewForms) {
  Arena a;
  const FormId star = a.star();
  a.freeze();
  EXPECT_TRUE(a.frozen());
  EXPECT_EQ(a.intern({Arena::zero()}, {Arena::zero()}), star);
  EXPECT_THROW(a.moves(5), FrozenError);
}

TEST(Arena, ExhaustiveCountAtBirthdayTwo) {
  Arena a;
  EXPECT_EQ(forms_upto(a, 0).size(), 1u);
  EXPECT_EQ(forms_upto(a, 1).size(), 4u);
  EXPECT_EQ(forms_upto(a, 2).size(), 256u);
}

TEST(Arena, AlgebraLawsExhaustive) {
  Arena a;
  const auto forms = forms_upto(a, 2);
  for (FormId g : forms) {
    EXPECT_EQ(a.sum(Arena::zero(), g), g);
    EXPECT_EQ(a.conjugate(a.conjugate(g)), g);
    for (FormId h : forms) {
      const FormId gh = a.sum(g, h);
      ASSERT_EQ(gh, a.sum(h, g));
      ASSERT_EQ(a.conjugate(gh), a.sum(a.conjugate(g), a.conjugate(h)));
    }
  }
  const auto small = forms_upto(a, 1);
  for (FormId g : forms)
    for (FormId h : forms)
      for (FormId k : small) ASSERT_EQ(a.sum(a.sum(g, h), k), a.sum(g, a.sum(h, k)));
}

TEST(Arena, SumAgreesWithTreeOracle) {
  Arena a;
  const auto forms = forms_upto(a, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const FormId g = forms[rng() % forms.size()], h = forms[rng() % forms.size()];
    const auto tg = oracle::from_arena(a, g), th = oracle::from_arena(a, h);
    ASSERT_EQ(oracle::key(oracle::from_arena(a, a.sum(g, h))), oracle::key(oracle::sum(tg, th)));
    ASSERT_EQ(oracle::key(oracle::from_arena(a, a.conjugate(g))), oracle::key(oracle::conjugate(tg)));
  }
}

TEST(Arena, MovesMatchOracleIntegers) {
  Arena a;
  for (int n = -4; n <= 4; ++n) EXPECT_EQ(oracle::key(oracle::from_arena(a, a.moves(n))), oracle::key(oracle::integer(n)));
}

TEST(Arena, RandomTriples) {
  Arena a;
  RandomForms gen(a, 99);
  for (int i = 0; i < 300; ++i) {
    const FormId g = gen.form(3), h = gen.form(3), k = gen.form(2);
    ASSERT_EQ(a.sum(a.sum(g, h), k), a.sum(g, a.sum(h, k)));
    ASSERT_EQ(a.sum(g, h), a.sum(h, g));
    ASSERT_EQ(a.conjugate(a.sum(g, h)), a.sum(a.conjugate(g), a.conjugate(h)));
  }
}

TEST(Arena, BirthdayOfSumAddsUp) {
  Arena a;
  RandomForms gen(a, 5);
  for (int i = 0; i < 200; ++i) {
    const FormId g = gen.form(3), h = gen.form(3);
    EXPECT_EQ(a.birthday(a.sum(g, h)), a.birthday(g) + a.birthday(h));
  }
}
