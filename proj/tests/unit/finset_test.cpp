#include "relspan/coalg/coalgebra.hpp"
#include "relspan/finset/finset.hpp"
#include "relspan/finset/linearize.hpp"
#include "relspan/mon/monoid.hpp"

#include "gen.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace relspan;
using namespace relspan::finset;
namespace t = relspan::testing;

namespace {

const alg::Field Q = alg::Field::rationals();

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const FinPullback& pb) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < pb.apex.size; ++k) out.push_back({pb.p_left(k), pb.p_right(k)});
  return out;
}

TEST(Pullback, SingletonBaseIsProduct) {
  const auto pb = pullback(constant({3}, {1}, 0), constant({4}, {1}, 0));
  EXPECT_EQ(pb.apex.size, 12u);
  EXPECT_EQ(pairs_of(pb).front(), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(pairs_of(pb).back(), (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(Pullback, IdentitiesGiveDiagonal) {
  const FinSetCat fs;
  const auto pb = pullback(fs.identity({3}), fs.identity({3}));
  EXPECT_EQ(pairs_of(pb), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_TRUE(fs.inverse(pb.p_left));
}

TEST(Pullback, WorkedExample) {
  const auto pb = pullback(FinFun({2}, {2}, {0, 1}), FinFun({3}, {2}, {0, 1, 0}));
  EXPECT_EQ(pairs_of(pb), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 2}, {1, 1}}));
}

TEST(Pullback, CodomainMismatch) {
  try {
    pullback(FinFun({1}, {2}, {0}), FinFun({1}, {3}, {0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CodomainMismatch);
  }
}

TEST(UniversalFactor, Examples) {
  const FinSetCat fs;
  const FinFun f({2}, {2}, {0, 1});
  const FinFun g({3}, {2}, {0, 1, 0});
  const auto pb = pullback(f, g);
  EXPECT_EQ(universal_factor(pb, pb.p_left, pb.p_right), fs.identity(pb.apex));
  // the pair (0, 2) sits at index 1
  EXPECT_EQ(universal_factor(pb, element({2}, 0), element({3}, 2)), element({3}, 1));
  const auto h = universal_factor(pb, FinFun({0}, {2}, {}), FinFun({0}, {3}, {}));
  EXPECT_EQ(h.dom().size, 0u);
  EXPECT_EQ(h.cod(), pb.apex);
  try {
    universal_factor(pb, element({2}, 0), element({3}, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SquareDoesNotCommute);
  }
}

TEST(Pullback, MatchesOracleAndIsUniversal) {
  const FinSetCat fs;
  t::Rng rng(t::seed_from_env());
  for (int n = 0; n < 300; ++n) {
    const auto b = t::uniform(rng, 1, 4);
    const auto f = t::random_fun(rng, t::uniform(rng, 0, 4), b);
    const auto g = t::random_fun(rng, t::uniform(rng, 0, 4), b);
    const auto pb = pullback(f, g);
    EXPECT_EQ(pairs_of(pb), t::oracle::finset_pullback(f, g));
    EXPECT_EQ(fs.compose(f, pb.p_left), fs.compose(g, pb.p_right));
    EXPECT_TRUE(fs.is_mono(pb.pairing));
    // random commuting square out of X: any h gives one; the filler recovers h
    if (pb.apex.size == 0) continue;
    const auto h = t::random_fun(rng, t::uniform(rng, 0, 3), pb.apex.size);
    EXPECT_EQ(universal_factor(pb, fs.compose(pb.p_left, h), fs.compose(pb.p_right, h)), h);
  }
}

TEST(FinsetMonoid, Examples) {
  const FinFun z2({4}, {2}, {0, 1, 1, 0});
  const auto r = finset_monoid_check({2}, z2, 0);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(finset_monoid_check({1}, FinFun({1}, {1}, {0}), 0).ok());
  // 1 + 0 corrupted to 0
  const auto bad = finset_monoid_check({2}, FinFun({4}, {2}, {0, 1, 0, 0}), 0);
  EXPECT_FALSE(bad.ok());
  ASSERT_TRUE(bad.first_failure());
  EXPECT_EQ(bad.first_failure()->name, "associativity");
  EXPECT_NE(bad.first_failure()->witness.find("("), std::string::npos);
}

TEST(FinsetMonoid, AgreesWithGenericCheck) {
  t::Rng rng(t::seed_from_env() + 1);
  const FinSetCat fs;
  for (int n = 0; n < 200; ++n) {
    const auto m = t::uniform(rng, 1, 3);
    const auto mult = t::random_fun(rng, m * m, m);
    const auto u = t::uniform(rng, 0, m - 1);
    const bool direct = finset_monoid_check({m}, mult, u).ok();
    const bool generic = mon::check_monoid(fs, mon::MonoidObj<FinSetCat>{{m}, mult, element({m}, u)}).ok();
    EXPECT_EQ(direct, generic);
  }
}

TEST(Linearize, Examples) {
  const auto k1 = linearize_obj({1}, Q);
  EXPECT_EQ(k1.delta(), alg::Matrix::identity(Q, 1));
  EXPECT_EQ(k1.epsilon(), alg::Matrix::identity(Q, 1));
  const auto k2 = linearize_obj({2}, Q);
  EXPECT_EQ(k2.delta(), alg::Matrix::from_ints(Q, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1}));
  const FinSetCat fs;
  EXPECT_EQ(linearize_fun(fs.identity({3}), Q).lin, alg::Matrix::identity(Q, 3));
}

TEST(Linearize, GroupLikeCocommutativeAndFunctorial) {
  const FinSetCat fs;
  const coalg::CoalgCat cc(Q);
  t::Rng rng(t::seed_from_env() + 2);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto c = linearize_obj({n}, Q);
    EXPECT_TRUE(coalg::check_coalgebra(c).ok());
    EXPECT_FALSE(t::oracle::coalgebra_violation(c));
    EXPECT_TRUE(coalg::is_cocommutative(c));
    EXPECT_TRUE(t::oracle::is_cocommutative(c));
  }
  for (int n = 0; n < 100; ++n) {
    const auto f = t::random_fun(rng, t::uniform(rng, 0, 4), t::uniform(rng, 1, 4));
    const auto g = t::random_fun(rng, f.cod().size, t::uniform(rng, 1, 4));
    EXPECT_TRUE(cc.equal(linearize_fun(fs.compose(g, f), Q), cc.compose(linearize_fun(g, Q), linearize_fun(f, Q))));
    EXPECT_TRUE(t::oracle::is_coalg_map(linearize_fun(f, Q)));
  }
}

TEST(FinFun, Validation) {
  try {
    FinFun({2}, {2}, {0, 2});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
  try {
    FinFun({2}, {2}, {0});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

}  // namespace
