#include "relspan/finset/linearize.hpp"
#include "relspan/relcat/small_category.hpp"

#include "instances.hpp"
#include "monoids.hpp"

#include <gtest/gtest.h>

using namespace relspan;
using namespace relspan::relcat;
namespace t = relspan::testing;
using coalg::CoalgCat;
using finset::FinFun;
using finset::FinSetCat;

namespace {

const alg::Field Q = alg::Field::rationals();
const FinSetCat fs;

SmallCategory monoid_category(const t::FinMonoid& m) {
  const auto n = m.carrier.size;
  SmallCategory sc{1, n, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0), {m.u(0)}, {}};
  sc.comp.assign(n, std::vector<long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sc.comp[a][b] = static_cast<long>(t::mul(m, a, b));
  return sc;
}

// Preorder on n objects from a reflexive transitive relation; arrow x -> y for x <= y.
SmallCategory preorder(std::size_t n, const std::vector<std::vector<bool>>& le) {
  SmallCategory sc;
  sc.objects = n;
  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le[x][y]) {
        index[x][y] = static_cast<long>(sc.arrows++);
        sc.src.push_back(x);
        sc.tgt.push_back(y);
      }
  for (std::size_t x = 0; x < n; ++x) sc.id.push_back(static_cast<std::size_t>(index[x][x]));
  sc.comp.assign(sc.arrows, std::vector<long>(sc.arrows, -1));
  for (std::size_t a = 0; a < sc.arrows; ++a)
    for (std::size_t b = 0; b < sc.arrows; ++b)
      if (sc.src[a] == sc.tgt[b]) sc.comp[a][b] = index[sc.src[b]][sc.tgt[a]];
  return sc;
}

SmallCategory random_preorder(t::Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) le[x][y] = x == y || t::uniform(rng, 0, 2) == 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) le[x][y] = le[x][y] || (le[x][k] && le[k][y]);
  return preorder(n, le);
}

// {e, x} with xx = x
SmallCategory idempotent() { return monoid_category(t::table_monoid(2, {0, 1, 1, 1}, 0)); }

std::vector<SmallCategory> shipped() {
  return {fixtures::discrete(0), fixtures::discrete(1), fixtures::discrete(3), fixtures::poset_01(),
          fixtures::cyclic2(),   fixtures::groupoid5(), idempotent()};
}

std::size_t composable_pairs(const SmallCategory& sc) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < sc.arrows; ++a)
    for (std::size_t b = 0; b < sc.arrows; ++b) n += sc.src[a] == sc.tgt[b];
  return n;
}

TEST(SpanTensor, UnitSpanOnEitherSide) {
  t::Rng rng(t::seed_from_env());
  for (int n = 0; n < 40; ++n) {
    const auto b = t::uniform(rng, 1, 3);
    const auto a = t::uniform(rng, 0, 4);
    const auto x = make_span_over(fs, t::random_fun(rng, a, b), t::random_fun(rng, a, b));
    const auto u = unit_span(fs, x.base);
    const auto left = span_tensor(fs, u, x);
    const auto iso_l = relpull::unit_iso(fs, left.pb, relpull::Side::right);
    EXPECT_TRUE(relpull::is_two_sided_inverse(fs, iso_l));
    EXPECT_EQ(fs.compose(x.t, iso_l.forward), left.span.t);
    EXPECT_EQ(fs.compose(x.s, iso_l.forward), left.span.s);
    const auto right = span_tensor(fs, x, u);
    const auto iso_r = relpull::unit_iso(fs, right.pb, relpull::Side::left);
    EXPECT_TRUE(relpull::is_two_sided_inverse(fs, iso_r));
    EXPECT_EQ(fs.compose(x.t, iso_r.forward), right.span.t);
    EXPECT_EQ(fs.compose(x.s, iso_r.forward), right.span.s);
  }
}

TEST(SpanTensor, ApexIsComposablePairs) {
  t::Rng rng(t::seed_from_env() + 1);
  for (int n = 0; n < 60; ++n) {
    const auto b = t::uniform(rng, 1, 3);
    const auto a = t::uniform(rng, 0, 4);
    const auto tt = t::random_fun(rng, a, b);
    const auto ss = t::random_fun(rng, a, b);
    const auto x = make_span_over(fs, tt, ss);
    std::size_t pairs = 0;
    std::size_t triples = 0;
    for (std::size_t p = 0; p < a; ++p)
      for (std::size_t q = 0; q < a; ++q) {
        if (ss(p) != tt(q)) continue;
        ++pairs;
        for (std::size_t r = 0; r < a; ++r) triples += ss(q) == tt(r);
      }
    EXPECT_EQ(span_power(fs, x, 2).apex.size, pairs);
    EXPECT_EQ(span_power(fs, x, 3).apex.size, triples);
    EXPECT_EQ(span_power(fs, x, 1).apex.size, a);
    const auto zero = span_power(fs, x, 0);
    EXPECT_EQ(zero.apex, x.base);
    EXPECT_EQ(zero.t, fs.identity(x.base));
  }
}

TEST(SpanTensor, PosetArrowsSquared) {
  const auto rc = from_small_category(fixtures::poset_01());
  EXPECT_EQ(rc.span.apex.size, 3u);
  EXPECT_EQ(span_power(fs, rc.span, 2).apex.size, 4u);
  EXPECT_EQ(span_power(fs, rc.span, 2).apex.size, composable_pairs(fixtures::poset_01()));
}

TEST(SpanTensor, CoalgPowersOfLinearizedGraphs) {
  const CoalgCat cc(Q);
  t::Rng rng(t::seed_from_env() + 2);
  for (int n = 0; n < 20; ++n) {
    const auto b = t::uniform(rng, 1, 3);
    const auto a = t::uniform(rng, 1, 4);
    const auto tt = t::random_fun(rng, a, b);
    const auto ss = t::random_fun(rng, a, b);
    const auto xf = make_span_over(fs, tt, ss);
    const auto xc = make_span_over(cc, finset::linearize_fun(tt, Q), finset::linearize_fun(ss, Q));
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(span_power(cc, xc, k).apex.dim(), span_power(fs, xf, k).apex.size);
  }
}

TEST(SpanTensor, Errors) {
  const auto x = make_span_over(fs, fs.identity({2}), fs.identity({2}));
  const auto y = make_span_over(fs, fs.identity({3}), fs.identity({3}));
  try {
    span_tensor(fs, x, y);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BaseMismatch);
  }
  const CoalgCat cc(Q);
  const auto p = t::path_coalgebra(Q);
  try {
    make_span_over(cc, cc.identity(p), cc.identity(p));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BaseNotInClass);
  }
  // e0 -> g0, e1 -> g1, x -> 0 separates the ends of the path
  const coalg::CoalgMap ends(p, coalg::group_like(Q, 2), alg::Matrix::from_ints(Q, 2, 3, {1, 0, 0, 0, 1, 0}));
  ASSERT_TRUE(coalg::check_coalg_map(ends).ok());
  try {
    make_span_over(cc, ends, ends);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LegsNotInClass);
  }
}

TEST(RelativeCategory, ShippedFixturesPassInBothInstances) {
  const CoalgCat cc(Q);
  for (const auto& sc : shipped()) {
    ASSERT_FALSE(category_violation(sc));
    const auto rc = from_small_category(sc);
    const auto r = check_relative_category(fs, rc);
    EXPECT_TRUE(r.ok()) << r.first_failure()->name;
    EXPECT_EQ(composition_table(rc), sc.comp);
    const auto lin = linearize_relcat(rc, Q);
    const auto rl = check_relative_category(cc, lin);
    EXPECT_TRUE(rl.ok()) << rl.first_failure()->name << ": " << rl.first_failure()->witness;
    EXPECT_EQ(lin.span.apex.dim(), sc.arrows);
    EXPECT_EQ(lin.pb.apex.dim(), composable_pairs(sc));
  }
}

TEST(RelativeCategory, FiniteFieldLinearization) {
  const CoalgCat cc(alg::Field::prime(3));
  for (const auto& sc : shipped())
    EXPECT_TRUE(check_relative_category(cc, linearize_relcat(from_small_category(sc), alg::Field::prime(3))).ok());
}

TEST(RelativeCategory, OneObjectMonoidHasFullProduct) {
  const auto rc = from_small_category(fixtures::cyclic2());
  EXPECT_EQ(rc.pb.apex.size, 4u);
  const auto lin = linearize_relcat(rc, Q);
  EXPECT_EQ(lin.pb.apex.dim(), 4u);
}

TEST(RelativeCategory, LinearizedCompositionIsZeroOne) {
  const auto lin = linearize_relcat(from_small_category(fixtures::poset_01()), Q);
  EXPECT_EQ(lin.d.lin.rows(), 3u);
  EXPECT_EQ(lin.d.lin.cols(), 4u);
  for (const auto& e : lin.d.lin.entries()) EXPECT_EQ(e.value, alg::Scalar::one(Q));
  EXPECT_EQ(lin.d.lin.nnz(), 4u);

  const CoalgCat cc(Q);
  const auto disc = linearize_relcat(from_small_category(fixtures::discrete(3)), Q);
  EXPECT_TRUE(cc.equal(disc.d, relpull::unit_iso(cc, disc.pb, relpull::Side::left).forward));
}

TEST(RelativeCategory, RandomPreordersAndMonoids) {
  const CoalgCat cc(Q);
  t::Rng rng(t::seed_from_env() + 3);
  std::vector<SmallCategory> cats;
  for (int n = 0; n < 15; ++n) cats.push_back(random_preorder(rng, t::uniform(rng, 1, 3)));
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& m : t::all_monoids(k)) cats.push_back(monoid_category(m));
  for (const auto& sc : cats) {
    ASSERT_FALSE(category_violation(sc));
    const auto rc = from_small_category(sc);
    EXPECT_TRUE(check_relative_category(fs, rc).ok());
    EXPECT_EQ(composition_table(rc), sc.comp);
    EXPECT_TRUE(check_relative_category(cc, linearize_relcat(rc, Q)).ok());
  }
}

TEST(RelativeCategory, ViolationsFailTheNamedCheck) {
  const CoalgCat cc(Q);
  for (const auto& v : fixtures::violations()) {
    const auto w = category_violation(v.tables);
    ASSERT_TRUE(w) << v.name;
    try {
      from_small_category(v.tables);
      ADD_FAILURE() << v.name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotACategory);
    }
    const auto rc = relative_category_from_tables(v.tables);
    const auto r = check_relative_category(fs, rc);
    EXPECT_TRUE(r.has_failure(v.axiom)) << v.name;
    for (const auto& c : r.checks())
      if (!c.passed) EXPECT_FALSE(c.witness.empty()) << v.name << " " << c.name;
    EXPECT_TRUE(check_relative_category(cc, linearize_relcat(rc, Q)).has_failure(v.axiom)) << v.name;
  }
}

TEST(RelativeCategory, NotACategoryNamesTheWitness) {
  auto unit = fixtures::cyclic2();
  unit.comp[0][1] = 0;
  EXPECT_EQ(category_violation(unit).value_or(""), "left unit fails at arrow 1");
  const auto magma = fixtures::violations()[3].tables;
  EXPECT_NE(category_violation(magma).value_or("").find("associativity fails at triple ("), std::string::npos);
  auto partial = fixtures::poset_01();
  partial.comp[2][2] = 2;
  EXPECT_NE(category_violation(partial).value_or("").find("defined exactly when"), std::string::npos);
}

TEST(RelativeCategory, ShapeMismatch) {
  const auto rc = from_small_category(fixtures::poset_01());
  auto bad = rc;
  bad.i = fs.identity({2});
  try {
    check_relative_category(fs, bad);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

// All functors between two small categories, by brute force.
std::vector<RelativeFunctor<FinSetCat>> all_functors(const FinRelCat& src, const FinRelCat& tgt) {
  std::vector<RelativeFunctor<FinSetCat>> out;
  for (const auto& b : t::all_functions(src.span.base.size, tgt.span.base.size))
    for (const auto& a : t::all_functions(src.span.apex.size, tgt.span.apex.size)) {
      const RelativeFunctor<FinSetCat> fn{b, a};
      if (check_relative_functor(fs, fn, src, tgt).ok()) out.push_back(fn);
    }
  return out;
}

TEST(RelativeFunctor, Examples) {
  const auto poset = from_small_category(fixtures::poset_01());
  const RelativeFunctor<FinSetCat> id{fs.identity(poset.span.base), fs.identity(poset.span.apex)};
  EXPECT_TRUE(check_relative_functor(fs, id, poset, poset).ok());

  const auto point = from_small_category(fixtures::discrete(1));
  for (const auto& sc : shipped()) {
    const auto rc = from_small_category(sc);
    const RelativeFunctor<FinSetCat> to_point{finset::constant(rc.span.base, {1}, 0), finset::constant(rc.span.apex, {1}, 0)};
    EXPECT_TRUE(check_relative_functor(fs, to_point, rc, point).ok());
  }

  // a sends the identity to the idempotent: only the unit law breaks
  const auto idem = from_small_category(idempotent());
  const RelativeFunctor<FinSetCat> broken{fs.identity({1}), finset::constant({2}, {2}, 1)};
  const auto r = check_relative_functor(fs, broken, idem, idem);
  EXPECT_TRUE(r.has_failure("unit"));
  EXPECT_FALSE(r.has_failure("composition"));
  EXPECT_FALSE(r.has_failure("span.source"));
  EXPECT_NE(r.first_failure()->witness.find("0"), std::string::npos);

  try {
    check_relative_functor(fs, id, poset, point);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

TEST(RelativeFunctor, CompositesOfFunctorsAreFunctors) {
  std::vector<FinRelCat> cats;
  for (const auto& sc : {fixtures::discrete(1), fixtures::discrete(2), fixtures::poset_01(), fixtures::cyclic2(), idempotent()})
    cats.push_back(from_small_category(sc));
  std::size_t composed = 0;
  for (const auto& x : cats)
    for (const auto& y : cats)
      for (const auto& z : cats) {
        const auto fxy = all_functors(x, y);
        const auto fyz = all_functors(y, z);
        for (const auto& f : fxy)
          for (const auto& g : fyz) {
            EXPECT_TRUE(check_relative_functor(fs, compose_functors(fs, g, f), x, z).ok());
            ++composed;
          }
      }
  EXPECT_GT(composed, 100u);
}

TEST(RelativeFunctor, LinearizedFunctorsPass) {
  const CoalgCat cc(Q);
  const auto poset = from_small_category(fixtures::poset_01());
  const auto idem = from_small_category(idempotent());
  const auto lp = linearize_relcat(poset, Q);
  const auto li = linearize_relcat(idem, Q);
  for (const auto& f : all_functors(poset, idem)) {
    const RelativeFunctor<CoalgCat> lf{finset::linearize_fun(f.b, Q), finset::linearize_fun(f.a, Q)};
    EXPECT_TRUE(check_relative_functor(cc, lf, lp, li).ok());
  }
  const RelativeFunctor<CoalgCat> broken{cc.identity(li.span.base), finset::linearize_fun(finset::constant({2}, {2}, 1), Q)};
  EXPECT_TRUE(check_relative_functor(cc, broken, li, li).has_failure("unit"));
}

}  // namespace
