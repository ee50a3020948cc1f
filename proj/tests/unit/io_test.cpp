#include "relspan/io/document.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace relspan;
using io::Document;
using io::json;
namespace t = relspan::testing;

namespace {

const alg::Field Q = alg::Field::rationals();
const alg::Field F5 = alg::Field::prime(5);

std::string fixture(const std::string& name) { return std::string(RELSPAN_FIXTURES) + "/" + name; }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::InternalSolveFailure;
}

TEST(Field, JsonForms) {
  EXPECT_EQ(io::field_from_json(json("Q")), Q);
  EXPECT_EQ(io::field_from_json(json::parse(R"({"Fp": 5})")), F5);
  EXPECT_EQ(io::field_from_json(io::field_to_json(F5)), F5);
  EXPECT_EQ(io::field_to_json(Q), json("Q"));
  EXPECT_EQ(code_of([] { io::field_from_json(json("R")); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::field_from_json(json::parse(R"({"Fp": 6})")); }), Errc::ParseError);
}

TEST(Matrix, RoundTripAndFractions) {
  const auto m = io::matrix_from_json(json::parse(R"({"rows": 2, "cols": 2, "entries": [[1, "-1/2"], [0, "3/6"]]})"), Q);
  EXPECT_EQ(m.at(0, 1), alg::Scalar::parse(Q, "-1/2"));
  EXPECT_EQ(m.at(1, 1), alg::Scalar::parse(Q, "1/2"));
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m), Q), m);

  const auto r = io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 2, "entries": [[7, -1]]})"), F5);
  EXPECT_EQ(r.at(0, 0), alg::Scalar::from_int(F5, 2));
  EXPECT_EQ(r.at(0, 1), alg::Scalar::from_int(F5, 4));

  t::Rng rng(t::seed_from_env());
  for (int n = 0; n < 30; ++n) {
    const auto a = t::random_matrix(rng, n % 2 ? Q : F5, t::uniform(rng, 0, 4), t::uniform(rng, 0, 4), 9);
    EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(a), a.field()), a);
  }
}

TEST(Matrix, Errors) {
  EXPECT_EQ(code_of([] { io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 2, "entries": [[1]]})"), Q); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [["x"]]})"), Q); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [["1/0"]]})"), Q); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [[1]], "field": {"Fp": 3}})"), Q);
            }),
            Errc::ParseError);
}

TEST(Document, SingleEntityFile) {
  const auto doc = Document::load(fixture("grouplike_coalgebra.json"));
  EXPECT_EQ(doc.names(), std::vector<std::string>{"main"});
  EXPECT_EQ(doc.kind("main"), "coalgebra");
  EXPECT_EQ(doc.coalgebra("main"), coalg::group_like(Q, 2));
  EXPECT_EQ(doc.field(), Q);
}

TEST(Document, FieldOverrideWins) {
  const auto doc = Document::load(fixture("grouplike_coalgebra.json"), F5);
  EXPECT_EQ(doc.field(), F5);
  EXPECT_EQ(doc.coalgebra("main").field(), F5);
  const auto text = R"({"field": {"Fp": 3}, "entities": {"x": {"kind": "set", "size": 2}}})";
  EXPECT_EQ(Document::parse(text).field(), alg::Field::prime(3));
  EXPECT_EQ(Document::parse(text, Q).field(), Q);
  // no field at all means Q
  EXPECT_EQ(Document::parse(R"({"entities": {}})").field(), Q);
}

TEST(Document, NamedEntities) {
  const auto doc = Document::load(fixture("cospans.json"));
  const auto names = doc.names();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(doc.kind("grouplike"), "cospan");
  EXPECT_EQ(doc.cospan("grouplike"), (std::pair<std::string, std::string>{"f", "g"}));
  EXPECT_EQ(doc.function("f"), finset::FinFun({3}, {2}, {0, 1, 1}));
  const auto m = doc.coalg_map("lin_f");
  EXPECT_EQ(m.src, coalg::group_like(Q, 3));
  EXPECT_TRUE(coalg::check_coalg_map(m).ok());

  const auto mons = Document::load(fixture("monoids.json"));
  EXPECT_EQ(mons.finset_monoid("c2").m, finset::FinFun({4}, {2}, {0, 1, 1, 0}));
  EXPECT_EQ(mons.monoid_morphism("p").map, "mod2");
  EXPECT_EQ(mons.bialgebra("kc2").carrier, coalg::group_like(Q, 2));

  const auto chains = Document::load(fixture("chains.json"));
  EXPECT_EQ(chains.chain("triangle"), (std::vector<std::string>{"f1", "g1"}));

  const auto cats = Document::load(fixture("poset_relcat.json"));
  const auto sc = cats.small_category("poset");
  EXPECT_EQ(sc.arrows, 3u);
  EXPECT_EQ(sc.comp[0][1], -1);
}

TEST(Document, InlineFunctionsAndSets) {
  const auto doc = Document::parse(R"({"entities": {
    "s": {"kind": "set", "size": 3},
    "f": {"kind": "function", "dom": 2, "cod": 3, "table": [2, 0]}}})");
  EXPECT_EQ(doc.set("s").size, 3u);
  EXPECT_EQ(doc.function("f")(0), 2u);
}

TEST(Document, Errors) {
  EXPECT_EQ(code_of([] { Document::load(fixture("malformed.json")); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { Document::load(fixture("does_not_exist.json")); }), Errc::ParseError);
  const auto unknown = Document::load(fixture("unknown_kind.json"));
  EXPECT_EQ(code_of([&] { unknown.kind(unknown.names().front()); }), Errc::UnknownKind);
  const auto doc = Document::load(fixture("cospans.json"));
  EXPECT_EQ(code_of([&] { doc.coalgebra("f"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { doc.function("missing"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] {
              Document::parse(R"({"entities": {"f": {"kind": "function", "dom": 2, "cod": 1, "table": [0, 3]}}})").function("f");
            }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] {
              Document::parse(R"({"entities": {"c": {"kind": "coalgebra", "dim": 3,
                "delta": {"rows": 1, "cols": 1, "entries": [[1]]}, "epsilon": {"rows": 1, "cols": 1, "entries": [[1]]}}}})")
                  .coalgebra("c");
            }),
            Errc::ParseError);
}

}  // namespace
