#pragma once

#include "relspan/coalg/coalgebra.hpp"
#include "relspan/finset/finset.hpp"
#include "relspan/mon/monoid.hpp"
#include "relspan/relcat/small_category.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace relspan::io {

using json = nlohmann::json;

/// {"field": "Q" | {"Fp": p}}; throws ParseError.
alg::Field field_from_json(const json& j);
json field_to_json(alg::Field f);

/// {"rows": r, "cols": c, "entries": [[...]]}; entries are integers or
/// "a/b" strings. An embedded "field" must agree with the given one.
alg::Matrix matrix_from_json(const json& j, alg::Field field);
json matrix_to_json(const alg::Matrix& m);

json fun_to_json(const finset::FinFun& f);

/// A file of named entities, each with a "kind":
///   set, function, coalgebra, coalg_map, bialgebra, finset_monoid,
///   small_category, cospan, chain, functor_map, monoid_morphism.
/// A file with a top-level "kind" holds one entity named "main".
class Document {
 public:
  // Throws ParseError.
  static Document parse(const std::string& text, std::optional<alg::Field> field_override = std::nullopt);
  static Document load(const std::string& path, std::optional<alg::Field> field_override = std::nullopt);

  alg::Field field() const noexcept { return field_; }
  std::vector<std::string> names() const;
  // Throws ParseError for a missing entity, UnknownKind for an unknown kind.
  std::string kind(const std::string& name) const;

  finset::FinSetObj set(const std::string& name) const;
  finset::FinFun function(const std::string& name) const;
  coalg::Coalgebra coalgebra(const std::string& name) const;
  coalg::CoalgMap coalg_map(const std::string& name) const;
  mon::MonoidObj<coalg::CoalgCat> bialgebra(const std::string& name) const;
  mon::MonoidObj<finset::FinSetCat> finset_monoid(const std::string& name) const;
  relcat::SmallCategory small_category(const std::string& name) const;
  // Names of the two legs.
  std::pair<std::string, std::string> cospan(const std::string& name) const;
  std::vector<std::string> chain(const std::string& name) const;
  struct FunctorMapRef {
    std::string src;  // empty when absent
    std::string tgt;
    std::vector<std::size_t> objects;
    std::vector<std::size_t> arrows;
  };
  FunctorMapRef functor_map(const std::string& name) const;
  // Source monoid, target monoid and underlying map names.
  struct MonoidMorphismRef {
    std::string src;
    std::string tgt;
    std::string map;
  };
  MonoidMorphismRef monoid_morphism(const std::string& name) const;

 private:
  const json& entity(const std::string& name, const char* expected_kind) const;

  json root_;
  alg::Field field_;
};

}  // namespace relspan::io
