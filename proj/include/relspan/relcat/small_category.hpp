#pragma once

#include "relspan/coalg/coalgebra.hpp"
#include "relspan/finset/finset.hpp"
#include "relspan/relcat/relcat.hpp"

#include <string>
#include <vector>

namespace relspan::relcat {

/// Arrows 0..arrows-1 with src/tgt objects and identities; comp[a][b] is
/// a.b, defined (>= 0) exactly when src[a] == tgt[b], and -1 otherwise.
struct SmallCategory {
  std::size_t objects = 0;
  std::size_t arrows = 0;
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::vector<std::size_t> id;
  std::vector<std::vector<long>> comp;
};

using FinRelCat = RelativeCategory<finset::FinSetCat>;
using CoalgRelCat = RelativeCategory<coalg::CoalgCat>;

/// nullopt for a category, else the violated pair or triple.
std::optional<std::string> category_violation(const SmallCategory& sc);

/// Reads the tables into a relative category without checking the
/// category laws. Throws ShapeMismatch when the tables do not even
/// describe a map on composable pairs.
FinRelCat relative_category_from_tables(const SmallCategory& sc);

/// Throws NotACategory with the violated pair or triple.
FinRelCat from_small_category(const SmallCategory& sc);

/// comp recovered from d through the universal factorization.
std::vector<std::vector<long>> composition_table(const FinRelCat& rc);

/// Group-like linearization; the coalgebra pullback apex is matched with
/// k[A box_B A] through its universal filler.
CoalgRelCat linearize_relcat(const FinRelCat& rc, alg::Field field);

namespace fixtures {

SmallCategory discrete(std::size_t n);
SmallCategory poset_01();
SmallCategory cyclic2();  // one object, Z/2
// Objects 0, 1, 2; identities 0-2, u: 0 -> 1 and its inverse.
SmallCategory groupoid5();

// Each breaks one axiom group: the named check fails.
struct Violation {
  std::string name;
  std::string axiom;
  SmallCategory tables;
};
std::vector<Violation> violations();

}  // namespace fixtures

}  // namespace relspan::relcat
