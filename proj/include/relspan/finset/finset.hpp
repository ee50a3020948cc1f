#pragma once

#include "relspan/cat/span.hpp"
#include "relspan/report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace relspan::finset {

/// The set {0, ..., size-1}.
struct FinSetObj {
  std::size_t size = 0;
  friend bool operator==(FinSetObj, FinSetObj) = default;
};

/// Total function between finite sets, stored as a table.
class FinFun {
 public:
  FinFun() = default;
  // Throws ShapeMismatch on a wrong table length or an out-of-range value.
  FinFun(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table);

  FinSetObj dom() const noexcept { return dom_; }
  FinSetObj cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  friend bool operator==(const FinFun&, const FinFun&) = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  std::vector<std::size_t> table_;
};

/// Finite sets with the Cartesian monoidal structure; (a, b) in A x B has
/// index a * |B| + b. Every span is in the class.
class FinSetCat {
 public:
  using Object = FinSetObj;
  using Morphism = FinFun;

  FinFun identity(FinSetObj x) const;
  FinFun compose(const FinFun& g, const FinFun& f) const;
  bool equal(const FinFun& a, const FinFun& b) const { return a == b; }
  FinSetObj dom(const FinFun& f) const { return f.dom(); }
  FinSetObj cod(const FinFun& f) const { return f.cod(); }
  bool same_object(FinSetObj a, FinSetObj b) const { return a == b; }
  FinSetObj tensor(FinSetObj a, FinSetObj b) const { return {a.size * b.size}; }
  FinFun tensor(const FinFun& f, const FinFun& g) const;
  FinSetObj unit() const { return {1}; }
  FinFun symmetry(FinSetObj a, FinSetObj b) const;
  FinFun diagonal(FinSetObj a) const;
  std::optional<std::string> morphism_defect(const FinFun&) const { return std::nullopt; }
  std::string difference(const FinFun& a, const FinFun& b) const;
  bool is_mono(const FinFun& f) const;
  bool is_epi(const FinFun& f) const;
  std::optional<FinFun> inverse(const FinFun& f) const;
  std::optional<FinFun> lift(const FinFun& mono, const FinFun& target) const;

  cat::SpanClass<FinSetCat> span_class() const { return cat::all_spans<FinSetCat>(); }
  cat::RelPullback<FinSetCat> construct_pullback(const FinFun& f, const FinFun& g) const;
  FinFun factor(const cat::RelPullback<FinSetCat>& pb, const FinFun& a, const FinFun& c) const;
};

using FinPullback = cat::RelPullback<FinSetCat>;

/// Matching pairs (a, c) with f(a) = g(c) in lexicographic order.
/// Throws CodomainMismatch.
FinPullback pullback(const FinFun& f, const FinFun& g);

/// The unique h with pA.h = a and pC.h = c; throws SquareDoesNotCommute.
FinFun universal_factor(const FinPullback& pb, const FinFun& a, const FinFun& c);

/// Associativity and two-sided unit of a multiplication table on M.
Report finset_monoid_check(FinSetObj m, const FinFun& mult, std::size_t unit);

FinFun constant(FinSetObj dom, FinSetObj cod, std::size_t value);
FinFun element(FinSetObj cod, std::size_t value);

}  // namespace relspan::finset
