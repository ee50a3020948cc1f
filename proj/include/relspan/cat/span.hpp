#pragma once

#include "relspan/cat/category.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace relspan::cat {

/// X <-left- apex -right-> Y
template <class B>
struct Span {
  typename B::Morphism left;
  typename B::Morphism right;
};

/// A -left-> B <-right- C
template <class B>
struct Cospan {
  typename B::Morphism left;
  typename B::Morphism right;
};

/// A class of spans given by a membership predicate. The predicate returns
/// nullopt for members and a witness for non-members.
template <class B>
struct SpanClass {
  std::string name;
  std::function<std::optional<std::string>(const Span<B>&)> violation;

  bool contains(const Span<B>& s) const { return !violation(s).has_value(); }
};

template <class B>
SpanClass<B> all_spans() {
  return {"all", [](const Span<B>&) -> std::optional<std::string> { return std::nullopt; }};
}

/// The relative pullback square over a cospan, with the paired projections
/// (p_left (x) p_right).diagonal as joint-mono certificate.
template <class B>
struct RelPullback {
  Cospan<B> cospan;
  typename B::Object apex;
  typename B::Morphism p_left;
  typename B::Morphism p_right;
  typename B::Morphism pairing;

  Span<B> span() const { return {p_left, p_right}; }
};

/// A base category that constructs relative pullbacks for its own class.
template <class B>
concept PullbackCategory = BaseCategory<B> && requires(const B& base, const Morphism<B>& m, const RelPullback<B>& pb) {
  { base.span_class() } -> std::same_as<SpanClass<B>>;
  { base.construct_pullback(m, m) } -> std::same_as<RelPullback<B>>;
  // Universal filler against a class member; throws SquareDoesNotCommute or
  // SpanNotInClass.
  { base.factor(pb, m, m) } -> std::same_as<Morphism<B>>;
};

}  // namespace relspan::cat
