#pragma once

#include <concepts>
#include <optional>
#include <string>

namespace relspan::cat {

/// A symmetric monoidal category whose hom-sets admit exact equality.
/// Morphisms carry their domain and codomain; the monoidal structure is
/// strict on the representation (associators and unitors are identities).
template <class B>
concept BaseCategory = requires(const B& base, const typename B::Object& o, const typename B::Morphism& m) {
  { base.identity(o) } -> std::same_as<typename B::Morphism>;
  { base.compose(m, m) } -> std::same_as<typename B::Morphism>;
  { base.equal(m, m) } -> std::same_as<bool>;
  { base.dom(m) } -> std::same_as<typename B::Object>;
  { base.cod(m) } -> std::same_as<typename B::Object>;
  { base.same_object(o, o) } -> std::same_as<bool>;
  { base.tensor(o, o) } -> std::same_as<typename B::Object>;
  { base.tensor(m, m) } -> std::same_as<typename B::Morphism>;
  { base.unit() } -> std::same_as<typename B::Object>;
  { base.symmetry(o, o) } -> std::same_as<typename B::Morphism>;
  // Comonoid structure of an object; a morphism of the underlying category
  // which need not be a morphism of the base itself.
  { base.diagonal(o) } -> std::same_as<typename B::Morphism>;
  // Structural validity of a morphism (e.g. comonoid morphism axioms).
  { base.morphism_defect(m) } -> std::same_as<std::optional<std::string>>;
  // Where two parallel morphisms differ, for failure reports.
  { base.difference(m, m) } -> std::same_as<std::string>;
  { base.is_mono(m) } -> std::same_as<bool>;
  { base.is_epi(m) } -> std::same_as<bool>;
  { base.inverse(m) } -> std::same_as<std::optional<typename B::Morphism>>;
  // Some h with mono.h = target, when one exists.
  { base.lift(m, m) } -> std::same_as<std::optional<typename B::Morphism>>;
};

template <class B>
using Object = typename B::Object;
template <class B>
using Morphism = typename B::Morphism;

// g.f; throws CompositionMismatch.
template <BaseCategory B, class... Ms>
Morphism<B> compose_all(const B& base, const Morphism<B>& g, const Ms&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return g;
  } else {
    return base.compose(g, compose_all(base, rest...));
  }
}

}  // namespace relspan::cat
