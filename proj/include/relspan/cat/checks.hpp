#pragma once

#include "relspan/cat/span.hpp"
#include "relspan/error.hpp"
#include "relspan/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace relspan::cat {

/// Both identity-padded spans A <= A -> B and B <- C => C are members.
template <BaseCategory B>
std::optional<std::string> legs_violation(const B& base, const SpanClass<B>& cls, const Cospan<B>& cs) {
  if (auto w = cls.violation({base.identity(base.dom(cs.left)), cs.left})) return "left leg: " + *w;
  if (auto w = cls.violation({cs.right, base.identity(base.dom(cs.right))})) return "right leg: " + *w;
  return std::nullopt;
}

template <BaseCategory B>
bool legs_in_class(const B& base, const SpanClass<B>& cls, const Cospan<B>& cs) {
  return !legs_violation(base, cls, cs).has_value();
}

// (POST) on one instance: (f2.f, g2.g) is a member.
template <BaseCategory B>
bool check_post_instance(const B& base, const SpanClass<B>& cls, const Span<B>& s, const Morphism<B>& f2,
                         const Morphism<B>& g2) {
  return cls.contains({base.compose(f2, s.left), base.compose(g2, s.right)});
}

// (PRE) on one instance: (f.h, g.h) is a member.
template <BaseCategory B>
bool check_pre_instance(const B& base, const SpanClass<B>& cls, const Span<B>& s, const Morphism<B>& h) {
  return cls.contains({base.compose(s.left, h), base.compose(s.right, h)});
}

// (MULTIPLICATIVE) on one instance.
template <BaseCategory B>
bool check_monoidal_instance(const B& base, const SpanClass<B>& cls, const Span<B>& s1, const Span<B>& s2) {
  return cls.contains({base.tensor(s1.left, s2.left), base.tensor(s1.right, s2.right)});
}

// (UNITAL) on one instance; f and g have domain I.
template <BaseCategory B>
bool check_unital_instance(const B& base, const SpanClass<B>& cls, const Morphism<B>& f, const Morphism<B>& g) {
  if (!base.same_object(base.dom(f), base.unit()) || !base.same_object(base.dom(g), base.unit()))
    throw Error(Errc::WrongShape, "unital instance needs spans out of the monoidal unit");
  return cls.contains({f, g});
}

/// Split epimorphism s: A -> B with section i: B -> A. Checks the cycle
/// (a) => (b) => (c) => (a) among
///   (a) B <= B => B,
///   (b) every probe span out of B,
///   (c) A <-i- B => B,
/// and that A <= A -s-> B in the class forces (c).
template <BaseCategory B>
Report split_epi_class_facts(const B& base, const SpanClass<B>& cls, const Morphism<B>& i, const Morphism<B>& s,
                             const std::vector<Span<B>>& probes) {
  const auto b_obj = base.dom(i);
  const auto a_obj = base.cod(i);
  if (!base.equal(base.compose(s, i), base.identity(b_obj)))
    throw Error(Errc::NotASection, "s.i is not the identity: " +
                                       base.difference(base.compose(s, i), base.identity(b_obj)));

  const auto id_b = base.identity(b_obj);
  const bool a = cls.contains({id_b, id_b});
  const bool c = cls.contains({i, id_b});
  const bool hyp2 = cls.contains({base.identity(a_obj), s});

  std::vector<Span<B>> all = probes;
  all.push_back({id_b, id_b});
  all.push_back({i, id_b});
  std::string failing_probe;
  for (std::size_t k = 0; k < all.size() && failing_probe.empty(); ++k) {
    if (!base.same_object(base.dom(all[k].left), b_obj) || !base.same_object(base.dom(all[k].right), b_obj))
      throw Error(Errc::WrongShape, "probe " + std::to_string(k) + " is not a span out of B");
    if (auto w = cls.violation(all[k])) failing_probe = "probe " + std::to_string(k) + ": " + *w;
  }
  const bool b = failing_probe.empty();

  Report r;
  r.add("a_implies_b", !a || b, failing_probe);
  r.add("b_implies_c", !b || c, "A <-i- B => B not in class");
  r.add("c_implies_a", !c || a, "B <= B => B not in class");
  r.add("part2_implies_c", !hyp2 || c, "A <= A -s-> B in class but A <-i- B => B not");
  return r;
}

}  // namespace relspan::cat
