#pragma once

#include "relspan/cat/checks.hpp"
#include "relspan/mon/monoid.hpp"

#include <optional>
#include <string>

namespace relspan::relpull {

using cat::Cospan;
using cat::Morphism;
using cat::Object;
using cat::PullbackCategory;
using cat::RelPullback;
using cat::Span;

/// Relative pullback of a cospan with legs in the class. Throws LegsNotInClass.
template <PullbackCategory B>
RelPullback<B> relative_pullback(const B& base, const Morphism<B>& f, const Morphism<B>& g) {
  if (auto w = cat::legs_violation(base, base.span_class(), Cospan<B>{f, g})) throw Error(Errc::LegsNotInClass, *w);
  return base.construct_pullback(f, g);
}

/// The pairing (p_A (x) p_C).delta of the apex is mono.
template <PullbackCategory B>
bool jointly_monic(const B& base, const RelPullback<B>& pb) {
  return base.is_mono(pb.pairing);
}

/// Recomputes the filler of (k, l) by lifting (k (x) l).delta along the
/// pairing; agrees with factor() whenever both exist.
template <PullbackCategory B>
std::optional<Morphism<B>> lift_through_pairing(const B& base, const RelPullback<B>& pb, const Morphism<B>& k,
                                                const Morphism<B>& l) {
  const auto d = base.dom(k);
  return base.lift(pb.pairing, base.compose(base.tensor(k, l), base.diagonal(d)));
}

/// a box c: src -> tgt for a: A -> A', c: C -> C' over b: B -> B'.
/// Throws SquaresDoNotCommute.
template <PullbackCategory B>
Morphism<B> box(const B& base, const Morphism<B>& a, const Morphism<B>& c, const Morphism<B>& b,
                const RelPullback<B>& src, const RelPullback<B>& tgt) {
  const auto& f = src.cospan.left;
  const auto& g = src.cospan.right;
  const auto& f2 = tgt.cospan.left;
  const auto& g2 = tgt.cospan.right;
  try {
    if (!base.equal(base.compose(b, f), base.compose(f2, a)))
      throw Error(Errc::SquaresDoNotCommute, "b.f != f'.a: " + base.difference(base.compose(b, f), base.compose(f2, a)));
    if (!base.equal(base.compose(b, g), base.compose(g2, c)))
      throw Error(Errc::SquaresDoNotCommute, "b.g != g'.c: " + base.difference(base.compose(b, g), base.compose(g2, c)));
  } catch (const Error& e) {
    if (e.code() == Errc::SquaresDoNotCommute) throw;
    throw Error(Errc::SquaresDoNotCommute, e.what());
  }
  return base.factor(tgt, base.compose(a, src.p_left), base.compose(c, src.p_right));
}

template <class B>
struct Iso {
  Morphism<B> forward;
  Morphism<B> backward;
};

template <PullbackCategory B>
bool is_two_sided_inverse(const B& base, const Iso<B>& iso) {
  return base.equal(base.compose(iso.backward, iso.forward), base.identity(base.dom(iso.forward))) &&
         base.equal(base.compose(iso.forward, iso.backward), base.identity(base.cod(iso.forward)));
}

enum class Side { left, right };

/// For a cospan (f, 1_B) the projection A box_B B -> A with inverse the
/// filler of (1, f); for (1_B, g) the projection B box_B C -> C with
/// inverse the filler of (g, 1). Throws WrongShape.
template <PullbackCategory B>
Iso<B> unit_iso(const B& base, const RelPullback<B>& pb, Side side) {
  const auto& f = pb.cospan.left;
  const auto& g = pb.cospan.right;
  if (side == Side::left) {
    if (!base.equal(g, base.identity(base.cod(f)))) throw Error(Errc::WrongShape, "right leg is not an identity");
    return {pb.p_left, base.factor(pb, base.identity(base.dom(f)), f)};
  }
  if (!base.equal(f, base.identity(base.cod(g)))) throw Error(Errc::WrongShape, "left leg is not an identity");
  return {pb.p_right, base.factor(pb, g, base.identity(base.dom(g)))};
}

/// Pullbacks and associator for A -f-> B <-g- C -h-> D <-k- E.
template <class B>
struct Assoc {
  RelPullback<B> ac;      // A box_B C
  RelPullback<B> ac_e;    // (A box_B C) box_D E
  RelPullback<B> ce;      // C box_D E
  RelPullback<B> a_ce;    // A box_B (C box_D E)
  Morphism<B> l;          // ac_e -> a_ce
  Morphism<B> l_inverse;  // a_ce -> ac_e
};

/// Throws MissingPullback when one of A = A -f-> B, B <-g- C = C,
/// C = C -h-> D, D <-k- E = E is outside the class.
template <PullbackCategory B>
Assoc<B> assoc_iso(const B& base, const Morphism<B>& f, const Morphism<B>& g, const Morphism<B>& h,
                   const Morphism<B>& k) {
  const auto cls = base.span_class();
  const Span<B> needed[] = {{base.identity(base.dom(f)), f},
                            {g, base.identity(base.dom(g))},
                            {base.identity(base.dom(h)), h},
                            {k, base.identity(base.dom(k))}};
  for (std::size_t n = 0; n < 4; ++n)
    if (auto w = cls.violation(needed[n])) throw Error(Errc::MissingPullback, "span " + std::to_string(n + 1) + ": " + *w);

  Assoc<B> r{base.construct_pullback(f, g), {}, base.construct_pullback(h, k), {}, {}, {}};
  r.ac_e = base.construct_pullback(base.compose(h, r.ac.p_right), k);
  r.a_ce = base.construct_pullback(f, base.compose(g, r.ce.p_left));

  const auto to_ce = base.factor(r.ce, base.compose(r.ac.p_right, r.ac_e.p_left), r.ac_e.p_right);
  r.l = base.factor(r.a_ce, base.compose(r.ac.p_left, r.ac_e.p_left), to_ce);
  const auto to_ac = base.factor(r.ac, r.a_ce.p_left, base.compose(r.ce.p_left, r.a_ce.p_right));
  r.l_inverse = base.factor(r.ac_e, to_ac, base.compose(r.ce.p_right, r.a_ce.p_right));
  return r;
}

/// (1 box p_C).l = p_A box 1 on (A box_B B) box_B C.
template <PullbackCategory B>
Report coherence_triangle(const B& base, const Morphism<B>& f, const Morphism<B>& g) {
  Report r;
  const auto one_b = base.identity(base.cod(f));
  const Assoc<B> as = assoc_iso(base, f, one_b, one_b, g);
  const RelPullback<B> target = base.construct_pullback(f, g);
  const auto left = box(base, as.ac.p_left, base.identity(base.dom(g)), one_b, as.ac_e, target);
  const auto right = box(base, base.identity(base.dom(f)), as.ce.p_right, one_b, as.a_ce, target);
  const auto lhs = base.compose(right, as.l);
  const bool ok = base.equal(lhs, left);
  r.add("triangle", ok, ok ? std::string() : base.difference(lhs, left));
  r.add("associator_inverse", is_two_sided_inverse(base, Iso<B>{as.l, as.l_inverse}), "l and l^-1 are not inverse");
  return r;
}

/// Chain A -f1-> B <-g1- C -f2-> D <-g2- E -f3-> F <-g3- G.
template <PullbackCategory B>
Report coherence_pentagon(const B& base, const Morphism<B>& f1, const Morphism<B>& g1, const Morphism<B>& f2,
                          const Morphism<B>& g2, const Morphism<B>& f3, const Morphism<B>& g3) {
  Report r;
  // ((AC)E)G -> (AC)(EG) -> A(C(EG))
  const Assoc<B> first = assoc_iso(base, f1, g1, f2, g2);  // (AC)E -> A(CE)
  const Assoc<B> l1 = assoc_iso(base, base.compose(f2, first.ac.p_right), g2, f3, g3);
  const Assoc<B> l2 = assoc_iso(base, f1, g1, f2, base.compose(g2, l1.ce.p_left));
  // ((AC)E)G -> (A(CE))G -> A((CE)G) -> A(C(EG))
  const Assoc<B> l4 = assoc_iso(base, f1, base.compose(g1, first.ce.p_left), base.compose(f3, first.ce.p_right), g3);
  const Assoc<B> l5 = assoc_iso(base, f2, g2, f3, g3);

  const auto one_g = base.identity(base.dom(g3));
  const auto l3_box_1 = box(base, first.l, one_g, base.identity(base.cod(g3)), l1.ac_e, l4.ac_e);
  const auto one_box_l5 = box(base, base.identity(base.dom(f1)), l5.l, base.identity(base.cod(f1)), l4.a_ce, l2.a_ce);

  const auto lhs = cat::compose_all(base, one_box_l5, l4.l, l3_box_1);
  const auto rhs = base.compose(l2.l, l1.l);
  const bool ok = base.equal(lhs, rhs);
  r.add("pentagon", ok, ok ? std::string() : base.difference(lhs, rhs));
  for (const auto* as : {&first, &l1, &l2, &l4, &l5})
    if (!is_two_sided_inverse(base, Iso<B>{as->l, as->l_inverse})) {
      r.fail("associator_inverse", "an associator is not invertible");
      return r;
    }
  r.pass("associator_inverse");
  return r;
}

/// Monoid on the apex making both projections monoid morphisms: m and u are
/// the fillers of (m.(p_A p_A), m.(p_C p_C)) and (u, u).
/// Throws NotMonoidMorphisms.
template <PullbackCategory B>
mon::MonoidObj<B> monoid_on_pullback(const B& base, const mon::MonoidMorphism<B>& f, const mon::MonoidMorphism<B>& g,
                                     const RelPullback<B>& pb) {
  for (const auto* mm : {&f, &g})
    if (auto c = mon::check_monoid_morphism(base, *mm).first_failure())
      throw Error(Errc::NotMonoidMorphisms, c->name + ": " + c->witness);
  if (!base.equal(f.f, pb.cospan.left) || !base.equal(g.f, pb.cospan.right))
    throw Error(Errc::NotMonoidMorphisms, "pullback is not over the given monoid morphisms");
  const auto& a = f.src;
  const auto& c = g.src;
  auto m = base.factor(pb, base.compose(a.m, base.tensor(pb.p_left, pb.p_left)),
                       base.compose(c.m, base.tensor(pb.p_right, pb.p_right)));
  auto u = base.factor(pb, a.u, c.u);
  return {pb.apex, std::move(m), std::move(u)};
}

/// Reflection on one instance, for f: D -> P into the apex and g: D -> E;
/// Side::left reads the spans as P <- D -> E, Side::right as E <- D -> P.
struct ReflectionOutcome {
  bool hypotheses = false;
  bool conclusion = false;
  std::string witness;
  bool holds() const { return !hypotheses || conclusion; }
};

template <PullbackCategory B>
ReflectionOutcome check_reflection_instance(const B& base, const RelPullback<B>& pb, const Morphism<B>& f,
                                               const Morphism<B>& g, Side side = Side::left) {
  const auto cls = base.span_class();
  ReflectionOutcome out;
  auto span_of = [&](const Morphism<B>& into_apex) -> Span<B> {
    return side == Side::left ? Span<B>{into_apex, g} : Span<B>{g, into_apex};
  };
  const auto ha = cls.violation(span_of(base.compose(pb.p_left, f)));
  const auto hc = cls.violation(span_of(base.compose(pb.p_right, f)));
  out.hypotheses = !ha && !hc;
  const auto concl = cls.violation(span_of(f));
  out.conclusion = !concl;
  if (ha)
    out.witness = "hypothesis through p_A: " + *ha;
  else if (hc)
    out.witness = "hypothesis through p_C: " + *hc;
  else if (concl)
    out.witness = "conclusion: " + *concl;
  return out;
}

}  // namespace relspan::relpull
