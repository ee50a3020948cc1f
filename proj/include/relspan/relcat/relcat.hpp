#pragma once

#include "relspan/relpull/relpull.hpp"

#include <string>

namespace relspan::relcat {

using cat::Morphism;
using cat::Object;
using cat::PullbackCategory;
using cat::RelPullback;

/// B <-t- A -s-> B
template <class B>
struct SpanOverB {
  Object<B> base;
  Object<B> apex;
  Morphism<B> t;
  Morphism<B> s;
};

/// Throws ShapeMismatch, BaseNotInClass (B <= B => B outside the class),
/// LegsNotInClass.
template <PullbackCategory B>
SpanOverB<B> make_span_over(const B& base, const Morphism<B>& t, const Morphism<B>& s) {
  if (!base.same_object(base.dom(t), base.dom(s)) || !base.same_object(base.cod(t), base.cod(s)))
    throw Error(Errc::ShapeMismatch, "s and t must share domain and codomain");
  const auto b = base.cod(t);
  const auto cls = base.span_class();
  if (auto w = cls.violation({base.identity(b), base.identity(b)})) throw Error(Errc::BaseNotInClass, *w);
  if (auto w = cat::legs_violation(base, cls, cat::Cospan<B>{s, t})) throw Error(Errc::LegsNotInClass, *w);
  return {b, base.dom(t), t, s};
}

template <PullbackCategory B>
SpanOverB<B> unit_span(const B& base, const Object<B>& b) {
  return make_span_over(base, base.identity(b), base.identity(b));
}

template <class B>
struct SpanProduct {
  SpanOverB<B> span;
  RelPullback<B> pb;  // of (x.s, y.t)
};

/// x (x)_B y with apex the pullback of (s, t') and legs t.p_A, s'.p_A'.
/// Throws BaseMismatch, LegsNotInClass.
template <PullbackCategory B>
SpanProduct<B> span_tensor(const B& base, const SpanOverB<B>& x, const SpanOverB<B>& y) {
  if (!base.same_object(x.base, y.base)) throw Error(Errc::BaseMismatch, "spans over different objects");
  auto pb = relpull::relative_pullback(base, x.s, y.t);
  SpanOverB<B> span{x.base, pb.apex, base.compose(x.t, pb.p_left), base.compose(y.s, pb.p_right)};
  return {std::move(span), std::move(pb)};
}

/// n-th power, bracketed to the left: ((x x) x) ...; the 0-th power is the
/// unit span on B.
template <PullbackCategory B>
SpanOverB<B> span_power(const B& base, const SpanOverB<B>& x, std::size_t n) {
  if (n == 0) return unit_span(base, x.base);
  SpanOverB<B> acc = x;
  for (std::size_t k = 1; k < n; ++k) acc = span_tensor(base, acc, x).span;
  return acc;
}

template <class B>
struct RelativeCategory {
  SpanOverB<B> span;
  Morphism<B> i;      // B -> A
  Morphism<B> d;      // A box_B A -> A
  RelPullback<B> pb;  // of (s, t); p_left = p1, p_right = p2
};

/// Builds the pullback of (s, t); the axioms are not checked.
template <PullbackCategory B>
RelativeCategory<B> make_relative_category(const B& base, SpanOverB<B> span, Morphism<B> i, Morphism<B> d) {
  auto pb = relpull::relative_pullback(base, span.s, span.t);
  return {std::move(span), std::move(i), std::move(d), std::move(pb)};
}

namespace detail {

template <PullbackCategory B, class Lhs, class Rhs>
void equation(Report& r, const B& base, const std::string& name, Lhs lhs, Rhs rhs) {
  try {
    const auto l = lhs();
    const auto rr = rhs();
    const bool ok = base.equal(l, rr);
    r.add(name, ok, ok ? std::string() : base.difference(l, rr));
  } catch (const Error& e) {
    r.fail(name, e.what());
  }
}

}  // namespace detail

/// Axioms (a)-(e); associativity is d.(d box 1) = d.(1 box d).l with l the
/// associator of (s, t, s, t). Throws ShapeMismatch.
template <PullbackCategory B>
Report check_relative_category(const B& base, const RelativeCategory<B>& rc) {
  const auto& sp = rc.span;
  const auto& b = sp.base;
  const auto& a = sp.apex;
  if (!base.same_object(base.dom(rc.i), b) || !base.same_object(base.cod(rc.i), a))
    throw Error(Errc::ShapeMismatch, "i is not a map B -> A");
  if (!base.same_object(base.dom(rc.d), rc.pb.apex) || !base.same_object(base.cod(rc.d), a))
    throw Error(Errc::ShapeMismatch, "d is not a map A box_B A -> A");

  Report r;
  const auto cls = base.span_class();
  auto legs = cat::legs_violation(base, cls, cat::Cospan<B>{sp.s, sp.t});
  if (!legs) legs = cls.violation({base.identity(b), base.identity(b)});
  r.add("a.legs_in_class", !legs, legs.value_or(""));

  const auto one_a = base.identity(a);
  const auto one_b = base.identity(b);
  detail::equation(r, base, "b.s_section", [&] { return base.compose(sp.s, rc.i); }, [&] { return one_b; });
  detail::equation(r, base, "b.t_section", [&] { return base.compose(sp.t, rc.i); }, [&] { return one_b; });
  detail::equation(r, base, "c.target", [&] { return base.compose(sp.t, rc.d); },
                   [&] { return base.compose(sp.t, rc.pb.p_left); });
  detail::equation(r, base, "c.source", [&] { return base.compose(sp.s, rc.d); },
                   [&] { return base.compose(sp.s, rc.pb.p_right); });

  // d.(i box 1) is the unit iso B box_B A -> A, d.(1 box i) the one A box_B B -> A.
  detail::equation(
      r, base, "d.left_unit",
      [&] {
        const auto src = base.construct_pullback(one_b, sp.t);
        return base.compose(rc.d, relpull::box(base, rc.i, one_a, one_b, src, rc.pb));
      },
      [&] { return relpull::unit_iso(base, base.construct_pullback(one_b, sp.t), relpull::Side::right).forward; });
  detail::equation(
      r, base, "d.right_unit",
      [&] {
        const auto src = base.construct_pullback(sp.s, one_b);
        return base.compose(rc.d, relpull::box(base, one_a, rc.i, one_b, src, rc.pb));
      },
      [&] { return relpull::unit_iso(base, base.construct_pullback(sp.s, one_b), relpull::Side::left).forward; });

  try {
    const auto as = relpull::assoc_iso(base, sp.s, sp.t, sp.s, sp.t);
    detail::equation(
        r, base, "e.associativity",
        [&] { return base.compose(rc.d, relpull::box(base, rc.d, one_a, one_b, as.ac_e, rc.pb)); },
        [&] { return cat::compose_all(base, rc.d, relpull::box(base, one_a, rc.d, one_b, as.a_ce, rc.pb), as.l); });
  } catch (const Error& e) {
    r.fail("e.associativity", e.what());
  }
  return r;
}

template <class B>
struct RelativeFunctor {
  Morphism<B> b;  // B -> B'
  Morphism<B> a;  // A -> A'
};

/// b.s = s'.a, b.t = t'.a, a.i = i'.b, a.d = d'.(a box a).
/// Throws ShapeMismatch.
template <PullbackCategory B>
Report check_relative_functor(const B& base, const RelativeFunctor<B>& fn, const RelativeCategory<B>& src,
                              const RelativeCategory<B>& tgt) {
  if (!base.same_object(base.dom(fn.b), src.span.base) || !base.same_object(base.cod(fn.b), tgt.span.base) ||
      !base.same_object(base.dom(fn.a), src.span.apex) || !base.same_object(base.cod(fn.a), tgt.span.apex))
    throw Error(Errc::ShapeMismatch, "functor components do not run between the relative categories");
  Report r;
  detail::equation(r, base, "span.source", [&] { return base.compose(fn.b, src.span.s); },
                   [&] { return base.compose(tgt.span.s, fn.a); });
  detail::equation(r, base, "span.target", [&] { return base.compose(fn.b, src.span.t); },
                   [&] { return base.compose(tgt.span.t, fn.a); });
  detail::equation(r, base, "unit", [&] { return base.compose(fn.a, src.i); }, [&] { return base.compose(tgt.i, fn.b); });
  detail::equation(r, base, "composition", [&] { return base.compose(fn.a, src.d); },
                   [&] { return base.compose(tgt.d, relpull::box(base, fn.a, fn.a, fn.b, src.pb, tgt.pb)); });
  return r;
}

template <PullbackCategory B>
RelativeFunctor<B> compose_functors(const B& base, const RelativeFunctor<B>& g, const RelativeFunctor<B>& f) {
  return {base.compose(g.b, f.b), base.compose(g.a, f.a)};
}

}  // namespace relspan::relcat
