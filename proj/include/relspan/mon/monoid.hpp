#pragma once

#include "relspan/cat/category.hpp"
#include "relspan/error.hpp"
#include "relspan/report.hpp"

#include <string>
#include <utility>

namespace relspan::mon {

using cat::BaseCategory;
using cat::Morphism;
using cat::Object;

/// m: M (x) M -> M, u: I -> M.
template <BaseCategory B>
struct MonoidObj {
  Object<B> carrier;
  Morphism<B> m;
  Morphism<B> u;
};

template <BaseCategory B>
struct MonoidMorphism {
  MonoidObj<B> src;
  MonoidObj<B> tgt;
  Morphism<B> f;
};

/// x: B (x) A -> A (x) B between monoids a and b.
template <BaseCategory B>
struct DistLaw {
  MonoidObj<B> a;
  MonoidObj<B> b;
  Morphism<B> x;
};

namespace detail {

template <BaseCategory B>
void equation(Report& r, const B& base, const std::string& name, const Morphism<B>& lhs, const Morphism<B>& rhs) {
  const bool ok = base.equal(lhs, rhs);
  r.add(name, ok, ok ? std::string() : base.difference(lhs, rhs));
}

// Evaluates an equation whose sides may be ill-typed; a type error fails it.
template <BaseCategory B, class Lhs, class Rhs>
void guarded(Report& r, const B& base, const std::string& name, Lhs lhs, Rhs rhs) {
  try {
    equation(r, base, name, lhs(), rhs());
  } catch (const Error& e) {
    r.fail(name, e.what());
  }
}

template <BaseCategory B>
void defect(Report& r, const B& base, const std::string& name, const Morphism<B>& f) {
  auto d = base.morphism_defect(f);
  r.add(name, !d, d.value_or(""));
}

}  // namespace detail

/// Associativity and unit laws; in a base with structured morphisms also
/// checks that m and u are morphisms there (bialgebra axioms for coalgebras).
template <BaseCategory B>
Report check_monoid(const B& base, const MonoidObj<B>& mo) {
  Report r;
  const auto& c = mo.carrier;
  const auto one = base.identity(c);
  r.add("m.shape", base.same_object(base.dom(mo.m), base.tensor(c, c)) && base.same_object(base.cod(mo.m), c),
        "m is not a map M M -> M");
  r.add("u.shape", base.same_object(base.dom(mo.u), base.unit()) && base.same_object(base.cod(mo.u), c),
        "u is not a map I -> M");
  if (!r.ok()) return r;
  detail::defect(r, base, "m.morphism", mo.m);
  detail::defect(r, base, "u.morphism", mo.u);
  detail::guarded(r, base, "associativity", [&] { return base.compose(mo.m, base.tensor(mo.m, one)); },
                  [&] { return base.compose(mo.m, base.tensor(one, mo.m)); });
  detail::guarded(r, base, "left_unit", [&] { return base.compose(mo.m, base.tensor(mo.u, one)); }, [&] { return one; });
  detail::guarded(r, base, "right_unit", [&] { return base.compose(mo.m, base.tensor(one, mo.u)); }, [&] { return one; });
  return r;
}

template <BaseCategory B>
Report check_monoid_morphism(const B& base, const MonoidMorphism<B>& mm) {
  Report r;
  const auto& f = mm.f;
  r.add("shape", base.same_object(base.dom(f), mm.src.carrier) && base.same_object(base.cod(f), mm.tgt.carrier),
        "morphism does not run between the carriers");
  if (!r.ok()) return r;
  detail::defect(r, base, "morphism", f);
  detail::guarded(r, base, "multiplication", [&] { return base.compose(f, mm.src.m); },
                  [&] { return base.compose(mm.tgt.m, base.tensor(f, f)); });
  detail::guarded(r, base, "unit", [&] { return base.compose(f, mm.src.u); }, [&] { return mm.tgt.u; });
  return r;
}

/// The four compatibility equations of x: B A -> A B with both monoids.
template <BaseCategory B>
Report check_dist_law(const B& base, const DistLaw<B>& dl) {
  Report r;
  const auto& a = dl.a;
  const auto& b = dl.b;
  const auto& x = dl.x;
  r.add("shape",
        base.same_object(base.dom(x), base.tensor(b.carrier, a.carrier)) &&
            base.same_object(base.cod(x), base.tensor(a.carrier, b.carrier)),
        "x is not a map B A -> A B");
  if (!r.ok()) return r;
  const auto ia = base.identity(a.carrier);
  const auto ib = base.identity(b.carrier);
  detail::defect(r, base, "morphism", x);
  detail::guarded(r, base, "mult_B", [&] { return base.compose(x, base.tensor(b.m, ia)); },
                  [&] { return cat::compose_all(base, base.tensor(ia, b.m), base.tensor(x, ib), base.tensor(ib, x)); });
  detail::guarded(r, base, "unit_B", [&] { return base.compose(x, base.tensor(b.u, ia)); },
                  [&] { return base.tensor(ia, b.u); });
  detail::guarded(r, base, "mult_A", [&] { return base.compose(x, base.tensor(ib, a.m)); },
                  [&] { return cat::compose_all(base, base.tensor(a.m, ib), base.tensor(ia, x), base.tensor(x, ia)); });
  detail::guarded(r, base, "unit_A", [&] { return base.compose(x, base.tensor(ib, a.u)); },
                  [&] { return base.tensor(a.u, ib); });
  return r;
}

template <BaseCategory B>
struct InducedQ {
  Morphism<B> q;
  bool epi;
};

/// q = m.(f (x) g); epi in the underlying category makes (f, g) jointly
/// epimorphic as monoid morphisms. Throws CodomainMismatch.
template <BaseCategory B>
InducedQ<B> induced_q(const B& base, const MonoidMorphism<B>& f, const MonoidMorphism<B>& g) {
  if (!base.same_object(f.tgt.carrier, g.tgt.carrier))
    throw Error(Errc::CodomainMismatch, "monoid morphisms have different codomains");
  auto q = base.compose(f.tgt.m, base.tensor(f.f, g.f));
  const bool epi = base.is_epi(q);
  return {std::move(q), epi};
}

/// Carrier A B with unit u u and multiplication (m m).(1 x 1).
/// Throws NotADistLaw.
template <BaseCategory B>
MonoidObj<B> product_monoid(const B& base, const DistLaw<B>& dl) {
  const Report r = check_dist_law(base, dl);
  if (auto c = r.first_failure()) throw Error(Errc::NotADistLaw, c->name + ": " + c->witness);
  const auto& a = dl.a;
  const auto& b = dl.b;
  auto m = base.compose(base.tensor(a.m, b.m),
                        base.tensor(base.tensor(base.identity(a.carrier), dl.x), base.identity(b.carrier)));
  return {base.tensor(a.carrier, b.carrier), std::move(m), base.tensor(a.u, b.u)};
}

/// 1 (x) u: A -> A B and u (x) 1: B -> A B.
template <BaseCategory B>
std::pair<MonoidMorphism<B>, MonoidMorphism<B>> product_inclusions(const B& base, const DistLaw<B>& dl) {
  const MonoidObj<B> p = product_monoid(base, dl);
  return {MonoidMorphism<B>{dl.a, p, base.tensor(base.identity(dl.a.carrier), dl.b.u)},
          MonoidMorphism<B>{dl.b, p, base.tensor(dl.a.u, base.identity(dl.b.carrier))}};
}

/// x = q^-1.m.(g (x) f) for f: A -> C, g: B -> C with q invertible.
/// Throws NotInverse.
template <BaseCategory B>
DistLaw<B> factorization_dlaw(const B& base, const MonoidMorphism<B>& f, const MonoidMorphism<B>& g,
                              const Morphism<B>& q_inverse) {
  const auto q = induced_q(base, f, g).q;
  const auto& c = f.tgt;
  try {
    if (!base.equal(base.compose(q, q_inverse), base.identity(c.carrier)))
      throw Error(Errc::NotInverse, "q.q^-1 != 1: " + base.difference(base.compose(q, q_inverse), base.identity(c.carrier)));
    if (!base.equal(base.compose(q_inverse, q), base.identity(base.dom(q))))
      throw Error(Errc::NotInverse, "q^-1.q != 1: " + base.difference(base.compose(q_inverse, q), base.identity(base.dom(q))));
  } catch (const Error& e) {
    if (e.code() == Errc::NotInverse) throw;
    throw Error(Errc::NotInverse, e.what());
  }
  auto x = cat::compose_all(base, q_inverse, c.m, base.tensor(g.f, f.f));
  return {f.src, g.src, std::move(x)};
}

/// m.(a (x) b) out of the product monoid, for a: A -> D and b: B -> D with
/// m.(a (x) b).x = m.(b (x) a). Throws CompatibilityFails.
template <BaseCategory B>
MonoidMorphism<B> morphism_from_pair(const B& base, const DistLaw<B>& dl, const MonoidMorphism<B>& a,
                                     const MonoidMorphism<B>& b) {
  const auto& d = a.tgt;
  const auto lhs = cat::compose_all(base, d.m, base.tensor(a.f, b.f), dl.x);
  const auto rhs = base.compose(d.m, base.tensor(b.f, a.f));
  if (!base.equal(lhs, rhs)) throw Error(Errc::CompatibilityFails, base.difference(lhs, rhs));
  return {product_monoid(base, dl), d, base.compose(d.m, base.tensor(a.f, b.f))};
}

/// (c.(1 (x) u), c.(u (x) 1)) for c out of the product monoid.
template <BaseCategory B>
std::pair<MonoidMorphism<B>, MonoidMorphism<B>> pair_from_morphism(const B& base, const DistLaw<B>& dl,
                                                                   const MonoidMorphism<B>& c) {
  auto a = base.compose(c.f, base.tensor(base.identity(dl.a.carrier), dl.b.u));
  auto b = base.compose(c.f, base.tensor(dl.a.u, base.identity(dl.b.carrier)));
  return {MonoidMorphism<B>{dl.a, c.tgt, std::move(a)}, MonoidMorphism<B>{dl.b, c.tgt, std::move(b)}};
}

/// The unique c: C -> D with c.f = a and c.g = b, namely m.(a (x) b).q^-1.
/// Throws CompatibilityFails.
template <BaseCategory B>
MonoidMorphism<B> factor_through(const B& base, const MonoidMorphism<B>& f, const MonoidMorphism<B>& g,
                                 const Morphism<B>& q_inverse, const MonoidMorphism<B>& a, const MonoidMorphism<B>& b) {
  const auto& c = f.tgt;
  const auto& d = a.tgt;
  const auto lhs = cat::compose_all(base, d.m, base.tensor(a.f, b.f), q_inverse, c.m, base.tensor(g.f, f.f));
  const auto rhs = base.compose(d.m, base.tensor(b.f, a.f));
  if (!base.equal(lhs, rhs)) throw Error(Errc::CompatibilityFails, base.difference(lhs, rhs));
  auto cf = cat::compose_all(base, d.m, base.tensor(a.f, b.f), q_inverse);
  if (!base.equal(base.compose(cf, f.f), a.f) || !base.equal(base.compose(cf, g.f), b.f))
    throw Error(Errc::CompatibilityFails, "c.f = a or c.g = b fails");
  return {c, d, std::move(cf)};
}

}  // namespace relspan::mon
