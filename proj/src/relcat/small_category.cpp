#include "relspan/relcat/small_category.hpp"

#include "relspan/finset/linearize.hpp"

namespace relspan::relcat {

using finset::FinFun;
using finset::FinSetCat;
using finset::FinSetObj;

namespace {

std::string arrow(std::size_t a) { return std::to_string(a); }

}  // namespace

std::optional<std::string> category_violation(const SmallCategory& sc) {
  const std::size_t n = sc.arrows;
  if (sc.src.size() != n || sc.tgt.size() != n) return "src/tgt tables must list every arrow";
  if (sc.id.size() != sc.objects) return "id table must list every object";
  if (sc.comp.size() != n) return "comp table must have one row per arrow";
  for (std::size_t a = 0; a < n; ++a) {
    if (sc.comp[a].size() != n) return "comp row " + arrow(a) + " has the wrong length";
    if (sc.src[a] >= sc.objects || sc.tgt[a] >= sc.objects) return "arrow " + arrow(a) + " has an endpoint out of range";
  }
  for (std::size_t o = 0; o < sc.objects; ++o) {
    const std::size_t e = sc.id[o];
    if (e >= n || sc.src[e] != o || sc.tgt[e] != o) return "id of object " + std::to_string(o) + " is not a loop on it";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const long c = sc.comp[a][b];
      const bool composable = sc.src[a] == sc.tgt[b];
      const std::string pair = "pair (" + arrow(a) + "," + arrow(b) + ")";
      if (composable != (c >= 0)) return pair + ": defined exactly when src(a) = tgt(b)";
      if (!composable) continue;
      if (c >= static_cast<long>(n)) return pair + ": composite out of range";
      const auto cu = static_cast<std::size_t>(c);
      if (sc.src[cu] != sc.src[b] || sc.tgt[cu] != sc.tgt[a]) return pair + ": composite has wrong endpoints";
    }
  for (std::size_t a = 0; a < n; ++a) {
    if (sc.comp[sc.id[sc.tgt[a]]][a] != static_cast<long>(a)) return "left unit fails at arrow " + arrow(a);
    if (sc.comp[a][sc.id[sc.src[a]]] != static_cast<long>(a)) return "right unit fails at arrow " + arrow(a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (sc.comp[a][b] < 0) continue;
      const auto ab = static_cast<std::size_t>(sc.comp[a][b]);
      for (std::size_t c = 0; c < n; ++c) {
        if (sc.comp[b][c] < 0) continue;
        const auto bc = static_cast<std::size_t>(sc.comp[b][c]);
        if (sc.comp[ab][c] != sc.comp[a][bc])
          return "associativity fails at triple (" + arrow(a) + "," + arrow(b) + "," + arrow(c) + ")";
      }
    }
  return std::nullopt;
}

FinRelCat relative_category_from_tables(const SmallCategory& sc) {
  const FinSetCat base;
  const FinSetObj objs{sc.objects}, arrs{sc.arrows};
  if (sc.comp.size() != sc.arrows) throw Error(Errc::ShapeMismatch, "comp table must have one row per arrow");
  const FinFun s(arrs, objs, sc.src);
  const FinFun t(arrs, objs, sc.tgt);
  const FinFun i(objs, arrs, sc.id);
  auto span = make_span_over(base, t, s);
  auto pb = finset::pullback(s, t);
  std::vector<std::size_t> d(pb.apex.size);
  for (std::size_t p = 0; p < d.size(); ++p) {
    const std::size_t a1 = pb.p_left(p), a2 = pb.p_right(p);
    if (sc.comp[a1].size() != sc.arrows) throw Error(Errc::ShapeMismatch, "comp row " + arrow(a1) + " has the wrong length");
    const long c = sc.comp[a1][a2];
    if (c < 0 || c >= static_cast<long>(sc.arrows))
      throw Error(Errc::ShapeMismatch, "no composite for composable pair (" + arrow(a1) + "," + arrow(a2) + ")");
    d[p] = static_cast<std::size_t>(c);
  }
  FinFun dm(pb.apex, arrs, std::move(d));
  return {std::move(span), i, std::move(dm), std::move(pb)};
}

FinRelCat from_small_category(const SmallCategory& sc) {
  if (auto w = category_violation(sc)) throw Error(Errc::NotACategory, *w);
  return relative_category_from_tables(sc);
}

std::vector<std::vector<long>> composition_table(const FinRelCat& rc) {
  const FinSetObj arrs = rc.span.apex;
  std::vector<std::vector<long>> comp(arrs.size, std::vector<long>(arrs.size, -1));
  for (std::size_t a = 0; a < arrs.size; ++a)
    for (std::size_t b = 0; b < arrs.size; ++b) {
      if (rc.span.s(a) != rc.span.t(b)) continue;
      const FinFun h = finset::universal_factor(rc.pb, finset::element(arrs, a), finset::element(arrs, b));
      comp[a][b] = static_cast<long>(rc.d(h(0)));
    }
  return comp;
}

CoalgRelCat linearize_relcat(const FinRelCat& rc, alg::Field field) {
  const coalg::CoalgCat base(field);
  auto lin = [&](const FinFun& f) { return finset::linearize_fun(f, field); };
  auto span = make_span_over(base, lin(rc.span.t), lin(rc.span.s));
  auto pb = relpull::relative_pullback(base, span.s, span.t);
  const auto phi = coalg::pullback_factor_coalg(pb, lin(rc.pb.p_left), lin(rc.pb.p_right));
  auto phi_inv = base.inverse(phi);
  if (!phi_inv) throw Error(Errc::InternalSolveFailure, "linearized pullback is not identified with the coalgebra pullback");
  auto d = base.compose(lin(rc.d), *phi_inv);
  return {std::move(span), lin(rc.i), std::move(d), std::move(pb)};
}

namespace fixtures {

namespace {

// Fills comp from a rule on composable pairs.
template <class Rule>
SmallCategory build(std::size_t objects, std::vector<std::size_t> src, std::vector<std::size_t> tgt,
                    std::vector<std::size_t> id, Rule rule) {
  SmallCategory sc{objects, src.size(), std::move(src), std::move(tgt), std::move(id), {}};
  sc.comp.assign(sc.arrows, std::vector<long>(sc.arrows, -1));
  for (std::size_t a = 0; a < sc.arrows; ++a)
    for (std::size_t b = 0; b < sc.arrows; ++b)
      if (sc.src[a] == sc.tgt[b]) sc.comp[a][b] = rule(a, b);
  return sc;
}

}  // namespace

SmallCategory discrete(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = k;
  return build(n, ids, ids, ids, [](std::size_t a, std::size_t) { return static_cast<long>(a); });
}

SmallCategory poset_01() {
  // 0 = id_0, 1 = id_1, 2 = (0 < 1)
  return build(2, {0, 1, 0}, {0, 1, 1}, {0, 1}, [](std::size_t a, std::size_t b) {
    return static_cast<long>(a == 2 || b == 2 ? 2 : a);
  });
}

SmallCategory cyclic2() {
  return build(1, {0, 0}, {0, 0}, {0}, [](std::size_t a, std::size_t b) { return static_cast<long>(a ^ b); });
}

SmallCategory groupoid5() {
  // 0, 1, 2 identities; 3 = u: 0 -> 1; 4 = u^-1: 1 -> 0
  return build(3, {0, 1, 2, 0, 1}, {0, 1, 2, 1, 0}, {0, 1, 2}, [](std::size_t a, std::size_t b) -> long {
    if (a < 3) return static_cast<long>(b);
    if (b < 3) return static_cast<long>(a);
    return a == 3 ? 1 : 0;  // u.u^-1 = id_1, u^-1.u = id_0
  });
}

std::vector<Violation> violations() {
  std::vector<Violation> out;

  SmallCategory swapped = discrete(2);
  swapped.id = {1, 0};
  out.push_back({"identity_not_a_section", "b.s_section", swapped});

  SmallCategory wrong_target = poset_01();
  wrong_target.comp[2][0] = 0;
  out.push_back({"composite_wrong_target", "c.target", wrong_target});

  out.push_back({"constant_product", "d.left_unit",
                 build(1, {0, 0}, {0, 0}, {0}, [](std::size_t, std::size_t) -> long { return 1; })});

  // Unital magma {e, a, b}: aa = b, ab = ba = a, bb = e; (aa)b != a(ab).
  out.push_back({"non_associative_magma", "e.associativity",
                 build(1, {0, 0, 0}, {0, 0, 0}, {0}, [](std::size_t a, std::size_t b) -> long {
                   if (a == 0) return static_cast<long>(b);
                   if (b == 0) return static_cast<long>(a);
                   if (a == 1 && b == 1) return 2;
                   if (a == 2 && b == 2) return 0;
                   return 1;
                 })});
  return out;
}

}  // namespace fixtures

}  // namespace relspan::relcat
