#include "relspan/finset/finset.hpp"

#include "relspan/error.hpp"

#include <algorithm>
#include <numeric>

namespace relspan::finset {

FinFun::FinFun(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_.size)
    throw Error(Errc::ShapeMismatch, "function table has " + std::to_string(table_.size()) + " entries for a domain of " +
                                         std::to_string(dom_.size));
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] >= cod_.size)
      throw Error(Errc::ShapeMismatch, "value " + std::to_string(table_[x]) + " at " + std::to_string(x) +
                                           " outside codomain of size " + std::to_string(cod_.size));
}

FinFun FinSetCat::identity(FinSetObj x) const {
  std::vector<std::size_t> t(x.size);
  std::iota(t.begin(), t.end(), 0);
  return FinFun(x, x, std::move(t));
}

FinFun FinSetCat::compose(const FinFun& g, const FinFun& f) const {
  if (f.cod() != g.dom())
    throw Error(Errc::CompositionMismatch, "codomain of size " + std::to_string(f.cod().size) +
                                               " does not match domain of size " + std::to_string(g.dom().size));
  std::vector<std::size_t> t(f.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return FinFun(f.dom(), g.cod(), std::move(t));
}

FinFun FinSetCat::tensor(const FinFun& f, const FinFun& g) const {
  const std::size_t m = g.dom().size;
  const std::size_t n = g.cod().size;
  std::vector<std::size_t> t(f.dom().size * m);
  for (std::size_t x = 0; x < f.dom().size; ++x)
    for (std::size_t y = 0; y < m; ++y) t[x * m + y] = f(x) * n + g(y);
  return FinFun(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), std::move(t));
}

FinFun FinSetCat::symmetry(FinSetObj a, FinSetObj b) const {
  std::vector<std::size_t> t(a.size * b.size);
  for (std::size_t x = 0; x < a.size; ++x)
    for (std::size_t y = 0; y < b.size; ++y) t[x * b.size + y] = y * a.size + x;
  return FinFun(tensor(a, b), tensor(b, a), std::move(t));
}

FinFun FinSetCat::diagonal(FinSetObj a) const {
  std::vector<std::size_t> t(a.size);
  for (std::size_t x = 0; x < a.size; ++x) t[x] = x * a.size + x;
  return FinFun(a, tensor(a, a), std::move(t));
}

std::string FinSetCat::difference(const FinFun& a, const FinFun& b) const {
  if (a.dom() != b.dom() || a.cod() != b.cod())
    return "shapes " + std::to_string(a.dom().size) + "->" + std::to_string(a.cod().size) + " vs " +
           std::to_string(b.dom().size) + "->" + std::to_string(b.cod().size);
  for (std::size_t x = 0; x < a.dom().size; ++x)
    if (a(x) != b(x)) return "at element " + std::to_string(x) + ": " + std::to_string(a(x)) + " vs " + std::to_string(b(x));
  return "equal";
}

bool FinSetCat::is_mono(const FinFun& f) const {
  std::vector<bool> hit(f.cod().size, false);
  for (std::size_t v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinSetCat::is_epi(const FinFun& f) const {
  std::vector<bool> hit(f.cod().size, false);
  for (std::size_t v : f.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::optional<FinFun> FinSetCat::inverse(const FinFun& f) const {
  if (f.dom() != f.cod() || !is_mono(f)) return std::nullopt;
  std::vector<std::size_t> t(f.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) t[f(x)] = x;
  return FinFun(f.cod(), f.dom(), std::move(t));
}

std::optional<FinFun> FinSetCat::lift(const FinFun& mono, const FinFun& target) const {
  if (mono.cod() != target.cod()) return std::nullopt;
  std::vector<std::size_t> preimage(mono.cod().size, mono.dom().size);
  for (std::size_t x = 0; x < mono.dom().size; ++x)
    if (preimage[mono(x)] == mono.dom().size) preimage[mono(x)] = x;
  std::vector<std::size_t> t(target.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) {
    t[x] = preimage[target(x)];
    if (t[x] == mono.dom().size) return std::nullopt;
  }
  return FinFun(target.dom(), mono.dom(), std::move(t));
}

cat::RelPullback<FinSetCat> FinSetCat::construct_pullback(const FinFun& f, const FinFun& g) const {
  return pullback(f, g);
}

FinFun FinSetCat::factor(const cat::RelPullback<FinSetCat>& pb, const FinFun& a, const FinFun& c) const {
  return universal_factor(pb, a, c);
}

FinPullback pullback(const FinFun& f, const FinFun& g) {
  if (f.cod() != g.cod())
    throw Error(Errc::CodomainMismatch, "cospan legs land in sets of size " + std::to_string(f.cod().size) + " and " +
                                            std::to_string(g.cod().size));
  std::vector<std::size_t> left, right, pair;
  const std::size_t nc = g.dom().size;
  for (std::size_t a = 0; a < f.dom().size; ++a)
    for (std::size_t c = 0; c < nc; ++c)
      if (f(a) == g(c)) {
        left.push_back(a);
        right.push_back(c);
        pair.push_back(a * nc + c);
      }
  const FinSetObj p{left.size()};
  return FinPullback{{f, g},
                     p,
                     FinFun(p, f.dom(), std::move(left)),
                     FinFun(p, g.dom(), std::move(right)),
                     FinFun(p, FinSetObj{f.dom().size * nc}, std::move(pair))};
}

FinFun universal_factor(const FinPullback& pb, const FinFun& a, const FinFun& c) {
  if (a.dom() != c.dom() || a.cod() != pb.p_left.cod() || c.cod() != pb.p_right.cod())
    throw Error(Errc::CompositionMismatch, "test span does not fit the pullback cospan");
  const auto& pairs = pb.pairing.table();
  const std::size_t nc = c.cod().size;
  std::vector<std::size_t> t(a.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (pb.cospan.left(a(x)) != pb.cospan.right(c(x)))
      throw Error(Errc::SquareDoesNotCommute, "at element " + std::to_string(x) + ": f(" + std::to_string(a(x)) +
                                                  ") != g(" + std::to_string(c(x)) + ")");
    auto it = std::lower_bound(pairs.begin(), pairs.end(), a(x) * nc + c(x));
    t[x] = static_cast<std::size_t>(it - pairs.begin());
  }
  return FinFun(a.dom(), pb.apex, std::move(t));
}

Report finset_monoid_check(FinSetObj m, const FinFun& mult, std::size_t unit) {
  const std::size_t n = m.size;
  if (mult.dom().size != n * n || mult.cod() != m)
    throw Error(Errc::ShapeMismatch, "multiplication table must be " + std::to_string(n * n) + " -> " + std::to_string(n));
  Report r;
  if (unit >= n) {
    r.fail("unit", "unit element " + std::to_string(unit) + " outside carrier");
    return r;
  }
  auto mul = [&](std::size_t x, std::size_t y) { return mult(x * n + y); };
  std::string assoc;
  for (std::size_t x = 0; x < n && assoc.empty(); ++x)
    for (std::size_t y = 0; y < n && assoc.empty(); ++y)
      for (std::size_t z = 0; z < n && assoc.empty(); ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          assoc = "triple (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
  r.add("associativity", assoc.empty(), assoc);
  std::string left, right;
  for (std::size_t x = 0; x < n; ++x) {
    if (left.empty() && mul(unit, x) != x) left = "element " + std::to_string(x);
    if (right.empty() && mul(x, unit) != x) right = "element " + std::to_string(x);
  }
  r.add("left_unit", left.empty(), left);
  r.add("right_unit", right.empty(), right);
  return r;
}

FinFun constant(FinSetObj dom, FinSetObj cod, std::size_t value) {
  return FinFun(dom, cod, std::vector<std::size_t>(dom.size, value));
}

FinFun element(FinSetObj cod, std::size_t value) { return constant({1}, cod, value); }

}  // namespace relspan::finset
