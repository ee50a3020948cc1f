#include "relspan/coalg/coalgebra.hpp"

#include "relspan/error.hpp"

namespace relspan::coalg {

using alg::TensorFactor;
using alg::tensor_apply;

namespace {

std::string basis_vector(std::size_t k) { return "e_" + std::to_string(k); }

// Adds a check comparing two matrices column by column.
void add_equation(Report& r, const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.fail(name, "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                     std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return;
  }
  const std::size_t k = lhs.first_differing_column(rhs);
  r.add(name, k == lhs.cols(), k == lhs.cols() ? std::string() : "fails at " + basis_vector(k));
}

std::string dims(const Coalgebra& c) { return std::to_string(c.dim()); }

}  // namespace

Coalgebra::Coalgebra(Matrix delta, Matrix epsilon) {
  const std::size_t n = epsilon.cols();
  if (epsilon.rows() != 1) throw Error(Errc::ShapeMismatch, "counit must have one row");
  if (delta.cols() != n || delta.rows() != n * n)
    throw Error(Errc::ShapeMismatch, "comultiplication of a " + std::to_string(n) + "-dimensional coalgebra must be " +
                                         std::to_string(n * n) + "x" + std::to_string(n) + ", got " +
                                         std::to_string(delta.rows()) + "x" + std::to_string(delta.cols()));
  if (delta.field() != epsilon.field()) throw Error(Errc::FieldMismatch, "comultiplication and counit over different fields");
  data_ = std::make_shared<const Data>(Data{std::move(delta), std::move(epsilon)});
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return a.dim() == 0 && b.dim() == 0 && a.field() == b.field();
  return a.data_->epsilon == b.data_->epsilon && a.data_->delta == b.data_->delta;
}

Coalgebra group_like(Field field, std::size_t n) {
  std::vector<Matrix::Entry> d, e;
  for (std::size_t x = 0; x < n; ++x) {
    d.push_back({x * n + x, x, alg::Scalar::one(field)});
    e.push_back({0, x, alg::Scalar::one(field)});
  }
  return Coalgebra(Matrix::from_entries(field, n * n, n, std::move(d)), Matrix::from_entries(field, 1, n, std::move(e)));
}

Coalgebra tensor(const Coalgebra& a, const Coalgebra& c) {
  if (a.field() != c.field()) throw Error(Errc::FieldMismatch, "tensor of coalgebras over different fields");
  const auto sw = alg::swap_map(a.field(), a.dim(), c.dim());
  Matrix delta = tensor_apply({TensorFactor::identity(a.dim()), TensorFactor::of(sw.matrix()), TensorFactor::identity(c.dim())},
                              alg::kron(a.delta(), c.delta()));
  return Coalgebra(std::move(delta), alg::kron(a.epsilon(), c.epsilon()));
}

Report check_coalgebra(const Coalgebra& c) {
  Report r;
  const std::size_t n = c.dim();
  if (n == 0) {
    r.pass("coassociativity");
    r.pass("left_counit");
    r.pass("right_counit");
    return r;
  }
  add_equation(r, "coassociativity", tensor_apply({TensorFactor::of(c.delta()), TensorFactor::identity(n)}, c.delta()),
               tensor_apply({TensorFactor::identity(n), TensorFactor::of(c.delta())}, c.delta()));
  const Matrix id = Matrix::identity(c.field(), n);
  add_equation(r, "left_counit", tensor_apply({TensorFactor::of(c.epsilon()), TensorFactor::identity(n)}, c.delta()), id);
  add_equation(r, "right_counit", tensor_apply({TensorFactor::identity(n), TensorFactor::of(c.epsilon())}, c.delta()), id);
  return r;
}

bool is_cocommutative(const Coalgebra& c) {
  if (c.dim() == 0) return true;
  return alg::swap_map(c.field(), c.dim(), c.dim()).matrix() * c.delta() == c.delta();
}

CoalgMap::CoalgMap(Coalgebra s, Coalgebra t, Matrix l) : src(std::move(s)), tgt(std::move(t)), lin(std::move(l)) {
  if (lin.rows() != tgt.dim() || lin.cols() != src.dim())
    throw Error(Errc::ShapeMismatch, "map " + dims(src) + " -> " + dims(tgt) + " needs a " + dims(tgt) + "x" + dims(src) +
                                         " matrix, got " + std::to_string(lin.rows()) + "x" + std::to_string(lin.cols()));
  if ((src.dim() > 0 && src.field() != lin.field()) || (tgt.dim() > 0 && tgt.field() != lin.field()))
    throw Error(Errc::FieldMismatch, "coalgebra map over a different field");
}

Report check_coalg_map(const CoalgMap& f) {
  Report r;
  if (f.src.dim() == 0) {
    r.pass("comultiplicative");
    r.pass("counital");
    return r;
  }
  add_equation(r, "comultiplicative", f.tgt.delta() * f.lin,
               tensor_apply({TensorFactor::of(f.lin), TensorFactor::of(f.lin)}, f.src.delta()));
  add_equation(r, "counital", f.tgt.epsilon() * f.lin, f.src.epsilon());
  return r;
}

CoalgMap CoalgCat::identity(const Coalgebra& a) const { return CoalgMap(a, a, Matrix::identity(field_, a.dim())); }

CoalgMap CoalgCat::compose(const CoalgMap& g, const CoalgMap& f) const {
  if (!(f.tgt == g.src))
    throw Error(Errc::CompositionMismatch, "codomain (dim " + dims(f.tgt) + ") is not the domain (dim " + dims(g.src) + ")");
  return CoalgMap(f.src, g.tgt, g.lin * f.lin);
}

bool CoalgCat::equal(const CoalgMap& a, const CoalgMap& b) const {
  return a.lin == b.lin && a.src == b.src && a.tgt == b.tgt;
}

CoalgMap CoalgCat::tensor(const CoalgMap& f, const CoalgMap& g) const {
  return CoalgMap(coalg::tensor(f.src, g.src), coalg::tensor(f.tgt, g.tgt), alg::kron(f.lin, g.lin));
}

CoalgMap CoalgCat::symmetry(const Coalgebra& a, const Coalgebra& b) const {
  return CoalgMap(coalg::tensor(a, b), coalg::tensor(b, a), alg::swap_map(field_, a.dim(), b.dim()).matrix());
}

CoalgMap CoalgCat::diagonal(const Coalgebra& a) const { return CoalgMap(a, coalg::tensor(a, a), a.delta()); }

std::optional<std::string> CoalgCat::morphism_defect(const CoalgMap& f) const {
  if (auto c = check_coalg_map(f).first_failure()) return c->name + " " + c->witness;
  return std::nullopt;
}

std::string CoalgCat::difference(const CoalgMap& a, const CoalgMap& b) const {
  if (a.lin.rows() != b.lin.rows() || a.lin.cols() != b.lin.cols())
    return "dims " + dims(a.src) + "->" + dims(a.tgt) + " vs " + dims(b.src) + "->" + dims(b.tgt);
  if (!(a.src == b.src)) return "different domain coalgebras";
  if (!(a.tgt == b.tgt)) return "different codomain coalgebras";
  const std::size_t k = a.lin.first_differing_column(b.lin);
  return k == a.lin.cols() ? "equal" : "differ at " + basis_vector(k);
}

std::optional<CoalgMap> CoalgCat::inverse(const CoalgMap& f) const {
  if (f.lin.rows() != f.lin.cols()) return std::nullopt;
  auto inv = alg::inverse(f.lin);
  if (!inv) return std::nullopt;
  return CoalgMap(f.tgt, f.src, std::move(*inv));
}

std::optional<CoalgMap> CoalgCat::lift(const CoalgMap& mono, const CoalgMap& target) const {
  if (!(mono.tgt == target.tgt)) return std::nullopt;
  auto x = alg::solve_injective(mono.lin, target.lin);
  if (!x) return std::nullopt;
  return CoalgMap(target.src, mono.src, std::move(*x));
}

std::optional<std::string> class_S_violation(const CoalgMap& f, const CoalgMap& g) {
  if (!(f.src == g.src)) throw Error(Errc::ShapeMismatch, "span legs have different domains");
  const Coalgebra& a = f.src;
  if (a.dim() == 0) return std::nullopt;
  const Matrix lhs = alg::swap_map(a.field(), f.tgt.dim(), g.tgt.dim()).matrix() *
                     tensor_apply({TensorFactor::of(f.lin), TensorFactor::of(g.lin)}, a.delta());
  const Matrix rhs = tensor_apply({TensorFactor::of(g.lin), TensorFactor::of(f.lin)}, a.delta());
  const std::size_t k = lhs.first_differing_column(rhs);
  if (k == lhs.cols()) return std::nullopt;
  return "c.fg.delta != gf.delta at " + basis_vector(k);
}

bool class_S_member(const CoalgMap& f, const CoalgMap& g) { return !class_S_violation(f, g).has_value(); }

cat::SpanClass<CoalgCat> CoalgCat::span_class() const {
  return {"S", [](const CoalgSpan& s) { return class_S_violation(s.left, s.right); }};
}

cat::RelPullback<CoalgCat> CoalgCat::construct_pullback(const CoalgMap& f, const CoalgMap& g) const {
  return relative_pullback_coalg(f, g);
}

CoalgMap CoalgCat::factor(const cat::RelPullback<CoalgCat>& pb, const CoalgMap& k, const CoalgMap& l) const {
  return pullback_factor_coalg(pb, k, l);
}

}  // namespace relspan::coalg
