#include "relspan/coalg/coalgebra.hpp"

#include "relspan/error.hpp"

namespace relspan::coalg {

using alg::TensorFactor;
using alg::tensor_apply;

namespace {

Matrix must_solve(const Matrix& k, const Matrix& b, const char* what) {
  auto x = alg::solve_injective(k, b);
  if (!x) throw Error(Errc::InternalSolveFailure, what);
  return std::move(*x);
}

}  // namespace

CoalgEqualizer coalg_equalizer(const CoalgMap& f, const CoalgMap& g) {
  if (!(f.src == g.src) || !(f.tgt == g.tgt)) throw Error(Errc::ShapeMismatch, "equalizer of non-parallel maps");
  const Coalgebra& a = f.src;
  const std::size_t n = a.dim();
  const Field field = f.lin.field();

  Matrix j;
  if (n == 0) {
    j = Matrix(field, 0, 0);
  } else {
    const Matrix twice = tensor_apply({TensorFactor::of(a.delta()), TensorFactor::identity(n)}, a.delta());
    auto hat = [&](const Matrix& m) {
      return tensor_apply({TensorFactor::identity(n), TensorFactor::of(m), TensorFactor::identity(n)}, twice);
    };
    j = alg::kernel_basis(hat(f.lin) - hat(g.lin));
  }
  const std::size_t e = j.cols();

  // (j (x) 1) delta_r = delta j, then (1 (x) j) delta_E = delta_r.
  Matrix delta_r = n == 0 ? Matrix(field, 0, 0)
                          : must_solve(alg::kron(j, Matrix::identity(field, n)), a.delta() * j, "first comultiplication step");
  Matrix delta_e = e == 0 ? Matrix(field, 0, 0)
                          : must_solve(alg::kron(Matrix::identity(field, e), j), delta_r, "second comultiplication step");
  Matrix eps_e = n == 0 ? Matrix(field, 1, 0) : a.epsilon() * j;

  Coalgebra object(std::move(delta_e), std::move(eps_e));
  CoalgMap inclusion(object, a, j);
  return {std::move(object), std::move(inclusion), std::move(delta_r)};
}

CoalgMap factor_through_equalizer(const CoalgEqualizer& eq, const CoalgMap& h0) {
  if (!(h0.tgt == eq.inclusion.tgt)) throw Error(Errc::CompositionMismatch, "map does not land in the equalized coalgebra");
  auto x = alg::solve_injective(eq.inclusion.lin, h0.lin);
  if (!x) throw Error(Errc::DoesNotEqualize, "map does not factor through the equalizer");
  return CoalgMap(h0.src, eq.object, std::move(*x));
}

CoalgPullback relative_pullback_coalg(const CoalgMap& f, const CoalgMap& g) {
  if (!(f.tgt == g.tgt)) throw Error(Errc::CodomainMismatch, "cospan legs land in different coalgebras");
  const Coalgebra& a = f.src;
  const Coalgebra& c = g.src;
  const Field field = f.lin.field();
  const Coalgebra ac = tensor(a, c);

  const CoalgMap f_eps(ac, f.tgt, alg::kron(f.lin, c.epsilon()));
  const CoalgMap eps_g(ac, f.tgt, alg::kron(a.epsilon(), g.lin));
  CoalgEqualizer eq = coalg_equalizer(f_eps, eps_g);

  const Matrix& j = eq.inclusion.lin;
  CoalgMap p_left(eq.object, a, alg::kron(Matrix::identity(field, a.dim()), c.epsilon()) * j);
  CoalgMap p_right(eq.object, c, alg::kron(a.epsilon(), Matrix::identity(field, c.dim())) * j);
  // (p_A (x) p_C).delta_E = j by the counit axioms.
  return CoalgPullback{{f, g}, eq.object, std::move(p_left), std::move(p_right), eq.inclusion};
}

CoalgMap pullback_factor_coalg(const CoalgPullback& pb, const CoalgMap& k, const CoalgMap& l) {
  if (!(k.src == l.src)) throw Error(Errc::CompositionMismatch, "test span legs have different domains");
  if (!(k.tgt == pb.p_left.tgt) || !(l.tgt == pb.p_right.tgt))
    throw Error(Errc::CompositionMismatch, "test span does not fit the pullback cospan");
  const Matrix fk = pb.cospan.left.lin * k.lin;
  const Matrix gl = pb.cospan.right.lin * l.lin;
  if (!(fk == gl))
    throw Error(Errc::SquareDoesNotCommute, "f.k != g.l at e_" + std::to_string(fk.first_differing_column(gl)));
  if (auto w = class_S_violation(k, l)) throw Error(Errc::SpanNotInClass, *w);
  const Coalgebra& d = k.src;
  const Field field = k.lin.field();
  Matrix target = d.dim() == 0 ? Matrix(field, pb.pairing.lin.rows(), 0)
                               : tensor_apply({TensorFactor::of(k.lin), TensorFactor::of(l.lin)}, d.delta());
  auto x = alg::solve_injective(pb.pairing.lin, target);
  if (!x) throw Error(Errc::InternalSolveFailure, "(k (x) l).delta does not factor through the equalizer");
  return CoalgMap(d, pb.apex, std::move(*x));
}

Cotensor cotensor(const CoalgMap& f, const CoalgMap& g) {
  if (!(f.tgt == g.tgt)) throw Error(Errc::CodomainMismatch, "cospan legs land in different coalgebras");
  const Coalgebra& a = f.src;
  const Coalgebra& c = g.src;
  const Field field = f.lin.field();
  const std::size_t na = a.dim(), nc = c.dim();
  if (na == 0 || nc == 0) return {Matrix(field, na * nc, 0), Coalgebra(Matrix(field, 0, 0), Matrix(field, 1, 0))};

  const Matrix left = tensor_apply({TensorFactor::identity(na), TensorFactor::of(f.lin), TensorFactor::identity(nc)},
                                   alg::kron(a.delta(), Matrix::identity(field, nc)));
  const Matrix right = tensor_apply({TensorFactor::identity(na), TensorFactor::of(g.lin), TensorFactor::identity(nc)},
                                    alg::kron(Matrix::identity(field, na), c.delta()));
  Cotensor out{alg::kernel_basis(left - right), std::nullopt};

  const bool legs_in_s = class_S_member(CoalgMap(a, a, Matrix::identity(field, na)), f) &&
                         class_S_member(g, CoalgMap(c, c, Matrix::identity(field, nc)));
  if (!legs_in_s) return out;
  const Matrix& j = out.inclusion;
  const Coalgebra ac = tensor(a, c);
  if (j.cols() == 0) {
    out.object = Coalgebra(Matrix(field, 0, 0), Matrix(field, 1, 0));
    return out;
  }
  auto delta = alg::solve_injective(alg::kron(j, j), ac.delta() * j);
  if (!delta) return out;
  Coalgebra candidate(std::move(*delta), ac.epsilon() * j);
  if (check_coalgebra(candidate).ok()) out.object = std::move(candidate);
  return out;
}

CotensorComparison compare_cotensor(const CoalgPullback& pb, const Cotensor& cot) {
  CotensorComparison out;
  Report& r = out.report;
  if (!cot.object) {
    r.fail("cotensor.coalgebra", "cotensor subspace carries no induced coalgebra structure");
    return out;
  }
  r.pass("cotensor.coalgebra");
  const Coalgebra& a = pb.p_left.tgt;
  const Coalgebra& c = pb.p_right.tgt;
  const Field field = pb.pairing.lin.field();
  const Coalgebra& e = *cot.object;

  if (auto phi = alg::solve_injective(cot.inclusion, pb.pairing.lin)) {
    out.to_cotensor = CoalgMap(pb.apex, e, std::move(*phi));
    r.pass("to_cotensor.exists");
  } else {
    r.fail("to_cotensor.exists", "pullback apex is not inside the cotensor subspace");
  }

  try {
    const CoalgMap qa(e, a, alg::kron(Matrix::identity(field, a.dim()), c.epsilon()) * cot.inclusion);
    const CoalgMap qc(e, c, alg::kron(a.epsilon(), Matrix::identity(field, c.dim())) * cot.inclusion);
    out.from_cotensor = pullback_factor_coalg(pb, qa, qc);
    r.pass("from_cotensor.exists");
  } catch (const Error& err) {
    r.fail("from_cotensor.exists", err.what());
  }

  if (out.to_cotensor && out.from_cotensor) {
    const CoalgCat base(field);
    if (auto d = base.morphism_defect(*out.to_cotensor))
      r.fail("to_cotensor.coalgebra_map", *d);
    else
      r.pass("to_cotensor.coalgebra_map");
    const Matrix there_back = out.from_cotensor->lin * out.to_cotensor->lin;
    const Matrix back_there = out.to_cotensor->lin * out.from_cotensor->lin;
    r.add("round_trip.pullback", there_back.is_identity(), "from.to != 1");
    r.add("round_trip.cotensor", back_there.is_identity(), "to.from != 1");
  }
  return out;
}

}  // namespace relspan::coalg
