#pragma once

#include "relspan/alg/linalg.hpp"
#include "relspan/cat/span.hpp"
#include "relspan/report.hpp"

#include <memory>
#include <optional>
#include <string>

namespace relspan::coalg {

using alg::Field;
using alg::Matrix;

/// Finite-dimensional coalgebra: delta is dim^2 x dim, epsilon is 1 x dim.
/// Cheap to copy; the matrices are shared and immutable.
class Coalgebra {
 public:
  Coalgebra() = default;
  // Throws ShapeMismatch / FieldMismatch; does not check the axioms.
  Coalgebra(Matrix delta, Matrix epsilon);

  std::size_t dim() const noexcept { return data_ ? data_->epsilon.cols() : 0; }
  Field field() const noexcept { return data_ ? data_->epsilon.field() : Field{}; }
  const Matrix& delta() const { return data_->delta; }
  const Matrix& epsilon() const { return data_->epsilon; }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);

 private:
  struct Data {
    Matrix delta;
    Matrix epsilon;
  };
  std::shared_ptr<const Data> data_;
};

/// k[X]: basis elements are group-like.
Coalgebra group_like(Field field, std::size_t n);
/// A (x) C with delta (1 c 1)(delta (x) delta).
Coalgebra tensor(const Coalgebra& a, const Coalgebra& c);

Report check_coalgebra(const Coalgebra& c);
bool is_cocommutative(const Coalgebra& c);

/// Linear map between coalgebras. Construction checks shapes only.
struct CoalgMap {
  CoalgMap() = default;
  CoalgMap(Coalgebra src, Coalgebra tgt, Matrix lin);

  Coalgebra src;
  Coalgebra tgt;
  Matrix lin;
};

Report check_coalg_map(const CoalgMap& f);

/// Comonoids in finite-dimensional vector spaces over a fixed field, with
/// the class S of spans (f, g) for which c.(f (x) g).delta = (g (x) f).delta.
class CoalgCat {
 public:
  using Object = Coalgebra;
  using Morphism = CoalgMap;

  explicit CoalgCat(Field field) : field_(field) {}
  Field field() const noexcept { return field_; }

  CoalgMap identity(const Coalgebra& a) const;
  CoalgMap compose(const CoalgMap& g, const CoalgMap& f) const;
  bool equal(const CoalgMap& a, const CoalgMap& b) const;
  Coalgebra dom(const CoalgMap& f) const { return f.src; }
  Coalgebra cod(const CoalgMap& f) const { return f.tgt; }
  bool same_object(const Coalgebra& a, const Coalgebra& b) const { return a == b; }
  Coalgebra tensor(const Coalgebra& a, const Coalgebra& b) const { return coalg::tensor(a, b); }
  CoalgMap tensor(const CoalgMap& f, const CoalgMap& g) const;
  Coalgebra unit() const { return group_like(field_, 1); }
  CoalgMap symmetry(const Coalgebra& a, const Coalgebra& b) const;
  CoalgMap diagonal(const Coalgebra& a) const;
  std::optional<std::string> morphism_defect(const CoalgMap& f) const;
  std::string difference(const CoalgMap& a, const CoalgMap& b) const;
  bool is_mono(const CoalgMap& f) const { return alg::is_injective(f.lin); }
  bool is_epi(const CoalgMap& f) const { return alg::is_surjective(f.lin); }
  std::optional<CoalgMap> inverse(const CoalgMap& f) const;
  std::optional<CoalgMap> lift(const CoalgMap& mono, const CoalgMap& target) const;

  cat::SpanClass<CoalgCat> span_class() const;
  cat::RelPullback<CoalgCat> construct_pullback(const CoalgMap& f, const CoalgMap& g) const;
  CoalgMap factor(const cat::RelPullback<CoalgCat>& pb, const CoalgMap& k, const CoalgMap& l) const;

 private:
  Field field_;
};

using CoalgSpan = cat::Span<CoalgCat>;
using CoalgPullback = cat::RelPullback<CoalgCat>;

/// Membership in class S; nullopt for members, else the first basis vector
/// on which the two sides differ.
std::optional<std::string> class_S_violation(const CoalgMap& f, const CoalgMap& g);
bool class_S_member(const CoalgMap& f, const CoalgMap& g);

struct CoalgEqualizer {
  Coalgebra object;
  CoalgMap inclusion;
  Matrix delta_r;  // E -> E (x) A
};

/// Equalizer of comonoid morphisms: the kernel of f^ - g^ with
/// f^ = (1 (x) f (x) 1)(delta (x) 1)delta, comultiplication solved in two
/// steps. Throws ShapeMismatch, InternalSolveFailure.
CoalgEqualizer coalg_equalizer(const CoalgMap& f, const CoalgMap& g);

/// h with j.h = h0, for a comonoid morphism h0 equalizing f and g.
/// Throws DoesNotEqualize.
CoalgMap factor_through_equalizer(const CoalgEqualizer& eq, const CoalgMap& h0);

/// Equalizer of f (x) eps and eps (x) g on A (x) C; its inclusion is the
/// pairing certificate. Throws CodomainMismatch.
CoalgPullback relative_pullback_coalg(const CoalgMap& f, const CoalgMap& g);

/// Throws SquareDoesNotCommute, SpanNotInClass.
CoalgMap pullback_factor_coalg(const CoalgPullback& pb, const CoalgMap& k, const CoalgMap& l);

struct Cotensor {
  Matrix inclusion;                 // dim(A) dim(C) x dim(E)
  std::optional<Coalgebra> object;  // when the subspace is a subcoalgebra
};

/// Equalizer in vector spaces of (1 f 1)(delta (x) 1) and (1 g 1)(1 (x) delta)
/// on A (x) C. Throws CodomainMismatch.
Cotensor cotensor(const CoalgMap& f, const CoalgMap& g);

/// Mutual factorizations between the relative pullback and the cotensor
/// product, checked to be inverse to each other.
struct CotensorComparison {
  std::optional<CoalgMap> to_cotensor;
  std::optional<CoalgMap> from_cotensor;
  Report report;
};
CotensorComparison compare_cotensor(const CoalgPullback& pb, const Cotensor& cot);

}  // namespace relspan::coalg
