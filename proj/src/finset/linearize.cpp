#include "relspan/finset/linearize.hpp"

namespace relspan::finset {

coalg::Coalgebra linearize_obj(FinSetObj x, alg::Field field) { return coalg::group_like(field, x.size); }

coalg::CoalgMap linearize_fun(const FinFun& f, alg::Field field) {
  std::vector<alg::Matrix::Entry> entries;
  for (std::size_t x = 0; x < f.dom().size; ++x) entries.push_back({f(x), x, alg::Scalar::one(field)});
  return coalg::CoalgMap(linearize_obj(f.dom(), field), linearize_obj(f.cod(), field),
                         alg::Matrix::from_entries(field, f.cod().size, f.dom().size, std::move(entries)));
}

}  // namespace relspan::finset
