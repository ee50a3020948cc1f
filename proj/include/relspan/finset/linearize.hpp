#pragma once

#include "relspan/coalg/coalgebra.hpp"
#include "relspan/finset/finset.hpp"

namespace relspan::finset {

/// k[X], the group-like coalgebra on X.
coalg::Coalgebra linearize_obj(FinSetObj x, alg::Field field);
/// e_x -> e_f(x).
coalg::CoalgMap linearize_fun(const FinFun& f, alg::Field field);

}  // namespace relspan::finset
