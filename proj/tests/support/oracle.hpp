#pragma once

#include "gen.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Brute-force reference implementations that use only Matrix::at and plain
// loops over structure constants, never the library's kron/solve/kernel.
namespace relspan::testing::oracle {

/// Name of the first violated axiom (coassociativity, left_counit,
/// right_counit), or nullopt.
std::optional<std::string> coalgebra_violation(const Coalgebra& c);
bool is_coalg_map(const CoalgMap& f);
bool is_cocommutative(const Coalgebra& c);
/// swap.(f (x) g).delta == (g (x) f).delta, by structure constants.
bool class_S(const CoalgMap& f, const CoalgMap& g);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix product(const Matrix& a, const Matrix& b);
std::size_t rank(const Matrix& a);

std::vector<std::pair<std::size_t, std::size_t>> finset_pullback(const FinFun& f, const FinFun& g);
std::vector<std::size_t> finset_equalizer(const FinFun& f, const FinFun& g);

}  // namespace relspan::testing::oracle
