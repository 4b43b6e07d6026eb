/*
 * coxeter.hpp
 * S-Coxeter elements: products of all simple reflections, each exactly
 * once. enumerate_coxeter walks every ordering and dedupes by matrix;
 * count_coxeter is the closed product formula over simple factors.
 */
#pragma once

#include "springer/root_datum.hpp"

namespace springer {

// Distinct S-Coxeter elements, sorted by reduced word. Each element is
// checked to have length r and full support. Throws WeylGroupTooLarge for
// semisimple rank > 8 (r! orderings).
std::vector<WeylElement> enumerate_coxeter(const RootDatum& datum);

// |Cox(W,S)| = prod over simple factors of 2^(rank-1). No enumeration.
long count_coxeter(const RootDatum& datum);

}  // namespace springer
