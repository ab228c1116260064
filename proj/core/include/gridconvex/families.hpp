#pragma once

#include <vector>

#include "gridconvex/constructions.hpp"

namespace gridconvex {

// Lower-bound polygon families on counting_grid(m). Gbar uses every grid
// line exactly once, G at least once; Fbar and F run the respective family
// on every admissible subgrid (lines unused outside it).
enum class FamilyVariant { Gbar, G, Fbar, F };

// Closed-form family size as a product of binomials.
mpz_class family_size(std::size_t m, FamilyVariant variant);

// Emits the full family; every polygon is verified strictly convex and
// checked against its regime's line-usage condition. Subgrid variants emit
// per selected subgrid without deduplication.
std::vector<PolySeq> family_generate(std::size_t m, FamilyVariant variant);

}  // namespace gridconvex
