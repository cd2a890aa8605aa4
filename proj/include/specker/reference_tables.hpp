#pragma once

#include <array>

#include "specker/golden.hpp"

namespace specker::tables {

// The conventional coordinate table for the 60 rays, reproduced as printed.
// Several entries are garbled in circulation (identical strings for distinct
// rays); the catalog reconstructs the intended vectors from the basis table
// below, so this table serves as the candidate source, not as ground truth.
const std::array<GoldenVec4, 60>& printed_ray_table();

// The 75 bases in the conventional numbering, grouped into 25 blocks of three
// rows. Block k covers the 24-cell in column 'A'+k%5, row 'A'+k/5 of the
// 5x5 label grid; each row of a block is one basis, in printed order.
using BasisBlock = std::array<std::array<int, 4>, 3>;
const std::array<BasisBlock, 25>& basis_table();

}  // namespace specker::tables
