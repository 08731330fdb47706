#pragma once

#include "s4embed/int_matrix.hpp"

#include <optional>

namespace s4embed {

struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    // min(rows, cols) diagonal entries of D
    IntVector diagonal() const;
};

// U * M * V == D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const IntMatrix& M);

// Row-style Hermite normal form of the lattice spanned by the rows of M.
// Returns the nonzero rows: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot). Unique for the lattice.
IntMatrix hermite_normal_form(const IntMatrix& M);

// Solve X * B = C for integer X where B is a square nonsingular row-HNF basis.
// Returns nullopt when the solution is not integral.
std::optional<IntMatrix> solve_left_upper(const IntMatrix& B, const IntMatrix& C);

Integer gcd_of_entries(const IntMatrix& M);

}  // namespace s4embed
