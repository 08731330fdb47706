#pragma once

#include "s4embed/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace s4embed {

using Bits = std::vector<std::uint8_t>;

// Affine solution set over GF(2): particular + span(kernel).
struct Gf2Solution {
    Bits particular;
    std::vector<Bits> kernel;

    std::size_t count_log2() const { return kernel.size(); }
    // Every solution, in the order of the binary counter over kernel coefficients.
    std::vector<Bits> enumerate(std::size_t max_log2 = 24) const;
};

// All x with M x = b (mod 2); nullopt when inconsistent.
std::optional<Gf2Solution> solve_mod2(const IntMatrix& M, const IntVector& b);

}  // namespace s4embed
