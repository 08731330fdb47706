#pragma once

#include "s4embed/int_matrix.hpp"

#include <cstddef>

namespace s4embed {

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

// Sylvester inertia of a symmetric integer matrix by exact rational congruence.
Inertia inertia(const IntMatrix& Q);

}  // namespace s4embed
