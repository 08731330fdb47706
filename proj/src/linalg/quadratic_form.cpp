#include "s4embed/quadratic_form.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace s4embed {

Inertia inertia(const IntMatrix& Q) {
    if (!Q.is_symmetric()) throw std::invalid_argument("inertia requires a symmetric matrix");
    const std::size_t n = Q.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(i, j);

    auto sym_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    // basis change e_i <- e_i + e_j
    auto sym_add = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
    };

    Inertia out;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                sym_swap(i, j);
            } else {
                j = i + 1;
                while (j < n && a[i][j] == 0) ++j;
                if (j == n) {
                    ++out.zero;
                    continue;
                }
                sym_add(i, j);
            }
        }
        const Rational p = a[i][i];
        if (p > 0)
            ++out.positive;
        else
            ++out.negative;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][i] == 0) continue;
            const Rational f = a[r][i] / p;
            for (std::size_t k = i; k < n; ++k) a[r][k] -= f * a[i][k];
            for (std::size_t k = i; k < n; ++k) a[k][r] = a[r][k];
        }
    }
    return out;
}

}  // namespace s4embed
