#include "s4embed/normal_form.hpp"

#include <stdexcept>

namespace s4embed {
namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntVector SmithForm::diagonal() const {
    const std::size_t k = std::min(D.rows(), D.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = D(i, i);
    return d;
}

SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    SmithForm s{IntMatrix::identity(m), M, IntMatrix::identity(n)};
    IntMatrix& D = s.D;
    const std::size_t k = std::min(m, n);

    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            // pivot: smallest nonzero absolute value in the trailing block
            std::size_t pr = m, pc = n;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Integer& x = D(i, j);
                    if (x == 0) continue;
                    if (pr == m || abs(x) < best) {
                        best = abs(x);
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == m) break;
            D.swap_rows(t, pr);
            s.U.swap_rows(t, pr);
            D.swap_cols(t, pc);
            s.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = trunc_div(D(i, t), D(t, t));
                D.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = trunc_div(D(t, j), D(t, t));
                D.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into the pivot row
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        s.U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
    IntMatrix A = M;
    const std::size_t k = A.rows();
    const std::size_t m = A.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < k; ++col) {
        for (;;) {
            std::size_t best = k;
            for (std::size_t i = row; i < k; ++i) {
                if (A(i, col) == 0) continue;
                if (best == k || abs(A(i, col)) < abs(A(best, col))) best = i;
            }
            if (best == k) break;
            A.swap_rows(row, best);
            bool done = true;
            for (std::size_t i = row + 1; i < k; ++i) {
                if (A(i, col) == 0) continue;
                A.add_row_multiple(i, row, -floor_div(A(i, col), A(row, col)));
                if (A(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (A(row, col) == 0) continue;
        if (A(row, col) < 0) A.negate_row(row);
        for (std::size_t i = 0; i < row; ++i)
            A.add_row_multiple(i, row, -floor_div(A(i, col), A(row, col)));
        ++row;
    }
    IntMatrix out(row, m);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = A(i, j);
    return out;
}

std::optional<IntMatrix> solve_left_upper(const IntMatrix& B, const IntMatrix& C) {
    const std::size_t m = B.rows();
    if (!B.is_square() || C.cols() != m) throw std::invalid_argument("solve_left_upper dimension mismatch");
    IntMatrix X(C.rows(), m);
    for (std::size_t r = 0; r < C.rows(); ++r) {
        for (std::size_t j = 0; j < m; ++j) {
            if (B(j, j) == 0) throw std::invalid_argument("solve_left_upper: singular basis");
            Integer acc = C(r, j);
            for (std::size_t i = 0; i < j; ++i) acc -= X(r, i) * B(i, j);
            if (acc % B(j, j) != 0) return std::nullopt;
            X(r, j) = acc / B(j, j);
        }
    }
    return X;
}

Integer gcd_of_entries(const IntMatrix& M) {
    Integer g = 0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) g = gcd(g, M(i, j));
    return g;
}

}  // namespace s4embed
