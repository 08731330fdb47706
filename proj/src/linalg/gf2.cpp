#include "s4embed/gf2.hpp"

#include <stdexcept>

namespace s4embed {
namespace {

class BitRow {
public:
    explicit BitRow(std::size_t n) : words_((n + 63) / 64, 0) {}
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void xor_with(const BitRow& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

private:
    std::vector<std::uint64_t> words_;
};

bool odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

}  // namespace

std::vector<Bits> Gf2Solution::enumerate(std::size_t max_log2) const {
    if (kernel.size() > max_log2) throw std::length_error("GF(2) solution space too large to enumerate");
    std::vector<Bits> out;
    const std::size_t total = std::size_t{1} << kernel.size();
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        Bits x = particular;
        for (std::size_t k = 0; k < kernel.size(); ++k)
            if (mask >> k & 1u)
                for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= kernel[k][i];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Gf2Solution> solve_mod2(const IntMatrix& M, const IntVector& b) {
    const std::size_t r = M.rows();
    const std::size_t c = M.cols();
    if (b.size() != r) throw std::invalid_argument("solve_mod2 dimension mismatch");

    std::vector<BitRow> rows(r, BitRow(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j)
            if (odd(M(i, j))) rows[i].set(j);
        if (odd(b[i])) rows[i].set(c);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && !rows[p].get(col)) ++p;
        if (p == r) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != rank && rows[i].get(col)) rows[i].xor_with(rows[rank]);
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < r; ++i)
        if (rows[i].get(c)) return std::nullopt;

    Gf2Solution sol;
    sol.particular.assign(c, 0);
    std::vector<bool> is_pivot(c, false);
    for (std::size_t k = 0; k < rank; ++k) {
        is_pivot[pivot_col[k]] = true;
        sol.particular[pivot_col[k]] = rows[k].get(c) ? 1 : 0;
    }
    for (std::size_t f = 0; f < c; ++f) {
        if (is_pivot[f]) continue;
        Bits v(c, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < rank; ++k)
            if (rows[k].get(f)) v[pivot_col[k]] = 1;
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace s4embed
