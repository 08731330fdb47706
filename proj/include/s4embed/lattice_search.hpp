#pragma once

#include "s4embed/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace s4embed {

enum class SubsetMode { Square, Rectangular };

// Rows of A are the vectors v_i in the diagonal lattice; A A^t = -Q.
struct LatticeSubset {
    IntMatrix A;
    SubsetMode mode = SubsetMode::Square;
};

enum class SearchStatus { Complete, BudgetExhausted, LimitReached };

struct SearchOptions {
    std::optional<std::size_t> limit;
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Complete;
    std::vector<LatticeSubset> subsets;
    std::uint64_t nodes = 0;

    bool complete() const { return status == SearchStatus::Complete; }
};

// All A with A A^t = -Q up to signed column permutations, sorted. Throws
// std::invalid_argument when Q is not negative definite (square mode) or
// negative semi-definite of corank one (rectangular mode).
SearchResult enumerate_subsets(const IntMatrix& Q, SubsetMode mode, const SearchOptions& options = {});

bool verify_factorization(const IntMatrix& A, const IntMatrix& Q);

// Representative of A under signed column permutations: each column's first
// nonzero entry positive, columns in decreasing lexicographic order.
IntMatrix canonical_column_form(const IntMatrix& A);

}  // namespace s4embed
