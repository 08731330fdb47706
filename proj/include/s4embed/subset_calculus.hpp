#pragma once

#include "s4embed/abelian_group.hpp"
#include "s4embed/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace s4embed {

class LinearShapeError : public std::invalid_argument {
public:
    LinearShapeError(std::size_t i, std::size_t j);
    std::size_t i, j;
};

// Γ(S) of a linear subset. Pairings use the negative of the Euclidean product,
// so vertex weights are -|v_i|^2 and edges join consecutive rows with v_i.v_{i+1} = 1.
struct SubsetGraph {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> components;

    std::size_t c() const { return components.size(); }
};

bool is_linear_subset(const IntMatrix& A);
// Throws LinearShapeError naming the first violating pair.
SubsetGraph subset_graph(const IntMatrix& A);

long I_of(const IntMatrix& A);
long I_of(const IntMatrix& A, const std::vector<std::size_t>& rows);

// Row groups of the transitive closure of sharing a supported column.
std::vector<std::vector<std::size_t>> irreducible_decomposition(const IntMatrix& A);
// Components of Γ restricted to the given rows.
std::size_t component_count(const IntMatrix& A, const std::vector<std::size_t>& rows);

struct ContractionRecord {
    std::size_t s = 0;  // removed row
    std::size_t t = 0;  // row whose square grows back on expansion (index in S)
    std::size_t j = 0;  // removed column
    IntVector removed_row;
    Integer t_entry;
};

// Throws std::invalid_argument("contraction hypothesis violated at coordinate j").
std::pair<IntMatrix, ContractionRecord> contract(const IntMatrix& A, std::size_t s, std::size_t j);
// Two-sided inverse of contract on its image.
IntMatrix expand_final_minus2(const IntMatrix& reduced, const ContractionRecord& record);

struct BadComponent {
    std::vector<std::size_t> rows;
    std::int64_t n = 0;  // reduced weight is -n
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t p = 0;  // boundary L(p,q) of the component's chain
    std::int64_t q = 0;
    long I = 0;
    bool witness_verified = false;  // p = m^2 n and q or q^-1 = mnk+1 (mod p)
};

std::vector<BadComponent> detect_bad_components(const IntMatrix& A);

enum class Complementarity { Complementary, WeakComplementary, Neither };

// Chain weights (all <= -2).
Complementarity complementary_pair_test(const std::vector<std::int64_t>& c1, const std::vector<std::int64_t>& c2);

// G(S) = Z^n / im Q_Γ and H(S) = im A / im Q_Γ for a square subset.
struct SubsetGroups {
    FiniteAbelianGroup G;
    Subgroup H;
};

SubsetGroups subset_groups(const IntMatrix& A);

}  // namespace s4embed
