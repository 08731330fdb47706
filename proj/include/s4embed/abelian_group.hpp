#pragma once

#include "s4embed/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace s4embed {

// Finite abelian group Z/d_1 + ... + Z/d_m with d_i | d_{i+1}, d_i >= 2, together
// with the projection from the ambient lattice it was presented over.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    FiniteAbelianGroup(IntVector invariant_factors, IntMatrix projection);

    // Abstract group from arbitrary cyclic orders; elements are given in the
    // coordinates of those cyclic factors.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<long>& orders);

    const IntVector& invariant_factors() const { return factors_; }
    const IntMatrix& projection() const { return projection_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::size_t ambient_dimension() const { return projection_.cols(); }
    Integer order() const;
    bool is_trivial() const { return factors_.empty(); }

    IntVector project(const IntVector& ambient) const;
    IntVector reduce(IntVector element) const;

    std::string to_string() const;

private:
    IntVector factors_;
    IntMatrix projection_;
};

struct Cokernel {
    FiniteAbelianGroup torsion;
    std::size_t free_rank = 0;
};

// Z^rows / (column span of M).
Cokernel cokernel(const IntMatrix& M);

struct Subgroup {
    IntVector parent_factors;
    std::vector<IntVector> generators;
    Integer order = 1;
    IntVector invariant_factors;
    // HNF basis of the preimage lattice in Z^m (m = parent factor count);
    // equal subgroups have equal bases.
    IntMatrix lattice;

    bool same_as(const Subgroup& other) const { return lattice == other.lattice; }
};

Subgroup subgroup_from_generators(const FiniteAbelianGroup& G, const std::vector<IntVector>& gens);
Subgroup subgroup_sum(const FiniteAbelianGroup& G, const Subgroup& H1, const Subgroup& H2);

struct DirectSumTest {
    bool is_direct_sum = false;
    bool isomorphic = false;
    Integer intersection_order = 1;
};

DirectSumTest direct_sum_test(const FiniteAbelianGroup& G, const Subgroup& H1, const Subgroup& H2);

// True iff G is isomorphic to H + H for a group H with the given factors.
bool is_double_of(const IntVector& group_factors, const IntVector& half_factors);

// Invariant factors (>= 2) of the group with the given cyclic orders.
IntVector normalize_cyclic_orders(const IntVector& orders);

}  // namespace s4embed
