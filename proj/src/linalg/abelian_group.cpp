#include "s4embed/abelian_group.hpp"

#include "s4embed/normal_form.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace s4embed {

FiniteAbelianGroup::FiniteAbelianGroup(IntVector invariant_factors, IntMatrix projection)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)) {
    if (projection_.rows() != factors_.size())
        throw std::invalid_argument("projection rows must match invariant factor count");
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<long>& orders) {
    IntVector d;
    for (long o : orders) d.emplace_back(o);
    return cokernel(IntMatrix::diagonal(d)).torsion;
}

Integer FiniteAbelianGroup::order() const {
    Integer n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

IntVector FiniteAbelianGroup::project(const IntVector& ambient) const {
    return reduce(projection_ * ambient);
}

IntVector FiniteAbelianGroup::reduce(IntVector element) const {
    if (element.size() != factors_.size()) throw std::invalid_argument("element has wrong length");
    for (std::size_t i = 0; i < element.size(); ++i)
        mpz_fdiv_r(element[i].get_mpz_t(), element[i].get_mpz_t(), factors_[i].get_mpz_t());
    return element;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        os << "Z/" << factors_[i].get_str();
    }
    return os.str();
}

Cokernel cokernel(const IntMatrix& M) {
    const SmithForm s = smith_normal_form(M);
    const IntVector d = s.diagonal();
    Cokernel out;
    IntVector factors;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0)
            ++out.free_rank;
        else if (d[i] > 1) {
            factors.push_back(d[i]);
            rows.push_back(i);
        }
    }
    out.free_rank += M.rows() - d.size();
    out.torsion = FiniteAbelianGroup(std::move(factors), s.U.select_rows(rows));
    return out;
}

IntVector normalize_cyclic_orders(const IntVector& orders) {
    const IntVector d = smith_normal_form(IntMatrix::diagonal(orders)).diagonal();
    IntVector out;
    for (const auto& x : d)
        if (x > 1) out.push_back(x);
    return out;
}

namespace {

Subgroup subgroup_from_lattice_rows(const FiniteAbelianGroup& G, IntMatrix rows, std::vector<IntVector> gens) {
    const std::size_t m = G.num_factors();
    Subgroup h;
    h.parent_factors = G.invariant_factors();
    h.generators = std::move(gens);
    if (m == 0) return h;
    h.lattice = hermite_normal_form(rows);
    auto X = solve_left_upper(h.lattice, IntMatrix::diagonal(G.invariant_factors()));
    if (!X) throw std::logic_error("relation lattice is not contained in generator lattice");
    for (const auto& d : smith_normal_form(*X).diagonal()) {
        if (d > 1) h.invariant_factors.push_back(d);
        h.order *= d;
    }
    return h;
}

}  // namespace

Subgroup subgroup_from_generators(const FiniteAbelianGroup& G, const std::vector<IntVector>& gens) {
    const std::size_t m = G.num_factors();
    IntMatrix rows(gens.size() + m, m);
    std::vector<IntVector> reduced;
    reduced.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        reduced.push_back(G.reduce(gens[i]));
        for (std::size_t j = 0; j < m; ++j) rows(i, j) = reduced.back()[j];
    }
    for (std::size_t j = 0; j < m; ++j) rows(gens.size() + j, j) = G.invariant_factors()[j];
    return subgroup_from_lattice_rows(G, std::move(rows), std::move(reduced));
}

Subgroup subgroup_sum(const FiniteAbelianGroup& G, const Subgroup& H1, const Subgroup& H2) {
    const std::size_t m = G.num_factors();
    std::vector<IntVector> gens = H1.generators;
    gens.insert(gens.end(), H2.generators.begin(), H2.generators.end());
    if (m == 0) return subgroup_from_generators(G, gens);
    IntMatrix rows(H1.lattice.rows() + H2.lattice.rows(), m);
    for (std::size_t i = 0; i < H1.lattice.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) rows(i, j) = H1.lattice(i, j);
    for (std::size_t i = 0; i < H2.lattice.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) rows(H1.lattice.rows() + i, j) = H2.lattice(i, j);
    return subgroup_from_lattice_rows(G, std::move(rows), std::move(gens));
}

DirectSumTest direct_sum_test(const FiniteAbelianGroup& G, const Subgroup& H1, const Subgroup& H2) {
    const Subgroup sum = subgroup_sum(G, H1, H2);
    const Integer n = G.order();
    DirectSumTest t;
    t.intersection_order = H1.order * H2.order / sum.order;
    t.is_direct_sum = H1.order * H2.order == n && sum.order == n;
    t.isomorphic = H1.invariant_factors == H2.invariant_factors;
    return t;
}

bool is_double_of(const IntVector& group_factors, const IntVector& half_factors) {
    IntVector twice = half_factors;
    twice.insert(twice.end(), half_factors.begin(), half_factors.end());
    return normalize_cyclic_orders(twice) == group_factors;
}

}  // namespace s4embed
