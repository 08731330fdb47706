#include "s4embed/abelian_group.hpp"
#include "s4embed/gf2.hpp"
#include "s4embed/normal_form.hpp"
#include "s4embed/quadratic_form.hpp"

#include <doctest.h>

#include <random>

using namespace s4embed;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
    return M;
}

// gcd of all k x k minors, by brute force over row and column subsets
Integer minor_gcd(const IntMatrix& M, std::size_t k) {
    Integer g = 0;
    const std::size_t r = M.rows(), c = M.cols();
    for (unsigned rm = 0; rm < (1u << r); ++rm) {
        if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
        for (unsigned cm = 0; cm < (1u << c); ++cm) {
            if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
            std::vector<std::size_t> ri, ci;
            for (std::size_t i = 0; i < r; ++i)
                if (rm >> i & 1) ri.push_back(i);
            for (std::size_t j = 0; j < c; ++j)
                if (cm >> j & 1) ci.push_back(j);
            const Integer d = M.select_rows(ri).select_cols(ci).determinant();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    }
    return g;
}

}  // namespace

TEST_CASE("determinant by Bareiss") {
    CHECK(IntMatrix{{2, 1}, {1, 2}}.determinant() == 3);
    CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
    CHECK(IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}.determinant() == -4);
    CHECK(IntMatrix(0, 0).determinant() == 1);
}

TEST_CASE("smith normal form of the A2 form") {
    const IntMatrix M{{-2, 1}, {1, -2}};
    const SmithForm s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(s.diagonal() == IntVector{1, 3});
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const IntMatrix M = random_matrix(rng, r, c, 6);
        const SmithForm s = smith_normal_form(M);
        REQUIRE(s.U * M * s.V == s.D);
        CHECK(s.D.is_diagonal());
        const IntVector d = s.diagonal();
        Integer prefix = 1;
        for (std::size_t k = 0; k < d.size(); ++k) {
            CHECK(d[k] >= 0);
            if (k + 1 < d.size() && d[k] != 0) CHECK(d[k + 1] % d[k] == 0);
            prefix *= d[k];
            CHECK(prefix == minor_gcd(M, k + 1));
        }
    }
}

TEST_CASE("hermite normal form is canonical for the lattice") {
    const IntMatrix M{{2, 4}, {1, 3}};
    const IntMatrix H = hermite_normal_form(M);
    CHECK(H == IntMatrix{{1, 1}, {0, 2}});
    IntMatrix M2 = M;
    M2.add_row_multiple(0, 1, 5);
    M2.swap_rows(0, 1);
    CHECK(hermite_normal_form(M2) == H);
}

TEST_CASE("left solve against an upper basis") {
    const IntMatrix B{{1, 1}, {0, 2}};
    const auto X = solve_left_upper(B, IntMatrix{{3, 5}});
    REQUIRE(X);
    CHECK(*X * B == IntMatrix{{3, 5}});
    CHECK_FALSE(solve_left_upper(B, IntMatrix{{0, 1}}));
}

TEST_CASE("cokernels") {
    const Cokernel a2 = cokernel(IntMatrix{{-2, 1}, {1, -2}});
    CHECK(a2.free_rank == 0);
    CHECK(a2.torsion.invariant_factors() == IntVector{3});
    const Cokernel z = cokernel(IntMatrix{{0}});
    CHECK(z.free_rank == 1);
    CHECK(z.torsion.is_trivial());
    const Cokernel d = cokernel(IntMatrix::diagonal({2, 4, 1}));
    CHECK(d.torsion.invariant_factors() == IntVector{2, 4});
    CHECK(d.torsion.order() == 8);
    CHECK(d.torsion.to_string() == "Z/2 + Z/4");
    CHECK(d.torsion.project({1, 0, 0}) != d.torsion.project({0, 0, 0}));
    CHECK(d.torsion.project({2, 4, 7}) == d.torsion.project({0, 0, 0}));
}

TEST_CASE("subgroups, sums and direct-sum tests") {
    const FiniteAbelianGroup G = FiniteAbelianGroup::from_cyclic_orders({3, 3});
    CHECK(G.order() == 9);
    const Subgroup H1 = subgroup_from_generators(G, {G.reduce({1, 0})});
    const Subgroup H2 = subgroup_from_generators(G, {G.reduce({0, 1})});
    const Subgroup H3 = subgroup_from_generators(G, {G.reduce({2, 0})});
    CHECK(H1.order == 3);
    CHECK(H1.same_as(H3));
    CHECK_FALSE(H1.same_as(H2));
    const DirectSumTest t = direct_sum_test(G, H1, H2);
    CHECK(t.is_direct_sum);
    CHECK(t.isomorphic);
    CHECK(t.intersection_order == 1);
    const DirectSumTest same = direct_sum_test(G, H1, H3);
    CHECK_FALSE(same.is_direct_sum);
    CHECK(same.intersection_order == 3);
    CHECK(subgroup_sum(G, H1, H2).order == 9);

    const FiniteAbelianGroup C9 = FiniteAbelianGroup::from_cyclic_orders({9});
    const Subgroup T = subgroup_from_generators(C9, {C9.reduce({3})});
    CHECK(T.order == 3);
    CHECK_FALSE(direct_sum_test(C9, T, T).is_direct_sum);
}

TEST_CASE("doubling of invariant factors") {
    CHECK(is_double_of({3, 3}, {3}));
    CHECK(is_double_of({2, 2, 6, 6}, {2, 6}));
    CHECK_FALSE(is_double_of({9}, {3}));
    CHECK_FALSE(is_double_of({2, 6}, {2}));
    CHECK(is_double_of({}, {}));
    CHECK(normalize_cyclic_orders({2, 3}) == IntVector{6});
    CHECK(normalize_cyclic_orders({4, 6, 1}) == IntVector{2, 12});
}

TEST_CASE("mod 2 solving") {
    const IntMatrix M{{1, 1}, {1, 1}};
    const auto s = solve_mod2(M, {1, 1});
    REQUIRE(s);
    CHECK(s->count_log2() == 1);
    CHECK(s->enumerate().size() == 2);
    CHECK_FALSE(solve_mod2(M, {1, 0}));
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const IntMatrix A = random_matrix(rng, n, n, 3);
        IntVector b(n);
        for (auto& x : b) x = static_cast<long>(rng() % 2);
        const auto sol = solve_mod2(A, b);
        std::size_t brute = 0;
        for (unsigned x = 0; x < (1u << n); ++x) {
            IntVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = (x >> i) & 1;
            const IntVector Av = A * v;
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) ok = ok && (Av[i] - b[i]) % 2 == 0;
            brute += ok;
        }
        CHECK((sol ? sol->enumerate().size() : 0) == brute);
    }
}

TEST_CASE("inertia by exact congruence") {
    const Inertia e8 = inertia(IntMatrix{{-2, 1, 0, 0, 0, 0, 0, 0},
                                         {1, -2, 1, 0, 0, 0, 0, 0},
                                         {0, 1, -2, 1, 0, 0, 0, 0},
                                         {0, 0, 1, -2, 1, 0, 0, 0},
                                         {0, 0, 0, 1, -2, 1, 0, 1},
                                         {0, 0, 0, 0, 1, -2, 1, 0},
                                         {0, 0, 0, 0, 0, 1, -2, 0},
                                         {0, 0, 0, 0, 1, 0, 0, -2}});
    CHECK(e8.negative == 8);
    CHECK(e8.signature() == -8);
    const Inertia h = inertia(IntMatrix{{0, 1}, {1, 0}});
    CHECK(h.positive == 1);
    CHECK(h.negative == 1);
    const Inertia z = inertia(IntMatrix{{-1, 1}, {1, -1}});
    CHECK(z.zero == 1);
    CHECK(z.negative == 1);
}
