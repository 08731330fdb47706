#include "s4embed/lattice_search.hpp"
#include "s4embed/obstructions.hpp"
#include "s4embed/plumbing.hpp"

#include <doctest.h>

using namespace s4embed;

namespace {

IntMatrix lens_form(std::vector<LensSpace> s) { return plumbing_tree(LensSum{std::move(s)}).intersection_form(); }

const IntMatrix* find_matrix(const Certificate& c, const std::string& label) {
    for (const auto& [name, m] : c.matrices)
        if (name == label) return &m;
    return nullptr;
}

const IntVector* find_group(const Certificate& c, const std::string& label) {
    for (const auto& [name, g] : c.groups)
        if (name == label) return &g;
    return nullptr;
}

Integer product(const IntVector& v) {
    Integer p = 1;
    for (const auto& x : v) p *= x;
    return p;
}

// Reverse the column order and flip the sign of every other column.
IntMatrix scramble(const IntMatrix& A) {
    IntMatrix B(A.rows(), A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) {
            const std::size_t src = A.cols() - 1 - c;
            B(r, c) = c % 2 ? -A(r, src) : A(r, src);
        }
    return B;
}

}  // namespace

TEST_CASE("double subset obstruction") {
    const ObstructionResult a = double_subset_obstruction(lens_form({{3, 1}, {3, 2}}));
    CHECK(a.verdict == Verdict::Pass);
    CHECK(double_subset_obstruction(lens_form({{2, 1}, {2, 1}})).verdict == Verdict::Obstructed);
    CHECK(double_subset_obstruction(lens_form({{5, 1}, {5, 1}})).verdict == Verdict::Obstructed);
    const ObstructionResult s3 = double_subset_obstruction(-IntMatrix::identity(3));
    REQUIRE(s3.verdict == Verdict::Pass);
    CHECK(*find_matrix(s3.certificate, "A1") == *find_matrix(s3.certificate, "A2"));
    CHECK_THROWS_AS(double_subset_obstruction(IntMatrix{{-1, 1}, {1, -1}}), std::invalid_argument);
}

TEST_CASE("pass certificates are consistent") {
    const std::vector<IntMatrix> forms{lens_form({{3, 1}, {3, 2}}), lens_form({{5, 2}, {5, 3}}),
                                       lens_form({{7, 2}, {7, 3}}), lens_form({{5, 1}, {5, 4}, {3, 1}, {3, 2}}),
                                       plumbing_tree(PretzelCover{{3, -3, 3}}).intersection_form()};
    for (const auto& Q : forms) {
        const ObstructionResult r = double_subset_obstruction(Q);
        REQUIRE(r.verdict == Verdict::Pass);
        const Integer order = abs(Q.determinant());
        const Integer h1 = product(*find_group(r.certificate, "H1"));
        const Integer h2 = product(*find_group(r.certificate, "H2"));
        CHECK(h1 == h2);
        CHECK(h1 * h2 == order);
        CHECK(verify_factorization(*find_matrix(r.certificate, "A1"), Q));
        CHECK(verify_factorization(*find_matrix(r.certificate, "A2"), Q));
    }
}

TEST_CASE("exhausted budgets are inconclusive and obstruction is stable under larger budgets") {
    const IntMatrix Q = lens_form({{5, 1}, {5, 1}});
    CHECK(double_subset_obstruction(Q, {5, 1}).verdict == Verdict::Inconclusive);
    CHECK(double_subset_obstruction(Q, {1'000'000, 1}).verdict == Verdict::Obstructed);
    CHECK(double_subset_obstruction(Q, {100'000'000, 1}).verdict == Verdict::Obstructed);
}

TEST_CASE("semi-definite obstruction") {
    const ObstructionResult r = semidefinite_obstruction(IntMatrix{{-1, 1}, {1, -1}});
    REQUIRE(r.verdict == Verdict::Pass);
    CHECK(*find_matrix(r.certificate, "A") == IntMatrix{{1}, {-1}});
    CHECK(semidefinite_obstruction(plumbing_tree(PretzelCover{{2, -2, 2, -2}}).intersection_form()).verdict ==
          Verdict::Pass);
    const Verdict v = semidefinite_obstruction(plumbing_tree(PretzelCover{{4, -4, 2, -2}}).intersection_form()).verdict;
    CHECK(v != Verdict::Inconclusive);
    CHECK_THROWS_AS(semidefinite_obstruction(-IntMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("non-orientable obstruction") {
    const BaseSurface rp2{BaseKind::NonOrientable, 1};
    const IntMatrix pass_form = plumbing_tree(SeifertManifold{rp2, 0, {{3, 1}, {3, -1}}}).intersection_form();
    CHECK(nonorientable_obstruction(pass_form).verdict == Verdict::Pass);
    const IntMatrix fail_form = plumbing_tree(SeifertManifold{rp2, 0, {{3, 1}, {2, 1}}}).intersection_form();
    CHECK(nonorientable_obstruction(fail_form).verdict == Verdict::Obstructed);
    CHECK(nonorientable_obstruction(IntMatrix(0, 0)).verdict == Verdict::Pass);
}

TEST_CASE("characteristic sign vectors") {
    CHECK(char_vector_criterion(IntMatrix::identity(2), -IntMatrix::identity(2)));
    CHECK_FALSE(char_vector_criterion(IntMatrix{{3}}, IntMatrix{{-9}}));
    CHECK_FALSE(char_vector_criterion_bruteforce(IntMatrix{{3}}, IntMatrix{{-9}}));
    CHECK_THROWS_AS(char_vector_criterion(IntMatrix{{2}}, IntMatrix{{-4}}), std::invalid_argument);
}

TEST_CASE("characteristic criterion: dynamic programme matches enumeration") {
    std::size_t checked = 0;
    const std::vector<IntMatrix> forms{lens_form({{5, 2}, {5, 3}}), lens_form({{7, 2}, {7, 5}}),
                                       lens_form({{9, 2}, {9, 7}}), lens_form({{11, 3}, {11, 4}}),
                                       plumbing_tree(PretzelCover{{3, -3, 3}}).intersection_form(),
                                       plumbing_tree(PretzelCover{{-3, 5, 5}}).intersection_form()};
    for (const auto& Q : forms) {
        REQUIRE(abs(Q.determinant()) % 2 == 1);
        for (const auto& s : enumerate_subsets(Q, SubsetMode::Square).subsets) {
            const bool dp = char_vector_criterion(s.A, Q);
            CHECK(dp == char_vector_criterion_bruteforce(s.A, Q));
            CHECK(dp == char_vector_criterion(scramble(s.A), Q));
            ++checked;
        }
    }
    CHECK(checked > 0);
}
