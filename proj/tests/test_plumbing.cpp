#include "s4embed/plumbing.hpp"

#include <doctest.h>

#include <numeric>

using namespace s4embed;

namespace {

std::vector<std::int64_t> weights_of(const PlumbingTree& T) { return T.weights; }

}  // namespace

TEST_CASE("negative continued fractions") {
    CHECK(neg_continued_fraction(3, 1) == std::vector<std::int64_t>{3});
    CHECK(neg_continued_fraction(12, 5) == std::vector<std::int64_t>{3, 2, 3});
    CHECK(neg_continued_fraction(7, 4) == std::vector<std::int64_t>{2, 4});
    CHECK(eval_continued_fraction({2, -3, -2}) == Rational(12, 5));
    CHECK(eval_continued_fraction({3, 2, 3}) == Rational(12, 5));
    CHECK(eval_continued_fraction({5}) == 5);
    CHECK_THROWS_AS(eval_continued_fraction({2, 1, 1}), std::domain_error);
    for (std::int64_t p = 2; p < 40; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto c = neg_continued_fraction(p, q);
            for (auto x : c) CHECK(x >= 2);
            CHECK(eval_continued_fraction(c) == Rational(p, q));
            const auto [num, den] = continued_fraction_fraction(c);
            CHECK(num == p);
            CHECK(den == q);
        }
}

TEST_CASE("Seifert normalisation keeps the Euler invariant") {
    const SeifertManifold Y{{}, 0, {{4, 1}, {4, 1}, {12, -7}}};
    const SeifertManifold N = normalize_seifert(Y);
    CHECK(euler_invariant(Y) == Rational(-1, 12));
    CHECK(euler_invariant(N) == euler_invariant(Y));
    for (const auto& f : N.fibres) {
        CHECK(f.b < 0);
        CHECK(f.b > -f.a);
    }
    const SeifertManifold Z{{}, 0, {{3, 4}}};
    CHECK(euler_invariant(normalize_seifert(Z)) == Rational(4, 3));
    CHECK(euler_invariant(SeifertManifold{{}, 0, {{3, 1}, {3, -1}, {3, 1}}}) == Rational(1, 3));
    CHECK(euler_invariant(SeifertManifold{{}, 0, {{2, 1}, {2, -1}, {3, 1}, {3, -1}}}) == 0);
    CHECK(euler_invariant(SeifertManifold{{}, 1, {{4, 1}, {4, 1}, {12, 5}}}) == Rational(-1, 12));
}

TEST_CASE("pretzel covers as Seifert manifolds") {
    const SeifertManifold Y = to_seifert(PretzelCover{{3, -3, 3}});
    CHECK(Y.r == 0);
    CHECK(Y.fibres == std::vector<SeifertInvariant>{{3, 1}, {3, -1}, {3, 1}});
    const SeifertManifold W = to_seifert(PretzelCover{{1, 2, 2, 2}});
    CHECK(W.r == -1);
    CHECK(W.fibres.size() == 3);
    CHECK(mirror(PretzelCover{{3, -3, 3}}) == PretzelCover{{-3, 3, -3}});
}

TEST_CASE("plumbing trees") {
    const PlumbingTree L = plumbing_tree(LensSum{{{3, 1}, {3, 2}}});
    CHECK(weights_of(L) == std::vector<std::int64_t>{-3, -2, -2});
    CHECK(L.intersection_form() == IntMatrix{{-3, 0, 0}, {0, -2, 1}, {0, 1, -2}});
    const PlumbingTree M = plumbing_tree(LensSum{{{3, 1}}}, Orientation::Negative);
    CHECK(weights_of(M) == std::vector<std::int64_t>{-2, -2});

    const PlumbingTree S = plumbing_tree(SeifertManifold{{}, 0, {{3, 1}, {3, -1}, {3, 1}}});
    CHECK(S.has_central_vertex);
    CHECK(S.size() == 6);
    CHECK(S.chains.size() == 3);
    CHECK(definiteness(S).kind == DefinitenessKind::NegativeDefinite);
    CHECK_THROWS_AS(plumbing_tree(SeifertManifold{{}, 0, {{3, 1}, {3, -1}, {3, 1}}}, Orientation::Negative),
                    std::domain_error);

    const PlumbingTree N = plumbing_tree(SeifertManifold{{BaseKind::NonOrientable, 1}, 0, {{3, 1}, {3, -1}, {3, 1}}});
    CHECK_FALSE(N.has_central_vertex);
    CHECK(N.size() == 5);
}

TEST_CASE("definiteness") {
    CHECK(definiteness(IntMatrix{{-2, 1}, {1, -2}}).kind == DefinitenessKind::NegativeDefinite);
    const Definiteness d = definiteness(plumbing_tree(PretzelCover{{2, -2, 2, -2}}));
    CHECK(d.kind == DefinitenessKind::NegativeSemidefinite);
    CHECK(d.corank == 1);
    CHECK(definiteness(IntMatrix{{1}}).kind == DefinitenessKind::Indefinite);
}

TEST_CASE("first homology") {
    const Homology l = first_homology(LensSum{{{3, 1}}});
    CHECK(l.b1 == 0);
    CHECK(l.torsion.invariant_factors() == IntVector{3});
    CHECK(first_homology(PretzelCover{{1, 2, 2, 2}}).torsion.order() == 20);
    // star determinant is the order for a rational homology sphere
    const Homology y = first_homology(PretzelCover{{3, -3, 3}});
    CHECK(y.torsion.order() == abs(plumbing_tree(PretzelCover{{3, -3, 3}}).intersection_form().determinant()));
    CHECK(y.torsion.invariant_factors() == IntVector{3, 3});
    const Homology z = first_homology(PretzelCover{{2, -2, 3, -3}});
    CHECK(z.b1 == 1);
    const Homology g = first_homology(SeifertManifold{{BaseKind::Orientable, 1}, 1, {}});
    CHECK(g.b1 == 2);
    const Homology n = first_homology(SeifertManifold{{BaseKind::NonOrientable, 1}, 0, {}});
    CHECK(n.torsion.order() == 4);
}

TEST_CASE("pretzel conversion preserves homology and e under strand permutation") {
    const PretzelCover A{{3, -5, 7, 2}}, B{{2, 7, -5, 3}};
    CHECK(first_homology(A).torsion.invariant_factors() == first_homology(B).torsion.invariant_factors());
    CHECK(euler_invariant(to_seifert(A)) == euler_invariant(to_seifert(B)));
}

TEST_CASE("lens spaces from chains and small Seifert manifolds") {
    CHECK(lens_from_chain({-2, -2}) == LensSpace{3, 2});
    CHECK(lens_from_chain({-3}) == LensSpace{3, 1});
    CHECK(lens_from_chain({-1}) == LensSpace{1, 0});
    const auto s = small_seifert_as_lens(SeifertManifold{{}, 0, {{5, 1}, {5, -1}}});
    REQUIRE(s);
    CHECK(s->p == 0);
    const auto t = small_seifert_as_lens(SeifertManifold{{}, -2, {}});
    REQUIRE(t);
    CHECK(t->p == 2);
    CHECK(lens_homeomorphic(5, 2, 3));
    CHECK_FALSE(lens_homeomorphic(5, 1, 2));
    CHECK(lens_mirror_match(3, 1, 2));
    CHECK(lens_mirror_match(5, 2, 2));
}

TEST_CASE("Seifert keys distinguish orientation") {
    const SeifertManifold Y = to_seifert(PretzelCover{{3, -3, 3}});
    CHECK(seifert_equivalent(Y, mirror(Y)));
    CHECK_FALSE(seifert_key(Y) == seifert_key(mirror(Y)));
    CHECK(seifert_equivalent(Y, to_seifert(PretzelCover{{-3, 3, 3}})));
    CHECK_FALSE(seifert_equivalent(Y, to_seifert(PretzelCover{{3, -3, 5}})));
}
