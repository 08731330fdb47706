#include "s4embed/classifier.hpp"

#include <doctest.h>

#include <numeric>

#include <algorithm>

using namespace s4embed;

namespace {

const ObstructionResult* find(const ObstructionReport& r, const std::string& name) {
    for (const auto& o : r.obstructions)
        if (o.name == name) return &o;
    return nullptr;
}

std::int64_t inverse_mod(std::int64_t q, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x)
        if ((q * x) % p == 1) return x;
    return 0;
}

}  // namespace

TEST_CASE("lens sums") {
    CHECK(decide_lens_sum(LensSum{{{3, 1}, {3, 2}}}).status == Status::Embeds);
    CHECK(decide_lens_sum(LensSum{{{2, 1}, {2, 1}}}).status == Status::Obstructed);
    const ObstructionReport r = decide_lens_sum(LensSum{{{5, 1}, {5, 1}}});
    CHECK(r.status == Status::Obstructed);
    REQUIRE(find(r, "double_subset"));
    CHECK(find(r, "double_subset")->verdict == Verdict::Obstructed);
    const ObstructionReport s3 = full_report(LensSum{});
    CHECK(s3.status == Status::Embeds);
    CHECK(s3.reason == "S3");
}

TEST_CASE("lens verdicts ignore order and q versus its inverse") {
    for (std::int64_t p = 3; p <= 11; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t q2 = 1; q2 < p; ++q2) {
                if (std::gcd(p, q2) != 1) continue;
                const Status base = decide_lens_sum(LensSum{{{p, q}, {p, q2}}}).status;
                CHECK(decide_lens_sum(LensSum{{{p, q2}, {p, q}}}).status == base);
                CHECK(decide_lens_sum(LensSum{{{p, inverse_mod(q, p)}, {p, q2}}}).status == base);
            }
        }
}

TEST_CASE("Seifert manifolds") {
    CHECK(decide_seifert(SeifertManifold{{}, 0, {{5, 1}, {5, -1}}}).status == Status::Embeds);
    CHECK(decide_seifert(SeifertManifold{{BaseKind::NonOrientable, 1}, 0, {{3, 1}, {2, 1}}}).status ==
          Status::Obstructed);
    const ObstructionReport ex = decide_seifert(SeifertManifold{{}, 0, {{4, 1}, {4, 1}, {12, -7}}});
    CHECK(ex.status == Status::Embeds);
    CHECK(ex.reason == "seifert_4_4_12");
    CHECK(decide_seifert(SeifertManifold{{}, 0, {{3, 1}, {5, 1}, {7, 1}}}).status == Status::Obstructed);
    CHECK_FALSE(even_fibre_violation({{4, 1}, {4, -1}}));
    CHECK(even_fibre_violation({{4, 1}, {6, -1}}));
    CHECK(fibres_pair_up({{5, 2}, {5, -2}, {3, 1}, {3, 2}}, false));
    CHECK_FALSE(fibres_pair_up({{5, 2}, {5, 2}}, false));
    CHECK(fibres_pair_up({{5, 2}, {5, 2}}, true));
}

TEST_CASE("pretzel covers") {
    CHECK(decide_pretzel(PretzelCover{{3, -3, 3}}).status == Status::Embeds);
    const ObstructionReport open = decide_pretzel(PretzelCover{{3, -5, -8}});
    CHECK(open.status == Status::Unknown);
    CHECK(open.reason == "pretzel_2l-1_-2l-1_-2l^2");
    const ObstructionReport r = decide_pretzel(PretzelCover{{1, -4, -4, -4}});
    CHECK(r.status == Status::Obstructed);
    REQUIRE(find(r, "double_subset"));
    CHECK(find(r, "double_subset")->verdict == Verdict::Obstructed);
    const ObstructionReport known = full_report(PretzelCover{{2, -2, 3, -3}});
    CHECK(known.status == Status::Embeds);
    for (const auto& o : known.obstructions) CHECK(o.verdict != Verdict::Obstructed);
    CHECK(decide_pretzel(PretzelCover{{4, -4, 2, -2}}).status == Status::Obstructed);
}

TEST_CASE("pretzel verdicts ignore strand order and global mirror") {
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = a; b <= 5; ++b)
            for (std::int64_t c = b; c <= 5; ++c) {
                if (std::abs(a) < 2 || std::abs(b) < 2 || std::abs(c) < 2) continue;
                const Status s = decide_pretzel(PretzelCover{{a, b, c}}).status;
                CHECK(decide_pretzel(PretzelCover{{c, a, b}}).status == s);
                CHECK(decide_pretzel(PretzelCover{{-b, -c, -a}}).status == s);
            }
}

TEST_CASE("catalog") {
    const auto hit = catalog_lookup(PretzelCover{{5, -5, 5}});
    REQUIRE(hit);
    CHECK(hit->name == "pretzel_a_-a_a");
    CHECK_FALSE(hit->provenance.empty());
    CHECK(catalog_lookup(LensSum{{{7, 2}, {7, 5}}}));
    CHECK_FALSE(catalog_lookup(LensSum{{{7, 2}, {7, 2}}}));
    CHECK(catalog_lookup(PretzelCover{{4, -3, 3, -3}}));
    CHECK(catalog_lookup(PretzelCover{{4, -4, 3, -3}}));
    CHECK_FALSE(catalog_lookup(PretzelCover{{3, -5, -8}}));
    const auto m = match_pretzel_family(PretzelCover{{-8, 3, -5}});
    REQUIRE(m);
    CHECK(m->family == PretzelFamily::OpenFamily);
    CHECK(canonical_form(PretzelCover{{3, -3, 2}}) == Manifold{PretzelCover{{-3, 2, 3}}});
}

TEST_CASE("passes alone never give EMBEDS") {
    const std::vector<Manifold> inputs{PretzelCover{{3, 5, -7}}, PretzelCover{{2, -3, -3}}, PretzelCover{{3, -3, 5}},
                                       SeifertManifold{{}, 1, {{3, 1}, {3, 1}, {5, 2}}},
                                       LensSum{{{9, 2}, {9, 4}}}, PretzelCover{{5, -5, 5, -5}}};
    for (const auto& m : inputs) {
        const ObstructionReport r = full_report(m);
        if (r.status == Status::Embeds) CHECK(catalog_lookup(m));
        if (!catalog_lookup(m)) CHECK(r.status != Status::Embeds);
    }
}

TEST_CASE("obstruction filter") {
    ClassifierOptions only;
    only.only = {"double_subset"};
    const ObstructionReport r = full_report(LensSum{{{5, 1}, {5, 1}}}, only);
    for (const auto& o : r.obstructions) CHECK(o.name.rfind("double_subset", 0) == 0);
    CHECK(r.status == Status::Obstructed);
}
