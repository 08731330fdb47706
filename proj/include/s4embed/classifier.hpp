#pragma once

#include "s4embed/manifold.hpp"
#include "s4embed/obstructions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace s4embed {

enum class Status { Embeds, Obstructed, Unknown };

const char* to_string(Status s);

// (p,q) and (p,q2) pair off in Y # -Y: q + q2 = 0 or q q2 = -1 (mod p).
bool lens_mirror_pair(std::int64_t p, std::int64_t q, std::int64_t q2);
// Every p_i odd and the summands match up into mirror pairs.
bool lens_sum_is_double(const LensSum& L);

bool complementary_invariants(std::int64_t a, std::int64_t b1, std::int64_t b2);
bool weak_complementary_invariants(std::int64_t a, std::int64_t b1, std::int64_t b2);
// Perfect matching of the fibres under the (weak) complementary relation.
bool fibres_pair_up(const std::vector<SeifertInvariant>& fibres, bool allow_weak);
// First pair (i, j) of even-order fibres with a_i != a_j or b_i not in {+-b_j, +-b_j^-1}.
std::optional<std::pair<std::size_t, std::size_t>> even_fibre_violation(const std::vector<SeifertInvariant>& fibres);

enum class PretzelFamily { MirrorTriple, MirrorQuadruple, OddPairs, ShiftedQuadruple, OpenFamily };

const char* to_string(PretzelFamily f);

struct FamilyMatch {
    PretzelFamily family;
    PretzelCover member;
};

// At least three strands of absolute value >= 2, i.e. at least three exceptional fibres.
bool in_pretzel_domain(const PretzelCover& P);
// Diffeomorphism up to orientation with a member of one of the five families.
std::optional<FamilyMatch> match_pretzel_family(const PretzelCover& P);
// A pretzel cover diffeomorphic (orientation-preservingly) to Y, if one exists with 3 or 4 strands.
std::optional<PretzelCover> pretzel_form(const SeifertManifold& Y);

struct CatalogHit {
    std::string name;
    std::string provenance;
};

std::optional<CatalogHit> catalog_lookup(const Manifold& m);

// Canonical representative: sorted lens summands with q <= q^-1, sorted strands,
// or normalised Seifert invariants in sorted order.
Manifold canonical_form(const Manifold& m);

struct ReportInvariants {
    std::size_t b1 = 0;
    IntVector torsion_factors;
    std::optional<Rational> euler;
    Integer spin_count = 1;
};

struct ObstructionReport {
    std::string input;
    std::string canonical_form;
    ReportInvariants invariants;
    std::vector<ObstructionResult> obstructions;
    Status status = Status::Unknown;
    std::string reason;
    bool conflict = false;
};

struct ClassifierOptions {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
    // Empty runs everything; otherwise an obstruction runs when its name equals
    // an entry or extends it by "_suffix".
    std::vector<std::string> only;
};

ObstructionReport full_report(const Manifold& m, const ClassifierOptions& options = {});
ObstructionReport decide_lens_sum(const LensSum& L, const ClassifierOptions& options = {});
ObstructionReport decide_seifert(const SeifertManifold& Y, const ClassifierOptions& options = {});
ObstructionReport decide_pretzel(const PretzelCover& P, const ClassifierOptions& options = {});

}  // namespace s4embed
