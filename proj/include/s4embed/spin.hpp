#pragma once

#include "s4embed/gf2.hpp"
#include "s4embed/manifold.hpp"
#include "s4embed/obstructions.hpp"
#include "s4embed/plumbing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace s4embed {

// Vertex subset w with Q w = diag(Q) (mod 2).
struct WuSet {
    Bits w;
};

std::vector<WuSet> wu_sets(const PlumbingTree& T);
bool is_wu_set(const PlumbingTree& T, const WuSet& w);
// sigma(Q) - w.w
std::int64_t mu_bar(const PlumbingTree& T, const WuSet& w);

struct SpinProfile {
    std::uint64_t spin_count = 0;
    std::vector<std::int64_t> mu_values;  // sorted, one per spin structure
    std::vector<WuSet> wu;
    std::optional<int> k;                 // link components, pretzel covers only
    bool mirrored = false;                // computed on -Y and negated back
};

// Orientable genus-zero base only; throws std::invalid_argument otherwise.
SpinProfile spin_profile(const SeifertManifold& Y);
SpinProfile spin_profile(const PretzelCover& P);

// Components of the pretzel link with these strands.
int link_components(const PretzelCover& P);
// Minimum number of spin structures with vanishing mu-bar for an embeddable cover.
int mubar_threshold(int k);

ObstructionResult mubar_embedding_obstruction(const PretzelCover& P);

enum class FurutaCase { RationalBall, S1Homology, S2Homology };

// Throws std::invalid_argument("unknown case label").
FurutaCase parse_furuta_case(const std::string& label);
// sigma_terms holds sigma(X) or, for S2Homology, sigma(X) and sigma(V).
bool furuta_check(FurutaCase c, std::int64_t b2, const std::vector<std::int64_t>& sigma_terms, bool is_disk = false);

}  // namespace s4embed
