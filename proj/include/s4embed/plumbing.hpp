#pragma once

#include "s4embed/abelian_group.hpp"
#include "s4embed/int_matrix.hpp"
#include "s4embed/manifold.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace s4embed {

// Weighted plumbing forest. Vertex 0 is the central vertex when present; the
// remaining vertices are stored chain by chain, each chain ordered outward.
struct PlumbingTree {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> chains;
    bool has_central_vertex = false;
    bool base_nonorientable = false;

    std::size_t size() const { return weights.size(); }
    IntMatrix intersection_form() const;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

std::vector<std::int64_t> neg_continued_fraction(std::int64_t p, std::int64_t q);
// Throws std::domain_error("division by zero in tail").
Rational eval_continued_fraction(const std::vector<std::int64_t>& seq);
// Numerator and denominator of [c_1,...,c_k]^- via the matrix product; total.
std::pair<Integer, Integer> continued_fraction_fraction(const std::vector<std::int64_t>& seq);

SeifertManifold normalize_seifert(const SeifertManifold& Y);
Rational euler_invariant(const SeifertManifold& Y);
SeifertManifold to_seifert(const PretzelCover& P);

LensSum mirror(const LensSum& L);
SeifertManifold mirror(const SeifertManifold& Y);
PretzelCover mirror(const PretzelCover& P);
Manifold mirror(const Manifold& m);

PlumbingTree plumbing_tree(const LensSum& L, Orientation o = Orientation::Positive);
// Throws std::domain_error when the chosen orientation has e < 0 over an orientable base.
PlumbingTree plumbing_tree(const SeifertManifold& Y, Orientation o = Orientation::Positive);
PlumbingTree plumbing_tree(const PretzelCover& P, Orientation o = Orientation::Positive);
PlumbingTree plumbing_tree(const Manifold& m, Orientation o = Orientation::Positive);

// Star with central weight r and legs from (a_i, b_i) without normalising;
// legs use the generalised expansion of a_i / -b_i. Used for cross-checks.
PlumbingTree unnormalized_star(const SeifertManifold& Y);

enum class DefinitenessKind { NegativeDefinite, NegativeSemidefinite, Indefinite };

struct Definiteness {
    DefinitenessKind kind = DefinitenessKind::Indefinite;
    std::size_t corank = 0;
};

Definiteness definiteness(const IntMatrix& Q);
Definiteness definiteness(const PlumbingTree& T);

struct Homology {
    std::size_t b1 = 0;
    FiniteAbelianGroup torsion;
};

Homology first_homology(const LensSum& L);
Homology first_homology(const SeifertManifold& Y);
Homology first_homology(const PretzelCover& P);
Homology first_homology(const Manifold& m);

// L(p,q) and L(p,q2) are orientation-preservingly homeomorphic.
bool lens_homeomorphic(std::int64_t p, std::int64_t q, std::int64_t q2);
// L(p,q2) is homeomorphic to -L(p,q).
bool lens_mirror_match(std::int64_t p, std::int64_t q, std::int64_t q2);

// Seifert manifolds over S^2 with at most two exceptional fibres, as lens
// spaces. p == 0 encodes S^1 x S^2, p == 1 encodes S^3.
std::optional<LensSpace> small_seifert_as_lens(const SeifertManifold& Y);
LensSpace lens_from_chain(const std::vector<std::int64_t>& weights);

// Orientation-sensitive normal form: (base, sorted (a, b mod a), e).
struct SeifertKey {
    BaseSurface base;
    std::vector<SeifertInvariant> fibres;
    Rational e;
    bool operator==(const SeifertKey& o) const { return base == o.base && fibres == o.fibres && e == o.e; }
};

SeifertKey seifert_key(const SeifertManifold& Y);
// Diffeomorphic up to orientation, for S^2 base with at least three fibres.
bool seifert_equivalent(const SeifertManifold& X, const SeifertManifold& Y);

}  // namespace s4embed
