#pragma once

#include "s4embed/int_matrix.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace s4embed {

struct LensSpace {
    std::int64_t p = 1;
    std::int64_t q = 0;
    auto operator<=>(const LensSpace&) const = default;
};

// Connected sum of lens spaces; no summands means S^3.
struct LensSum {
    std::vector<LensSpace> summands;
    bool operator==(const LensSum&) const = default;
};

enum class BaseKind { Orientable, NonOrientable };

struct BaseSurface {
    BaseKind kind = BaseKind::Orientable;
    int genus = 0;  // g for orientable, k >= 1 crosscaps otherwise
    bool operator==(const BaseSurface&) const = default;
};

struct SeifertInvariant {
    std::int64_t a = 2;
    std::int64_t b = 1;
    auto operator<=>(const SeifertInvariant&) const = default;
};

struct SeifertManifold {
    BaseSurface base;
    std::int64_t r = 0;
    std::vector<SeifertInvariant> fibres;
    bool operator==(const SeifertManifold&) const = default;
};

// Double branched cover of the pretzel link P(a_1, ..., a_n).
struct PretzelCover {
    std::vector<std::int64_t> strands;
    bool operator==(const PretzelCover&) const = default;
};

using Manifold = std::variant<LensSum, SeifertManifold, PretzelCover>;

enum class Orientation { Positive, Negative };

void validate(const LensSum& L);
void validate(const SeifertManifold& Y);
void validate(const PretzelCover& P);

std::string describe(const LensSum& L);
std::string describe(const SeifertManifold& Y);
std::string describe(const PretzelCover& P);
std::string describe(const Manifold& m);

}  // namespace s4embed
