#pragma once

#include "s4embed/abelian_group.hpp"
#include "s4embed/int_matrix.hpp"
#include "s4embed/lattice_search.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace s4embed {

enum class Verdict { Pass, Obstructed, Inconclusive };

const char* to_string(Verdict v);

// Labelled evidence attached to a verdict.
struct Certificate {
    std::vector<std::pair<std::string, IntMatrix>> matrices;
    std::vector<std::pair<std::string, IntVector>> groups;
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> values;

    bool empty() const { return matrices.empty() && groups.empty() && values.empty(); }
};

struct ObstructionResult {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    Certificate certificate;
    std::string notes;
};

struct ObstructionOptions {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
};

// Paired subsets with coker Q = H1 + H2, H1 = H2 as abstract groups.
ObstructionResult double_subset_obstruction(const IntMatrix& Q, const ObstructionOptions& options = {});
// A rectangular subset for a corank-one semi-definite form.
ObstructionResult semidefinite_obstruction(const IntMatrix& Q, const ObstructionOptions& options = {});
// Subsets with coker Q = H_i + H_i and |H1 cap H2| <= 2.
ObstructionResult nonorientable_obstruction(const IntMatrix& Q, const ObstructionOptions& options = {});

// Every class of im A / im Q contains some A x with x in {+-1}^n. Requires |coker Q| odd.
bool char_vector_criterion(const IntMatrix& A, const IntMatrix& Q);
// Same predicate by enumerating all 2^n sign vectors (n <= 24).
bool char_vector_criterion_bruteforce(const IntMatrix& A, const IntMatrix& Q);

}  // namespace s4embed
