#include "s4embed/obstructions.hpp"

#include "s4embed/quadratic_form.hpp"

#include <stdexcept>

namespace s4embed {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Obstructed: return "obstructed";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

constexpr std::int64_t kMaxCoverageOrder = std::int64_t{1} << 26;

std::vector<IntVector> column_images(const FiniteAbelianGroup& G, const IntMatrix& A) {
    std::vector<IntVector> gens;
    for (std::size_t c = 0; c < A.cols(); ++c) gens.push_back(G.project(A.column(c)));
    return gens;
}

struct Candidate {
    IntMatrix A;
    Subgroup H;
};

struct CandidateSet {
    std::vector<Candidate> kept;
    std::size_t total = 0;
    std::size_t shape_rejected = 0;
    std::size_t char_rejected = 0;
};

// Subsets whose H(S) could be half of a splitting of G, one per distinct H.
CandidateSet collect_candidates(const FiniteAbelianGroup& G, const IntMatrix& Q, const SearchResult& sr,
                                bool square_half, bool char_filter) {
    CandidateSet cs;
    cs.total = sr.subsets.size();
    for (const auto& s : sr.subsets) {
        Subgroup H = subgroup_from_generators(G, column_images(G, s.A));
        const bool shape = (!square_half || H.order * H.order == G.order()) &&
                           is_double_of(G.invariant_factors(), H.invariant_factors);
        if (!shape) {
            ++cs.shape_rejected;
            continue;
        }
        if (char_filter && !char_vector_criterion(s.A, Q)) {
            ++cs.char_rejected;
            continue;
        }
        bool seen = false;
        for (const auto& c : cs.kept)
            if (c.H.same_as(H)) seen = true;
        if (!seen) cs.kept.push_back({s.A, std::move(H)});
    }
    return cs;
}

std::vector<std::int64_t> as_int64(const IntVector& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(to_int64(x));
    return out;
}

void require_definite(const IntMatrix& Q, const char* who) {
    const Inertia in = inertia(Q);
    if (in.positive != 0 || in.zero != 0) throw std::invalid_argument(std::string(who) + ": Q must be negative definite");
}

ObstructionResult inconclusive(const char* name, const SearchResult& sr) {
    ObstructionResult r;
    r.name = name;
    r.verdict = Verdict::Inconclusive;
    r.notes = sr.status == SearchStatus::BudgetExhausted ? "budget exhausted after " + std::to_string(sr.nodes) + " nodes"
                                                         : "search stopped early";
    return r;
}

}  // namespace

ObstructionResult double_subset_obstruction(const IntMatrix& Q, const ObstructionOptions& options) {
    require_definite(Q, "double_subset_obstruction");
    const FiniteAbelianGroup G = cokernel(Q).torsion;
    const SearchResult sr = enumerate_subsets(Q, SubsetMode::Square, {std::nullopt, options.budget, options.threads});
    if (!sr.complete()) return inconclusive("double_subset", sr);

    const bool odd = G.order() % 2 != 0;
    const CandidateSet cs = collect_candidates(G, Q, sr, true, odd);
    ObstructionResult r;
    r.name = "double_subset";
    r.certificate.groups.emplace_back("coker", G.invariant_factors());

    const auto pass = [&](const Candidate& a, const Candidate& b) {
        r.verdict = Verdict::Pass;
        r.certificate.matrices.emplace_back("A1", a.A);
        r.certificate.matrices.emplace_back("A2", b.A);
        r.certificate.groups.emplace_back("H1", a.H.invariant_factors);
        r.certificate.groups.emplace_back("H2", b.H.invariant_factors);
        return r;
    };
    if (G.is_trivial() && !cs.kept.empty()) return pass(cs.kept.front(), cs.kept.front());
    for (std::size_t i = 0; i < cs.kept.size(); ++i)
        for (std::size_t j = i + 1; j < cs.kept.size(); ++j) {
            const DirectSumTest t = direct_sum_test(G, cs.kept[i].H, cs.kept[j].H);
            if (t.is_direct_sum && t.isomorphic) return pass(cs.kept[i], cs.kept[j]);
        }

    r.verdict = Verdict::Obstructed;
    r.certificate.values.emplace_back("subsets", std::vector<std::int64_t>{static_cast<std::int64_t>(cs.total)});
    r.certificate.values.emplace_back("half_rank_subgroups",
                                      std::vector<std::int64_t>{static_cast<std::int64_t>(cs.kept.size())});
    r.certificate.values.emplace_back("rejected_by_char_vectors",
                                      std::vector<std::int64_t>{static_cast<std::int64_t>(cs.char_rejected)});
    r.notes = cs.total == 0 ? "no subset exists" : "no pair of subsets splits the cokernel";
    return r;
}

ObstructionResult semidefinite_obstruction(const IntMatrix& Q, const ObstructionOptions& options) {
    const Inertia in = inertia(Q);
    if (in.positive != 0 || in.zero != 1)
        throw std::invalid_argument("semidefinite_obstruction: Q must be negative semi-definite of corank 1");
    const SearchResult sr = enumerate_subsets(Q, SubsetMode::Rectangular, {std::size_t{1}, options.budget, options.threads});
    if (sr.status == SearchStatus::BudgetExhausted) return inconclusive("semidefinite_subset", sr);
    ObstructionResult r;
    r.name = "semidefinite_subset";
    if (!sr.subsets.empty()) {
        r.verdict = Verdict::Pass;
        r.certificate.matrices.emplace_back("A", sr.subsets.front().A);
    } else {
        r.verdict = Verdict::Obstructed;
        r.notes = "no rectangular subset exists";
    }
    return r;
}

ObstructionResult nonorientable_obstruction(const IntMatrix& Q, const ObstructionOptions& options) {
    require_definite(Q, "nonorientable_obstruction");
    const FiniteAbelianGroup G = cokernel(Q).torsion;
    const SearchResult sr = enumerate_subsets(Q, SubsetMode::Square, {std::nullopt, options.budget, options.threads});
    if (!sr.complete()) return inconclusive("nonorientable_subset", sr);
    const CandidateSet cs = collect_candidates(G, Q, sr, false, false);
    ObstructionResult r;
    r.name = "nonorientable_subset";
    r.certificate.groups.emplace_back("coker", G.invariant_factors());
    for (std::size_t i = 0; i < cs.kept.size(); ++i)
        for (std::size_t j = i; j < cs.kept.size(); ++j) {
            const DirectSumTest t = direct_sum_test(G, cs.kept[i].H, cs.kept[j].H);
            if (t.intersection_order > 2) continue;
            r.verdict = Verdict::Pass;
            r.certificate.matrices.emplace_back("A1", cs.kept[i].A);
            r.certificate.matrices.emplace_back("A2", cs.kept[j].A);
            r.certificate.groups.emplace_back("H1", cs.kept[i].H.invariant_factors);
            r.certificate.groups.emplace_back("H2", cs.kept[j].H.invariant_factors);
            r.certificate.values.emplace_back("intersection_order",
                                              std::vector<std::int64_t>{to_int64(t.intersection_order)});
            return r;
        }
    r.verdict = Verdict::Obstructed;
    r.certificate.values.emplace_back("subsets", std::vector<std::int64_t>{static_cast<std::int64_t>(cs.total)});
    r.notes = cs.total == 0 ? "no subset exists" : "no pair of subsets meets the splitting conditions";
    return r;
}

bool char_vector_criterion(const IntMatrix& A, const IntMatrix& Q) {
    if (!A.is_square() || A.rows() != Q.rows()) throw std::invalid_argument("char_vector_criterion needs a square subset");
    const FiniteAbelianGroup G = cokernel(Q).torsion;
    const Integer order = G.order();
    if (order % 2 == 0) throw std::invalid_argument("char_vector_criterion requires odd |coker Q|");
    if (order > kMaxCoverageOrder) throw std::length_error("char_vector_criterion: cokernel too large");

    const std::size_t m = G.num_factors();
    const std::vector<std::int64_t> d = as_int64(G.invariant_factors());
    const auto index = [&](const std::vector<std::int64_t>& e) {
        std::int64_t idx = 0;
        for (std::size_t i = m; i-- > 0;) idx = idx * d[i] + e[i];
        return idx;
    };
    const auto decode = [&](std::int64_t idx) {
        std::vector<std::int64_t> e(m);
        for (std::size_t i = 0; i < m; ++i) {
            e[i] = idx % d[i];
            idx /= d[i];
        }
        return e;
    };

    const std::vector<IntVector> gens = column_images(G, A);
    const Subgroup H = subgroup_from_generators(G, gens);
    const auto n = static_cast<std::size_t>(to_int64(order));
    std::vector<char> reach(n, 0), next(n, 0);
    reach[0] = 1;
    for (const auto& g : gens) {
        const std::vector<std::int64_t> gi = as_int64(g);
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t idx = 0; idx < n; ++idx) {
            if (!reach[idx]) continue;
            const std::vector<std::int64_t> e = decode(static_cast<std::int64_t>(idx));
            std::vector<std::int64_t> plus(m), minus(m);
            for (std::size_t i = 0; i < m; ++i) {
                plus[i] = (e[i] + gi[i]) % d[i];
                minus[i] = ((e[i] - gi[i]) % d[i] + d[i]) % d[i];
            }
            next[static_cast<std::size_t>(index(plus))] = 1;
            next[static_cast<std::size_t>(index(minus))] = 1;
        }
        reach.swap(next);
    }
    std::size_t covered = 0;
    for (char c : reach) covered += c ? 1 : 0;
    return Integer(static_cast<unsigned long>(covered)) == H.order;
}

bool char_vector_criterion_bruteforce(const IntMatrix& A, const IntMatrix& Q) {
    const std::size_t N = A.cols();
    if (N > 24) throw std::length_error("brute-force characteristic check limited to 24 columns");
    const FiniteAbelianGroup G = cokernel(Q).torsion;
    if (G.order() % 2 == 0) throw std::invalid_argument("char_vector_criterion requires odd |coker Q|");
    std::vector<IntVector> gens = column_images(G, A);
    const Subgroup H = subgroup_from_generators(G, gens);
    std::vector<IntVector> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        IntVector x(N);
        for (std::size_t c = 0; c < N; ++c) x[c] = (mask >> c & 1u) ? 1 : -1;
        IntVector cls = G.project(A * x);
        bool dup = false;
        for (const auto& s : seen)
            if (s == cls) dup = true;
        if (!dup) seen.push_back(std::move(cls));
    }
    return Integer(static_cast<unsigned long>(seen.size())) == H.order;
}

}  // namespace s4embed
