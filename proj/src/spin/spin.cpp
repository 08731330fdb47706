#include "s4embed/spin.hpp"

#include "s4embed/quadratic_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace s4embed {
namespace {

IntVector diagonal_of(const IntMatrix& Q) {
    IntVector d;
    for (std::size_t i = 0; i < Q.rows(); ++i) d.push_back(Q(i, i));
    return d;
}

Integer self_pairing(const IntMatrix& Q, const Bits& w) {
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j]) s += Q(i, j);
    }
    return s;
}

SpinProfile profile_of(const PlumbingTree& T, bool mirrored) {
    SpinProfile sp;
    sp.mirrored = mirrored;
    sp.wu = wu_sets(T);
    sp.spin_count = sp.wu.size();
    const IntMatrix Q = T.intersection_form();
    const long sigma = inertia(Q).signature();
    for (const auto& w : sp.wu) {
        const std::int64_t mu = sigma - to_int64(self_pairing(Q, w.w));
        sp.mu_values.push_back(mirrored ? -mu : mu);
    }
    std::sort(sp.mu_values.begin(), sp.mu_values.end());
    return sp;
}

}  // namespace

std::vector<WuSet> wu_sets(const PlumbingTree& T) {
    const IntMatrix Q = T.intersection_form();
    const auto sol = solve_mod2(Q, diagonal_of(Q));
    if (!sol) throw std::logic_error("no Wu set: inconsistent characteristic equation");
    std::vector<WuSet> out;
    for (auto& b : sol->enumerate()) out.push_back({std::move(b)});
    return out;
}

bool is_wu_set(const PlumbingTree& T, const WuSet& w) {
    const IntMatrix Q = T.intersection_form();
    if (w.w.size() != Q.rows()) return false;
    for (std::size_t i = 0; i < Q.rows(); ++i) {
        Integer s = -Q(i, i);
        for (std::size_t j = 0; j < Q.cols(); ++j)
            if (w.w[j]) s += Q(i, j);
        if (s % 2 != 0) return false;
    }
    return true;
}

std::int64_t mu_bar(const PlumbingTree& T, const WuSet& w) {
    const IntMatrix Q = T.intersection_form();
    return inertia(Q).signature() - to_int64(self_pairing(Q, w.w));
}

SpinProfile spin_profile(const SeifertManifold& Y) {
    validate(Y);
    if (Y.base.kind != BaseKind::Orientable || Y.base.genus != 0)
        throw std::invalid_argument("spin profile needs base S2");
    if (euler_invariant(Y) >= 0) return profile_of(plumbing_tree(Y, Orientation::Positive), false);
    return profile_of(plumbing_tree(Y, Orientation::Negative), true);
}

SpinProfile spin_profile(const PretzelCover& P) {
    SpinProfile sp = spin_profile(to_seifert(P));
    sp.k = link_components(P);
    return sp;
}

int link_components(const PretzelCover& P) {
    int even = 0;
    for (std::int64_t a : P.strands)
        if (a % 2 == 0) ++even;
    if (even > 0) return even;
    return P.strands.size() % 2 == 1 ? 1 : 2;
}

int mubar_threshold(int k) {
    switch (k) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 3;
        case 4: return 5;
    }
    if (k < 1) throw std::invalid_argument("link needs at least one component");
    // 2^((k+1)/2) - 1 for odd k, 3 * 2^((k-2)/2) - 1 for even k
    return k % 2 ? (1 << ((k + 1) / 2)) - 1 : 3 * (1 << ((k - 2) / 2)) - 1;
}

ObstructionResult mubar_embedding_obstruction(const PretzelCover& P) {
    validate(P);
    const SpinProfile sp = spin_profile(P);
    const int k = *sp.k;
    const auto zeros = std::count(sp.mu_values.begin(), sp.mu_values.end(), 0);
    const int threshold = mubar_threshold(k);
    ObstructionResult r;
    r.name = "mu_bar";
    r.verdict = zeros < threshold ? Verdict::Obstructed : Verdict::Pass;
    r.certificate.values.emplace_back("mu_bar", sp.mu_values);
    r.certificate.values.emplace_back("link_components", std::vector<std::int64_t>{k});
    r.certificate.values.emplace_back("threshold", std::vector<std::int64_t>{threshold});
    r.notes = std::to_string(zeros) + " of " + std::to_string(sp.spin_count) + " spin structures have vanishing mu-bar";
    return r;
}

FurutaCase parse_furuta_case(const std::string& label) {
    if (label == "rational_ball") return FurutaCase::RationalBall;
    if (label == "S1_homology") return FurutaCase::S1Homology;
    if (label == "S2_homology") return FurutaCase::S2Homology;
    throw std::invalid_argument("unknown case label");
}

bool furuta_check(FurutaCase c, std::int64_t b2, const std::vector<std::int64_t>& sigma_terms, bool is_disk) {
    std::int64_t sigma = 0;
    for (std::int64_t s : sigma_terms) sigma += s;
    switch (c) {
        case FurutaCase::RationalBall: return is_disk || 4 * b2 >= 5 * std::llabs(sigma) + 8;
        case FurutaCase::S1Homology: return b2 == 1 || 4 * b2 >= 5 * std::llabs(sigma) + 12;
        case FurutaCase::S2Homology: return 4 * b2 >= 5 * std::llabs(sigma) + 4;
    }
    throw std::invalid_argument("unknown case label");
}

}  // namespace s4embed
