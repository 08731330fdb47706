#include "s4embed/classifier.hpp"

#include "s4embed/plumbing.hpp"
#include "s4embed/spin.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace s4embed {

const char* to_string(Status s) {
    switch (s) {
        case Status::Embeds: return "EMBEDS";
        case Status::Obstructed: return "OBSTRUCTED";
        case Status::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

const char* to_string(PretzelFamily f) {
    switch (f) {
        case PretzelFamily::MirrorTriple: return "pretzel_a_-a_a";
        case PretzelFamily::MirrorQuadruple: return "pretzel_a_-a_a_-a";
        case PretzelFamily::OddPairs: return "pretzel_a_-a_b_-b_b_odd";
        case PretzelFamily::ShiftedQuadruple: return "pretzel_a+-1_-a_a_-a";
        case PretzelFamily::OpenFamily: return "pretzel_2l-1_-2l-1_-2l^2";
    }
    return "";
}

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return floor_mod(static_cast<std::int64_t>(static_cast<__int128>(floor_mod(x, m)) * floor_mod(y, m) % m), m);
}

std::int64_t lens_class(std::int64_t p, std::int64_t q) {
    const std::int64_t r = floor_mod(q, p);
    const auto inv = mod_inverse(r, p);
    return inv ? std::min(r, *inv) : r;
}

}  // namespace

bool lens_mirror_pair(std::int64_t p, std::int64_t q, std::int64_t q2) {
    return floor_mod(q + q2, p) == 0 || mulmod(q, q2, p) == floor_mod(-1, p);
}

bool lens_sum_is_double(const LensSum& L) {
    std::map<std::pair<std::int64_t, std::int64_t>, int> mult;
    for (const auto& l : L.summands) {
        if (l.p % 2 == 0) return false;
        ++mult[{l.p, lens_class(l.p, l.q)}];
    }
    for (const auto& [key, count] : mult) {
        const auto [p, q] = key;
        const std::pair<std::int64_t, std::int64_t> partner{p, lens_class(p, p - q)};
        if (partner == key) {
            if (count % 2) return false;
        } else {
            const auto it = mult.find(partner);
            if (it == mult.end() || it->second != count) return false;
        }
    }
    return true;
}

bool complementary_invariants(std::int64_t a, std::int64_t b1, std::int64_t b2) {
    return floor_mod(b1 + b2, a) == 0;
}

bool weak_complementary_invariants(std::int64_t a, std::int64_t b1, std::int64_t b2) {
    return complementary_invariants(a, b1, b2) || mulmod(b1, b2, a) == floor_mod(-1, a);
}

bool fibres_pair_up(const std::vector<SeifertInvariant>& fibres, bool allow_weak) {
    if (fibres.size() % 2) return false;
    std::vector<bool> used(fibres.size(), false);
    std::function<bool()> match = [&]() {
        std::size_t i = 0;
        while (i < fibres.size() && used[i]) ++i;
        if (i == fibres.size()) return true;
        used[i] = true;
        for (std::size_t j = i + 1; j < fibres.size(); ++j) {
            if (used[j] || fibres[j].a != fibres[i].a) continue;
            const std::int64_t a = fibres[i].a;
            const bool ok = allow_weak ? weak_complementary_invariants(a, fibres[i].b, fibres[j].b)
                                       : complementary_invariants(a, fibres[i].b, fibres[j].b);
            if (!ok) continue;
            used[j] = true;
            if (match()) return true;
            used[j] = false;
        }
        used[i] = false;
        return false;
    };
    return match();
}

std::optional<std::pair<std::size_t, std::size_t>> even_fibre_violation(const std::vector<SeifertInvariant>& fibres) {
    for (std::size_t i = 0; i < fibres.size(); ++i)
        for (std::size_t j = i + 1; j < fibres.size(); ++j) {
            if (fibres[i].a % 2 || fibres[j].a % 2) continue;
            if (fibres[i].a != fibres[j].a) return std::pair{i, j};
            const std::int64_t a = fibres[i].a;
            const std::int64_t bi = floor_mod(fibres[i].b, a), bj = floor_mod(fibres[j].b, a);
            const std::int64_t bj_inv = mod_inverse(bj, a).value_or(bj);
            const bool ok = bi == bj || bi == floor_mod(-bj, a) || bi == bj_inv || bi == floor_mod(-bj_inv, a);
            if (!ok) return std::pair{i, j};
        }
    return std::nullopt;
}

bool in_pretzel_domain(const PretzelCover& P) {
    return std::count_if(P.strands.begin(), P.strands.end(), [](std::int64_t s) { return std::abs(s) >= 2; }) >= 3;
}

std::optional<FamilyMatch> match_pretzel_family(const PretzelCover& P) {
    if (!in_pretzel_domain(P)) return std::nullopt;
    const SeifertManifold Y = to_seifert(P);
    std::int64_t M = 0;
    for (std::int64_t s : P.strands) M = std::max(M, std::abs(s));
    M += 2;
    std::optional<FamilyMatch> found;
    const auto consider = [&](PretzelFamily f, std::vector<std::int64_t> strands) {
        if (found) return;
        for (std::int64_t s : strands)
            if (s == 0) return;
        PretzelCover C{std::move(strands)};
        if (seifert_equivalent(Y, to_seifert(C))) found = FamilyMatch{f, C};
    };
    for (std::int64_t a = -M; a <= M; ++a) {
        if (a == 0) continue;
        consider(PretzelFamily::MirrorTriple, {a, -a, a});
        consider(PretzelFamily::MirrorQuadruple, {a, -a, a, -a});
        for (std::int64_t b = -M; b <= M; ++b)
            if (b % 2) consider(PretzelFamily::OddPairs, {a, -a, b, -b});
        consider(PretzelFamily::ShiftedQuadruple, {a + 1, -a, a, -a});
        consider(PretzelFamily::ShiftedQuadruple, {a - 1, -a, a, -a});
    }
    for (std::int64_t l = -M; l <= M; ++l) consider(PretzelFamily::OpenFamily, {2 * l - 1, -2 * l - 1, -2 * l * l});
    return found;
}

std::optional<PretzelCover> pretzel_form(const SeifertManifold& Y) {
    if (Y.base != BaseSurface{}) return std::nullopt;
    const Rational e = euler_invariant(Y);
    std::vector<std::vector<std::int64_t>> options;
    for (const auto& f : Y.fibres) {
        std::vector<std::int64_t> o;
        if (floor_mod(f.b, f.a) == 1) o.push_back(f.a);
        if (floor_mod(f.b, f.a) == f.a - 1 && f.a != 2) o.push_back(-f.a);
        if (f.a == 2) o.push_back(-2);
        if (o.empty()) return std::nullopt;
        options.push_back(std::move(o));
    }
    std::vector<std::int64_t> pick(Y.fibres.size());
    std::optional<PretzelCover> out;
    std::function<void(std::size_t, Rational)> go = [&](std::size_t i, Rational sum) {
        if (out) return;
        if (i == options.size()) {
            Rational u = e - sum;
            u.canonicalize();
            if (u.get_den() != 1) return;
            const std::int64_t units = to_int64(u.get_num());
            const std::size_t total = pick.size() + static_cast<std::size_t>(std::abs(units));
            if (total < 3 || total > 4) return;
            std::vector<std::int64_t> strands = pick;
            for (std::int64_t k = 0; k < std::abs(units); ++k) strands.push_back(units > 0 ? 1 : -1);
            std::sort(strands.begin(), strands.end());
            out = PretzelCover{strands};
            return;
        }
        for (std::int64_t s : options[i]) {
            pick[i] = s;
            go(i + 1, sum + Rational(s > 0 ? 1 : -1, static_cast<unsigned long>(std::abs(s))));
        }
    };
    go(0, Rational(0));
    return out;
}

std::optional<CatalogHit> catalog_lookup(const Manifold& m) {
    if (const auto* L = std::get_if<LensSum>(&m)) {
        if (L->summands.empty()) return CatalogHit{"S3", "boundary of the standard ball"};
        if (lens_sum_is_double(*L)) return CatalogHit{"mirror_paired_lens_sum", "Y # -Y is the boundary of punctured Y x I"};
        return std::nullopt;
    }
    if (const auto* P = std::get_if<PretzelCover>(&m)) return catalog_lookup(Manifold{to_seifert(*P)});

    const auto& Y = std::get<SeifertManifold>(m);
    if (Y.base == BaseSurface{} && Y.fibres.size() <= 2) {
        const LensSpace L = *small_seifert_as_lens(Y);
        if (L.p == 0) return CatalogHit{"S1xS2", "boundary of a tubular neighbourhood of an unknotted 2-sphere"};
        if (L.p == 1) return catalog_lookup(Manifold{LensSum{}});
        return catalog_lookup(Manifold{LensSum{{L}}});
    }
    if (Y.base.kind == BaseKind::Orientable && euler_invariant(Y) == 0 && fibres_pair_up(Y.fibres, false) &&
        std::all_of(Y.fibres.begin(), Y.fibres.end(), [](const SeifertInvariant& f) { return f.a % 2 == 1; }))
        return CatalogHit{"complementary_odd_e0", "complementary pairs with every a_i odd and e = 0"};
    if (Y.base == BaseSurface{} && seifert_equivalent(Y, SeifertManifold{{}, 0, {{4, 1}, {4, 1}, {12, -7}}}))
        return CatalogHit{"seifert_4_4_12", "explicit embedding of Y(S2; 0; (4,1), (4,1), (12,-7))"};
    if (const auto P = pretzel_form(Y)) {
        const auto fm = match_pretzel_family(*P);
        if (fm && fm->family != PretzelFamily::OpenFamily)
            return CatalogHit{to_string(fm->family), "double branched cover of a doubly slice pretzel link"};
    }
    return std::nullopt;
}

Manifold canonical_form(const Manifold& m) {
    if (const auto* L = std::get_if<LensSum>(&m)) {
        LensSum out;
        for (const auto& l : L->summands) out.summands.push_back({l.p, lens_class(l.p, l.q)});
        std::sort(out.summands.begin(), out.summands.end());
        return out;
    }
    if (const auto* P = std::get_if<PretzelCover>(&m)) {
        PretzelCover out = *P;
        std::sort(out.strands.begin(), out.strands.end());
        return out;
    }
    SeifertManifold out = normalize_seifert(std::get<SeifertManifold>(m));
    std::sort(out.fibres.begin(), out.fibres.end());
    return out;
}

namespace {

class Runner {
public:
    explicit Runner(const ClassifierOptions& o) : opt_(o) {}

    template <class F>
    void run(const std::string& name, F&& f) {
        if (!wanted(name)) return;
        ObstructionResult r;
        try {
            r = f();
        } catch (const std::exception& e) {
            r = ObstructionResult{};
            r.verdict = Verdict::Inconclusive;
            r.notes = e.what();
        }
        r.name = name;
        results.push_back(std::move(r));
    }

    ObstructionOptions search() const { return {opt_.budget, opt_.threads}; }

    std::vector<ObstructionResult> results;

private:
    bool wanted(const std::string& name) const {
        if (opt_.only.empty()) return true;
        for (const auto& o : opt_.only)
            if (name == o || name.rfind(o + "_", 0) == 0) return true;
        return false;
    }

    const ClassifierOptions& opt_;
};

ObstructionResult theorem_result(bool pass, std::string notes) {
    ObstructionResult r;
    r.verdict = pass ? Verdict::Pass : Verdict::Obstructed;
    r.notes = std::move(notes);
    return r;
}

void lens_obstructions(const LensSum& L, Runner& run) {
    run.run("mirror_pairing", [&] {
        for (const auto& l : L.summands)
            if (l.p % 2 == 0) return theorem_result(false, "summand lens(" + std::to_string(l.p) + "," + std::to_string(l.q) + ") has even order");
        const bool ok = lens_sum_is_double(L);
        return theorem_result(ok, ok ? "" : "summands do not split into mirror pairs");
    });
    run.run("double_subset", [&] { return double_subset_obstruction(plumbing_tree(L).intersection_form(), run.search()); });
    run.run("double_subset_mirror", [&] {
        return double_subset_obstruction(plumbing_tree(L, Orientation::Negative).intersection_form(), run.search());
    });
}

void seifert_obstructions(const SeifertManifold& Y, std::optional<PretzelCover> form, Runner& run) {
    const bool sphere = Y.base == BaseSurface{};
    if (sphere && Y.fibres.size() <= 2) {
        const LensSpace L = *small_seifert_as_lens(Y);
        if (L.p == 1) lens_obstructions(LensSum{}, run);
        if (L.p >= 2) lens_obstructions(LensSum{{L}}, run);
        return;
    }
    if (Y.base.kind == BaseKind::NonOrientable) {
        run.run("weak_complementary_pairing", [&] {
            if (!fibres_pair_up(Y.fibres, true)) return theorem_result(false, "invariants do not form weak complementary pairs");
            if (const auto v = even_fibre_violation(Y.fibres))
                return theorem_result(false, "even-order invariants " + std::to_string(v->first) + " and " +
                                                 std::to_string(v->second) + " are incompatible");
            return theorem_result(true, "");
        });
        run.run("nonorientable_subset", [&] { return nonorientable_obstruction(plumbing_tree(Y).intersection_form(), run.search()); });
        return;
    }
    const Rational e = euler_invariant(Y);
    if (e == 0)
        run.run("complementary_pairing", [&] {
            const bool ok = fibres_pair_up(Y.fibres, false);
            return theorem_result(ok, ok ? "" : "invariants do not form complementary pairs");
        });
    if (!form) form = pretzel_form(Y);
    if (form && in_pretzel_domain(*form))
        run.run("pretzel_classification", [&] {
            const auto fm = match_pretzel_family(*form);
            if (!fm) return theorem_result(false, "not diffeomorphic to any listed pretzel family");
            return theorem_result(true, std::string("matches ") + to_string(fm->family) + " via " + describe(fm->member));
        });
    if (sphere) {
        if (e == 0)
            run.run("semidefinite_subset", [&] { return semidefinite_obstruction(plumbing_tree(Y).intersection_form(), run.search()); });
        else
            run.run("double_subset", [&] {
                const Orientation o = e > 0 ? Orientation::Positive : Orientation::Negative;
                return double_subset_obstruction(plumbing_tree(Y, o).intersection_form(), run.search());
            });
    }
    if (form) run.run("mu_bar", [&] { return mubar_embedding_obstruction(*form); });
}

ReportInvariants invariants_of(const Manifold& m) {
    ReportInvariants inv;
    const Homology h = first_homology(m);
    inv.b1 = h.b1;
    inv.torsion_factors = h.torsion.invariant_factors();
    unsigned long exponent = h.b1;
    for (const auto& d : inv.torsion_factors)
        if (d % 2 == 0) ++exponent;
    mpz_ui_pow_ui(inv.spin_count.get_mpz_t(), 2, exponent);
    if (const auto* Y = std::get_if<SeifertManifold>(&m)) inv.euler = euler_invariant(*Y);
    if (const auto* P = std::get_if<PretzelCover>(&m)) inv.euler = euler_invariant(to_seifert(*P));
    return inv;
}

}  // namespace

ObstructionReport full_report(const Manifold& m, const ClassifierOptions& options) {
    std::visit([](const auto& x) { validate(x); }, m);
    ObstructionReport rep;
    rep.input = describe(m);
    rep.canonical_form = describe(canonical_form(m));
    rep.invariants = invariants_of(m);

    Runner run(options);
    std::optional<FamilyMatch> family;
    if (const auto* L = std::get_if<LensSum>(&m)) {
        lens_obstructions(*L, run);
    } else if (const auto* Y = std::get_if<SeifertManifold>(&m)) {
        seifert_obstructions(*Y, std::nullopt, run);
        if (const auto P = pretzel_form(*Y)) family = match_pretzel_family(*P);
    } else {
        const auto& P = std::get<PretzelCover>(m);
        seifert_obstructions(to_seifert(P), P, run);
        family = match_pretzel_family(P);
    }
    rep.obstructions = std::move(run.results);

    const auto catalog = catalog_lookup(m);
    const auto hit = std::find_if(rep.obstructions.begin(), rep.obstructions.end(),
                                  [](const ObstructionResult& r) { return r.verdict == Verdict::Obstructed; });
    if (hit != rep.obstructions.end()) {
        rep.status = Status::Obstructed;
        rep.reason = hit->name;
        rep.conflict = catalog.has_value();
    } else if (catalog) {
        rep.status = Status::Embeds;
        rep.reason = catalog->name;
    } else {
        rep.status = Status::Unknown;
        const bool budget = std::any_of(rep.obstructions.begin(), rep.obstructions.end(),
                                        [](const ObstructionResult& r) { return r.verdict == Verdict::Inconclusive; });
        if (family && family->family == PretzelFamily::OpenFamily)
            rep.reason = to_string(PretzelFamily::OpenFamily);
        else
            rep.reason = budget ? "inconclusive" : "no_obstruction";
    }
    return rep;
}

ObstructionReport decide_lens_sum(const LensSum& L, const ClassifierOptions& options) { return full_report(L, options); }
ObstructionReport decide_seifert(const SeifertManifold& Y, const ClassifierOptions& options) { return full_report(Y, options); }
ObstructionReport decide_pretzel(const PretzelCover& P, const ClassifierOptions& options) { return full_report(P, options); }

}  // namespace s4embed
