#include "s4embed/plumbing.hpp"

#include "s4embed/quadratic_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace s4embed {

IntMatrix PlumbingTree::intersection_form() const {
    IntMatrix Q(weights.size(), weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) Q(i, i) = static_cast<long>(weights[i]);
    for (const auto& [u, v] : edges) {
        Q(u, v) = 1;
        Q(v, u) = 1;
    }
    return Q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = floor_mod(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) return std::nullopt;
    return floor_mod(s0, m);
}

std::vector<std::int64_t> neg_continued_fraction(std::int64_t p, std::int64_t q) {
    if (!(p > q && q > 0) || std::gcd(p, q) != 1)
        throw std::invalid_argument("neg_continued_fraction requires p > q > 0 coprime");
    std::vector<std::int64_t> out;
    while (q != 0) {
        const std::int64_t c = (p + q - 1) / q;
        out.push_back(c);
        std::tie(p, q) = std::make_pair(q, c * q - p);
    }
    return out;
}

Rational eval_continued_fraction(const std::vector<std::int64_t>& seq) {
    if (seq.empty()) throw std::invalid_argument("empty continued fraction");
    Rational x = static_cast<long>(seq.back());
    for (std::size_t i = seq.size() - 1; i-- > 0;) {
        if (x == 0) throw std::domain_error("division by zero in tail");
        x = Rational(static_cast<long>(seq[i])) - 1 / x;
    }
    return x;
}

std::pair<Integer, Integer> continued_fraction_fraction(const std::vector<std::int64_t>& seq) {
    // [[c,-1],[1,0]] products; first column is (numerator, denominator).
    Integer a = 1, b = 0, c = 0, d = 1;
    for (std::int64_t x : seq) {
        const Integer na = a * static_cast<long>(x) + b, nc = c * static_cast<long>(x) + d;
        b = -a;
        d = -c;
        a = na;
        c = nc;
    }
    return {a, c};
}

namespace {

// Negative continued fraction of an arbitrary rational; entries may be <= 1.
std::vector<std::int64_t> generalized_expansion(Rational x) {
    std::vector<std::int64_t> out;
    for (;;) {
        x.canonicalize();
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        out.push_back(to_int64(c));
        const Rational rest = Rational(c) - x;
        if (rest == 0) break;
        x = 1 / rest;
    }
    return out;
}

void add_chain(PlumbingTree& T, const std::vector<std::int64_t>& coefficients, std::optional<std::size_t> attach) {
    std::vector<std::size_t> chain;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const std::size_t v = T.weights.size();
        T.weights.push_back(-coefficients[k]);
        if (k > 0)
            T.edges.emplace_back(chain.back(), v);
        else if (attach)
            T.edges.emplace_back(*attach, v);
        chain.push_back(v);
    }
    T.chains.push_back(std::move(chain));
}

}  // namespace

SeifertManifold normalize_seifert(const SeifertManifold& Y) {
    SeifertManifold out = Y;
    for (auto& f : out.fibres) {
        // shift b into (-a, 0); each shift by a moves r by one
        const std::int64_t target = floor_mod(f.b, f.a) - f.a;
        const std::int64_t k = (f.b - target) / f.a;
        f.b = target;
        out.r -= k;
    }
    return out;
}

Rational euler_invariant(const SeifertManifold& Y) {
    Rational e = -Rational(static_cast<long>(Y.r));
    for (const auto& f : Y.fibres) e += Rational(static_cast<long>(f.b), static_cast<long>(f.a));
    e.canonicalize();
    return e;
}

SeifertManifold to_seifert(const PretzelCover& P) {
    SeifertManifold Y;
    for (std::int64_t a : P.strands) {
        if (a == 0) throw std::invalid_argument("pretzel strand must be nonzero");
        const std::int64_t s = a > 0 ? 1 : -1;
        if (a == s)
            Y.r -= s;
        else
            Y.fibres.push_back({a * s, s});
    }
    return Y;
}

LensSum mirror(const LensSum& L) {
    LensSum out;
    for (const auto& l : L.summands) out.summands.push_back({l.p, l.p == 1 ? 0 : l.p - l.q});
    return out;
}

SeifertManifold mirror(const SeifertManifold& Y) {
    SeifertManifold out = Y;
    out.r = -Y.r;
    for (auto& f : out.fibres) f.b = -f.b;
    return out;
}

PretzelCover mirror(const PretzelCover& P) {
    PretzelCover out = P;
    for (auto& a : out.strands) a = -a;
    return out;
}

Manifold mirror(const Manifold& m) {
    return std::visit([](const auto& x) -> Manifold { return mirror(x); }, m);
}

PlumbingTree plumbing_tree(const LensSum& L, Orientation o) {
    validate(L);
    const LensSum M = o == Orientation::Positive ? L : mirror(L);
    PlumbingTree T;
    for (const auto& l : M.summands) {
        if (l.p == 1) continue;
        add_chain(T, neg_continued_fraction(l.p, l.q), std::nullopt);
    }
    return T;
}

PlumbingTree plumbing_tree(const SeifertManifold& Y, Orientation o) {
    validate(Y);
    const SeifertManifold M = normalize_seifert(o == Orientation::Positive ? Y : mirror(Y));
    PlumbingTree T;
    if (M.base.kind == BaseKind::NonOrientable) {
        T.base_nonorientable = true;
        for (const auto& f : M.fibres) add_chain(T, neg_continued_fraction(f.a, -f.b), std::nullopt);
        return T;
    }
    if (euler_invariant(M) < 0) throw std::domain_error("orientation yields e < 0 with orientable base");
    T.has_central_vertex = true;
    T.weights.push_back(M.r);
    for (const auto& f : M.fibres) add_chain(T, neg_continued_fraction(f.a, -f.b), std::size_t{0});
    return T;
}

PlumbingTree plumbing_tree(const PretzelCover& P, Orientation o) {
    return plumbing_tree(to_seifert(P), o);
}

PlumbingTree plumbing_tree(const Manifold& m, Orientation o) {
    return std::visit([o](const auto& x) { return plumbing_tree(x, o); }, m);
}

PlumbingTree unnormalized_star(const SeifertManifold& Y) {
    PlumbingTree T;
    T.has_central_vertex = true;
    T.weights.push_back(Y.r);
    for (const auto& f : Y.fibres)
        add_chain(T, generalized_expansion(Rational(static_cast<long>(f.a)) / static_cast<long>(-f.b)), std::size_t{0});
    return T;
}

Definiteness definiteness(const IntMatrix& Q) {
    const Inertia in = inertia(Q);
    Definiteness d;
    if (in.positive > 0)
        d.kind = DefinitenessKind::Indefinite;
    else if (in.zero == 0)
        d.kind = DefinitenessKind::NegativeDefinite;
    else {
        d.kind = DefinitenessKind::NegativeSemidefinite;
        d.corank = in.zero;
    }
    return d;
}

Definiteness definiteness(const PlumbingTree& T) { return definiteness(T.intersection_form()); }

Homology first_homology(const LensSum& L) {
    validate(L);
    const Cokernel c = cokernel(plumbing_tree(L).intersection_form());
    return {c.free_rank, c.torsion};
}

Homology first_homology(const SeifertManifold& Y) {
    validate(Y);
    const SeifertManifold M = normalize_seifert(Y);
    if (M.base.kind == BaseKind::Orientable) {
        PlumbingTree T;
        T.has_central_vertex = true;
        T.weights.push_back(M.r);
        for (const auto& f : M.fibres) add_chain(T, neg_continued_fraction(f.a, -f.b), std::size_t{0});
        const Cokernel c = cokernel(T.intersection_form());
        return {c.free_rank + 2 * static_cast<std::size_t>(M.base.genus), c.torsion};
    }
    // Abelianised fundamental group: generators h, c_i, v_j; relations
    // 2h, a_i c_i + b_i h, sum c_i + 2 sum v_j - r h (one per column).
    const std::size_t n = M.fibres.size();
    const std::size_t k = static_cast<std::size_t>(M.base.genus);
    IntMatrix R(1 + n + k, 2 + n);
    R(0, 0) = 2;
    for (std::size_t i = 0; i < n; ++i) {
        R(0, 1 + i) = static_cast<long>(M.fibres[i].b);
        R(1 + i, 1 + i) = static_cast<long>(M.fibres[i].a);
        R(1 + i, 1 + n) = 1;
    }
    R(0, 1 + n) = static_cast<long>(-M.r);
    for (std::size_t j = 0; j < k; ++j) R(1 + n + j, 1 + n) = 2;
    const Cokernel c = cokernel(R);
    return {c.free_rank, c.torsion};
}

Homology first_homology(const PretzelCover& P) {
    validate(P);
    return first_homology(to_seifert(P));
}

Homology first_homology(const Manifold& m) {
    return std::visit([](const auto& x) { return first_homology(x); }, m);
}

bool lens_homeomorphic(std::int64_t p, std::int64_t q, std::int64_t q2) {
    if (p == 1) return true;
    const std::int64_t a = floor_mod(q, p), b = floor_mod(q2, p);
    return a == b || floor_mod(static_cast<std::int64_t>(static_cast<__int128>(a) * b % p), p) == 1 % p;
}

bool lens_mirror_match(std::int64_t p, std::int64_t q, std::int64_t q2) {
    return lens_homeomorphic(p, p - floor_mod(q, p), q2);
}

LensSpace lens_from_chain(const std::vector<std::int64_t>& weights) {
    std::vector<std::int64_t> c;
    for (std::int64_t w : weights) c.push_back(-w);
    auto [P, Q] = continued_fraction_fraction(c);
    if (P < 0) {
        P = -P;
        Q = -Q;
    }
    if (P == 0) return {0, 1};
    if (P == 1) return {1, 0};
    Integer q;
    mpz_fdiv_r(q.get_mpz_t(), Q.get_mpz_t(), P.get_mpz_t());
    return {to_int64(P), to_int64(q)};
}

std::optional<LensSpace> small_seifert_as_lens(const SeifertManifold& Y) {
    if (Y.base.kind != BaseKind::Orientable || Y.base.genus != 0 || Y.fibres.size() > 2) return std::nullopt;
    // linear chain: reversed first leg, centre, second leg
    const SeifertManifold M = normalize_seifert(Y);
    std::vector<std::int64_t> chain;
    if (!M.fibres.empty()) {
        auto leg = neg_continued_fraction(M.fibres[0].a, -M.fibres[0].b);
        for (auto it = leg.rbegin(); it != leg.rend(); ++it) chain.push_back(-*it);
    }
    chain.push_back(M.r);
    if (M.fibres.size() == 2)
        for (std::int64_t c : neg_continued_fraction(M.fibres[1].a, -M.fibres[1].b)) chain.push_back(-c);
    return lens_from_chain(chain);
}

SeifertKey seifert_key(const SeifertManifold& Y) {
    SeifertKey k;
    k.base = Y.base;
    k.e = euler_invariant(Y);
    for (const auto& f : Y.fibres) k.fibres.push_back({f.a, floor_mod(f.b, f.a)});
    std::sort(k.fibres.begin(), k.fibres.end());
    return k;
}

bool seifert_equivalent(const SeifertManifold& X, const SeifertManifold& Y) {
    const SeifertKey kx = seifert_key(X);
    return kx == seifert_key(Y) || kx == seifert_key(mirror(Y));
}

}  // namespace s4embed
