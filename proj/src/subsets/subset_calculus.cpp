#include "s4embed/subset_calculus.hpp"

#include "s4embed/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <string>

namespace s4embed {

LinearShapeError::LinearShapeError(std::size_t i_, std::size_t j_)
    : std::invalid_argument("not a linear subset at pair (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
      i(i_),
      j(j_) {}

namespace {

// v_i . v_j under the negative-definite pairing
Integer pairing(const IntMatrix& A, std::size_t i, std::size_t j) {
    Integer s = 0;
    for (std::size_t c = 0; c < A.cols(); ++c) s -= A(i, c) * A(j, c);
    return s;
}

std::optional<std::pair<std::size_t, std::size_t>> linear_violation(const IntMatrix& A) {
    const std::size_t n = A.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Integer p = pairing(A, i, j);
            const bool ok = i == j ? p <= -2 : (j == i + 1 ? (p == 0 || p == 1) : p == 0);
            if (!ok) return std::make_pair(i, j);
        }
    return std::nullopt;
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

}  // namespace

bool is_linear_subset(const IntMatrix& A) { return !linear_violation(A); }

SubsetGraph subset_graph(const IntMatrix& A) {
    if (auto v = linear_violation(A)) throw LinearShapeError(v->first, v->second);
    SubsetGraph g;
    const std::size_t n = A.rows();
    for (std::size_t i = 0; i < n; ++i) g.weights.push_back(to_int64(pairing(A, i, i)));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || pairing(A, i - 1, i) == 0)
            g.components.emplace_back();
        else
            g.edges.emplace_back(i - 1, i);
        g.components.back().push_back(i);
    }
    return g;
}

long I_of(const IntMatrix& A, const std::vector<std::size_t>& rows) {
    long total = 0;
    for (std::size_t i : rows) total += -to_int64(pairing(A, i, i)) - 3;
    return total;
}

long I_of(const IntMatrix& A) {
    std::vector<std::size_t> all(A.rows());
    std::iota(all.begin(), all.end(), 0);
    return I_of(A, all);
}

std::vector<std::vector<std::size_t>> irreducible_decomposition(const IntMatrix& A) {
    const std::size_t n = A.rows();
    UnionFind uf(n);
    for (std::size_t c = 0; c < A.cols(); ++c) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < n; ++i) {
            if (A(i, c) == 0) continue;
            if (first)
                uf.unite(i, *first);
            else
                first = i;
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::optional<std::size_t>> slot(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (!slot[root]) {
            slot[root] = groups.size();
            groups.emplace_back();
        }
        groups[*slot[root]].push_back(i);
    }
    return groups;
}

std::size_t component_count(const IntMatrix& A, const std::vector<std::size_t>& rows) {
    UnionFind uf(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            if (pairing(A, rows[a], rows[b]) != 0) uf.unite(a, b);
    std::size_t count = 0;
    for (std::size_t a = 0; a < rows.size(); ++a)
        if (uf.find(a) == a) ++count;
    return count;
}

std::pair<IntMatrix, ContractionRecord> contract(const IntMatrix& A, std::size_t s, std::size_t j) {
    const auto fail = [j] {
        return std::invalid_argument("contraction hypothesis violated at coordinate " + std::to_string(j));
    };
    if (s >= A.rows() || j >= A.cols()) throw fail();
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (abs(A(i, c)) > 1) throw fail();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (A(i, j) != 0) support.push_back(i);
    if (support.size() != 2 || std::find(support.begin(), support.end(), s) == support.end()) throw fail();
    const std::size_t t = support[0] == s ? support[1] : support[0];
    if (pairing(A, t, t) >= -2) throw fail();

    ContractionRecord rec;
    rec.s = s;
    rec.t = t;
    rec.j = j;
    rec.removed_row = A.row(s);
    rec.t_entry = A(t, j);
    IntMatrix out = A.remove_row_col(s, j);
    return {std::move(out), std::move(rec)};
}

IntMatrix expand_final_minus2(const IntMatrix& reduced, const ContractionRecord& rec) {
    const std::size_t n = reduced.rows() + 1;
    const std::size_t N = reduced.cols() + 1;
    if (rec.s >= n || rec.j >= N || rec.t >= n || rec.removed_row.size() != N)
        throw std::invalid_argument("expansion data does not fit the subset");
    IntMatrix out(n, N);
    for (std::size_t i = 0, ri = 0; i < n; ++i) {
        if (i == rec.s) {
            for (std::size_t c = 0; c < N; ++c) out(i, c) = rec.removed_row[c];
            continue;
        }
        for (std::size_t c = 0, rc = 0; c < N; ++c) {
            if (c == rec.j) continue;
            out(i, c) = reduced(ri, rc++);
        }
        ++ri;
    }
    out(rec.t, rec.j) = rec.t_entry;
    return out;
}

namespace {

// Contraction search inside one chain component. Rows are kept in chain order;
// contracted columns are zeroed rather than deleted.
class BadComponentSearch {
public:
    BadComponentSearch(const IntMatrix& A, const std::vector<std::size_t>& comp, bool contractions)
        : contractions_(contractions) {
        for (std::size_t r : comp) rows_.push_back(A.row(r));
        std::vector<bool> in_comp(A.rows(), false);
        for (std::size_t r : comp) in_comp[r] = true;
        outside_free_.assign(A.cols(), true);
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (!in_comp[i])
                for (std::size_t c = 0; c < A.cols(); ++c)
                    if (A(i, c) != 0) outside_free_[c] = false;
    }

    // Reduced weight n of the reachable 3-chain, if any.
    std::optional<std::int64_t> run() { return visit(rows_); }

private:
    static Integer norm(const IntVector& v) {
        Integer s = 0;
        for (const auto& x : v) s += x * x;
        return s;
    }
    static Integer dot(const IntVector& a, const IntVector& b) {
        Integer s = 0;
        for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
        return s;
    }

    static bool is_chain(const std::vector<IntVector>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (norm(v[i]) < 2) return false;
            for (std::size_t k = i + 1; k < v.size(); ++k) {
                const Integer d = dot(v[i], v[k]);
                if (k == i + 1 ? d != -1 : d != 0) return false;
            }
        }
        return true;
    }

    static std::optional<std::int64_t> base_case(const std::vector<IntVector>& v) {
        const auto support = [](const IntVector& x) {
            std::vector<std::size_t> s;
            for (std::size_t c = 0; c < x.size(); ++c)
                if (x[c] != 0) s.push_back(c);
            return s;
        };
        const auto sx = support(v[0]);
        const auto sz = support(v[2]);
        if (sx.size() != 2 || sx != sz) return std::nullopt;
        for (std::size_t c : sx)
            if (abs(v[0][c]) != 1 || abs(v[2][c]) != 1) return std::nullopt;
        const Integer ny = norm(v[1]);
        if (ny < 3) return std::nullopt;
        return to_int64(ny) - 1;
    }

    std::optional<std::int64_t> visit(const std::vector<IntVector>& v) {
        if (v.size() < 3) return std::nullopt;
        std::string key;
        for (const auto& row : v) {
            for (const auto& x : row) key += x.get_str() + ",";
            key += ";";
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::optional<std::int64_t> res;
        if (v.size() == 3) res = base_case(v);
        for (int end = 0; end < 2 && !res && contractions_; ++end) {
            const std::size_t s = end == 0 ? 0 : v.size() - 1;
            if (norm(v[s]) != 2) continue;
            for (std::size_t j = 0; j < v[s].size() && !res; ++j) {
                if (v[s][j] == 0 || !outside_free_[j]) continue;
                std::optional<std::size_t> t;
                bool ok = true;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i == s || v[i][j] == 0) continue;
                    if (t) ok = false;
                    t = i;
                }
                if (!ok || !t || norm(v[*t]) < 3) continue;
                std::vector<IntVector> next;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i == s) continue;
                    next.push_back(v[i]);
                    if (i == *t) next.back()[j] = 0;
                }
                if (!is_chain(next)) continue;
                res = visit(next);
            }
        }
        memo_.emplace(std::move(key), res);
        return res;
    }

    bool contractions_;
    std::vector<IntVector> rows_;
    std::vector<bool> outside_free_;
    std::map<std::string, std::optional<std::int64_t>> memo_;
};

}  // namespace

std::vector<BadComponent> detect_bad_components(const IntMatrix& A) {
    std::vector<BadComponent> out;
    if (A.rows() == 0) return out;
    const SubsetGraph g = subset_graph(A);
    // contractions need every entry in {0, +-1}
    bool small_entries = true;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (abs(A(i, c)) > 1) small_entries = false;
    for (const auto& comp : g.components) {
        if (comp.size() < 3) continue;
        BadComponentSearch search(A, comp, small_entries);
        const auto n = search.run();
        if (!n) continue;
        BadComponent bc;
        bc.rows = comp;
        bc.n = *n;
        bc.I = I_of(A, comp);
        std::vector<std::int64_t> weights;
        for (std::size_t r : comp) weights.push_back(g.weights[r]);
        const LensSpace L = lens_from_chain(weights);
        bc.p = L.p;
        bc.q = L.q;
        if (bc.n > 0 && bc.p % bc.n == 0) {
            const std::int64_t sq = bc.p / bc.n;
            std::int64_t m = 1;
            while ((m + 1) * (m + 1) <= sq) ++m;
            if (m * m == sq && m >= 2) {
                bc.m = m;
                for (std::int64_t k = 1; k < m && !bc.witness_verified; ++k) {
                    if (std::gcd(m, k) != 1) continue;
                    if (lens_homeomorphic(bc.p, bc.q, m * bc.n * k + 1)) {
                        bc.k = k;
                        bc.witness_verified = true;
                    }
                }
            }
        }
        out.push_back(std::move(bc));
    }
    return out;
}

Complementarity complementary_pair_test(const std::vector<std::int64_t>& c1, const std::vector<std::int64_t>& c2) {
    const LensSpace a = lens_from_chain(c1);
    const LensSpace b = lens_from_chain(c2);
    if (a.p != b.p || a.p < 2) return Complementarity::Neither;
    const std::int64_t p = a.p;
    if (floor_mod(a.q + b.q, p) == 0) return Complementarity::Complementary;
    if (floor_mod(static_cast<std::int64_t>(static_cast<__int128>(a.q) * b.q % p) + 1, p) == 0)
        return Complementarity::WeakComplementary;
    return Complementarity::Neither;
}

SubsetGroups subset_groups(const IntMatrix& A) {
    const IntMatrix Q = -(A * A.transpose());
    SubsetGroups out;
    out.G = cokernel(Q).torsion;
    std::vector<IntVector> gens;
    for (std::size_t c = 0; c < A.cols(); ++c) gens.push_back(out.G.project(A.column(c)));
    out.H = subgroup_from_generators(out.G, gens);
    return out;
}

}  // namespace s4embed
