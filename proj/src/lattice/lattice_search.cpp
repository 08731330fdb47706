#include "s4embed/lattice_search.hpp"

#include "s4embed/kernels.hpp"
#include "s4embed/quadratic_form.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace s4embed {
namespace {

constexpr std::int64_t kMaxNorm = std::int64_t{1} << 28;

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

struct Problem {
    std::size_t n = 0;       // rows
    std::size_t N = 0;       // columns
    std::size_t stride = 0;  // n rounded up to a multiple of 4
    std::vector<std::size_t> order;
    std::vector<std::int64_t> norm;    // by search index
    std::vector<std::int64_t> target;  // target[r*n+s] = v_r . v_s (search indices)
};

struct Shared {
    std::uint64_t budget = 0;
    std::optional<std::size_t> limit;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> limited{false};
    std::mutex mu;
    std::vector<std::vector<std::int64_t>> found;  // row-major, original row order
};

class Worker {
public:
    Worker(const Problem& pb, Shared& sh)
        : pb_(pb),
          sh_(sh),
          kt_(kernels::table()),
          cols_(std::max<std::size_t>(pb.N, 1) * pb.stride, 0),
          tails_(pb.n * (pb.N + 1) * pb.stride, 0),
          partial_(pb.n * (pb.N + 1) * pb.stride, 0),
          targets_(pb.n * pb.stride, 0),
          x_(pb.n * std::max<std::size_t>(pb.N, 1), 0),
          block_start_((pb.n + 1) * std::max<std::size_t>(pb.N, 1), 0),
          zero_prefix_((pb.n + 1) * std::max<std::size_t>(pb.N, 1), 1) {
        for (std::size_t c = 0; c < pb.N; ++c) block_start_[c] = c == 0;
    }

    void collect_first_rows(std::vector<std::vector<std::int64_t>>& out) {
        collect_ = &out;
        prepare_row(0);
        step(0, 0, pb_.norm[0]);
        collect_ = nullptr;
    }

    void run_from(const std::vector<std::int64_t>& row0) {
        std::copy(row0.begin(), row0.end(), x_.begin());
        commit_row(0);
        enter_row(1);
    }

private:
    std::int64_t* P(std::size_t r, std::size_t c) { return &partial_[(r * (pb_.N + 1) + c) * pb_.stride]; }
    std::int64_t* tail(std::size_t r, std::size_t c) { return &tails_[(r * (pb_.N + 1) + c) * pb_.stride]; }
    std::int64_t& X(std::size_t r, std::size_t c) { return x_[r * pb_.N + c]; }

    void prepare_row(std::size_t r) {
        std::int64_t* t = &targets_[r * pb_.stride];
        for (std::size_t s = 0; s < r; ++s) t[s] = pb_.target[r * pb_.n + s];
        std::fill(tail(r, pb_.N), tail(r, pb_.N) + pb_.stride, 0);
        for (std::size_t c = pb_.N; c-- > 0;) {
            std::int64_t* cur = tail(r, c);
            const std::int64_t* next = tail(r, c + 1);
            const std::int64_t* col = &cols_[c * pb_.stride];
            for (std::size_t s = 0; s < r; ++s) cur[s] = next[s] + col[s] * col[s];
        }
        std::fill(P(r, 0), P(r, 0) + pb_.stride, 0);
    }

    void commit_row(std::size_t r) {
        const std::size_t N = pb_.N;
        for (std::size_t c = 0; c < N; ++c) cols_[c * pb_.stride + r] = X(r, c);
        const std::uint8_t* bs = &block_start_[r * N];
        const std::uint8_t* zp = &zero_prefix_[r * N];
        std::uint8_t* nbs = &block_start_[(r + 1) * N];
        std::uint8_t* nzp = &zero_prefix_[(r + 1) * N];
        for (std::size_t c = 0; c < N; ++c) {
            nbs[c] = bs[c] || (c > 0 && X(r, c) != X(r, c - 1));
            nzp[c] = zp[c] && X(r, c) == 0;
        }
    }

    void enter_row(std::size_t r) {
        if (sh_.stop.load(std::memory_order_relaxed)) return;
        if (r == pb_.n) {
            emit();
            return;
        }
        prepare_row(r);
        step(r, 0, pb_.norm[r]);
    }

    void emit() {
        std::vector<std::int64_t> A(pb_.n * pb_.N);
        for (std::size_t k = 0; k < pb_.n; ++k)
            for (std::size_t c = 0; c < pb_.N; ++c) A[pb_.order[k] * pb_.N + c] = X(k, c);
        std::lock_guard<std::mutex> lock(sh_.mu);
        if (sh_.limit && sh_.found.size() >= *sh_.limit) return;
        sh_.found.push_back(std::move(A));
        if (sh_.limit && sh_.found.size() >= *sh_.limit) {
            sh_.limited = true;
            sh_.stop = true;
        }
    }

    void step(std::size_t r, std::size_t c, std::int64_t rem) {
        const std::size_t N = pb_.N;
        if (c == N) {
            if (rem != 0) return;
            if (collect_) {
                collect_->emplace_back(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(N));
                return;
            }
            commit_row(r);
            enter_row(r + 1);
            return;
        }
        std::int64_t hi = isqrt(rem);
        std::int64_t lo = -hi;
        if (!block_start_[r * N + c]) hi = std::min(hi, X(r, c - 1));
        if (zero_prefix_[r * N + c]) lo = std::max<std::int64_t>(lo, 0);
        const std::int64_t* col = &cols_[c * pb_.stride];
        const std::int64_t* t = &targets_[r * pb_.stride];
        for (std::int64_t v = hi; v >= lo; --v) {
            if (sh_.stop.load(std::memory_order_relaxed)) return;
            if (sh_.nodes.fetch_add(1, std::memory_order_relaxed) >= sh_.budget) {
                sh_.exhausted = true;
                sh_.stop = true;
                return;
            }
            const std::int64_t rem2 = rem - v * v;
            kt_.scaled_add(P(r, c + 1), P(r, c), col, v, r);
            if (!kt_.feasible(t, P(r, c + 1), tail(r, c + 1), rem2, r)) continue;
            X(r, c) = v;
            step(r, c + 1, rem2);
        }
    }

    const Problem& pb_;
    Shared& sh_;
    const kernels::Table& kt_;
    std::vector<std::int64_t> cols_;
    std::vector<std::int64_t> tails_;
    std::vector<std::int64_t> partial_;
    std::vector<std::int64_t> targets_;
    std::vector<std::int64_t> x_;
    std::vector<std::uint8_t> block_start_;
    std::vector<std::uint8_t> zero_prefix_;
    std::vector<std::vector<std::int64_t>>* collect_ = nullptr;
};

std::vector<std::size_t> search_order(const IntMatrix& Q) {
    const std::size_t n = Q.rows();
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        std::size_t best_adj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            std::size_t adj = 0;
            for (std::size_t j : order)
                if (Q(i, j) != 0) ++adj;
            if (best == n) {
                best = i;
                best_adj = adj;
                continue;
            }
            const int c = sgn(Integer(abs(Q(i, i)) - abs(Q(best, best))));
            if (c > 0 || (c == 0 && adj > best_adj)) {
                best = i;
                best_adj = adj;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

}  // namespace

SearchResult enumerate_subsets(const IntMatrix& Q, SubsetMode mode, const SearchOptions& options) {
    if (!Q.is_symmetric()) throw std::invalid_argument("enumerate_subsets: Q must be symmetric");
    const std::size_t n = Q.rows();
    const Inertia in = inertia(Q);
    if (mode == SubsetMode::Square && (in.positive != 0 || in.zero != 0))
        throw std::invalid_argument("enumerate_subsets: square mode needs a negative definite form");
    if (mode == SubsetMode::Rectangular && (in.positive != 0 || in.zero != 1))
        throw std::invalid_argument("enumerate_subsets: rectangular mode needs a negative semi-definite form of corank 1");

    Problem pb;
    pb.n = n;
    pb.N = mode == SubsetMode::Square ? n : n - 1;
    pb.stride = (n + 3) / 4 * 4;
    pb.order = search_order(Q);
    pb.norm.resize(n);
    pb.target.assign(n * n, 0);
    SearchResult result;
    for (std::size_t r = 0; r < n; ++r) {
        const Integer norm = -Q(pb.order[r], pb.order[r]);
        if (norm > kMaxNorm) throw std::invalid_argument("enumerate_subsets: diagonal entry exceeds 2^28");
        pb.norm[r] = to_int64(norm);
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const Integer t = -Q(pb.order[r], pb.order[s]);
            // Cauchy-Schwarz: no vectors can realise this pair
            if (t * t > Integer(static_cast<long>(pb.norm[r])) * static_cast<long>(pb.norm[s])) return result;
            pb.target[r * n + s] = to_int64(t);
        }

    Shared sh;
    sh.budget = options.budget;
    sh.limit = options.limit;
    if (n == 0) {
        sh.found.emplace_back();
    } else {
        std::vector<std::vector<std::int64_t>> first_rows;
        Worker(pb, sh).collect_first_rows(first_rows);
        const unsigned threads = std::max(1u, options.threads);
        if (threads == 1 || first_rows.size() < 2) {
            Worker w(pb, sh);
            for (const auto& row : first_rows) {
                if (sh.stop) break;
                w.run_from(row);
            }
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    Worker w(pb, sh);
                    for (std::size_t i = next++; i < first_rows.size() && !sh.stop; i = next++) w.run_from(first_rows[i]);
                });
            for (auto& th : pool) th.join();
        }
    }

    result.nodes = std::min<std::uint64_t>(sh.nodes.load(), sh.budget);
    if (sh.exhausted)
        result.status = SearchStatus::BudgetExhausted;
    else if (sh.limited)
        result.status = SearchStatus::LimitReached;
    std::sort(sh.found.begin(), sh.found.end(), std::greater<>());
    for (const auto& rows : sh.found) {
        IntMatrix A(n, pb.N);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < pb.N; ++c) A(i, c) = static_cast<long>(rows[i * pb.N + c]);
        result.subsets.push_back({std::move(A), mode});
    }
    return result;
}

bool verify_factorization(const IntMatrix& A, const IntMatrix& Q) {
    if (A.rows() != Q.rows() || !Q.is_square()) return false;
    return A * A.transpose() == -Q;
}

IntMatrix canonical_column_form(const IntMatrix& A) {
    std::vector<IntVector> cols;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        IntVector col = A.column(c);
        for (const auto& x : col) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : col) y = -y;
            break;
        }
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    IntMatrix out(A.rows(), A.cols());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < A.rows(); ++i) out(i, c) = cols[c][i];
    return out;
}

}  // namespace s4embed
