#include "eacws/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eacws {
namespace {

// Dense adjacency cap; candidate counts beyond this would need a different
// representation and are far outside the intended problem sizes.
constexpr std::size_t kMaxCandidates = 16384;

// Fixed-width bitset over vertex indices. All sets in one search share the
// same word count so the kernels below can run straight word loops.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t words = 0) : w(words, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return w[i >> 6] >> (i & 63) & 1u; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t s = 0;
        for (auto x : w) s += static_cast<std::size_t>(std::popcount(x));
        return s;
    }
    int lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
    // Smallest set index strictly above i, or -1.
    int next(std::size_t i) const {
        std::size_t word = (i + 1) >> 6;
        if (word >= w.size()) return -1;
        std::uint64_t masked = w[word] & (~std::uint64_t{0} << ((i + 1) & 63));
        if (masked) return static_cast<int>(word * 64 + std::countr_zero(masked));
        for (std::size_t j = word + 1; j < w.size(); ++j)
            if (w[j]) return static_cast<int>(j * 64 + std::countr_zero(w[j]));
        return -1;
    }
};

void intersect(const Bits& a, const Bits& b, Bits& out) {
    for (std::size_t i = 0; i < out.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
}

std::size_t intersect_count(const Bits& a, const Bits& b) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i)
        s += static_cast<std::size_t>(std::popcount(a.w[i] & b.w[i]));
    return s;
}

struct DenseGraph {
    std::size_t n = 0, words = 0;
    std::vector<Bits> adj;

    explicit DenseGraph(std::size_t count)
        : n(count), words((count + 63) / 64), adj(count, Bits((count + 63) / 64)) {}
    void add_edge(std::size_t a, std::size_t b) {
        adj[a].set(b);
        adj[b].set(a);
    }
    // Bits 0..v-1, the candidate pool of the subproblem rooted at v.
    void fill_below(std::size_t v, Bits& out) const {
        std::size_t full = v >> 6;
        for (std::size_t i = 0; i < full; ++i) out.w[i] = ~std::uint64_t{0};
        if (full < words) out.w[full] = (std::uint64_t{1} << (v & 63)) - 1;
        for (std::size_t i = full + 1; i < words; ++i) out.w[i] = 0;
    }
};

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<int> best{0};
    std::vector<int> incumbent;
    std::mutex incumbent_mu;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::uint64_t max_nodes = 0;

    // One search-tree node of budget; false once the budget is exhausted.
    bool charge() {
        auto count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (max_nodes && count > max_nodes) stop.store(true, std::memory_order_relaxed);
        if (has_deadline && (count & 255) == 0 && std::chrono::steady_clock::now() >= deadline)
            stop.store(true, std::memory_order_relaxed);
        return !stop.load(std::memory_order_relaxed);
    }

    void offer(const std::vector<int>& clique) {
        std::lock_guard lock(incumbent_mu);
        if (clique.size() > incumbent.size()) {
            incumbent = clique;
            best.store(static_cast<int>(clique.size()), std::memory_order_relaxed);
        }
    }
};

// Per-depth scratch so the recursion never allocates in the hot path.
struct Scratch {
    Bits pool;
    std::vector<Bits> classes;
    std::size_t classes_used = 0;
    std::vector<int> order, colors;

    explicit Scratch(std::size_t words) : pool(words) {}
};

bool disjoint(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] & b.w[i]) return false;
    return true;
}

// Sequential greedy coloring of s.pool with single-conflict repair for
// vertices that land above `threshold` (only those are branched, so pushing
// them into low classes shrinks the branch set). Emits vertices class by
// class into s.order with nondecreasing s.colors; colors[i] bounds the
// largest clique inside order[0..i].
void color_sort(const DenseGraph& g, Scratch& s, int threshold) {
    s.order.clear();
    s.colors.clear();
    s.classes_used = 0;
    for (int v = s.pool.lowest(); v >= 0; v = s.pool.next(static_cast<std::size_t>(v))) {
        const Bits& nv = g.adj[static_cast<std::size_t>(v)];
        std::size_t k = 0;
        while (k < s.classes_used && !disjoint(s.classes[k], nv)) ++k;
        if (static_cast<int>(k) >= threshold && threshold > 0) {
            // Re-number: if some low class conflicts only at w, and w fits in
            // another low class, swap them and keep v below the threshold.
            for (std::size_t k1 = 0; static_cast<int>(k1) < threshold - 1; ++k1) {
                if (intersect_count(s.classes[k1], nv) != 1) continue;
                std::size_t w = 0;
                for (std::size_t i = 0; i < nv.w.size(); ++i) {
                    if (auto x = s.classes[k1].w[i] & nv.w[i]) {
                        w = i * 64 + static_cast<std::size_t>(std::countr_zero(x));
                        break;
                    }
                }
                const Bits& nw = g.adj[w];
                std::size_t k2 = k1 + 1;
                while (static_cast<int>(k2) < threshold &&
                       (k2 == k1 || !disjoint(s.classes[k2], nw)))
                    ++k2;
                if (static_cast<int>(k2) < threshold) {
                    s.classes[k1].reset(w);
                    s.classes[k2].set(w);
                    k = k1;
                    break;
                }
            }
        }
        if (k == s.classes_used) {
            if (s.classes.size() == s.classes_used) s.classes.emplace_back(s.pool.w.size());
            for (auto& word : s.classes[s.classes_used].w) word = 0;
            ++s.classes_used;
        }
        s.classes[k].set(static_cast<std::size_t>(v));
    }
    for (std::size_t k = 0; k < s.classes_used; ++k) {
        for (int v = s.classes[k].lowest(); v >= 0;
             v = s.classes[k].next(static_cast<std::size_t>(v))) {
            s.order.push_back(v);
            s.colors.push_back(static_cast<int>(k) + 1);
        }
    }
}

// Deterministic greedy clique: always extend with the pool vertex of largest
// remaining degree, lowest index on ties. Seeds the shared bound so the exact
// phase starts with real pruning power.
std::vector<int> greedy_seed(const DenseGraph& g) {
    Bits pool(g.words);
    for (std::size_t v = 0; v < g.n; ++v) pool.set(v);
    std::vector<int> clique;
    Bits tmp(g.words);
    while (!pool.empty()) {
        int pick = -1;
        std::size_t pick_deg = 0;
        for (int v = pool.lowest(); v >= 0; v = pool.next(static_cast<std::size_t>(v))) {
            std::size_t deg = intersect_count(pool, g.adj[static_cast<std::size_t>(v)]);
            if (pick < 0 || deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        clique.push_back(pick);
        intersect(pool, g.adj[static_cast<std::size_t>(pick)], tmp);
        std::swap(pool, tmp);
    }
    return clique;
}

// Branch and bound for the optimal clique size, shared incumbent across
// workers. Only the size it proves is consumed downstream, so worker
// interleaving cannot change the reported code.
class BoundWorker {
public:
    // Scratch is sized up front: recursion depth is bounded by the clique
    // size, so references into it stay valid across recursive calls.
    BoundWorker(const DenseGraph& g, SharedState& shared)
        : g_(g), shared_(shared), scratch_(g.n + 2, Scratch(g.words)) {}

    // r is the fixed clique prefix; pool holds its common neighborhood.
    void solve(std::vector<int> r, const Bits& pool) {
        r_ = std::move(r);
        scratch_[0].pool = pool;
        expand(0);
    }

private:
    const DenseGraph& g_;
    SharedState& shared_;
    std::vector<int> r_;
    std::vector<Scratch> scratch_;

    void expand(std::size_t depth) {
        if (!shared_.charge()) return;
        Scratch& s = scratch_[depth];
        int best = shared_.best.load(std::memory_order_relaxed);
        if (static_cast<int>(r_.size() + s.pool.count()) <= best) return;
        color_sort(g_, s, best - static_cast<int>(r_.size()));
        for (std::size_t i = s.order.size(); i-- > 0;) {
            if (shared_.stop.load(std::memory_order_relaxed)) return;
            if (static_cast<int>(r_.size()) + s.colors[i] <=
                shared_.best.load(std::memory_order_relaxed))
                return;
            auto v = static_cast<std::size_t>(s.order[i]);
            s.pool.reset(v);
            Bits& np = scratch_[depth + 1].pool;
            intersect(s.pool, g_.adj[v], np);
            r_.push_back(s.order[i]);
            if (np.empty()) {
                if (static_cast<int>(r_.size()) > shared_.best.load(std::memory_order_relaxed))
                    shared_.offer(r_);
            } else {
                expand(depth + 1);
            }
            r_.pop_back();
        }
    }
};

// The branch tree is partitioned at depth two: task (a, b) covers exactly the
// cliques whose two highest-index vertices are a then b. Tasks are small
// enough to balance across workers even though the graph is dense.
void run_bound_phase(const DenseGraph& g, SharedState& shared, unsigned jobs) {
    const int n = static_cast<int>(g.n);
    std::vector<std::pair<int, int>> tasks;
    {
        Bits below(g.words), pool(g.words);
        for (int a = n - 1; a >= 0; --a) {
            g.fill_below(static_cast<std::size_t>(a), below);
            intersect(below, g.adj[static_cast<std::size_t>(a)], pool);
            if (pool.empty() && 1 > shared.best.load(std::memory_order_relaxed))
                shared.offer({a});
            std::vector<int> members;
            for (int b = pool.lowest(); b >= 0; b = pool.next(static_cast<std::size_t>(b)))
                members.push_back(b);
            for (auto it = members.rbegin(); it != members.rend(); ++it) tasks.emplace_back(a, *it);
        }
    }
    std::atomic<std::size_t> dispatched{0};
    auto work = [&] {
        BoundWorker worker(g, shared);
        Bits below(g.words), pool(g.words);
        for (;;) {
            std::size_t t = dispatched.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks.size() || shared.stop.load(std::memory_order_relaxed)) return;
            auto [a, b] = tasks[t];
            g.fill_below(static_cast<std::size_t>(b), below);
            intersect(below, g.adj[static_cast<std::size_t>(a)], pool);
            for (std::size_t i = 0; i < pool.w.size(); ++i)
                pool.w[i] &= g.adj[static_cast<std::size_t>(b)].w[i];
            int best = shared.best.load(std::memory_order_relaxed);
            if (pool.empty()) {
                if (2 > best) shared.offer({b, a});
                continue;
            }
            if (2 + static_cast<int>(pool.count()) <= best) continue;
            worker.solve({b, a}, pool);
        }
    };
    if (jobs <= 1) {
        work();
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work);
    for (auto& th : threads) th.join();
}

// Decision query: does the pool contain a clique of size >= target?
class DecisionSolver {
public:
    DecisionSolver(const DenseGraph& g, SharedState& shared)
        : g_(g), shared_(shared), scratch_(g.n + 2, Scratch(g.words)) {}

    bool at_least(const Bits& pool, int target) {
        if (target <= 0) return true;
        target_ = target;
        scratch_[0].pool = pool;
        return expand(0, 0);
    }

private:
    const DenseGraph& g_;
    SharedState& shared_;
    int target_ = 0;
    std::vector<Scratch> scratch_;

    bool expand(std::size_t depth, int have) {
        if (!shared_.charge()) return false;
        if (have >= target_) return true;
        Scratch& s = scratch_[depth];
        if (have + static_cast<int>(s.pool.count()) < target_) return false;
        color_sort(g_, s, target_ - have - 1);
        for (std::size_t i = s.order.size(); i-- > 0;) {
            if (shared_.stop.load(std::memory_order_relaxed)) return false;
            if (have + s.colors[i] < target_) return false;
            auto v = static_cast<std::size_t>(s.order[i]);
            s.pool.reset(v);
            Bits& np = scratch_[depth + 1].pool;
            intersect(s.pool, g_.adj[v], np);
            if (have + 1 >= target_ || expand(depth + 1, have + 1)) return true;
        }
        return false;
    }
};

// Leftmost greedy completion: fix the least candidate whose subtree still
// reaches the optimal size, so the witness is the lexicographically least
// maximum clique in canonical (bitstring) order.
bool witness_phase(const DenseGraph& g, SharedState& shared, int target, std::vector<int>& out) {
    out.clear();
    Bits pool(g.words);
    for (std::size_t v = 0; v < g.n; ++v) pool.set(v);
    Bits above(g.words), sub(g.words);
    DecisionSolver decide(g, shared);
    for (int pos = 0; pos < target; ++pos) {
        bool fixed = false;
        for (int v = pool.lowest(); v >= 0; v = pool.next(static_cast<std::size_t>(v))) {
            if (shared.stop.load(std::memory_order_relaxed)) return false;
            g.fill_below(static_cast<std::size_t>(v), above);
            for (auto& word : above.w) word = ~word;
            above.reset(static_cast<std::size_t>(v));
            intersect(pool, g.adj[static_cast<std::size_t>(v)], sub);
            for (std::size_t i = 0; i < sub.w.size(); ++i) sub.w[i] &= above.w[i];
            int remaining = target - pos - 1;
            if (static_cast<int>(sub.count()) < remaining) continue;
            if (decide.at_least(sub, remaining)) {
                out.push_back(v);
                pool = sub;
                fixed = true;
                break;
            }
        }
        if (!fixed) return false;  // only reachable when the budget ran out
    }
    return true;
}

}  // namespace

SearchResult max_clique_code(const ConflictSet& conflicts, const SearchOptions& opts) {
    // Candidate words: nonzero values compatible with the zero word.
    std::vector<BitVec> candidates;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << conflicts.length); ++v) {
        if (!conflicts.contains(v)) candidates.push_back(BitVec::from_bits(conflicts.length, v));
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() > kMaxCandidates)
        throw std::invalid_argument("clique search supports at most 16384 candidate words");

    SharedState shared;
    shared.max_nodes = opts.budget.max_nodes;
    if (opts.budget.max_millis) {
        shared.deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget.max_millis);
        shared.has_deadline = true;
    }

    DenseGraph g(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (!conflicts.contains(candidates[a].low_bits() ^ candidates[b].low_bits()))
                g.add_edge(a, b);
        }
    }

    if (g.n > 0) shared.offer(greedy_seed(g));
    unsigned jobs = std::max(1u, opts.jobs);
    run_bound_phase(g, shared, jobs);

    std::vector<int> chosen;
    bool exact = false;
    if (!shared.stop.load()) {
        int target = shared.best.load();
        exact = witness_phase(g, shared, target, chosen);
    }
    if (!exact) chosen = shared.incumbent;

    SearchResult result;
    result.exact = exact;
    result.nodes = shared.nodes.load();
    result.code.length = conflicts.length;
    result.code.codewords.push_back(BitVec(conflicts.length));
    for (int idx : chosen) result.code.codewords.push_back(candidates[static_cast<std::size_t>(idx)]);
    std::sort(result.code.codewords.begin(), result.code.codewords.end());
    if (verify_code(result.code, conflicts))
        throw std::logic_error("clique search produced a conflicting pair");
    return result;
}

}  // namespace eacws
