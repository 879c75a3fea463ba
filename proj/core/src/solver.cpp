#include "hds/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <unordered_set>

namespace hds {

const char* to_string(Answer answer) noexcept {
    switch (answer) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

PrefilterResult prefilter_degseq(const DegreeSequence& d) {
    const Int n = d.size();
    const Int total = d.total();
    if (total % 3 != 0) {
        return {false, "degree sum " + std::to_string(total) + " is not divisible by 3"};
    }
    const Int edges = total / 3;
    const Int max_degree = choose2(std::max<Int>(n - 1, 0));
    for (Int v = 0; v < n; ++v) {
        if (d[v] > max_degree) {
            return {false, "vertex " + std::to_string(v) + " has degree " + std::to_string(d[v]) +
                               " above C(n-1,2) = " + std::to_string(max_degree)};
        }
    }
    if (edges > choose3(n)) {
        return {false, "needs " + std::to_string(edges) + " triples, only C(n,3) exist"};
    }
    for (Int v = 0; v < n; ++v) {
        if (d[v] > edges) {
            return {false, "vertex " + std::to_string(v) + " has degree above the edge count " +
                               std::to_string(edges)};
        }
    }
    return {};
}

namespace {

class Engine {
public:
    Engine(Int n, std::span<const Triple> candidates, std::span<const Int> target,
           std::uint64_t budget)
        : n_(n),
          candidates_(candidates),
          residual_(target.begin(), target.end()),
          available_(static_cast<std::size_t>(n), 0),
          budget_(budget),
          symmetric_(static_cast<Int>(candidates.size()) == choose3(n)) {
        pair_available_.assign(static_cast<std::size_t>(n * n), 0);
        for (const auto& t : candidates_) {
            ++available_[t.i];
            ++available_[t.j];
            ++available_[t.k];
            adjust_pairs(t, 1);
        }
        for (Int r : residual_) remaining_ = checked_add(remaining_, r);
        chosen_.reserve(candidates_.size());
    }

    Answer run() {
        for (std::size_t v = 0; v < residual_.size(); ++v) {
            if (residual_[v] > available_[v]) return Answer::No;
        }
        if (remaining_ % 3 != 0) return Answer::No;
        if (visit(0)) return Answer::Yes;
        return exhausted_ ? Answer::Unknown : Answer::No;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<Triple>& chosen() const noexcept { return chosen_; }

private:
    // At a block start every triple with a smaller first vertex is decided,
    // so what is left depends only on the position and the residuals of the
    // vertices from candidates_[pos].i on. With the full triple set the
    // position is implied by that vertex and the residuals can be sorted.
    std::vector<Int> subproblem_key(std::size_t pos) const {
        const Vertex first = candidates_[pos].i;
        std::vector<Int> key;
        key.reserve(static_cast<std::size_t>(n_ - first) + 1);
        key.push_back(symmetric_ ? static_cast<Int>(first) : static_cast<Int>(pos));
        key.insert(key.end(), residual_.begin() + first, residual_.end());
        if (symmetric_) std::sort(key.begin() + 1, key.end());
        return key;
    }

    Int& pair(Vertex u, Vertex v) { return pair_available_[static_cast<std::size_t>(u * n_ + v)]; }

    void adjust_pairs(Triple t, Int delta) {
        pair(t.i, t.j) += delta;
        pair(t.j, t.i) += delta;
        pair(t.i, t.k) += delta;
        pair(t.k, t.i) += delta;
        pair(t.j, t.k) += delta;
        pair(t.k, t.j) += delta;
    }

    // The undecided triples through {u, v} that get chosen number at most
    // min(r_u, r_v, p_uv) and at least p_uv - min(s_u, s_v), s being slack.
    // Summed over u they must account for exactly 2 r_v.
    bool pair_bounds_hold() {
        for (Vertex v = 0; v < n_; ++v) {
            const Int rv = residual_[v];
            const Int sv = available_[v] - rv;
            Int low = 0;
            Int high = 0;
            for (Vertex u = 0; u < n_; ++u) {
                const Int p = pair(u, v);
                if (p == 0) continue;
                const Int ru = residual_[u];
                const Int su = available_[u] - ru;
                high += std::min({ru, rv, p});
                low += std::max<Int>(0, p - std::min(su, sv));
            }
            if (2 * rv > high || 2 * rv < low) return false;
        }
        return true;
    }

    bool visit(std::size_t pos) {
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        if (remaining_ == 0) return true;
        if (pos == candidates_.size()) return false;

        // Every completion adds 3 per triple and each triple
        // touches a vertex at most once. The same holds for the triples that
        // will be excluded, counted against each vertex's slack.
        const Int left = static_cast<Int>(candidates_.size() - pos);
        const Int edges_left = remaining_ / 3;
        if (edges_left > left) return false;
        const Int excluded_left = left - edges_left;
        for (Vertex v = 0; v < n_; ++v) {
            if (residual_[v] > edges_left) return false;
            if (available_[v] - residual_[v] > excluded_left) return false;
        }
        if (!pair_bounds_hold()) return false;

        const bool block_start = pos == 0 || candidates_[pos - 1].i != candidates_[pos].i;
        if (block_start) {
            const auto key = subproblem_key(pos);
            if (failed_.contains(key)) return false;
            if (descend(pos)) return true;
            if (!exhausted_ && failed_.size() < kMaxMemo) failed_.insert(key);
            return false;
        }
        return descend(pos);
    }

    bool descend(std::size_t pos) {
        const Triple t = candidates_[pos];
        Int& ri = residual_[t.i];
        Int& rj = residual_[t.j];
        Int& rk = residual_[t.k];
        Int& ai = available_[t.i];
        Int& aj = available_[t.j];
        Int& ak = available_[t.k];

        --ai;
        --aj;
        --ak;
        adjust_pairs(t, -1);

        // Include: residuals stay nonnegative; the availability bound is
        // unaffected since residual and availability drop together.
        if (ri > 0 && rj > 0 && rk > 0) {
            --ri;
            --rj;
            --rk;
            remaining_ -= 3;
            chosen_.push_back(t);
            if (visit(pos + 1)) return true;
            chosen_.pop_back();
            remaining_ += 3;
            ++ri;
            ++rj;
            ++rk;
            if (exhausted_) {
                ++ai;
                ++aj;
                ++ak;
                adjust_pairs(t, 1);
                return false;
            }
        }

        // Exclude: residual must not exceed what is still available.
        if (ri <= ai && rj <= aj && rk <= ak) {
            if (visit(pos + 1)) return true;
        }
        ++ai;
        ++aj;
        ++ak;
        adjust_pairs(t, 1);
        return false;
    }

    struct KeyHash {
        std::size_t operator()(const std::vector<Int>& key) const noexcept {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (Int x : key) {
                h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    static constexpr std::size_t kMaxMemo = std::size_t{1} << 22;

    Int n_;
    std::span<const Triple> candidates_;
    std::vector<Int> residual_;
    std::vector<Int> available_;
    std::vector<Int> pair_available_;
    Int remaining_ = 0;
    std::vector<Triple> chosen_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool symmetric_;
    std::unordered_set<std::vector<Int>, KeyHash> failed_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

DecisionOutcome search_realization(Int n, std::span<const Triple> candidates,
                                   std::span<const Int> target, std::uint64_t budget) {
    if (static_cast<Int>(target.size()) != n) {
        throw Error(ErrorKind::SizeMismatch, "target length differs from ground-set size");
    }
    for (const auto& t : candidates) {
        if (!t.valid_for(n)) throw Error(ErrorKind::InvalidArgument, "candidate triple out of range");
    }
    for (Int r : target) {
        if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative target degree");
    }

    const auto start = std::chrono::steady_clock::now();

    // Search on a relabelled ground set where vertex 0 has the largest
    // target degree (ties by original index); lex order then settles the
    // most constrained vertices first.
    std::vector<Vertex> original(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) original[v] = v;
    std::stable_sort(original.begin(), original.end(),
                     [&](Vertex a, Vertex b) { return target[a] > target[b]; });
    std::vector<Vertex> relabel(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) relabel[original[v]] = v;

    auto mapped = [](Triple t, const std::vector<Vertex>& to) {
        std::array<Vertex, 3> x{to[t.i], to[t.j], to[t.k]};
        std::sort(x.begin(), x.end());
        return Triple{x[0], x[1], x[2]};
    };

    std::vector<Triple> relabelled;
    relabelled.reserve(candidates.size());
    for (const auto& t : candidates) relabelled.push_back(mapped(t, relabel));
    std::sort(relabelled.begin(), relabelled.end());
    if (std::adjacent_find(relabelled.begin(), relabelled.end()) != relabelled.end()) {
        throw Error(ErrorKind::InvalidArgument, "candidate triples repeat");
    }
    std::vector<Int> relabelled_target(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) relabelled_target[relabel[v]] = target[v];

    Engine engine(n, relabelled, relabelled_target, budget);
    DecisionOutcome out;
    out.answer = engine.run();
    if (out.answer == Answer::Yes) {
        std::vector<Triple> edges;
        edges.reserve(engine.chosen().size());
        for (const auto& t : engine.chosen()) edges.push_back(mapped(t, original));
        std::sort(edges.begin(), edges.end());
        out.certificate = Hypergraph{n, std::move(edges)};
    }
    out.stats.nodes = engine.nodes();
    out.stats.millis = elapsed_ms(start);
    out.stats.budget_used =
        budget == 0 ? 1.0 : static_cast<double>(engine.nodes()) / static_cast<double>(budget);
    return out;
}

DecisionOutcome decide_degseq(const DegreeSequence& d, std::uint64_t budget) {
    if (auto pre = prefilter_degseq(d); !pre) {
        DecisionOutcome out;
        out.answer = Answer::No;
        out.reason = pre.reason;
        return out;
    }
    const auto triples = enumerate_triples(d.size());
    return search_realization(d.size(), triples, d.values(), budget);
}

DecisionOutcome decide_zero(const ZeroWeightInstance& inst, std::uint64_t budget) {
    inst.validate();
    const SignPartition sp = sign_partition(inst.w);
    return search_realization(inst.n(), sp.zero.edges, inst.c.values(), budget);
}

DecisionOutcome decide_partition(const ThreePartitionInstance& inst, std::uint64_t budget) {
    inst.validate();
    const Int n = inst.n();
    if (n % 3 != 0) {
        DecisionOutcome out;
        out.answer = Answer::No;
        out.reason = "n is not divisible by 3";
        return out;
    }
    std::vector<Triple> candidates;
    for (const auto& x : enumerate_triples(n)) {
        if (partition_value(inst, x) == inst.b) candidates.push_back(x);
    }
    const std::vector<Int> ones(static_cast<std::size_t>(n), 1);
    return search_realization(n, candidates, ones, budget);
}

namespace {

// Walks every subset of `candidates` in Gray-code order, flipping one triple
// per step, and tracks how many vertices disagree with the target.
bool exhaustive_subset_search(Int n, const std::vector<Triple>& candidates,
                              std::span<const Int> target) {
    std::vector<Int> degree(static_cast<std::size_t>(n), 0);
    Int mismatched = 0;
    for (Int v = 0; v < n; ++v) mismatched += (target[v] != 0);
    if (mismatched == 0) return true;

    std::vector<bool> in(candidates.size(), false);
    const std::uint64_t steps = std::uint64_t{1} << candidates.size();
    for (std::uint64_t step = 1; step < steps; ++step) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(step));
        const Triple t = candidates[bit];
        const Int delta = in[bit] ? -1 : 1;
        in[bit] = !in[bit];
        for (Vertex v : {t.i, t.j, t.k}) {
            const bool was = degree[v] == target[v];
            degree[v] += delta;
            const bool now = degree[v] == target[v];
            mismatched += static_cast<Int>(was) - static_cast<Int>(now);
        }
        if (mismatched == 0) return true;
    }
    return false;
}

} // namespace

bool bruteforce_degseq(const DegreeSequence& d) {
    if (d.size() > kBruteforceDegseqMaxN) {
        throw Error(ErrorKind::TooLarge, "degree-sequence brute force limited to n <= 6");
    }
    return exhaustive_subset_search(d.size(), enumerate_triples(d.size()), d.values());
}

bool bruteforce_zero(const ZeroWeightInstance& inst) {
    inst.validate();
    std::vector<Triple> zero;
    for (const auto& x : enumerate_triples(inst.n())) {
        if (weighted_value(inst.w, x) == 0) zero.push_back(x);
    }
    if (static_cast<Int>(zero.size()) > kBruteforceZeroMaxCandidates) {
        throw Error(ErrorKind::TooLarge, "zero-weight brute force limited to 20 candidate triples");
    }
    return exhaustive_subset_search(inst.n(), zero, inst.c.values());
}

namespace {

// Pairs the smallest uncovered element with every choice of two others.
bool perfect_triple_partition(const ThreePartitionInstance& inst, std::vector<bool>& covered) {
    const Int n = inst.n();
    Vertex first = 0;
    while (first < n && covered[first]) ++first;
    if (first == n) return true;
    covered[first] = true;
    for (Vertex j = first + 1; j < n; ++j) {
        if (covered[j]) continue;
        covered[j] = true;
        for (Vertex k = j + 1; k < n; ++k) {
            if (covered[k]) continue;
            if (inst.a[first] + inst.a[j] + inst.a[k] != inst.b) continue;
            covered[k] = true;
            if (perfect_triple_partition(inst, covered)) return true;
            covered[k] = false;
        }
        covered[j] = false;
    }
    covered[first] = false;
    return false;
}

} // namespace

bool bruteforce_partition(const ThreePartitionInstance& inst) {
    inst.validate();
    if (inst.n() % 3 != 0) return false;
    if (inst.n() > kBruteforcePartitionMaxN) {
        throw Error(ErrorKind::TooLarge, "partition brute force limited to n <= 12");
    }
    std::vector<bool> covered(static_cast<std::size_t>(inst.n()), false);
    return perfect_triple_partition(inst, covered);
}

} // namespace hds
