#include "hds/generate.hpp"

#include <algorithm>
#include <limits>

namespace hds {

Int Rng::uniform(Int lo, Int hi) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<Int>(next());
    }
    const std::uint64_t range = span + 1;
    // Largest multiple of range that fits; draws at or above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<Int>(static_cast<std::uint64_t>(lo) + x % range);
}

PlantedDegSeq gen_planted_degseq(Int n, Int m, std::uint64_t seed) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
    std::vector<Triple> all = enumerate_triples(n);
    const Int total = static_cast<Int>(all.size());
    if (m < 0 || m > total) {
        throw Error(ErrorKind::InvalidArgument,
                    "m must lie in [0, C(n,3)] = [0, " + std::to_string(total) + "]");
    }
    Rng rng(seed);
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (Int t = 0; t < m; ++t) {
        const Int pick = rng.uniform(t, total - 1);
        std::swap(all[t], all[pick]);
    }
    all.resize(static_cast<std::size_t>(m));
    Hypergraph witness = make_hypergraph(n, std::move(all));
    DegreeSequence d = degree_sum(witness);
    return {DegSeqInstance{3, std::move(d)}, std::move(witness)};
}

ThreePartitionInstance gen_partition(Int n, Int max_value, std::uint64_t seed, bool planted) {
    if (n < 0 || n % 3 != 0) throw Error(ErrorKind::InvalidArgument, "n must be a multiple of 3");
    if (max_value < 0) throw Error(ErrorKind::InvalidArgument, "max_value must be nonnegative");
    if (n == 0) return {DegreeSequence{}, 0};

    const Int groups = n / 3;
    Rng rng(seed);
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(n));

    if (planted) {
        const Int b = rng.uniform(0, checked_mul(3, max_value));
        for (Int g = 0; g < groups; ++g) {
            const Int first = rng.uniform(std::max<Int>(0, b - 2 * max_value), std::min(max_value, b));
            const Int second = rng.uniform(std::max<Int>(0, b - first - max_value),
                                           std::min(max_value, b - first));
            a.push_back(first);
            a.push_back(second);
            a.push_back(b - first - second);
        }
        rng.shuffle(a);
        return {DegreeSequence(std::move(a)), b};
    }

    // 3*sum(a) == n*b  <=>  sum(a) == groups*b, so sum(a) must be a multiple
    // of the group count. Nudge the last entry by the smaller feasible amount.
    while (true) {
        a.clear();
        Int sum = 0;
        for (Int t = 0; t < n; ++t) {
            a.push_back(rng.uniform(0, max_value));
            sum = checked_add(sum, a.back());
        }
        const Int rem = sum % groups;
        if (rem != 0) {
            Int& last = a.back();
            const Int up = groups - rem;
            const bool can_down = last >= rem;
            const bool can_up = last + up <= max_value;
            if (can_down && (!can_up || rem <= up)) {
                last -= rem;
                sum -= rem;
            } else if (can_up) {
                last += up;
                sum += up;
            } else {
                continue;
            }
        }
        return {DegreeSequence(std::move(a)), sum / groups};
    }
}

} // namespace hds
