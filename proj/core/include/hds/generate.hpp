#pragma once

#include <cstdint>
#include <random>

#include "hds/core.hpp"
#include "hds/reduction.hpp"

namespace hds {

/// Seeded generator with a portable output stream: std::mt19937_64 (whose
/// sequence is fixed by the C++ standard) plus rejection sampling for bounded
/// draws, so a seed gives the same instances on every platform. The standard
/// distributions are implementation-defined and are not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi]; requires lo <= hi.
    Int uniform(Int lo, Int hi);

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t t = values.size(); t > 1; --t) {
            const auto pick = static_cast<std::size_t>(uniform(0, static_cast<Int>(t) - 1));
            std::swap(values[t - 1], values[pick]);
        }
    }

private:
    std::mt19937_64 engine_;
};

struct PlantedDegSeq {
    DegSeqInstance instance;
    Hypergraph witness;
};

/// m distinct triples of [n], uniformly at random, and their degree sum.
PlantedDegSeq gen_planted_degseq(Int n, Int m, std::uint64_t seed);

/// 3-partition instance with entries in [0, max_value]. Planted instances are
/// built from n/3 groups with a common sum b and are always YES.
ThreePartitionInstance gen_partition(Int n, Int max_value, std::uint64_t seed, bool planted);

} // namespace hds
