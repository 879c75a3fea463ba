#pragma once

#include "hds/core.hpp"

namespace hds {

/// Problem (1): is there a set of disjoint triples covering [n] once, each
/// with a-value b? Promise: 3 * sum(a) == n * b.
struct ThreePartitionInstance {
    DegreeSequence a;
    Int b = 0;

    Int n() const noexcept { return a.size(); }

    /// Throws Error{PromiseViolated} (or Overflow) when the promise fails.
    void validate() const;

    friend bool operator==(const ThreePartitionInstance&, const ThreePartitionInstance&) = default;
};

/// Problem (2): is there G within the zero-weight triples with degree_sum(G) == c?
/// Promise: w·c == 0.
struct ZeroWeightInstance {
    WeightVector w;
    DegreeSequence c;

    Int n() const noexcept { return c.size(); }

    void validate() const;

    friend bool operator==(const ZeroWeightInstance&, const ZeroWeightInstance&) = default;
};

/// Problem (3): is d the degree sequence of some k-hypergraph? Reduced
/// instances always carry k = 3.
struct DegSeqInstance {
    int k = 3;
    DegreeSequence d;

    Int n() const noexcept { return d.size(); }

    friend bool operator==(const DegSeqInstance&, const DegSeqInstance&) = default;
};

/// Sum of a over the triple x.
Int partition_value(const ThreePartitionInstance& inst, Triple x);

/// w = 3a - b·1, c = 1.
ZeroWeightInstance reduce_partition_to_zero(const ThreePartitionInstance& inst);

/// Identity on F, after checking a·x == b and the reduced w·x == 0 for every x.
Hypergraph map_partition_certificate(const Hypergraph& f, const ThreePartitionInstance& inst);

struct ZeroReduction {
    DegSeqInstance degseq;
    SignPartition partition;
};

/// d = c + degree_sum(S+); the sign partition is returned for the certificate maps.
ZeroReduction reduce_zero_to_degseq(const ZeroWeightInstance& inst);

/// H = G ∪ S+. Throws Error{NotInZeroSet} if G leaves S0.
Hypergraph lift_certificate(const Hypergraph& g, const SignPartition& sp);

struct ForcingReport {
    bool plus_contained = false;  // S+ ⊆ H
    bool minus_avoided = false;   // H ∩ S- = ∅

    bool holds() const noexcept { return plus_contained && minus_avoided; }
};

ForcingReport check_forcing(const Hypergraph& h, const SignPartition& sp);

/// G = H ∩ S0. Throws Error{ForcingViolated} unless S+ ⊆ H and H ∩ S- = ∅.
Hypergraph project_certificate(const Hypergraph& h, const SignPartition& sp);

struct PartitionReduction {
    ZeroWeightInstance zero;
    DegSeqInstance degseq;
    SignPartition partition;
};

/// Composition of both reductions with every intermediate retained.
PartitionReduction reduce_partition_to_degseq(const ThreePartitionInstance& inst);

} // namespace hds
