#include "hds/reduction.hpp"

#include <algorithm>
#include <iterator>

namespace hds {

namespace {

void require_same_ground_set(Int expected, Int got, const char* what) {
    if (expected != got) {
        throw Error(ErrorKind::SizeMismatch, std::string(what) + " lives on " +
                                                 std::to_string(got) + " vertices, expected " +
                                                 std::to_string(expected));
    }
}

void require_canonical(const Hypergraph& h, const char* what) {
    if (auto check = check_hypergraph(h); !check) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": " + check.detail);
    }
}

} // namespace

void ThreePartitionInstance::validate() const {
    const Int lhs = checked_mul(3, a.total());
    const Int rhs = checked_mul(n(), b);
    if (b < 0) throw Error(ErrorKind::InvalidArgument, "b must be nonnegative");
    if (lhs != rhs) {
        throw Error(ErrorKind::PromiseViolated,
                    "3*sum(a) = " + std::to_string(lhs) + " differs from n*b = " + std::to_string(rhs));
    }
}

void ZeroWeightInstance::validate() const {
    const Int wc = dot(w, c);
    if (wc != 0) {
        throw Error(ErrorKind::PromiseViolated, "w·c = " + std::to_string(wc) + " is not 0");
    }
}

Int partition_value(const ThreePartitionInstance& inst, Triple x) {
    if (!x.valid_for(inst.n())) throw Error(ErrorKind::InvalidArgument, "triple out of range");
    return checked_add(checked_add(inst.a[x.i], inst.a[x.j]), inst.a[x.k]);
}

ZeroWeightInstance reduce_partition_to_zero(const ThreePartitionInstance& inst) {
    inst.validate();
    std::vector<Int> w(static_cast<std::size_t>(inst.n()));
    for (std::size_t v = 0; v < w.size(); ++v) {
        w[v] = checked_sub(checked_mul(3, inst.a[v]), inst.b);
    }
    ZeroWeightInstance out{WeightVector(std::move(w)),
                           DegreeSequence(std::vector<Int>(static_cast<std::size_t>(inst.n()), 1))};
    out.validate();
    return out;
}

Hypergraph map_partition_certificate(const Hypergraph& f, const ThreePartitionInstance& inst) {
    require_same_ground_set(inst.n(), f.n, "certificate");
    require_canonical(f, "certificate");
    const ZeroWeightInstance reduced = reduce_partition_to_zero(inst);
    for (const auto& x : f.edges) {
        if (partition_value(inst, x) != inst.b) {
            throw Error(ErrorKind::InvalidArgument, "certificate triple has a-value " +
                                                        std::to_string(partition_value(inst, x)) +
                                                        ", expected " + std::to_string(inst.b));
        }
        if (weighted_value(reduced.w, x) != 0) {
            throw Error(ErrorKind::InvalidArgument, "reduced weight of certificate triple is nonzero");
        }
    }
    return f;
}

ZeroReduction reduce_zero_to_degseq(const ZeroWeightInstance& inst) {
    inst.validate();
    SignPartition sp = sign_partition(inst.w);
    const DegreeSequence forced = degree_sum(sp.plus);
    std::vector<Int> d(static_cast<std::size_t>(inst.n()));
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = checked_add(inst.c[v], forced[v]);
    return {DegSeqInstance{3, DegreeSequence(std::move(d))}, std::move(sp)};
}

Hypergraph lift_certificate(const Hypergraph& g, const SignPartition& sp) {
    require_same_ground_set(sp.n(), g.n, "certificate");
    require_canonical(g, "certificate");
    for (const auto& x : g.edges) {
        if (!std::binary_search(sp.zero.edges.begin(), sp.zero.edges.end(), x)) {
            throw Error(ErrorKind::NotInZeroSet, "certificate contains a triple of nonzero weight");
        }
    }
    Hypergraph h{g.n, {}};
    h.edges.reserve(g.size() + sp.plus.size());
    // G ⊆ S0 and S0 ∩ S+ = ∅, so the merge has no duplicates.
    std::merge(g.edges.begin(), g.edges.end(), sp.plus.edges.begin(), sp.plus.edges.end(),
               std::back_inserter(h.edges));
    return h;
}

ForcingReport check_forcing(const Hypergraph& h, const SignPartition& sp) {
    require_same_ground_set(sp.n(), h.n, "hypergraph");
    require_canonical(h, "hypergraph");
    ForcingReport report;
    report.plus_contained = std::includes(h.edges.begin(), h.edges.end(), sp.plus.edges.begin(),
                                          sp.plus.edges.end());
    std::vector<Triple> overlap;
    std::set_intersection(h.edges.begin(), h.edges.end(), sp.minus.edges.begin(),
                          sp.minus.edges.end(), std::back_inserter(overlap));
    report.minus_avoided = overlap.empty();
    return report;
}

Hypergraph project_certificate(const Hypergraph& h, const SignPartition& sp) {
    const ForcingReport report = check_forcing(h, sp);
    if (!report.plus_contained) {
        throw Error(ErrorKind::ForcingViolated, "hypergraph does not contain every positive triple");
    }
    if (!report.minus_avoided) {
        throw Error(ErrorKind::ForcingViolated, "hypergraph contains a negative triple");
    }
    Hypergraph g{h.n, {}};
    std::set_intersection(h.edges.begin(), h.edges.end(), sp.zero.edges.begin(),
                          sp.zero.edges.end(), std::back_inserter(g.edges));
    return g;
}

PartitionReduction reduce_partition_to_degseq(const ThreePartitionInstance& inst) {
    ZeroWeightInstance zero = reduce_partition_to_zero(inst);
    ZeroReduction second = reduce_zero_to_degseq(zero);
    return {std::move(zero), std::move(second.degseq), std::move(second.partition)};
}

} // namespace hds
