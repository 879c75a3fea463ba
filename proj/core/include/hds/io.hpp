#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "hds/core.hpp"
#include "hds/graph.hpp"
#include "hds/reduction.hpp"
#include "hds/solver.hpp"

namespace hds {

using Instance = std::variant<DegSeqInstance, ZeroWeightInstance, ThreePartitionInstance>;

/// A parsed and validated instance document.
struct InstanceFile {
    Instance instance;

    /// "degseq", "zero_weight" or "three_partition".
    std::string problem() const;
    Int n() const;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Parses an instance document. Fails with Error{Parse} for malformed JSON
/// or missing/mistyped fields and Error{PromiseViolated} when the problem's
/// promise does not hold; messages name the offending field. Unknown
/// top-level fields are ignored.
InstanceFile parse_instance(std::string_view text);

/// Compact canonical JSON with keys in the documented order; no trailing
/// newline. parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const InstanceFile& file);

/// Parses {"certificate":"hypergraph","edges":[[i,j,k],...]}. Entries only
/// need to be integers; range and ordering are left to verify_certificate so
/// that a defective certificate can be reported rather than rejected.
Hypergraph parse_certificate(std::string_view text, Int n);
std::string serialize_certificate(const Hypergraph& h);

/// Same, for {"certificate":"graph","edges":[[i,j],...]}.
Graph parse_graph_certificate(std::string_view text, Int n);
std::string serialize_graph_certificate(const Graph& g);

/// {"answer":...,"certificate":...|null,"stats":{"nodes":N,"millis":T}}
std::string serialize_outcome(const DecisionOutcome& outcome);

/// Outcome document for the k = 2 route; the certificate is a graph.
std::string serialize_graph_outcome(Answer answer, const std::optional<Graph>& realization,
                                    double millis);

/// The `reduce` output: the reduced instance plus the intermediate data that
/// produced it.
std::string serialize_reduction(const PartitionReduction& r);
std::string serialize_reduction(const ZeroWeightInstance& zero, const ZeroReduction& r);
std::string serialize_reduction(const ThreePartitionInstance& source,
                                const ZeroWeightInstance& zero);

} // namespace hds
