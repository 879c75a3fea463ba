#include "hds/io.hpp"

#include <cmath>

#include <json.hpp>

namespace hds {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

Json parse_document(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "document is not a JSON object");
    return doc;
}

const Json& require(const Json& doc, const std::string& field) {
    auto it = doc.find(field);
    if (it == doc.end()) fail(field, "missing");
    return *it;
}

Int as_int(const Json& value, const std::string& field) {
    if (value.is_number_unsigned()) {
        const auto u = value.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
            fail(field, "integer outside the 64-bit signed range");
        }
        return static_cast<Int>(u);
    }
    if (value.is_number_integer()) return value.get<Int>();
    fail(field, "expected an integer");
}

std::vector<Int> as_int_array(const Json& value, const std::string& field) {
    if (!value.is_array()) fail(field, "expected an array of integers");
    std::vector<Int> out;
    out.reserve(value.size());
    for (std::size_t t = 0; t < value.size(); ++t) {
        out.push_back(as_int(value[t], field + "[" + std::to_string(t) + "]"));
    }
    return out;
}

std::vector<Int> as_nonnegative_array(const Json& value, const std::string& field) {
    auto out = as_int_array(value, field);
    for (std::size_t t = 0; t < out.size(); ++t) {
        if (out[t] < 0) fail(field + "[" + std::to_string(t) + "]", "must be nonnegative");
    }
    return out;
}

OrderedJson to_json(std::span<const Int> values) {
    return OrderedJson(std::vector<Int>(values.begin(), values.end()));
}

OrderedJson certificate_json(const Hypergraph& h) {
    OrderedJson edges = OrderedJson::array();
    for (const auto& x : h.edges) edges.push_back({x.i, x.j, x.k});
    OrderedJson doc;
    doc["certificate"] = "hypergraph";
    doc["edges"] = std::move(edges);
    return doc;
}

OrderedJson graph_json(const Graph& g) {
    OrderedJson edges = OrderedJson::array();
    for (auto [i, j] : g.edges) edges.push_back({i, j});
    OrderedJson doc;
    doc["certificate"] = "graph";
    doc["edges"] = std::move(edges);
    return doc;
}

OrderedJson instance_json(const InstanceFile& file) {
    OrderedJson doc;
    doc["problem"] = file.problem();
    std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, DegSeqInstance>) {
                doc["k"] = inst.k;
                doc["d"] = to_json(inst.d.values());
            } else if constexpr (std::is_same_v<T, ZeroWeightInstance>) {
                doc["w"] = to_json(inst.w.values());
                doc["c"] = to_json(inst.c.values());
            } else {
                doc["a"] = to_json(inst.a.values());
                doc["b"] = inst.b;
            }
        },
        file.instance);
    return doc;
}

Int rounded_millis(double millis) { return static_cast<Int>(std::llround(millis)); }

const Json& edge_list(const Json& doc, const char* expected_kind) {
    const Json& kind = require(doc, "certificate");
    if (!kind.is_string() || kind.get<std::string>() != expected_kind) {
        fail("certificate", std::string("expected \"") + expected_kind + "\"");
    }
    const Json& edges = require(doc, "edges");
    if (!edges.is_array()) fail("edges", "expected an array");
    return edges;
}

Vertex as_vertex(const Json& value, const std::string& field) {
    const Int v = as_int(value, field);
    if (v < std::numeric_limits<Vertex>::min() || v > std::numeric_limits<Vertex>::max()) {
        fail(field, "vertex index out of range");
    }
    return static_cast<Vertex>(v);
}

} // namespace

std::string InstanceFile::problem() const {
    switch (instance.index()) {
    case 0: return "degseq";
    case 1: return "zero_weight";
    default: return "three_partition";
    }
}

Int InstanceFile::n() const {
    return std::visit([](const auto& inst) { return inst.n(); }, instance);
}

InstanceFile parse_instance(std::string_view text) {
    const Json doc = parse_document(text);
    const Json& problem = require(doc, "problem");
    if (!problem.is_string()) fail("problem", "expected a string");
    const std::string name = problem.get<std::string>();

    if (name == "degseq") {
        const Int k = as_int(require(doc, "k"), "k");
        if (k != 2 && k != 3) fail("k", "only k = 2 and k = 3 are supported");
        DegSeqInstance inst{static_cast<int>(k),
                            DegreeSequence(as_nonnegative_array(require(doc, "d"), "d"))};
        return {inst};
    }
    if (name == "zero_weight") {
        auto w = as_int_array(require(doc, "w"), "w");
        auto c = as_nonnegative_array(require(doc, "c"), "c");
        if (w.size() != c.size()) {
            fail("c", "length " + std::to_string(c.size()) + " differs from length of w (" +
                          std::to_string(w.size()) + ")");
        }
        ZeroWeightInstance inst{WeightVector(std::move(w)), DegreeSequence(std::move(c))};
        try {
            inst.validate();
        } catch (const Error& e) {
            throw Error(e.kind(), std::string("field 'c': ") + e.what());
        }
        return {inst};
    }
    if (name == "three_partition") {
        auto a = as_nonnegative_array(require(doc, "a"), "a");
        const Int b = as_int(require(doc, "b"), "b");
        if (b < 0) fail("b", "must be nonnegative");
        ThreePartitionInstance inst{DegreeSequence(std::move(a)), b};
        try {
            inst.validate();
        } catch (const Error& e) {
            throw Error(e.kind(), std::string("field 'b': ") + e.what());
        }
        return {inst};
    }
    fail("problem", "unknown problem \"" + name + "\"");
}

std::string serialize_instance(const InstanceFile& file) { return instance_json(file).dump(); }

Hypergraph parse_certificate(std::string_view text, Int n) {
    const Json doc = parse_document(text);
    const Json& edges = edge_list(doc, "hypergraph");
    Hypergraph h{n, {}};
    h.edges.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string field = "edges[" + std::to_string(e) + "]";
        if (!edges[e].is_array() || edges[e].size() != 3) fail(field, "expected [i,j,k]");
        h.edges.push_back({as_vertex(edges[e][0], field), as_vertex(edges[e][1], field),
                           as_vertex(edges[e][2], field)});
    }
    return h;
}

std::string serialize_certificate(const Hypergraph& h) { return certificate_json(h).dump(); }

Graph parse_graph_certificate(std::string_view text, Int n) {
    const Json doc = parse_document(text);
    const Json& edges = edge_list(doc, "graph");
    Graph g{n, {}};
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string field = "edges[" + std::to_string(e) + "]";
        if (!edges[e].is_array() || edges[e].size() != 2) fail(field, "expected [i,j]");
        g.edges.emplace_back(as_vertex(edges[e][0], field), as_vertex(edges[e][1], field));
    }
    return g;
}

std::string serialize_graph_certificate(const Graph& g) { return graph_json(g).dump(); }

std::string serialize_outcome(const DecisionOutcome& outcome) {
    OrderedJson doc;
    doc["answer"] = to_string(outcome.answer);
    doc["certificate"] = outcome.certificate ? certificate_json(*outcome.certificate) : nullptr;
    doc["stats"] = {{"nodes", outcome.stats.nodes}, {"millis", rounded_millis(outcome.stats.millis)}};
    return doc.dump();
}

std::string serialize_graph_outcome(Answer answer, const std::optional<Graph>& realization,
                                    double millis) {
    OrderedJson doc;
    doc["answer"] = to_string(answer);
    doc["certificate"] = realization ? graph_json(*realization) : nullptr;
    doc["stats"] = {{"nodes", 0}, {"millis", rounded_millis(millis)}};
    return doc.dump();
}

namespace {

OrderedJson partition_sizes(const SignPartition& sp) {
    OrderedJson sizes;
    sizes["minus"] = sp.minus.size();
    sizes["zero"] = sp.zero.size();
    sizes["plus"] = sp.plus.size();
    return sizes;
}

} // namespace

std::string serialize_reduction(const PartitionReduction& r) {
    return serialize_reduction(r.zero, ZeroReduction{r.degseq, r.partition});
}

std::string serialize_reduction(const ZeroWeightInstance& zero, const ZeroReduction& r) {
    OrderedJson doc = instance_json({r.degseq});
    OrderedJson mid;
    mid["w"] = to_json(zero.w.values());
    mid["c"] = to_json(zero.c.values());
    mid["sign_partition"] = partition_sizes(r.partition);
    doc["intermediate"] = std::move(mid);
    return doc.dump();
}

std::string serialize_reduction(const ThreePartitionInstance& source,
                                const ZeroWeightInstance& zero) {
    OrderedJson doc = instance_json({zero});
    OrderedJson mid;
    mid["a"] = to_json(source.a.values());
    mid["b"] = source.b;
    doc["intermediate"] = std::move(mid);
    return doc.dump();
}

} // namespace hds
