#include "hds/core.hpp"

#include <algorithm>
#include <sstream>

namespace hds {

Int choose2(Int n) {
    if (n < 2) return 0;
    return checked_mul(n, n - 1) / 2;
}

Int choose3(Int n) {
    if (n < 3) return 0;
    // n(n-1) is even, so divide early to keep the intermediate small.
    return checked_mul(checked_mul(n, n - 1) / 2, n - 2) / 3;
}

namespace {

std::string describe(Triple x) {
    std::ostringstream os;
    os << '(' << x.i << ',' << x.j << ',' << x.k << ')';
    return os.str();
}

void require_valid(Triple x, Int n) {
    if (!x.valid_for(n)) {
        throw Error(ErrorKind::InvalidArgument,
                    "triple " + describe(x) + " is not valid on a ground set of size " +
                        std::to_string(n));
    }
}

} // namespace

std::vector<Int> incidence_vector(Triple x, Int n) {
    require_valid(x, n);
    std::vector<Int> v(static_cast<std::size_t>(n), 0);
    v[x.i] = v[x.j] = v[x.k] = 1;
    return v;
}

Hypergraph make_hypergraph(Int n, std::vector<Triple> edges) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative ground-set size");
    for (const auto& x : edges) require_valid(x, n);
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw Error(ErrorKind::InvalidArgument, "repeated triple " + describe(*dup));
    }
    return Hypergraph{n, std::move(edges)};
}

DegreeSequence::DegreeSequence(std::vector<Int> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (values_[v] < 0) {
            throw Error(ErrorKind::InvalidArgument,
                        "degree entry " + std::to_string(v) + " is negative");
        }
    }
}

DegreeSequence DegreeSequence::zeros(Int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative ground-set size");
    return DegreeSequence(std::vector<Int>(static_cast<std::size_t>(n), 0));
}

Int DegreeSequence::total() const {
    Int s = 0;
    for (Int x : values_) s = checked_add(s, x);
    return s;
}

std::vector<Triple> enumerate_triples(Int n) {
    std::vector<Triple> out;
    if (n < 3) return out;
    out.reserve(static_cast<std::size_t>(choose3(n)));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            for (Vertex k = j + 1; k < n; ++k) out.push_back({i, j, k});
    return out;
}

DegreeSequence degree_sum(const Hypergraph& h) {
    std::vector<Int> d(static_cast<std::size_t>(h.n), 0);
    for (const auto& x : h.edges) {
        require_valid(x, h.n);
        for (Vertex v : {x.i, x.j, x.k}) d[v] = checked_add(d[v], 1);
    }
    // The total must be representable too.
    checked_mul(static_cast<Int>(h.edges.size()), 3);
    return DegreeSequence(std::move(d));
}

Int weighted_value(const WeightVector& w, Triple x) {
    require_valid(x, w.size());
    return checked_add(checked_add(w[x.i], w[x.j]), w[x.k]);
}

Int dot(const WeightVector& w, const DegreeSequence& c) {
    if (w.size() != c.size()) {
        throw Error(ErrorKind::SizeMismatch, "weight vector has length " +
                                                 std::to_string(w.size()) +
                                                 " but target vector has length " +
                                                 std::to_string(c.size()));
    }
    Int s = 0;
    for (std::size_t v = 0; v < static_cast<std::size_t>(w.size()); ++v) {
        s = checked_add(s, checked_mul(w[v], c[v]));
    }
    return s;
}

SignPartition sign_partition(const WeightVector& w) {
    const Int n = w.size();
    SignPartition sp{{n, {}}, {n, {}}, {n, {}}};
    for (const auto& x : enumerate_triples(n)) {
        const Int value = weighted_value(w, x);
        if (value < 0) {
            sp.minus.edges.push_back(x);
        } else if (value == 0) {
            sp.zero.edges.push_back(x);
        } else {
            sp.plus.edges.push_back(x);
        }
    }
    return sp;
}

const char* to_string(CertificateDefect defect) noexcept {
    switch (defect) {
    case CertificateDefect::None: return "none";
    case CertificateDefect::GroundSetMismatch: return "ground_set_mismatch";
    case CertificateDefect::InvalidTriple: return "invalid_triple";
    case CertificateDefect::NotCanonical: return "not_canonical";
    case CertificateDefect::TooManyEdges: return "too_many_edges";
    case CertificateDefect::DegreeMismatch: return "degree_mismatch";
    }
    return "unknown";
}

CertificateCheck check_hypergraph(const Hypergraph& h) {
    if (h.n < 0) return {CertificateDefect::GroundSetMismatch, "negative ground-set size"};
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const Triple& x = h.edges[e];
        if (!x.valid_for(h.n)) {
            return {CertificateDefect::InvalidTriple,
                    "edge " + std::to_string(e) + " " + describe(x) + " is not a 3-subset of [" +
                        std::to_string(h.n) + "]"};
        }
        if (e > 0 && !(h.edges[e - 1] < x)) {
            const char* what = h.edges[e - 1] == x ? "repeats" : "is out of order after";
            return {CertificateDefect::NotCanonical,
                    "edge " + std::to_string(e) + " " + describe(x) + " " + what + " " +
                        describe(h.edges[e - 1])};
        }
    }
    // Strictly increasing already implies this; kept as the explicit bound.
    if (static_cast<Int>(h.edges.size()) > choose3(h.n)) {
        return {CertificateDefect::TooManyEdges, "more edges than C(n,3)"};
    }
    return {};
}

CertificateCheck verify_certificate(const Hypergraph& h, const DegreeSequence& d) {
    if (h.n != d.size()) {
        return {CertificateDefect::GroundSetMismatch,
                "hypergraph on " + std::to_string(h.n) + " vertices, degree sequence of length " +
                    std::to_string(d.size())};
    }
    if (auto structural = check_hypergraph(h); !structural) return structural;
    const DegreeSequence got = degree_sum(h);
    for (std::size_t v = 0; v < static_cast<std::size_t>(d.size()); ++v) {
        if (got[v] != d[v]) {
            return {CertificateDefect::DegreeMismatch,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(got[v]) +
                        ", expected " + std::to_string(d[v])};
        }
    }
    return {};
}

} // namespace hds
