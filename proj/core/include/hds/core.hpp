#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hds/checked.hpp"

namespace hds {

using Vertex = std::int32_t;

/// A 3-element subset {i, j, k} of the ground set [n], stored sorted.
/// Ordering is lexicographic on (i, j, k).
struct Triple {
    Vertex i = 0;
    Vertex j = 0;
    Vertex k = 0;

    constexpr bool valid_for(Int n) const noexcept {
        return 0 <= i && i < j && j < k && k < n;
    }
    constexpr bool contains(Vertex v) const noexcept { return v == i || v == j || v == k; }

    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// The 0/1 incidence vector of x in {0,1}^n.
std::vector<Int> incidence_vector(Triple x, Int n);

/// A set of triples on [n]. The edge list is canonical when it is strictly
/// increasing; the struct itself does not enforce this so that malformed
/// certificates can be represented and rejected with a reason.
struct Hypergraph {
    Int n = 0;
    std::vector<Triple> edges;

    std::size_t size() const noexcept { return edges.size(); }
    bool empty() const noexcept { return edges.empty(); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Builds a canonical hypergraph: sorts the edges and rejects invalid or
/// repeated triples.
Hypergraph make_hypergraph(Int n, std::vector<Triple> edges);

/// Nonnegative integer vector; its length is the ground-set size.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<Int> values);
    static DegreeSequence zeros(Int n);

    Int size() const noexcept { return static_cast<Int>(values_.size()); }
    Int operator[](std::size_t v) const noexcept { return values_[v]; }
    std::span<const Int> values() const noexcept { return values_; }
    Int total() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<Int> values_;
};

/// Signed integer weights, one per ground-set element.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Int> values) : values_(std::move(values)) {}

    Int size() const noexcept { return static_cast<Int>(values_.size()); }
    Int operator[](std::size_t v) const noexcept { return values_[v]; }
    std::span<const Int> values() const noexcept { return values_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Int> values_;
};

/// All triples of [n] split by the sign of w·x.
struct SignPartition {
    Hypergraph minus;
    Hypergraph zero;
    Hypergraph plus;

    Int n() const noexcept { return zero.n; }

    friend bool operator==(const SignPartition&, const SignPartition&) = default;
};

std::vector<Triple> enumerate_triples(Int n);

DegreeSequence degree_sum(const Hypergraph& h);

Int weighted_value(const WeightVector& w, Triple x);

/// Checked inner product w·c; lengths must agree.
Int dot(const WeightVector& w, const DegreeSequence& c);

SignPartition sign_partition(const WeightVector& w);

enum class CertificateDefect {
    None,
    GroundSetMismatch,
    InvalidTriple,
    NotCanonical,
    TooManyEdges,
    DegreeMismatch,
};

const char* to_string(CertificateDefect defect) noexcept;

struct CertificateCheck {
    CertificateDefect defect = CertificateDefect::None;
    std::string detail;

    bool ok() const noexcept { return defect == CertificateDefect::None; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Structural validity of h as a set of triples on [h.n] (range, order,
/// duplicates, cardinality). Does not look at degrees.
CertificateCheck check_hypergraph(const Hypergraph& h);

/// True iff h is a valid hypergraph with degree_sum(h) == d.
CertificateCheck verify_certificate(const Hypergraph& h, const DegreeSequence& d);

} // namespace hds
