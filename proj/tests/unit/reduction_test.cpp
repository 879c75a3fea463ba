#include <gtest/gtest.h>

#include <random>

#include "hds/reduction.hpp"
#include "hds/solver.hpp"
#include "support/oracles.hpp"

namespace hds {
namespace {

ThreePartitionInstance partition(std::vector<Int> a, Int b) {
    return {DegreeSequence(std::move(a)), b};
}

TEST(ReducePartitionToZero, Examples) {
    auto z = reduce_partition_to_zero(partition({1, 1, 1}, 3));
    EXPECT_EQ(z.w, WeightVector({0, 0, 0}));
    EXPECT_EQ(z.c, DegreeSequence({1, 1, 1}));

    z = reduce_partition_to_zero(partition({1, 1, 2}, 4));
    EXPECT_EQ(z.w, WeightVector({-1, -1, 2}));

    z = reduce_partition_to_zero(partition({1, 2, 3, 4, 5, 7}, 11));
    EXPECT_EQ(z.w, WeightVector({-8, -5, -2, 1, 4, 10}));
    EXPECT_EQ(z.c, DegreeSequence({1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(dot(z.w, z.c), 0);
}

TEST(ReducePartitionToZero, PromiseViolationIsAnError) {
    try {
        reduce_partition_to_zero(partition({1, 1, 1}, 4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PromiseViolated);
    }
}

TEST(ReducePartitionToZero, WeightIsThreeTimesDefect) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const Int groups = 1 + static_cast<Int>(rng() % 3);
        const Int n = 3 * groups;
        std::vector<Int> a(static_cast<std::size_t>(n));
        Int sum = 0;
        for (auto& x : a) sum += (x = static_cast<Int>(rng() % 9));
        a.back() += (groups - sum % groups) % groups;
        sum += (groups - sum % groups) % groups;
        const auto inst = partition(a, sum / groups);
        const auto z = reduce_partition_to_zero(inst);
        // Feasible sets coincide: a·x = b exactly when w·x = 0.
        for (const auto& x : testing::all_incidence_vectors(n)) {
            const Int ax = testing::inner(a, x);
            const Int wx = weighted_value(z.w, testing::to_triple(x));
            ASSERT_EQ(wx, 3 * (ax - inst.b));
            ASSERT_EQ(ax == inst.b, wx == 0);
        }
    }
}

TEST(MapPartitionCertificate, Examples) {
    const auto f = Hypergraph{3, {{0, 1, 2}}};
    EXPECT_EQ(map_partition_certificate(f, partition({1, 1, 1}, 3)), f);
    EXPECT_EQ(map_partition_certificate(Hypergraph{3, {}}, partition({1, 1, 1}, 3)),
              (Hypergraph{3, {}}));

    const auto inst = partition({1, 2, 3, 4, 5, 7}, 11);
    const auto g = Hypergraph{6, {{0, 2, 5}, {1, 3, 4}}};
    EXPECT_EQ(map_partition_certificate(g, inst), g);
    const auto z = reduce_partition_to_zero(inst);
    for (const auto& x : g.edges) EXPECT_EQ(weighted_value(z.w, x), 0);

    EXPECT_THROW(map_partition_certificate(Hypergraph{6, {{0, 1, 2}}}, inst), Error);
}

TEST(ReduceZeroToDegseq, Examples) {
    auto r = reduce_zero_to_degseq({WeightVector({0, 0, 0}), DegreeSequence({1, 1, 1})});
    EXPECT_TRUE(r.partition.plus.empty());
    EXPECT_EQ(r.degseq.d, DegreeSequence({1, 1, 1}));
    EXPECT_EQ(r.degseq.k, 3);

    r = reduce_zero_to_degseq({WeightVector({-1, -1, 2}), DegreeSequence({1, 1, 1})});
    EXPECT_TRUE(r.partition.plus.empty());
    EXPECT_EQ(r.partition.zero.edges, (std::vector<Triple>{{0, 1, 2}}));
    EXPECT_EQ(r.degseq.d, DegreeSequence({1, 1, 1}));

    r = reduce_zero_to_degseq({WeightVector({-1, -1, -1, 3}), DegreeSequence({3, 0, 0, 1})});
    EXPECT_EQ(r.partition.plus.edges, (std::vector<Triple>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    EXPECT_EQ(degree_sum(r.partition.plus), DegreeSequence({2, 2, 2, 3}));
    EXPECT_EQ(r.degseq.d, DegreeSequence({5, 2, 2, 4}));
}

TEST(ReduceZeroToDegseq, RejectsBrokenPromiseAndLengthMismatch) {
    EXPECT_THROW(reduce_zero_to_degseq({WeightVector({1, -1}), DegreeSequence({1, 2})}), Error);
    EXPECT_THROW(reduce_zero_to_degseq({WeightVector({1, -1, 0}), DegreeSequence({1, 1})}), Error);
}

TEST(LiftCertificate, Examples) {
    const auto sp = sign_partition(WeightVector({-1, -1, -1, 3}));
    EXPECT_EQ(lift_certificate(Hypergraph{4, {}}, sp), sp.plus);

    const auto flat = sign_partition(WeightVector({0, 0, 0}));
    EXPECT_EQ(lift_certificate(Hypergraph{3, {{0, 1, 2}}}, flat), (Hypergraph{3, {{0, 1, 2}}}));

    const auto mixed = sign_partition(WeightVector({0, 0, 0, 1, -1}));
    const Hypergraph g{5, {{0, 1, 2}}};
    const auto h = lift_certificate(g, mixed);
    EXPECT_TRUE(check_hypergraph(h));
    const auto dh = degree_sum(h), dg = degree_sum(g), dp = degree_sum(mixed.plus);
    for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(dh[v], dg[v] + dp[v]);
}

TEST(LiftCertificate, RejectsTripleOutsideZeroSet) {
    const auto sp = sign_partition(WeightVector({-1, -1, -1, 3}));
    try {
        lift_certificate(Hypergraph{4, {{0, 1, 2}}}, sp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInZeroSet);
    }
}

TEST(ProjectCertificate, Examples) {
    const auto sp = sign_partition(WeightVector({-1, -1, -1, 3}));
    EXPECT_TRUE(project_certificate(sp.plus, sp).empty());

    const auto flat = sign_partition(WeightVector({0, 0, 0}));
    const Hypergraph h{3, {{0, 1, 2}}};
    EXPECT_EQ(project_certificate(h, flat), h);
}

TEST(ProjectCertificate, ForcingViolationsFailLoudly) {
    const auto sp = sign_partition(WeightVector({-1, -1, -1, 3}));
    // Missing a positive triple.
    try {
        project_certificate(Hypergraph{4, {{0, 1, 3}, {0, 2, 3}}}, sp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ForcingViolated);
    }
    // Containing the negative triple.
    const auto report = check_forcing(Hypergraph{4, enumerate_triples(4)}, sp);
    EXPECT_TRUE(report.plus_contained);
    EXPECT_FALSE(report.minus_avoided);
    EXPECT_THROW(project_certificate(Hypergraph{4, enumerate_triples(4)}, sp), Error);
}

TEST(ProjectCertificate, RoundTripsWithLift) {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 200; ++round) {
        const Int n = 3 + static_cast<Int>(rng() % 7);
        std::vector<Int> w(static_cast<std::size_t>(n));
        for (auto& x : w) x = static_cast<Int>(rng() % 5) - 2;
        const auto sp = sign_partition(WeightVector(w));
        Hypergraph g{n, {}};
        for (const auto& x : sp.zero.edges)
            if (rng() % 2) g.edges.push_back(x);
        const auto h = lift_certificate(g, sp);
        EXPECT_TRUE(check_forcing(h, sp).holds());
        EXPECT_EQ(project_certificate(h, sp), g);
    }
}

TEST(ProjectCertificate, SolverCertificatesProjectToTarget) {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 100; ++round) {
        const Int n = 4 + static_cast<Int>(rng() % 4);
        std::vector<Int> w(static_cast<std::size_t>(n));
        for (auto& x : w) x = static_cast<Int>(rng() % 5) - 2;
        const auto sp = sign_partition(WeightVector(w));
        Hypergraph planted{n, {}};
        for (const auto& x : sp.zero.edges)
            if (rng() % 2) planted.edges.push_back(x);
        const ZeroWeightInstance inst{WeightVector(w), degree_sum(planted)};
        ASSERT_EQ(dot(inst.w, inst.c), 0);

        const auto reduced = reduce_zero_to_degseq(inst);
        const auto outcome = decide_degseq(reduced.degseq.d);
        ASSERT_EQ(outcome.answer, Answer::Yes);
        const auto& h = *outcome.certificate;
        ASSERT_TRUE(verify_certificate(h, reduced.degseq.d));
        EXPECT_TRUE(check_forcing(h, reduced.partition).holds());
        EXPECT_EQ(degree_sum(project_certificate(h, reduced.partition)), inst.c);
    }
}

TEST(ReducePartitionToDegseq, Examples) {
    EXPECT_EQ(reduce_partition_to_degseq(partition({1, 1, 1}, 3)).degseq.d,
              DegreeSequence({1, 1, 1}));
    EXPECT_EQ(reduce_partition_to_degseq(partition({1, 1, 2}, 4)).degseq.d,
              DegreeSequence({1, 1, 1}));

    // Frozen from an independent enumeration of the 20 triples of [6].
    const auto r = reduce_partition_to_degseq(partition({1, 2, 3, 4, 5, 7}, 11));
    EXPECT_EQ(r.zero.w, WeightVector({-8, -5, -2, 1, 4, 10}));
    EXPECT_EQ(r.degseq.d, DegreeSequence({3, 4, 5, 6, 6, 9}));
    EXPECT_EQ(r.partition.minus.size(), 9u);
    EXPECT_EQ(r.partition.zero.size(), 2u);
    EXPECT_EQ(r.partition.plus.size(), 9u);

    const auto composed = reduce_zero_to_degseq(reduce_partition_to_zero(partition({1, 2, 3, 4, 5, 7}, 11)));
    EXPECT_EQ(composed.degseq, r.degseq);
    EXPECT_EQ(composed.partition, r.partition);
}

} // namespace
} // namespace hds
