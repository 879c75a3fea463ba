#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hds/core.hpp"
#include "hds/reduction.hpp"

namespace hds {

enum class Answer { Yes, No, Unknown };

const char* to_string(Answer answer) noexcept;

struct SearchStats {
    std::uint64_t nodes = 0;
    double millis = 0.0;
    double budget_used = 0.0;  // nodes / budget, in [0, 1]
};

/// Yes carries a certificate, No and Unknown never do. Unknown only arises
/// when the node budget runs out.
struct DecisionOutcome {
    Answer answer = Answer::Unknown;
    std::optional<Hypergraph> certificate;
    SearchStats stats;
    std::string reason;  // set when a prefilter decided the instance
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct PrefilterResult {
    bool pass = true;
    std::string reason;

    explicit operator bool() const noexcept { return pass; }
};

/// Cheap necessary conditions for d to be a 3-hypergraph degree sequence.
/// A failing result is a proof of NO; passing proves nothing.
PrefilterResult prefilter_degseq(const DegreeSequence& d);

/// Depth-first include/exclude search over `candidates` (taken in the given
/// order) for a subset whose degree vector on [n] equals `target`.
DecisionOutcome search_realization(Int n, std::span<const Triple> candidates,
                                   std::span<const Int> target, std::uint64_t budget);

DecisionOutcome decide_degseq(const DegreeSequence& d, std::uint64_t budget = kDefaultBudget);
DecisionOutcome decide_zero(const ZeroWeightInstance& inst, std::uint64_t budget = kDefaultBudget);
DecisionOutcome decide_partition(const ThreePartitionInstance& inst,
                                 std::uint64_t budget = kDefaultBudget);

// Exhaustive oracles. Each throws Error{TooLarge} outside its size guard.
inline constexpr Int kBruteforceDegseqMaxN = 6;
inline constexpr Int kBruteforceZeroMaxCandidates = 20;
inline constexpr Int kBruteforcePartitionMaxN = 12;

bool bruteforce_degseq(const DegreeSequence& d);
bool bruteforce_zero(const ZeroWeightInstance& inst);
bool bruteforce_partition(const ThreePartitionInstance& inst);

} // namespace hds
