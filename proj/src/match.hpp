#pragma once

#include "colored_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cpl {

// Proofs with executable case maps, verified by exhaustive matching.
enum class LemmaTag { lemma3_1, lemma3_3, lemma3_4, lemma3_5, lemma3_6, lemma3_7 };

std::optional<LemmaTag> parse_lemma_tag(std::string_view s);
const char* to_string(LemmaTag tag);
std::vector<LemmaTag> all_lemma_tags();

// Perfect-matching certificate over every element of value N <= value_max:
//  (a) each element is claimed by exactly one registered case,
//  (b) images have the same N and land on the opposite side,
//  (c) pairings are mutually inverse,
//  (d) the per-value counts balance and agree with the independent
//      dynamic-programming counts.
struct MatchReport {
    std::string tag;
    long value_max = 0;
    bool pass = false;
    bool single_claim_ok = false;
    bool value_side_ok = false;
    bool inverse_ok = false;
    bool counts_ok = false;
    std::string failure; // empty when pass

    struct CaseCount {
        std::string stage;
        std::string name;
        uint64_t claimed = 0;
    };
    std::vector<CaseCount> case_counts;

    std::vector<std::string> family_names;
    // Per-value reconciliation rows (main stage): counts per family and the
    // two side totals.
    struct Row {
        long N = 0;
        std::vector<uint64_t> family_counts;
        uint64_t left = 0;
        uint64_t right = 0;
    };
    std::vector<Row> table;

    uint64_t elements = 0;
    long timings_ms = 0;
};

MatchReport exhaustive_match(LemmaTag tag, long value_max);

} // namespace cpl
