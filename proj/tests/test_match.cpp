#include "match.hpp"
#include "report.hpp"

#include <doctest.h>

using namespace cpl;

TEST_CASE("tag parsing")
{
    CHECK(parse_lemma_tag("lemma3_4") == LemmaTag::lemma3_4);
    CHECK_FALSE(parse_lemma_tag("bogus").has_value());
    for (LemmaTag tag : all_lemma_tags())
        CHECK(parse_lemma_tag(to_string(tag)) == tag);
}

TEST_CASE("certificates pass at unit-test depth")
{
    struct Run {
        LemmaTag tag;
        long vmax;
    };
    // the acceptance suite runs the full stated bounds; these are quick
    for (Run run : {Run{LemmaTag::lemma3_1, 9}, Run{LemmaTag::lemma3_3, 16},
                    Run{LemmaTag::lemma3_4, 16}, Run{LemmaTag::lemma3_5, 12},
                    Run{LemmaTag::lemma3_6, 10}, Run{LemmaTag::lemma3_7, 10}}) {
        MatchReport rep = exhaustive_match(run.tag, run.vmax);
        INFO(to_string(run.tag), " value_max=", run.vmax, ": ", rep.failure);
        CHECK(rep.pass);
        CHECK(rep.single_claim_ok);
        CHECK(rep.value_side_ok);
        CHECK(rep.inverse_ok);
        CHECK(rep.counts_ok);
        CHECK(rep.elements > 0);
    }
}

TEST_CASE("vacuous pass below the minimum element value")
{
    MatchReport rep = exhaustive_match(LemmaTag::lemma3_1, 0);
    CHECK(rep.pass);
    CHECK(rep.elements == 0);
}

TEST_CASE("report serialization carries the clause structure")
{
    MatchReport rep = exhaustive_match(LemmaTag::lemma3_3, 10);
    std::string json = match_report_to_json(rep, true);
    CHECK(json.find("\"single_claim\": true") != std::string::npos);
    CHECK(json.find("\"reconciliation\"") != std::string::npos);
    std::string compact = match_report_to_json(rep, false);
    CHECK(compact.find("\"reconciliation\"") == std::string::npos);
}
