#pragma once

#include "identity_spec.hpp"
#include "match.hpp"
#include "series.hpp"

#include <string>
#include <vector>

namespace cpl {

// Stable JSON emission: fields in fixed order, counts as decimal strings.
// Reports round-trip byte-identically through parse + re-dump.
std::string report_to_json(const VerificationReport& rep, int indent = 2);
std::string reports_to_json(const std::vector<VerificationReport>& reps, int indent = 2);
std::string catalog_to_json(const std::vector<IdentitySpec>& specs, int indent = 2);
std::string match_report_to_json(const MatchReport& rep, bool include_table,
                                 int indent = 2);

std::string catalog_to_csv(const std::vector<IdentitySpec>& specs);
std::string catalog_to_markdown(const std::vector<IdentitySpec>& specs);
std::string reports_to_csv(const std::vector<VerificationReport>& reps);
std::string reports_to_markdown(const std::vector<VerificationReport>& reps);

// Tuple-oracle run over one spec (left/right tuple counts, U/V counts, and
// the optional explicit enumeration cross-check).
struct OracleReport {
    std::string spec_name;
    long n_max = 0;
    bool counts_equal = false;     // condition-(i) counts agree on [N0, n_max]
    long first_count_mismatch = -1;
    bool m_property = false;       // the offset normalization of the stated m
    bool uv_equal = false;         // U_N == V_N for N <= n_max (when m_property)
    long first_uv_mismatch = -1;
    long brute_n_max = -1;         // -1: skipped
    bool brute_equal = false;
    long first_brute_mismatch = -1;
    long timings_ms = 0;
    bool ok() const
    {
        return counts_equal && (!m_property || uv_equal) &&
               (brute_n_max < 0 || brute_equal);
    }
};

OracleReport run_oracle(const IdentitySpec& spec, long n_max, long brute_n_max);
std::string oracle_report_to_json(const OracleReport& rep, int indent = 2);

struct SearchResult {
    long C = 0;
    long n_probe = 0;
    std::vector<Candidate> candidates;
};
std::string search_result_to_json(const SearchResult& res, int indent = 2);

} // namespace cpl
