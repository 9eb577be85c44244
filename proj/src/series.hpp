#pragma once

#include "bignat.hpp"
#include "colored_set.hpp"
#include "identity_spec.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cpl {

// Coefficients of prod_{s in S, s <= n_max} (1 + y x^s), truncated at x^n_max
// and split by the parity of the y-exponent (= number of parts).
struct SeriesTable {
    long n_max = 0;
    std::vector<BigNat> even_counts; // index N, even number of parts
    std::vector<BigNat> odd_counts;
};

SeriesTable distinct_series(const ColoredSet& set, long n_max);

// D_S(N): odd-part-count partitions when the set requires it, all otherwise.
BigNat D(const ColoredSet& set, const SeriesTable& table, long N);

struct VerificationReport {
    std::string spec_name;
    long n_checked_from = 0;
    long n_checked_to = 0;
    bool holds = false;
    struct Failure {
        long N;
        BigNat left, right;
    };
    std::optional<Failure> first_failure;
    // Informational: N < N0 where the two sides differ.
    std::vector<Failure> sub_N0_observations;
    long timings_ms = 0;
};

// Check D_S(N) * den == num * D_T(N - m) for N0 <= N <= n_max, where
// num/den = 2^p and D_T of a negative argument is 0.
VerificationReport verify_identity(const IdentitySpec& spec, long n_max);

// Deterministic parallel map over specs; results in input order.
std::vector<VerificationReport> verify_many(const std::vector<IdentitySpec>& specs,
                                            long n_max, int jobs);
// Per-entry default depth (0 -> 1000 proven / 2000 conjectured).
long default_n_max(const IdentitySpec& spec, long requested);

struct Candidate {
    Coeffs A{};
    Coeffs B{};
    long m = 0;
    long N0 = 0; // first N such that the identity holds on [N0, n_probe]
    int p = 0;
};

using CoeffPairGenerator = std::function<std::optional<std::pair<Coeffs, Coeffs>>()>;

// Probe coefficient pairs produced by the generator over m in [m_min, m_max];
// keep those whose identity holds on a suffix [N0, n_probe] with N0 <= n0_cap.
// Candidates are canonicalized (fold to [0, C/2], sort) before deduplication.
std::vector<Candidate> search_candidates(long C, long m_min, long m_max,
                                         const CoeffPairGenerator& gen, long n_probe,
                                         long n0_cap = 4);

Coeffs canonicalize_coeffs(long C, const Coeffs& coeffs);

} // namespace cpl
