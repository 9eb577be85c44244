#pragma once

#include "bignat.hpp"
#include "colored_set.hpp"
#include "identity_spec.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cpl {

// Counts of integer 12-vectors d with C*Sum C(d_i,2) + Sum a_i d_i = q,
// split by the parity of Sum d_i.  Indexed by q, 0..q_max.
struct ParityTable {
    std::vector<BigNat> even_sum_counts;
    std::vector<BigNat> odd_sum_counts;
    long q_max() const { return (long)even_sum_counts.size() - 1; }
};

ParityTable quad_weights(long C, const Coeffs& coeffs, long q_max);

// Counts of 12-vectors f with Sum f_i(3f_i - 1)/2 = w, split by parity of
// Sum f_i (the weight here carries no C factor).
ParityTable pentagonal_vectors(long w_max);

// counts[w] = number of 12-tuples of partitions with total size w
// (coefficient of x^w in prod (1 - x^k)^-12).
std::vector<BigNat> partition_tuples(long w_max);

// Number of tuples (mu_1..mu_12; d_1..d_12), Sum d_i odd, with
// C*Sum|mu_i| + C*Sum C(d_i,2) + Sum coeff_i d_i + offset = N.
BigNat tuple_count(long C, const Coeffs& coeffs, long offset, long N);
// Table-reusing variant: quads to q_max >= N-offset, ptuples to (N-offset)/C.
BigNat tuple_count(const ParityTable& quads, const std::vector<BigNat>& ptuples,
                   long C, long offset, long N);

// --- Lemma-level auxiliary counting -------------------------------------

// k, |S_k| and the shape of the low end of the spectrum for one side.
struct UVProfile {
    long k = 0;           // smallest N with S_N nonempty
    BigNat s_k;           // |S_k|
    long second_s = 0;    // second smallest N with S_N nonempty
    long first_t = 0;     // smallest N with T_N nonempty
    bool m_property = false; // first_t == second_s (the offset normalization)
};

UVProfile uv_profile(const IdentitySpec& spec);

// |U_N| = #(odd-sum d-vectors of A-weight N) + |S_k| * #(odd-sum f-vectors
// with C * Sum f(3f-1)/2 + k = N); |V_N| analogous with B-weights shifted by
// m and even-sum f-vectors.
std::pair<BigNat, BigNat> uv_counts(const IdentitySpec& spec, long N);

struct UVTables {
    UVProfile profile;
    ParityTable quad_A, quad_B;
    ParityTable pent;
    long n_max = 0;
    std::pair<BigNat, BigNat> at(const IdentitySpec& spec, long N) const;
};
UVTables make_uv_tables(const IdentitySpec& spec, long n_max);

// Reduction identity between two coefficient systems sharing C:
//   s_k*|Q'_{N+k'}| + s'_{k'}*|R_{N+k}| == s_k*|R'_{N+k'}| + s'_{k'}*|Q_{N+k}|
// where Q/R (resp. Q'/R') are the all-partitions-empty tuple sets of the
// unprimed (primed) system.  Returns the first failing N, or -1 if none.
long qr_reduction_first_failure(long C, const Coeffs& A, const Coeffs& B, long m,
                                const Coeffs& Ap, const Coeffs& Bp, long mp,
                                long n_max);

// --- Exhaustive oracles ---------------------------------------------------

// Visit every tuple counted by tuple_count, independently of the convolution
// path: direct product-space recursion over d-coordinates and partitions.
struct BruteTuple {
    std::array<int, kTupleLen> d{};
    std::array<std::vector<int>, kTupleLen> parts; // each descending
};

uint64_t brute_count(long C, const Coeffs& coeffs, long offset, long N);

inline constexpr long kBruteTupleLimit = 15;
// Materialized list; refuses N > kBruteTupleLimit.
std::vector<BruteTuple> brute_tuples(long C, const Coeffs& coeffs, long offset, long N);

// Direct enumeration of the quad_weights table (no convolution): tallies of
// 12-vectors by weight q <= q_max and parity of Sum d_i.
void quad_brute(long C, const Coeffs& coeffs, long q_max,
                std::vector<uint64_t>& even_out, std::vector<uint64_t>& odd_out);

} // namespace cpl
