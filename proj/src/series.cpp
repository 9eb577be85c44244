#include "series.hpp"

#include "errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

namespace cpl {

namespace {

// C(c, j) for c <= 24: the largest value, C(24,12) = 2704156, is tiny.
uint64_t binom(int c, int j)
{
    if (j < 0 || j > c)
        return 0;
    uint64_t r = 1;
    for (int i = 0; i < j; ++i)
        r = r * (uint64_t)(c - i) / (uint64_t)(i + 1);
    return r;
}

} // namespace

SeriesTable distinct_series(const ColoredSet& set, long n_max)
{
    if (n_max < 0)
        throw RangeError("distinct_series: n_max must be >= 0");
    SeriesTable t;
    t.n_max = n_max;
    t.even_counts.assign(n_max + 1, BigNat());
    t.odd_counts.assign(n_max + 1, BigNat());
    t.even_counts[0] = BigNat(1);

    // Multiply in (1 + y x^s)^c per part size s, expanded binomially: choosing
    // j of the c distinguishable copies contributes C(c, j) x^{js} y^j.  The
    // descending update reads only smaller positions, which still hold the
    // previous factor's coefficients.
    for (long s = 1; s <= n_max; ++s) {
        int c = set.copies_of(s);
        if (c == 0)
            continue;
        long jmax = std::min<long>(c, n_max / s);
        uint64_t bin[25];
        for (long j = 1; j <= jmax; ++j)
            bin[j] = binom(c, (int)j);
        for (long n = n_max; n >= s; --n) {
            BigNat& e = t.even_counts[n];
            BigNat& o = t.odd_counts[n];
            for (long j = 1; j <= jmax && j * s <= n; ++j) {
                long src = n - j * s;
                if (j & 1) {
                    e.add_mul(t.odd_counts[src], bin[j]);
                    o.add_mul(t.even_counts[src], bin[j]);
                } else {
                    e.add_mul(t.even_counts[src], bin[j]);
                    o.add_mul(t.odd_counts[src], bin[j]);
                }
            }
        }
    }
    return t;
}

BigNat D(const ColoredSet& set, const SeriesTable& table, long N)
{
    if (N < 0 || N > table.n_max)
        throw RangeError("D: N outside table range");
    if (set.parity_required)
        return table.odd_counts[N];
    BigNat r = table.even_counts[N];
    r += table.odd_counts[N];
    return r;
}

VerificationReport verify_identity(const IdentitySpec& spec, long n_max)
{
    if (n_max < spec.N0)
        throw RangeError("verify_identity: n_max must be >= N0");
    auto start = std::chrono::steady_clock::now();

    ColoredSet S = spec.set_S();
    ColoredSet T = spec.set_T();
    SeriesTable st = distinct_series(S, n_max);
    SeriesTable tt = distinct_series(T, std::max<long>(0, n_max - spec.m));
    uint64_t num, den;
    spec.factor(num, den);

    VerificationReport rep;
    rep.spec_name = spec.name;
    rep.n_checked_from = spec.N0;
    rep.n_checked_to = n_max;
    rep.holds = true;

    auto sides = [&](long N, BigNat& left, BigNat& right) {
        left = D(S, st, N);
        left.mul_u64(den);
        right = N >= spec.m ? D(T, tt, N - spec.m) : BigNat();
        right.mul_u64(num);
    };

    for (long N = 0; N < spec.N0; ++N) {
        BigNat left, right;
        sides(N, left, right);
        if (left != right)
            rep.sub_N0_observations.push_back({N, std::move(left), std::move(right)});
    }
    for (long N = spec.N0; N <= n_max; ++N) {
        BigNat left, right;
        sides(N, left, right);
        if (left != right) {
            rep.holds = false;
            rep.first_failure = VerificationReport::Failure{N, std::move(left), std::move(right)};
            break;
        }
    }

    auto end = std::chrono::steady_clock::now();
    rep.timings_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return rep;
}

long default_n_max(const IdentitySpec& spec, long requested)
{
    if (requested > 0)
        return requested;
    return spec.status == Status::proven ? 1000 : 2000;
}

std::vector<VerificationReport> verify_many(const std::vector<IdentitySpec>& specs,
                                            long n_max, int jobs)
{
    std::vector<VerificationReport> out(specs.size());
    if (specs.empty())
        return out;
    jobs = std::max(1, jobs);
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= specs.size())
                return;
            try {
                out[i] = verify_identity(specs[i], default_n_max(specs[i], n_max));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

Coeffs canonicalize_coeffs(long C, const Coeffs& coeffs)
{
    Coeffs out;
    for (int i = 0; i < kTupleLen; ++i)
        out[i] = fold_coeff(C, coeffs[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Candidate> search_candidates(long C, long m_min, long m_max,
                                         const CoeffPairGenerator& gen, long n_probe,
                                         long n0_cap)
{
    if (n_probe < 1)
        throw RangeError("search_candidates: n_probe must be >= 1");
    std::vector<Candidate> found;
    std::set<std::tuple<Coeffs, Coeffs, long>> seen;
    while (auto pair = gen()) {
        Coeffs A = canonicalize_coeffs(C, pair->first);
        Coeffs B = canonicalize_coeffs(C, pair->second);
        ColoredSet S = build_colored_set(C, A);
        ColoredSet T = build_colored_set(C, B);
        SeriesTable st = distinct_series(S, n_probe);
        SeriesTable tt = distinct_series(T, n_probe);
        int p = derive_p(C, A, B);
        uint64_t num = p >= 0 ? (uint64_t)1 << p : 1;
        uint64_t den = p >= 0 ? 1 : (uint64_t)1 << -p;
        for (long m = m_min; m <= m_max; ++m) {
            if (m < 0 || !seen.insert({A, B, m}).second)
                continue;
            long last_fail = 0;
            for (long N = 1; N <= n_probe; ++N) {
                BigNat left = D(S, st, N);
                left.mul_u64(den);
                BigNat right = N >= m ? D(T, tt, N - m) : BigNat();
                right.mul_u64(num);
                if (left != right)
                    last_fail = N;
            }
            long N0 = last_fail + 1;
            if (N0 <= n0_cap && N0 <= n_probe) {
                Candidate cand;
                cand.A = A;
                cand.B = B;
                cand.m = m;
                cand.N0 = N0;
                cand.p = p;
                found.push_back(cand);
            }
        }
    }
    return found;
}

} // namespace cpl
